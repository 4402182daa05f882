#!/usr/bin/env python
# -*- encoding: utf-8 -*-

from typing import Optional, Sequence, Tuple

from mpmath import mpc, sqrt

from spunnormal.equations import ShapeAssignment
from spunnormal.registry import DEGENERATIONS

__all__ = [
    'ShapePath', 'EqualGrowthPath', 'FlatTetrahedraPath', 'GoldenRatioPath', 'CentreSquarePath', 'ConstantPath'
]


class ShapePath:
    """A curve of shape parameters ``t -> (z_0, ..., z_{n-1})`` degenerating as ``t -> 0+``.

    ``expected_xi`` is the ray the logarithmic limit is known to approach, or None.
    The shipped families live on the Whitehead link triangulation, whose tetrahedra are
    taken in the order ``w, x, y, z``.
    """
    n: int = 4
    expected_xi: Optional[Tuple[int, ...]] = None

    def shapes(self, t) -> tuple:
        raise NotImplementedError

    def assignment(self, t) -> ShapeAssignment:
        """Shapes at the :mod:`mpmath` parameter ``t``."""
        return ShapeAssignment(tuple(mpc(z) for z in self.shapes(t)))

    def __repr__(self):
        return type(self).__name__


@DEGENERATIONS.register_module
class EqualGrowthPath(ShapePath):
    """``(w, -1/w, w, -1/w)`` with ``w`` tending to ``limit``, one of 0, 1 and -1."""

    _EXPECTED = {
        0: (-1, 0, 1, 1, -1, 0, -1, 0, 1, 1, -1, 0),
        1: (0, 1, -1, 0, 0, 0, 0, 1, -1, 0, 0, 0),
        -1: (0, 0, 0, 0, 1, -1, 0, 0, 0, 0, 1, -1),
    }

    def __init__(self, limit: int = 0):
        assert limit in self._EXPECTED, f'limit must be one of {sorted(self._EXPECTED)}, but got {limit}'
        self.limit = limit
        self.expected_xi = self._EXPECTED[limit]

    def shapes(self, t) -> tuple:
        w = self.limit + t if self.limit <= 0 else 1 - t
        return w, -1 / w, w, -1 / w

    def __repr__(self):
        return f'EqualGrowthPath(limit={self.limit})'


@DEGENERATIONS.register_module
class FlatTetrahedraPath(ShapePath):
    """``(w, (1-w)/(1+w), -(1+w)/(1-w), -1/w)`` with ``w -> 0``."""
    expected_xi = (-1, 0, 1, 0, 1, -1, 0, 0, 0, 1, -1, 0)

    def shapes(self, t) -> tuple:
        w = t
        return w, (1 - w) / (1 + w), -(1 + w) / (1 - w), -1 / w


@DEGENERATIONS.register_module
class GoldenRatioPath(ShapePath):
    """``x = e``, ``z = -1/e^2`` with ``w`` the principal root of the remaining edge relation, so that
    ``w(0)`` is the golden section ``(sqrt(5) - 1)/2``, and ``y = -e/w``.
    """
    expected_xi = (0, 0, 0, -1, 0, 1, -1, 0, 1, 2, -2, 0)

    def shapes(self, t) -> tuple:
        e = t
        root = sqrt(5 - 4 * e + 4 * e**2 - 2 * e**3 + e**6)
        w = (-1 - e**3 + root) / (2 * (1 + e**2))
        return w, e, -e / w, -1 / e**2


@DEGENERATIONS.register_module
class CentreSquarePath(ShapePath):
    """``(w, 1/w, 1/w, w)`` with ``w -> 1``."""
    expected_xi = (0, 1, -1, 0, 1, -1, 0, 1, -1, 0, 1, -1)

    def shapes(self, t) -> tuple:
        w = 1 - t
        return w, 1 / w, 1 / w, w


@DEGENERATIONS.register_module
class ConstantPath(ShapePath):
    """A fixed shape assignment; the complete structure ``(i, i, i, i)`` by default."""

    def __init__(self, shapes: Optional[Sequence] = None):
        self.values = tuple(shapes) if shapes is not None else (1j, 1j, 1j, 1j)
        self.n = len(self.values)

    def shapes(self, t) -> tuple:
        return tuple(mpc(z) for z in self.values)
