#!/usr/bin/env python
# -*- encoding: utf-8 -*-

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from spunnormal.equations import PeripheralCurves, SlopeFunctional, slope_functionals

__all__ = ['BoundaryFunctionals', 'BoundaryCoordinate', 'boundary_functionals', 'boundary_coordinate']


@dataclass(frozen=True)
class BoundaryFunctionals:
    """Longitude and meridian functionals of one cusp."""
    cusp: int
    longitude: SlopeFunctional
    meridian: SlopeFunctional


@dataclass(frozen=True)
class BoundaryCoordinate:
    """Per cusp the pair ``(nu(L), -nu(M))``."""
    pairs: Tuple[Tuple[Fraction, Fraction], ...]

    def flat(self) -> Tuple[Fraction, ...]:
        return tuple(v for pair in self.pairs for v in pair)


def boundary_functionals(curves: Sequence[PeripheralCurves]) -> List[BoundaryFunctionals]:
    result = []
    for c in curves:
        longitude, meridian = slope_functionals([c.longitude, c.meridian], [f'L{c.cusp}', f'M{c.cusp}'])
        result.append(BoundaryFunctionals(cusp=c.cusp, longitude=longitude, meridian=meridian))
    return result


def boundary_coordinate(x: Sequence, fns: Sequence[BoundaryFunctionals]) -> BoundaryCoordinate:
    """Exact boundary coordinate ``(nu(L_0), -nu(M_0), nu(L_1), -nu(M_1), ...)`` of ``x``."""
    return BoundaryCoordinate(tuple((f.longitude(x), -f.meridian(x)) for f in fns))
