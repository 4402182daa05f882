#!/usr/bin/env python
# -*- encoding: utf-8 -*-

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

import numpy as np
from mpmath import acos, fsum, log, mp, mpf, sqrt

from spunnormal.constants import EVALUATION_TOLERANCE
from spunnormal.logging import get_logger

from .degenerations import ShapePath

__all__ = ['ProbeResult', 'log_limit_probe', 'working_digits']

# decimal digits per bit
_DIGITS_PER_BIT = math.log10(2)


@dataclass(frozen=True)
class ProbeResult:
    """Log-limit estimate along a shape path.

    :ivar direction: Unit log-vector at the last sample, zero when the path does not diverge
    :ivar normalized: ``log|Z| / sqrt(1 + sum log^2)`` at the last sample
    :ivar secant: Unit difference of the last two log-vectors, zero when the path does not diverge
    :ivar indicator: Angle between the directions at the last two samples
    """
    direction: Tuple[float, ...]
    normalized: Tuple[float, ...]
    secant: Tuple[float, ...]
    indicator: float
    converged: bool
    divergent: bool
    samples: int

    def angle_to(self, xi: Sequence, use_secant: bool = False) -> float:
        """Angle in radians between the estimate and the ray ``xi``."""
        u = np.asarray(self.secant if use_secant else self.direction, dtype=float)
        v = np.asarray([float(x) for x in xi], dtype=float)
        if not u.any() or not v.any():
            return math.pi
        return float(np.arccos(np.clip(u.dot(v) / (np.linalg.norm(u) * np.linalg.norm(v)), -1.0, 1.0)))


def working_digits(smallest, guard_digits: int) -> int:
    """Decimal precision resolving the parameter ``smallest`` next to 1, plus ``guard_digits``."""
    smallest = Fraction(smallest)
    bits = max(0, smallest.denominator.bit_length() - smallest.numerator.bit_length() + 1)
    return int(bits * _DIGITS_PER_BIT) + 1 + guard_digits


def _log_vector(path: ShapePath, t) -> list:
    Z = path.assignment(t)
    Z.check(tolerance=mpf(2)**(-mp.prec))
    return [log(abs(v)) for i in range(Z.n) for v in Z.triple(i)]


def _unit(vector: list) -> Optional[list]:
    norm = sqrt(fsum(v**2 for v in vector))
    return [v / norm for v in vector] if norm > 0 else None


def _angle(u: list, v: list):
    return acos(max(mpf(-1), min(mpf(1), fsum(a * b for a, b in zip(u, v)))))


def log_limit_probe(path: ShapePath,
                    samples: int = 1200,
                    start=Fraction(1, 2),
                    ratio=Fraction(1, 2),
                    tolerance: float = 1e-3,
                    guard_digits: int = 30) -> ProbeResult:
    """Samples ``path`` at ``t_k = start * ratio^k`` and estimates the limit of the normalised
    logarithms of the shapes.

    :param path: The shape path
    :param samples: Number of samples, at least 2
    :param start: First parameter value
    :param ratio: Geometric ratio of the schedule, in ``(0, 1)``
    :param tolerance: Angular tolerance for convergence
    :param guard_digits: Decimal digits beyond those needed to resolve the smallest parameter
    :raises DegenerateShape: if a sampled shape is 0 or 1 at working precision
    :rtype: :class:`ProbeResult`
    """
    assert samples >= 2, f'expected at least 2 samples, but got {samples}'
    start, ratio = Fraction(start), Fraction(ratio)
    assert 0 < ratio < 1 and start > 0, f'expected 0 < ratio < 1 and start > 0, but got {ratio} and {start}'
    smallest = start * ratio**(samples - 1)
    with mp.workdps(working_digits(smallest, guard_digits)):
        t = mpf(start.numerator) / start.denominator
        step = mpf(ratio.numerator) / ratio.denominator
        previous, current = None, _log_vector(path, t)
        for _ in range(samples - 1):
            t *= step
            previous, current = current, _log_vector(path, t)

        norm = sqrt(fsum(v**2 for v in current))
        normalized = [v / sqrt(1 + norm**2) for v in current]
        difference = [a - b for a, b in zip(current, previous)]
        divergent = sqrt(fsum(v**2 for v in difference)) > EVALUATION_TOLERANCE
        zero = (0.0,) * len(current)
        direction, before = _unit(current), _unit(previous)
        if divergent and direction is not None:
            indicator = float(_angle(direction, before)) if before is not None else math.pi
            direction, secant = tuple(float(v) for v in direction), tuple(float(v) for v in _unit(difference))
        else:
            direction, secant, indicator = zero, zero, 0.0
        result = ProbeResult(direction=direction,
                             normalized=tuple(float(v) for v in normalized),
                             secant=secant,
                             indicator=indicator,
                             converged=indicator < tolerance,
                             divergent=bool(divergent),
                             samples=samples)
    get_logger().info(f'probe {path!r}: {samples} samples, divergent {result.divergent}, '
                      f'indicator {result.indicator:.3e}')
    return result
