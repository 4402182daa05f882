#!/usr/bin/env python
# -*- encoding: utf-8 -*-
import math
import os
from fractions import Fraction
from functools import reduce
from typing import Iterable, Optional, Sequence, Tuple, Union

import psutil

from spunnormal.constants import NUM_THREADS_ENV

Rational = Union[int, Fraction]


def resolve_num_threads(value: Optional[int] = None) -> int:
    """Number of worker threads for fan-out stages.

    An explicit ``value`` wins, then the environment variable, then the physical core count.

    :param value: Explicit thread count, defaults to None
    :type value: int, optional
    :return: A positive thread count
    :rtype: int
    """
    if value is None:
        env_value = os.environ.get(NUM_THREADS_ENV)
        if env_value:
            value = int(env_value)
        else:
            value = psutil.cpu_count(logical=False) or 1
    assert value >= 1, f'expected a positive number of threads, but got {value}'
    return value


def to_fraction(value) -> Fraction:
    """Exact conversion of ints, Fractions and ``'p/q'`` strings. Floats are refused."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError('booleans are not rational numbers')
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f'cannot convert {type(value).__name__} to an exact rational')


def format_rational(value: Rational) -> str:
    """Reduced fraction ``p/q``; integers are printed without a denominator."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f'{value.numerator}/{value.denominator}'


def format_float(value: float, digits: int = 12) -> str:
    text = f'{value:.{digits}g}'
    # avoid the platform-dependent spelling of negative zero
    return '0' if text in ('-0', '0') else text


def gcd_of(values: Iterable[int]) -> int:
    return reduce(math.gcd, (abs(int(v)) for v in values), 0)


def lcm_of(values: Iterable[int]) -> int:
    return reduce(lambda a, b: a * b // math.gcd(a, b), (int(v) for v in values), 1)


def primitive_vector(values: Sequence[Rational]) -> Tuple[int, ...]:
    """Positive rescaling of a rational vector to an integer vector with gcd 1.

    The zero vector is returned unchanged (as integers).
    """
    fractions = [Fraction(v) for v in values]
    scale = lcm_of(f.denominator for f in fractions)
    integers = [int(f * scale) for f in fractions]
    g = gcd_of(integers)
    if g == 0:
        return tuple(integers)
    return tuple(v // g for v in integers)


def dot(a: Sequence[Rational], b: Sequence[Rational]):
    assert len(a) == len(b), f'expected vectors of equal length, but got {len(a)} and {len(b)}'
    return sum((x * y for x, y in zip(a, b)), 0)
