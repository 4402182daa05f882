#!/usr/bin/env python
# -*- encoding: utf-8 -*-

from fractions import Fraction

# resolved by spunnormal.utils.resolve_num_threads when left as None
DEFAULT_CONFIG = dict(
    log_level='WARNING',
    num_threads=None,
    progress=False,
    # certify accepts surfaces that are not pairwise compatible unless strict
    strict=False,
    output=dict(format='table', float_digits=12),
    probe=dict(start=Fraction(1, 2), ratio=Fraction(1, 2), samples=1200, tolerance=1e-3, guard_digits=30),
)
