#!/usr/bin/env python
# -*- encoding: utf-8 -*-

from fractions import Fraction

log_level = 'INFO'
num_threads = 2

output = dict(format='csv')

probe = dict(
    samples=400,
    ratio=Fraction(1, 4),
)
