from .common import (dot, format_float, format_rational, gcd_of, lcm_of, primitive_vector, resolve_num_threads,
                     to_fraction)
from .timer import MultiTimer, Timer

__all__ = [
    'dot', 'format_float', 'format_rational', 'gcd_of', 'lcm_of', 'primitive_vector', 'resolve_num_threads',
    'to_fraction', 'MultiTimer', 'Timer'
]
