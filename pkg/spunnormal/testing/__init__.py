from .comparison import angle_between, assert_close_complex, assert_exact_equal, assert_same_ray
from .utils import parameterize

__all__ = ['angle_between', 'assert_close_complex', 'assert_exact_equal', 'assert_same_ray', 'parameterize']
