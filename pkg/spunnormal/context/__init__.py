from .config import Config
from .defaults import DEFAULT_CONFIG
from .exceptions import *
from .exceptions import __all__ as _exception_names

__all__ = ['Config', 'DEFAULT_CONFIG'] + _exception_names
