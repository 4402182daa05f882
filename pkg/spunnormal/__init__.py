from .initialize import get_default_parser, launch

__version__ = '0.1.0'
