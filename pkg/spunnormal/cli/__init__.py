from .commands import COMMAND_TYPES, BaseCommand
from .main import main, run

__all__ = ['COMMAND_TYPES', 'BaseCommand', 'main', 'run']
