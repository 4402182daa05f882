from .registry import Registry

COMMANDS = Registry("commands")
DEGENERATIONS = Registry("degenerations")
EXPORTERS = Registry("exporters")

__all__ = ['Registry', 'COMMANDS', 'DEGENERATIONS', 'EXPORTERS']
