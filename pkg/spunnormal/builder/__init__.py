from .builder import build_command, build_degeneration, build_exporter, build_from_registry

__all__ = ['build_command', 'build_degeneration', 'build_exporter', 'build_from_registry']
