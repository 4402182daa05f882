import logging
from typing import Iterable, Optional

from .logger import PipelineLogger

__all__ = ['get_logger', 'PipelineLogger', 'disable_existing_loggers']


def get_logger(name: str = 'spunnormal') -> PipelineLogger:
    """The shared :class:`PipelineLogger` called ``name``; one instance exists per name.

    :rtype: :class:`spunnormal.logging.PipelineLogger`
    """
    return PipelineLogger.get_instance(name=name)


def disable_existing_loggers(include: Optional[Iterable[str]] = None, keep_prefix: str = 'spunnormal'):
    """Raises already created loggers to `WARNING`, e.g. to silence sympy or numpy helpers in a run.

    Args:
        include (Optional[Iterable[str]], optional): Only these loggers are raised. Defaults to every
            logger whose name does not start with ``keep_prefix``.
        keep_prefix (str, optional): Loggers of this package that stay untouched. Defaults to 'spunnormal'.
    """
    names = list(logging.Logger.manager.loggerDict.keys())
    targets = set(include) if include is not None else {n for n in names if not n.startswith(keep_prefix)}
    for name in names:
        if name in targets:
            logging.getLogger(name).setLevel(logging.WARNING)
