#!/usr/bin/env python
# -*- encoding: utf-8 -*-

import logging
from pathlib import Path
from typing import Optional, Union

_FORMAT = 'spunnormal - %(name)s - %(asctime)s %(levelname)s: %(message)s'
_LEVELS = ('INFO', 'DEBUG', 'WARNING', 'ERROR')

try:
    from rich.console import Console
    from rich.logging import RichHandler

    # stdout carries command output, so records go to stderr
    logging.basicConfig(level=logging.WARNING,
                        format=_FORMAT,
                        handlers=[RichHandler(console=Console(stderr=True), show_path=False)])
except ImportError:
    logging.basicConfig(level=logging.WARNING, format=_FORMAT)


class PipelineLogger:
    """Event logger shared by the stages of the surface pipeline, one instance per name.

    Messages may carry the pipeline stage they come from (``parse``, ``enumerate``, ``fold`` ...),
    which is prepended as ``[stage]``.

    :param name: The name of the logger
    :type name: str
    """

    __instances = dict()

    @staticmethod
    def get_instance(name: str) -> 'PipelineLogger':
        """The logger called ``name``, created on first use."""
        existing = PipelineLogger.__instances.get(name)
        return existing if existing is not None else PipelineLogger(name=name)

    def __init__(self, name):
        if name in PipelineLogger.__instances:
            raise Exception(f'logger {name} exists already, use spunnormal.logging.get_logger')
        self._name = name
        self._logger = logging.getLogger(name)
        PipelineLogger.__instances[name] = self

    @property
    def name(self):
        return self._name

    @staticmethod
    def _check_valid_logging_level(level: str):
        assert level in _LEVELS, f'found invalid logging level {level}, expected one of {_LEVELS}'

    def set_level(self, level: str):
        """
        :param level: One of INFO, DEBUG, WARNING and ERROR
        :type level: str
        """
        self._check_valid_logging_level(level)
        self._logger.setLevel(getattr(logging, level))

    def get_level(self) -> str:
        return logging.getLevelName(self._logger.getEffectiveLevel())

    def log_to_file(self,
                    path: Union[str, Path],
                    mode: str = 'a',
                    level: str = 'INFO',
                    suffix: Optional[str] = None) -> Path:
        """Also writes records of at least ``level`` to ``path/spunnormal[_suffix].log``.

        :param path: Directory of the log file, created if missing
        :type path: Union[str, Path]
        :param mode: File mode, defaults to append
        :type mode: str, optional
        :param level: One of INFO, DEBUG, WARNING and ERROR
        :type level: str, optional
        :param suffix: Appended to the file name
        :type suffix: str, optional
        :return: The path of the log file
        :rtype: pathlib.Path
        """
        assert isinstance(path, (str, Path)), f'expected argument path to be type str or Path, but got {type(path)}'
        self._check_valid_logging_level(level)
        directory = Path(path)
        directory.mkdir(parents=True, exist_ok=True)
        target = directory.joinpath(f'spunnormal_{suffix}.log' if suffix is not None else 'spunnormal.log')

        handler = logging.FileHandler(target, mode)
        handler.setLevel(getattr(logging, level))
        handler.setFormatter(logging.Formatter(_FORMAT))
        self._logger.addHandler(handler)
        return target

    def _log(self, level: str, message: str, stage: Optional[str]):
        getattr(self._logger, level)(f'[{stage}] {message}' if stage else message)

    def info(self, message: str, stage: Optional[str] = None):
        self._log('info', message, stage)

    def warning(self, message: str, stage: Optional[str] = None):
        self._log('warning', message, stage)

    def debug(self, message: str, stage: Optional[str] = None):
        self._log('debug', message, stage)

    def error(self, message: str, stage: Optional[str] = None):
        self._log('error', message, stage)
