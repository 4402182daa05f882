#!/usr/bin/env python
# -*- encoding: utf-8 -*-

import importlib.util
import inspect
from pathlib import Path
from typing import Union

from spunnormal.logging import get_logger

from .exceptions import ConfigException


class Config(dict):
    """A dict of run options whose keys can be read as attributes; nested dicts become
    :class:`Config` objects too, so ``config.probe.samples`` works.

    :param config: The options to wrap
    :type config: dict, optional
    """

    def __init__(self, config: dict = None):
        super().__init__()
        for k, v in (config or {}).items():
            self._add_item(k, v)

    def __getattr__(self, key):
        if key not in self:
            raise AttributeError(key)
        return self[key]

    def __setattr__(self, key, value):
        self[key] = value

    def _add_item(self, key, value):
        self[key] = Config(value) if isinstance(value, dict) else value

    def update(self, config):
        """Merges ``config`` into this object. Nested dictionaries are merged key by key
        instead of being replaced, so a partial ``probe`` section only overrides what it names.
        """
        assert isinstance(config, (Config, dict)), 'can only update dictionary or Config objects.'
        for k, v in config.items():
            if isinstance(v, dict) and isinstance(self.get(k), Config):
                self[k].update(v)
            else:
                self._add_item(k, v)
        return self

    @staticmethod
    def from_file(filename: Union[str, Path]) -> 'Config':
        """Reads the top-level variables of a python file, skipping dunder names, modules and classes.

        :param filename: Path of a ``.py`` file
        :type filename: Union[str, Path]
        :raises ConfigException: if ``filename`` is not a path, does not exist or is not a .py file
        :rtype: :class:`Config`
        """
        if not isinstance(filename, (str, Path)):
            raise ConfigException(f'expected a str or Path, but got {type(filename)}')
        filepath = Path(filename).absolute()
        if not filepath.exists():
            raise ConfigException(f'{filename} is not found, please check your configuration path')
        if filepath.suffix != '.py':
            raise ConfigException(f'only .py config files are supported, but got {filepath.name}')

        spec = importlib.util.spec_from_file_location(f'spunnormal_config_{filepath.stem}', filepath)
        module = importlib.util.module_from_spec(spec)
        try:
            spec.loader.exec_module(module)
        except Exception as e:
            raise ConfigException(f'cannot execute config file {filepath.name}: {e}') from e

        config = Config()
        for k, v in vars(module).items():
            if not (k.startswith('__') or inspect.ismodule(v) or inspect.isclass(v)):
                config._add_item(k, v)
        get_logger().debug(f'read {sorted(config)} from {filepath}', stage='config')
        return config
