#!/usr/bin/env python
# -*- encoding: utf-8 -*-

from typing import Dict, List, Type


class Registry:
    """Named classes of one kind (commands, shape paths, exporters) that the builders in
    :mod:`spunnormal.builder` instantiate from a ``dict(type=..., **kwargs)`` config.

    :param name: The name of the registry, used in error messages
    :type name: str
    """

    def __init__(self, name: str):
        self._name = name
        self._registry: Dict[str, Type] = dict()

    @property
    def name(self):
        return self._name

    def register_module(self, module_class):
        """Registers ``module_class`` under its class name; used as a class decorator.

        :param module_class: The class to be registered
        :type module_class: class
        :raises AssertionError: if a class of the same name is already registered
        :return: ``module_class`` unchanged
        :rtype: class
        """
        module_name = module_class.__name__
        assert module_name not in self._registry, f'{module_name} is already registered in {self.name}'
        self._registry[module_name] = module_class
        return module_class

    def get_module(self, module_name: str):
        """
        :raises NameError: if nothing is registered under ``module_name``
        """
        if module_name not in self._registry:
            raise NameError(f'{module_name} is not registered in {self.name}, known are {self.names()}')
        return self._registry[module_name]

    def has(self, module_name: str) -> bool:
        return module_name in self._registry

    def names(self) -> List[str]:
        """Registered names in registration order."""
        return list(self._registry.keys())

    def __len__(self):
        return len(self._registry)
