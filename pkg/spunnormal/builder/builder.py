#!/usr/bin/env python
# -*- encoding: utf-8 -*-

from spunnormal.logging import get_logger
from spunnormal.registry import COMMANDS, DEGENERATIONS, EXPORTERS, Registry


def build_from_registry(config, registry: Registry):
    """Instantiates the class registered in ``registry`` under ``config['type']`` with the remaining
    entries of ``config`` as keyword arguments.

    :param config: The class name under ``type`` and its keyword arguments
    :type config: dict or :class:`spunnormal.context.Config`
    :param registry: The registry to look the class up in
    :type registry: :class:`Registry`
    :raises AssertionError: if ``config`` names no type
    :raises NameError: if the type is not registered
    :return: The new object
    """
    assert isinstance(registry, Registry), f'expected type Registry but got {type(registry)}'
    kwargs = dict(config)
    assert 'type' in kwargs, f'config for {registry.name} needs a type'
    mod_type = kwargs.pop('type')
    cls = registry.get_module(mod_type)
    try:
        return cls(**kwargs)
    except Exception:
        get_logger().error(f'cannot build {mod_type} from registry {registry.name} with {kwargs}')
        raise


def build_command(config):
    """Returns a command object registered in :data:`COMMANDS`.

    :param config: A dict with the registered class name under ``type`` and its keyword arguments
    :type config: dict or :class:`spunnormal.context.Config`
    :return: An object of :class:`spunnormal.cli.commands.BaseCommand`
    """
    return build_from_registry(config, COMMANDS)


def build_degeneration(config):
    """Returns a shape path registered in :data:`DEGENERATIONS`.

    :param config: A dict with the registered class name under ``type`` and its keyword arguments
    :type config: dict or :class:`spunnormal.context.Config`
    :return: An object of :class:`spunnormal.tropical.degenerations.ShapePath`
    """
    return build_from_registry(config, DEGENERATIONS)


def build_exporter(config):
    """Returns a vertex-table writer registered in :data:`EXPORTERS`.

    :param config: A dict with the registered class name under ``type`` and its keyword arguments
    :type config: dict or :class:`spunnormal.context.Config`
    :return: An object of :class:`spunnormal.surfaces.export.BaseExporter`
    """
    return build_from_registry(config, EXPORTERS)
