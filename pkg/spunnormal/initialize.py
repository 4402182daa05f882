#!/usr/bin/env python
# -*- encoding: utf-8 -*-

import argparse
from pathlib import Path
from typing import Dict, Optional, Sequence, Union

from spunnormal.context import DEFAULT_CONFIG, Config
from spunnormal.logging import get_logger

__all__ = ['get_default_parser', 'launch', 'config_from_args', 'parse_args']

COMMAND_NAMES = ('validate', 'equations', 'vertices', 'slopes', 'orbits', 'certify', 'prevariety', 'correspond',
                 'probe', 'verify')


def get_default_parser() -> argparse.ArgumentParser:
    """Builds the command line parser. Every option defaults to None so that only the flags given
    on the command line override the configuration.

    :return: The parser; callers may add their own arguments
    :rtype: :class:`argparse.ArgumentParser`
    """
    parser = argparse.ArgumentParser(prog='spunnormal',
                                     description='Exact spun-normal surfaces and tropical pre-varieties of '
                                     'ideal triangulations')
    parser.add_argument('command', choices=COMMAND_NAMES, help='what to compute')
    parser.add_argument('input', type=str, help='triangulation JSON, or a vertex dump for verify')
    parser.add_argument('--config', type=str, help='path to a python config file')
    parser.add_argument('--format', type=str, choices=['table', 'csv', 'json'], help='output format')
    parser.add_argument('--nz', type=str, help='Neumann-Zagier document with peripheral holonomies')
    parser.add_argument('--reference', type=str, help='reference vertex table used for numbering')
    parser.add_argument('--surfaces', type=str, help='comma separated vertex ids, e.g. 1,5,6')
    parser.add_argument('--subgroup', type=str, choices=['full', 'cusp'], help='symmetry group for orbits')
    parser.add_argument('--path', type=str, help='registered degeneration, e.g. EqualGrowthPath')
    parser.add_argument('--limit', type=str, help='limit parameter of the degeneration')
    parser.add_argument('--samples', type=int, help='number of probe samples')
    parser.add_argument('--at', type=str, help='comma separated complex shapes, e.g. i,i,i,i')
    parser.add_argument('--log-level', dest='log_level', type=str, help='INFO, DEBUG, WARNING or ERROR')
    parser.add_argument('--num-threads', dest='num_threads', type=int, help='worker threads')
    parser.add_argument('--progress', action='store_true', default=None, help='show progress bars')
    parser.add_argument('--strict',
                        action='store_true',
                        default=None,
                        help='certify: reject surfaces that are not pairwise compatible')
    return parser


def config_from_args(args: argparse.Namespace) -> Dict:
    """The command line flags that were actually given, shaped like :data:`DEFAULT_CONFIG`."""
    given = {k: v for k, v in vars(args).items() if v is not None and k != 'config'}
    if 'format' in given:
        given['output'] = dict(format=given.pop('format'))
    if 'samples' in given:
        given['probe'] = dict(samples=given.pop('samples'))
    return given


def launch(config: Union[str, Path, Config, Dict, None] = None,
           config_file: Optional[Union[str, Path]] = None,
           verbose: bool = True) -> Config:
    """Resolves the configuration of a run and sets the log level.

    Defaults are overridden by ``config_file`` and then by ``config``.

    :param config: Options of this run, or the path of a config file
    :type config: Union[str, Path, Config, dict], optional
    :param config_file: A python config file
    :type config_file: Union[str, Path], optional
    :param verbose: Whether to log the resolved configuration at DEBUG level
    :type verbose: bool, optional
    :raises ConfigException: if a config file is missing or not a .py file
    :return: The resolved configuration
    :rtype: :class:`spunnormal.context.Config`
    """
    assert config is None or isinstance(config, (Config, str, Path, dict)), \
        f'expected argument config to be Config, dict, str or Path, but got {type(config)}'
    if isinstance(config, (str, Path)):
        config_file, config = config, None

    resolved = Config(DEFAULT_CONFIG)
    if config_file is not None:
        resolved.update(Config.from_file(config_file))
    if config is not None:
        resolved.update(config)

    logger = get_logger()
    logger.set_level(resolved.log_level)
    if verbose:
        logger.debug(f'resolved configuration: {dict(resolved)}')
    return resolved


def parse_args(argv: Optional[Sequence[str]] = None) -> Config:
    args = get_default_parser().parse_args(argv)
    return launch(config_from_args(args), config_file=args.config)
