#!/usr/bin/env python
# -*- encoding: utf-8 -*-

import json
import sys
from typing import Optional, Sequence

from spunnormal.builder import build_command
from spunnormal.constants import EXIT_IO
from spunnormal.context import Config, SpunNormalError
from spunnormal.initialize import parse_args
from spunnormal.logging import get_logger

from .commands import COMMAND_TYPES

__all__ = ['run', 'main']


def _report_error(error: Exception):
    sys.stderr.write(json.dumps({'error': type(error).__name__, 'message': str(error)}) + '\n')


def run(config: Config) -> int:
    """Runs the command named in ``config`` and writes its output to stdout.

    :param config: A resolved configuration, see :func:`spunnormal.initialize.launch`
    :type config: :class:`spunnormal.context.Config`
    :return: The exit code
    :rtype: int
    """
    assert config.command in COMMAND_TYPES, f'unknown command {config.command}'
    logger = get_logger()
    try:
        command = build_command(dict(type=COMMAND_TYPES[config.command], config=config))
        output = command.execute()
    except SpunNormalError as e:
        logger.debug(f'{config.command} failed with {type(e).__name__}')
        _report_error(e)
        return e.exit_code
    except OSError as e:
        _report_error(e)
        return EXIT_IO
    sys.stdout.write(output)
    for name, timer in command.timer:
        logger.debug(f'{name}: {timer.get_history_sum():.3f}s')
    return command.status


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        config = parse_args(argv)
    except SpunNormalError as e:
        _report_error(e)
        return e.exit_code
    return run(config)
