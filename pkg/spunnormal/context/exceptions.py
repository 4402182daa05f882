#!/usr/bin/env python
# -*- encoding: utf-8 -*-

__all__ = [
    'SpunNormalError', 'ValidationError', 'MalformedDocument', 'UnpairedFace', 'NonInvolutivePairing', 'OrientationViolation',
    'NonTorusLink', 'DimensionMismatch', 'NotPointed', 'IncompatibleSupports', 'DegenerateShape',
    'DegenerateSupport', 'NoAdmissibleSolution', 'ConfigException'
]


class SpunNormalError(Exception):
    """Base class of every error raised by the library. ``exit_code`` is what the command line
    frontend returns when the error reaches it.
    """
    exit_code = 3


class ValidationError(SpunNormalError):
    exit_code = 2


class MalformedDocument(ValidationError):
    pass


class UnpairedFace(ValidationError):
    pass


class NonInvolutivePairing(ValidationError):
    pass


class OrientationViolation(ValidationError):
    pass


class NonTorusLink(ValidationError):
    pass


class ConfigException(ValidationError):
    pass


class DimensionMismatch(SpunNormalError):
    pass


class NotPointed(SpunNormalError):
    pass


class IncompatibleSupports(SpunNormalError):
    pass


class DegenerateShape(SpunNormalError):
    pass


class DegenerateSupport(SpunNormalError):
    pass


class NoAdmissibleSolution(SpunNormalError):
    pass
