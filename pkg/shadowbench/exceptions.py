# -*- coding: utf-8 -*-
#
# Domain errors and the CLI exit codes they map to

from __future__ import absolute_import

__all__ = [
    'ConfigError',
    'ImageReadError',
    'MissingGroundTruthError',
    'SequenceError',
    'ShadowBenchError',
    'exit_code_for'
]


class ShadowBenchError(Exception):
    """Base class for all errors raised by shadowbench."""
    exit_code = 1


class ConfigError(ShadowBenchError, ValueError):
    """Raised for unknown configuration keys or out-of-range values."""
    exit_code = 3


class SequenceError(ShadowBenchError, ValueError):
    """Raised when a sequence directory does not follow the layout."""
    exit_code = 4


class ImageReadError(ShadowBenchError, IOError):
    """Raised when a frame, background or mask cannot be decoded."""
    exit_code = 5


class MissingGroundTruthError(ShadowBenchError, ValueError):
    """Raised when an evaluation needs ground truth that is absent."""
    exit_code = 6


def exit_code_for(exc):
    """Get the process exit code for an exception.

    Parameters
    ----------
    exc : BaseException
        The exception that terminated a command.

    Examples
    --------
    >>> exit_code_for(ConfigError("bad key"))
    3
    >>> exit_code_for(RuntimeError("boom"))
    1
    """
    return getattr(exc, 'exit_code', 1)
