# -*- coding: utf-8 -*-
#
# Input checks shared by the detectors, the background model and the metrics

from __future__ import absolute_import

import numpy as np

from ..labels import BACKGROUND, OBJECT, SHADOW

__all__ = [
    'check_frame',
    'check_grey',
    'check_mask',
    'check_same_shape',
    'check_trimask',
    'validate_float',
    'validate_odd'
]

_TRIMASK_VALUES = np.array([BACKGROUND, SHADOW, OBJECT])


def check_frame(frame, name='frame'):
    """Check an RGB frame.

    Determine whether ``frame`` is an 8-bit RGB raster of shape
    ``(height, width, 3)`` and raise a ValueError if not. Values outside
    [0, 255] or non-integral values are rejected, so a frame that passes
    this check can safely be cast to ``np.uint8``.

    Parameters
    ----------
    frame : array-like, shape=(height, width, 3)
        The frame to check.

    name : str, optional (default='frame')
        Used for more clear error messages.

    Returns
    -------
    frame : np.ndarray, shape=(height, width, 3), dtype=uint8
        The frame as an unsigned 8-bit array. This is not a copy if the
        input was already ``uint8``.
    """
    arr = np.asarray(frame)
    if arr.ndim != 3 or arr.shape[2] != 3:
        raise ValueError("%s must have shape (height, width, 3), but got "
                         "shape=%r" % (name, arr.shape))
    if arr.shape[0] < 1 or arr.shape[1] < 1:
        raise ValueError("%s must be at least 1x1, but got shape=%r"
                         % (name, arr.shape))
    if arr.dtype == np.uint8:
        return arr
    if not np.all(np.isfinite(arr)):
        raise ValueError("Expected all entries in %s to be finite" % name)
    if arr.min() < 0 or arr.max() > 255 or np.any(arr != np.round(arr)):
        raise ValueError("%s must hold integer channel values in [0, 255]"
                         % name)
    return arr.astype(np.uint8)


def check_grey(image, name='image', min_size=1):
    """Check a single-channel raster and return it as float64.

    Parameters
    ----------
    image : array-like, shape=(height, width)
        The single-channel image.

    name : str, optional (default='image')
        Used for more clear error messages.

    min_size : int, optional (default=1)
        The minimum size allowed along both axes.
    """
    arr = np.asarray(image, dtype=np.float64)
    if arr.ndim != 2:
        raise ValueError("%s must be a single-channel 2D array, but got "
                         "shape=%r" % (name, arr.shape))
    if arr.shape[0] < min_size or arr.shape[1] < min_size:
        raise ValueError("%s must be at least %ix%i, but got shape=%r"
                         % (name, min_size, min_size, arr.shape))
    return arr


def check_mask(mask, name='mask'):
    """Check a binary mask and return it as a bool array."""
    arr = np.asarray(mask)
    if arr.ndim != 2:
        raise ValueError("%s must be a 2D binary mask, but got shape=%r"
                         % (name, arr.shape))
    if arr.dtype != bool:
        arr = arr != 0
    return arr


def check_trimask(trimask, name='trimask'):
    """Check that a raster only holds Background, Shadow and Object labels.

    Parameters
    ----------
    trimask : array-like, shape=(height, width)
        The label raster.

    name : str, optional (default='trimask')
        Used for more clear error messages.
    """
    arr = np.asarray(trimask)
    if arr.ndim != 2:
        raise ValueError("%s must be 2D, but got shape=%r"
                         % (name, arr.shape))
    present = np.unique(arr)
    if not np.all(np.isin(present, _TRIMASK_VALUES)):
        raise ValueError("%s may only contain the labels %r, but found %r"
                         % (name, _TRIMASK_VALUES.tolist(), present.tolist()))
    return arr.astype(np.uint8)


def check_same_shape(*arrays, **kwargs):
    """Validate that all arrays share the same spatial dimensions.

    Only the first two axes (height, width) are compared, so an RGB frame
    and its foreground mask are compatible.

    Parameters
    ----------
    *arrays : np.ndarray
        The rasters to compare.

    names : iterable, optional
        The names of the arrays, for error messages.
    """
    names = kwargs.pop('names', None)
    shapes = [tuple(np.shape(a)[:2]) for a in arrays]
    if len(set(shapes)) > 1:
        if names is None:
            names = ['array_%i' % i for i in range(len(arrays))]
        raise ValueError("Dimension mismatch: %s"
                         % ', '.join('%s=%r' % (n, s)
                                     for n, s in zip(names, shapes)))


def validate_float(value, name, lower=0., upper=1., lower_inclusive=True,
                   upper_inclusive=True):
    """Validate that a scalar lies within an interval.

    Examples
    --------
    >>> validate_float(0.5, 'lam')
    >>> validate_float(1.5, 'lam')  # doctest: +IGNORE_EXCEPTION_DETAIL
    Traceback (most recent call last):
    ValueError: Expected 0.0 <= lam <= 1.0, but got 1.5
    """
    lo_ok = lower <= value if lower_inclusive else lower < value
    hi_ok = value <= upper if upper_inclusive else value < upper
    if not (lo_ok and hi_ok):
        raise ValueError('Expected %r %s %s %s %r, but got %r'
                         % (lower, '<=' if lower_inclusive else '<', name,
                            '<=' if upper_inclusive else '<', upper, value))


def validate_odd(value, name, minimum=1):
    """Validate that an integer is odd and at least ``minimum``."""
    if int(value) != value or value < minimum or value % 2 != 1:
        raise ValueError("%s must be an odd integer >= %i, but got %r"
                         % (name, minimum, value))
