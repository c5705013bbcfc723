# -*- coding: utf-8 -*-
#
# Forward-difference gradient fields

from __future__ import absolute_import, division

from collections import namedtuple

import numpy as np

from ..utils.validation import check_grey

__all__ = [
    'GradientField',
    'gradient_field'
]

GradientField = namedtuple('GradientField',
                           ['dx', 'dy', 'magnitude', 'direction'])
GradientField.__doc__ = """Per-pixel gradient of a single-channel image.

dx, dy : np.ndarray, shape=(height, width)
    Horizontal and vertical forward differences.

magnitude : np.ndarray, shape=(height, width)
    ``sqrt(dx ** 2 + dy ** 2)``.

direction : np.ndarray, shape=(height, width)
    ``arctan2(dy, dx)`` in [-pi, pi]. Only meaningful where the magnitude
    is positive.
"""


def gradient_field(grey):
    """Compute the forward-difference gradient of a grey image.

    The horizontal gradient is the difference between a pixel and its right
    neighbour, the vertical gradient the difference between a pixel and the
    pixel in the next row. The last row and the last column have no forward
    neighbour and get a zero gradient.

    Parameters
    ----------
    grey : array-like, shape=(height, width)
        Single-channel image, at least 2x2.

    Returns
    -------
    field : GradientField

    Examples
    --------
    >>> img = np.array([[0., 3.], [4., 0.]])
    >>> f = gradient_field(img)
    >>> float(f.magnitude[0, 0])
    5.0
    """
    grey = check_grey(grey, name='grey', min_size=2)

    dx = np.zeros_like(grey)
    dy = np.zeros_like(grey)
    dx[:-1, :-1] = grey[:-1, 1:] - grey[:-1, :-1]
    dy[:-1, :-1] = grey[1:, :-1] - grey[:-1, :-1]

    magnitude = np.hypot(dx, dy)
    direction = np.arctan2(dy, dx)
    return GradientField(dx, dy, magnitude, direction)
