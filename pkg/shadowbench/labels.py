# -*- coding: utf-8 -*-
#
# TriMask label values. These double as the grey levels of the mask PNGs:
# object pixels in white, shadow pixels in grey, background in black.

from __future__ import absolute_import

import numpy as np

__all__ = [
    'BACKGROUND',
    'OBJECT',
    'SHADOW',
    'TRIMASK_DTYPE',
    'foreground_of',
    'make_trimask'
]

BACKGROUND = 0
SHADOW = 128
OBJECT = 255
TRIMASK_DTYPE = np.uint8


def make_trimask(foreground, shadow=None):
    """Build a TriMask from a foreground mask and a shadow mask.

    Every foreground pixel is labelled ``OBJECT`` unless it is also set in
    ``shadow``, in which case it is labelled ``SHADOW``. Shadow pixels
    outside the foreground are ignored, so the background count of the
    output always equals the background count of ``foreground``.

    Parameters
    ----------
    foreground : np.ndarray, shape=(height, width)
        Boolean (or 0/1) foreground mask.

    shadow : np.ndarray or None, shape=(height, width), optional
        Boolean mask of pixels to label as shadow.

    Returns
    -------
    trimask : np.ndarray, shape=(height, width), dtype=uint8
    """
    foreground = np.asarray(foreground, dtype=bool)
    out = np.full(foreground.shape, BACKGROUND, dtype=TRIMASK_DTYPE)
    out[foreground] = OBJECT
    if shadow is not None:
        out[foreground & np.asarray(shadow, dtype=bool)] = SHADOW
    return out


def foreground_of(trimask):
    """Get the foreground (Object or Shadow) of a TriMask as a bool mask."""
    return np.asarray(trimask) != BACKGROUND
