# -*- coding: utf-8 -*-
#
# PNG input and output for frames and masks

from __future__ import absolute_import

import os

import numpy as np
from PIL import Image

from ..exceptions import ImageReadError
from ..labels import OBJECT, SHADOW
from ..utils.validation import check_frame, check_trimask

__all__ = [
    'read_frame',
    'read_grey',
    'read_trimask',
    'render_overlay',
    'write_frame',
    'write_grey'
]

# object pixels in blue, shadow pixels in green
_OVERLAY_COLOURS = {OBJECT: (0, 0, 255), SHADOW: (0, 255, 0)}


def _open(path):
    try:
        with Image.open(path) as img:
            img.load()
            return img.copy()
    except (IOError, OSError, ValueError) as e:
        raise ImageReadError("Could not read image %r: %s" % (path, e))


def read_frame(path):
    """Read a PNG as an RGB frame of shape (height, width, 3), uint8."""
    img = _open(path)
    if img.mode != 'RGB':
        img = img.convert('RGB')
    return np.asarray(img, dtype=np.uint8).copy()


def read_grey(path):
    """Read a PNG as a single-channel uint8 raster."""
    img = _open(path)
    if img.mode != 'L':
        img = img.convert('L')
    return np.asarray(img, dtype=np.uint8).copy()


def read_trimask(path):
    """Read a ground-truth or predicted TriMask PNG.

    The mask must hold only the grey levels 0 (background), 128 (shadow)
    and 255 (object).
    """
    try:
        return check_trimask(read_grey(path), name=os.path.basename(path))
    except ValueError as e:
        raise ImageReadError("Invalid mask %r: %s" % (path, e))


def write_frame(path, frame):
    """Write an RGB frame as PNG."""
    Image.fromarray(check_frame(frame)).save(path)


def write_grey(path, image):
    """Write a single-channel uint8 raster (e.g. a TriMask) as PNG."""
    image = np.asarray(image)
    if image.ndim != 2:
        raise ValueError("Expected a 2D raster, but got shape=%r"
                         % (image.shape,))
    Image.fromarray(image.astype(np.uint8)).save(path)


def render_overlay(frame, trimask, opacity=0.5):
    """Paint a TriMask over its frame for visual inspection.

    Object pixels are tinted blue and shadow pixels green; background
    pixels keep the frame colour.

    Parameters
    ----------
    frame : array-like, shape=(height, width, 3)
        The RGB frame.

    trimask : array-like, shape=(height, width)
        The labels to draw.

    opacity : float, optional (default=0.5)
        Weight of the label colour in the blend.
    """
    out = check_frame(frame).astype(np.float64)
    trimask = check_trimask(trimask)
    for label, colour in _OVERLAY_COLOURS.items():
        sel = trimask == label
        out[sel] = (1. - opacity) * out[sel] + \
            opacity * np.asarray(colour, dtype=np.float64)
    return np.clip(np.floor(out + 0.5), 0, 255).astype(np.uint8)
