# -*- coding: utf-8 -*-
#
# Colour conversions, circular hue arithmetic and desaturation

from __future__ import absolute_import, division

import numpy as np
from skimage import color as skcolor

from ..utils.validation import check_frame, validate_float

__all__ = [
    'LUMA_WEIGHTS',
    'desaturate',
    'hsv_to_rgb',
    'hue_distance',
    'rgb_to_hsv',
    'round_half_away',
    'to_grey'
]

# ITU-R BT.601
LUMA_WEIGHTS = np.array([0.299, 0.587, 0.114])


def round_half_away(x):
    """Round to the nearest integer, halves away from zero.

    ``np.round`` rounds halves to even, which would make 0.5 -> 0 and
    2.5 -> 2. Every float to 8-bit conversion in this package goes through
    this function instead.

    Examples
    --------
    >>> round_half_away(np.array([0.5, 1.5, 2.5, -0.5])).tolist()
    [1.0, 2.0, 3.0, -1.0]
    """
    x = np.asarray(x, dtype=np.float64)
    return np.sign(x) * np.floor(np.abs(x) + 0.5)


def _to_uint8(x):
    return np.clip(round_half_away(x), 0, 255).astype(np.uint8)


def rgb_to_hsv(rgb):
    """Convert RGB values to HSV.

    Uses the hexcone model: ``V = max / 255``, ``S = (max - min) / max``
    (0 for black) and the hue in degrees in [0, 360). Achromatic pixels
    get the canonical hue 0.

    Parameters
    ----------
    rgb : array-like, shape=(..., 3)
        RGB values with channels in [0, 255]. A single triple is accepted.

    Returns
    -------
    hsv : np.ndarray, shape=(..., 3)
        Hue in degrees, saturation and value in [0, 1].

    Examples
    --------
    >>> rgb_to_hsv((255, 0, 0)).tolist()
    [0.0, 1.0, 1.0]
    >>> rgb_to_hsv((0, 0, 0)).tolist()
    [0.0, 0.0, 0.0]
    """
    rgb = np.asarray(rgb, dtype=np.float64)
    if rgb.shape[-1] != 3:
        raise ValueError("Expected a trailing channel axis of size 3, "
                         "but got shape=%r" % (rgb.shape,))
    if np.any(rgb < 0) or np.any(rgb > 255):
        raise ValueError("RGB channels must lie in [0, 255]")

    shape = rgb.shape
    hsv = skcolor.rgb2hsv(rgb.reshape(-1, 1, 3) / 255.).reshape(shape)
    hsv[..., 0] = np.mod(hsv[..., 0] * 360., 360.)
    hsv[..., 0][hsv[..., 1] == 0] = 0.
    return hsv


def hsv_to_rgb(hsv):
    """Convert HSV (hue in degrees) back to 8-bit RGB.

    Parameters
    ----------
    hsv : array-like, shape=(..., 3)
        Hue in degrees, saturation and value in [0, 1].

    Returns
    -------
    rgb : np.ndarray, shape=(..., 3), dtype=uint8
    """
    hsv = np.array(hsv, dtype=np.float64)
    shape = hsv.shape
    hsv[..., 0] = np.mod(hsv[..., 0], 360.) / 360.
    rgb = skcolor.hsv2rgb(hsv.reshape(-1, 1, 3)).reshape(shape)
    return _to_uint8(rgb * 255.)


def hue_distance(h1, h2):
    """Circular distance between two hues in degrees.

    Parameters
    ----------
    h1, h2 : float or array-like
        Hues in degrees, in [0, 360).

    Returns
    -------
    dist : float or np.ndarray
        ``min(|h1 - h2|, 360 - |h1 - h2|)``, in [0, 180].

    Examples
    --------
    >>> hue_distance(359, 2)
    3.0
    >>> hue_distance(0, 180)
    180.0
    """
    d = np.abs(np.asarray(h1, dtype=np.float64) -
               np.asarray(h2, dtype=np.float64))
    d = np.minimum(d, 360. - d)
    return float(d) if d.ndim == 0 else d


def to_grey(frame):
    """Get the BT.601 luma of an RGB frame as a float image.

    Parameters
    ----------
    frame : array-like, shape=(height, width, 3)
        The RGB frame.

    Returns
    -------
    grey : np.ndarray, shape=(height, width), dtype=float64
        Luma, not rounded.
    """
    frame = check_frame(frame)
    return frame.astype(np.float64).dot(LUMA_WEIGHTS)


def desaturate(frame, lam, mode='blend'):
    """Reduce the colour information of a frame.

    With ``mode="blend"`` every pixel is blended toward its grey value,
    ``(1 - lam) * orig + lam * grey``, where grey replicates the luma into
    all three channels. With ``mode="hsv"`` the HSV saturation is scaled by
    ``1 - lam`` while hue and value are kept. In both modes ``lam=0``
    returns the input unchanged and ``lam=1`` returns a grey frame.

    Parameters
    ----------
    frame : array-like, shape=(height, width, 3)
        The RGB frame.

    lam : float
        The desaturation rate in [0, 1].

    mode : str, optional (default='blend')
        One of "blend" or "hsv".

    Returns
    -------
    out : np.ndarray, shape=(height, width, 3), dtype=uint8
    """
    validate_float(lam, 'lam')
    frame = check_frame(frame)
    if lam == 0:
        return frame.copy()

    if mode == 'blend':
        orig = frame.astype(np.float64)
        grey = orig.dot(LUMA_WEIGHTS)[..., np.newaxis]
        return _to_uint8((1. - lam) * orig + lam * grey)
    elif mode == 'hsv':
        hsv = rgb_to_hsv(frame)
        hsv[..., 1] *= (1. - lam)
        return hsv_to_rgb(hsv)
    raise ValueError("mode must be one of ('blend', 'hsv'), but got %r"
                     % mode)
