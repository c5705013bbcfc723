# -*- coding: utf-8 -*-
#
# HSV chromacity shadow detector

from __future__ import absolute_import, division

import numpy as np
from scipy import ndimage

from ..base import BaseShadowDetector
from ..imaging.color import hue_distance, rgb_to_hsv
from ..utils.validation import check_mask, validate_float, validate_odd

__all__ = [
    'ChromacityDetector',
    'chromacity_votes',
    'rgb_chromacity_votes',
    'window_majority'
]


def _votes(frame_hsv, background_hsv, beta1, beta2, tau_s, tau_h):
    # the per-pixel test on (..., 3) HSV arrays
    fv, bv = frame_hsv[..., 2], background_hsv[..., 2]
    lit = bv > 0
    ratio = np.divide(fv, bv, out=np.zeros_like(fv), where=lit)
    return lit & (ratio >= beta1) & (ratio <= beta2) & \
        (frame_hsv[..., 1] - background_hsv[..., 1] <= tau_s) & \
        (hue_distance(frame_hsv[..., 0], background_hsv[..., 0]) <= tau_h)


def chromacity_votes(frame_hsv, background_hsv, foreground, beta1, beta2,
                     tau_s, tau_h):
    """Per-pixel chromacity shadow test.

    A foreground pixel votes shadow iff its value is attenuated by a
    factor in ``[beta1, beta2]``, its saturation does not grow by more
    than ``tau_s`` and its hue moves by at most ``tau_h`` degrees (circular
    distance). Pixels whose background value is 0 never vote shadow.

    Parameters
    ----------
    frame_hsv, background_hsv : np.ndarray, shape=(height, width, 3)
        Frame and background in HSV, hue in degrees.

    foreground : np.ndarray, shape=(height, width)
        The foreground mask.

    beta1, beta2 : float
        The bounds of the value ratio ``F_V / B_V``.

    tau_s : float
        The saturation threshold on ``F_S - B_S`` (one-sided).

    tau_h : float
        The hue threshold, in degrees.

    Returns
    -------
    votes : np.ndarray, shape=(height, width), dtype=bool
    """
    foreground = check_mask(foreground, name='foreground')
    return foreground & _votes(frame_hsv, background_hsv, beta1, beta2,
                               tau_s, tau_h)


def rgb_chromacity_votes(frame, background, foreground, beta1, beta2,
                         tau_s, tau_h):
    """:func:`chromacity_votes` on RGB images.

    Only the foreground pixels are converted to HSV.
    """
    foreground = check_mask(foreground, name='foreground')
    votes = np.zeros(foreground.shape, dtype=bool)
    if foreground.any():
        votes[foreground] = _votes(rgb_to_hsv(frame[foreground]),
                                   rgb_to_hsv(background[foreground]),
                                   beta1, beta2, tau_s, tau_h)
    return votes


def window_majority(votes, foreground, window):
    """Label a pixel shadow iff most foreground pixels around it voted so.

    A foreground pixel is kept iff strictly more than half of the
    foreground pixels in the ``window x window`` neighbourhood centred on
    it voted shadow. Out-of-image neighbours do not count.

    Examples
    --------
    >>> fg = np.ones((5, 5), dtype=bool)
    >>> votes = np.zeros((5, 5), dtype=bool)
    >>> votes.ravel()[:12] = True
    >>> bool(window_majority(votes, fg, 5)[2, 2])
    False
    """
    votes = check_mask(votes, name='votes')
    foreground = check_mask(foreground, name='foreground')
    if window == 1:
        return votes & foreground

    def count(mask):
        # window sums from the separable box mean
        mean = ndimage.uniform_filter(mask.astype(np.float64), size=window,
                                      mode='constant', cval=0.)
        return np.rint(mean * window * window)

    return foreground & (2 * count(votes & foreground) > count(foreground))


class ChromacityDetector(BaseShadowDetector):
    """Shadow detection from the attenuation of value in HSV space.

    A cast shadow darkens the surface it falls on while roughly keeping its
    hue and saturation. Every foreground pixel is tested against the
    background reference (:func:`chromacity_votes`) and the per-pixel
    votes are smoothed by a majority over a square observation window
    (:func:`window_majority`).

    Parameters
    ----------
    beta1 : float, optional (default=0.4)
        Lower bound of the value ratio, in (0, beta2).

    beta2 : float, optional (default=0.9)
        Upper bound of the value ratio, in (beta1, 1].

    tau_s : float, optional (default=0.1)
        Saturation threshold, in [-1, 1].

    tau_h : float, optional (default=60.)
        Hue threshold in degrees, in [0, 180].

    window : int, optional (default=5)
        Side of the observation window. Must be odd; 1 disables the
        majority vote.
    """
    def __init__(self, beta1=0.4, beta2=0.9, tau_s=0.1, tau_h=60.,
                 window=5):

        self.beta1 = beta1
        self.beta2 = beta2
        self.tau_s = tau_s
        self.tau_h = tau_h
        self.window = window

    def _check_params(self):
        validate_float(self.beta1, 'beta1', lower_inclusive=False)
        validate_float(self.beta2, 'beta2', lower_inclusive=False)
        if not self.beta1 < self.beta2:
            raise ValueError("Expected beta1 < beta2, but got beta1=%r, "
                             "beta2=%r" % (self.beta1, self.beta2))
        validate_float(self.tau_s, 'tau_s', lower=-1.)
        validate_float(self.tau_h, 'tau_h', upper=180.)
        validate_odd(self.window, 'window')

    def _detect(self, frame, background, foreground):
        votes = rgb_chromacity_votes(frame, background, foreground,
                                     self.beta1, self.beta2, self.tau_s,
                                     self.tau_h)
        return window_majority(votes, foreground, int(self.window))
