# -*- coding: utf-8 -*-
#
# Large-region texture shadow detector: chromacity candidate regions
# verified by gradient direction correlation with the background.

from __future__ import absolute_import, division

import logging

import numpy as np
from scipy import ndimage
from skimage.morphology import thin

from ..base import BaseShadowDetector
from ..imaging.color import to_grey
from ..imaging.gradients import gradient_field
from ..imaging.regions import EIGHT_CONNECTED, label_components, \
    regions_from_labels
from ..utils.validation import check_mask, validate_float
from .chromacity import rgb_chromacity_votes

__all__ = [
    'FLAT_POLICIES',
    'LargeRegionTextureDetector',
    'candidate_regions',
    'direction_difference',
    'frame_only_edges',
    'region_correlation',
    'region_is_shadow'
]

logger = logging.getLogger(__name__)

FLAT_POLICIES = ('chromacity', 'object')


def direction_difference(grads_frame, grads_background):
    """Angle between the frame and background gradient vectors.

    ``arccos`` of the normalised dot product, in [0, pi]. NaN where either
    vector is zero.

    Parameters
    ----------
    grads_frame, grads_background : GradientField or tuple
        Anything with ``dx`` and ``dy`` members, or ``(dx, dy)`` pairs.

    Examples
    --------
    >>> round(float(direction_difference((1., 0.), (1., 1.))), 6)
    0.785398
    """
    fx, fy = _components(grads_frame)
    bx, by = _components(grads_background)
    dot = fx * bx + fy * by
    norm = np.hypot(fx, fy) * np.hypot(bx, by)
    with np.errstate(divide='ignore', invalid='ignore'):
        cos = np.where(norm > 0, dot / norm, np.nan)
    return np.arccos(np.clip(cos, -1., 1.))


def _components(grads):
    if hasattr(grads, 'dx'):
        return grads.dx, grads.dy
    dx, dy = grads
    return np.asarray(dx, dtype=np.float64), np.asarray(dy, dtype=np.float64)


def region_correlation(region, grads_frame, grads_background, tau_m=5.,
                       tau_a=np.pi / 6.):
    """Fraction of a region's textured pixels whose gradients agree.

    Only pixels where both gradient magnitudes exceed ``tau_m`` are
    counted; among those, the fraction with a direction difference of at
    most ``tau_a`` is returned.

    Returns
    -------
    c : float
        The correlation in [0, 1], NaN when no pixel was selected.

    n : int
        The number of selected pixels.
    """
    rows, cols = region.rows, region.cols
    selected = (grads_frame.magnitude[rows, cols] > tau_m) & \
        (grads_background.magnitude[rows, cols] > tau_m)
    n = int(selected.sum())
    if not n:
        return np.nan, 0

    rows, cols = rows[selected], cols[selected]
    dtheta = direction_difference(
        (grads_frame.dx[rows, cols], grads_frame.dy[rows, cols]),
        (grads_background.dx[rows, cols], grads_background.dy[rows, cols]))
    return float(np.count_nonzero(dtheta <= tau_a)) / n, n


def region_is_shadow(c, n, tau_c, flat_policy='chromacity'):
    """The verdict for one candidate region.

    A textured region (``n > 0``) is shadow iff its correlation is strictly
    greater than ``tau_c``; a flat one follows ``flat_policy``.

    Examples
    --------
    >>> region_is_shadow(0.6, 10, tau_c=0.6)
    False
    >>> region_is_shadow(float('nan'), 0, tau_c=0.6)
    True
    """
    if n:
        return bool(c > tau_c)
    return flat_policy == 'chromacity'


def _edges(grey, threshold):
    return thin(gradient_field(grey).magnitude > threshold)


def frame_only_edges(frame_grey, background_grey, threshold=24.):
    """Thin edges present in the frame but absent from the background.

    Edges are the thinned pixels with a gradient magnitude above
    ``threshold``. A frame edge pixel counts as present in the background
    when a background edge lies within one pixel of it.
    """
    edges_f = _edges(frame_grey, threshold)
    edges_b = ndimage.binary_dilation(_edges(background_grey, threshold),
                                      structure=EIGHT_CONNECTED)
    return edges_f & ~edges_b


def candidate_regions(weak, frame_grey=None, background_grey=None,
                      edge_split=False, edge_threshold=24., reattach=2.,
                      min_size=16):
    """Group weak shadow candidates into large regions.

    Candidates are grouped into 8-connected regions. With ``edge_split``,
    edges found in the frame but not in the background
    (:func:`frame_only_edges`, dilated by one pixel) are cut out before
    grouping, and the cut candidates are given back to the nearest region
    within ``reattach`` pixels. Regions smaller than ``min_size`` are
    dropped.

    Parameters
    ----------
    weak : array-like, shape=(height, width)
        The weak shadow candidates.

    frame_grey, background_grey : np.ndarray or None
        The grey frame and background, required with ``edge_split``.

    Returns
    -------
    regions : list of Region
    """
    weak = check_mask(weak, name='weak')
    if not edge_split:
        labels, _ = label_components(weak)
        return regions_from_labels(labels, min_size)

    if frame_grey is None or background_grey is None:
        raise ValueError("edge_split requires the grey frame and background")
    cut = ndimage.binary_dilation(
        frame_only_edges(frame_grey, background_grey, edge_threshold),
        structure=EIGHT_CONNECTED)
    labels, n = label_components(weak & ~cut)

    removed = weak & cut
    if n and removed.any():
        dist, (ir, ic) = ndimage.distance_transform_edt(
            labels == 0, return_indices=True)
        back = removed & (dist <= reattach)
        labels[back] = labels[ir[back], ic[back]]
    return regions_from_labels(labels, min_size)


class LargeRegionTextureDetector(BaseShadowDetector):
    """Gradient direction correlation over large candidate regions.

    A relaxed chromacity test (:func:`rgb_chromacity_votes`, no window)
    marks candidate pixels, which are grouped into regions
    (:func:`candidate_regions`). A region is shadow iff the fraction of its
    textured pixels whose gradient direction agrees with the background
    (:func:`region_correlation`) is strictly greater than ``tau_c``.

    Parameters
    ----------
    beta1, beta2, tau_s, tau_h : float, optional
        The relaxed chromacity thresholds, default (0.3, 0.99, 0.15, 90.).

    tau_m : float, optional (default=5.)
        The gradient magnitude floor.

    tau_a : float, optional (default=pi/6)
        The angular agreement threshold, in (0, pi).

    tau_c : float, optional (default=0.6)
        The correlation threshold, in [0, 1]. 0 turns the texture test
        off: without ``edge_split`` every weak candidate is labelled
        shadow, regions are neither verified nor pruned. With
        ``edge_split`` the regions are still split and pruned.

    edge_split : bool, optional (default=False)
        Whether to cut candidate regions along frame-only edges.

    edge_threshold : float, optional (default=24.)
        Gradient magnitude threshold of the edge detector.

    min_region_size : int, optional (default=16)
        Smaller regions revert to Object.

    flat_policy : str, optional (default='chromacity')
        The verdict for regions without textured pixels: 'chromacity' keeps
        the weak detector's Shadow, 'object' labels them Object.
    """
    def __init__(self, beta1=0.3, beta2=0.99, tau_s=0.15, tau_h=90.,
                 tau_m=5., tau_a=np.pi / 6., tau_c=0.6, edge_split=False,
                 edge_threshold=24., min_region_size=16,
                 flat_policy='chromacity'):

        self.beta1 = beta1
        self.beta2 = beta2
        self.tau_s = tau_s
        self.tau_h = tau_h
        self.tau_m = tau_m
        self.tau_a = tau_a
        self.tau_c = tau_c
        self.edge_split = edge_split
        self.edge_threshold = edge_threshold
        self.min_region_size = min_region_size
        self.flat_policy = flat_policy

    def _check_params(self):
        validate_float(self.beta1, 'beta1', lower_inclusive=False)
        validate_float(self.beta2, 'beta2', lower_inclusive=False)
        if not self.beta1 < self.beta2:
            raise ValueError("Expected beta1 < beta2, but got beta1=%r, "
                             "beta2=%r" % (self.beta1, self.beta2))
        validate_float(self.tau_s, 'tau_s', lower=-1.)
        validate_float(self.tau_h, 'tau_h', upper=180.)
        validate_float(self.tau_a, 'tau_a', upper=np.pi,
                       lower_inclusive=False, upper_inclusive=False)
        validate_float(self.tau_c, 'tau_c')
        if self.tau_m < 0 or self.edge_threshold < 0:
            raise ValueError("tau_m and edge_threshold must be non-negative")
        if self.min_region_size < 1:
            raise ValueError("min_region_size must be >= 1, but got %r"
                             % self.min_region_size)
        if self.flat_policy not in FLAT_POLICIES:
            raise ValueError("flat_policy must be one of %r, but got %r"
                             % (FLAT_POLICIES, self.flat_policy))

    def weak_candidates(self, frame, background, foreground):
        """The relaxed per-pixel chromacity test."""
        return rgb_chromacity_votes(frame, background, foreground,
                                    self.beta1, self.beta2, self.tau_s,
                                    self.tau_h)

    def _detect(self, frame, background, foreground):
        weak = self.weak_candidates(frame, background, foreground)
        if self.tau_c == 0 and not self.edge_split:
            return weak

        f, b = to_grey(frame), to_grey(background)
        regions = candidate_regions(weak, f, b, edge_split=self.edge_split,
                                    edge_threshold=self.edge_threshold,
                                    min_size=self.min_region_size)
        grads_f, grads_b = gradient_field(f), gradient_field(b)

        shadow = np.zeros(foreground.shape, dtype=bool)
        for region in regions:
            c, n = region_correlation(region, grads_f, grads_b,
                                      tau_m=self.tau_m, tau_a=self.tau_a)
            if region_is_shadow(c, n, self.tau_c, self.flat_policy):
                shadow[region.rows, region.cols] = True
        logger.debug("%i candidate regions, %i shadow pixels",
                     len(regions), int(shadow.sum()))
        return shadow
