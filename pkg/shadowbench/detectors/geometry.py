# -*- coding: utf-8 -*-
#
# Geometry shadow detector for upright people: head detection on the
# vertical projection, shadow split below the centre of gravity and a
# Gaussian model of the shadow region.

from __future__ import absolute_import, division

from collections import namedtuple
import logging

import numpy as np
from scipy import ndimage, signal

from ..base import BaseShadowDetector
from ..imaging.color import to_grey
from ..imaging.regions import Region, connected_components
from ..utils.validation import validate_float

__all__ = [
    'GeometryDetector',
    'GeometryStats',
    'ShadowGaussianModel',
    'classify_geometry',
    'find_heads',
    'region_stats',
    'split_person_shadow'
]

logger = logging.getLogger(__name__)

GeometryStats = namedtuple('GeometryStats',
                           ['x', 'y', 'theta', 'mu11', 'mu20', 'mu02'])
GeometryStats.__doc__ = """Centre of gravity, orientation and second-order
central moments of a region. ``theta`` lies in (-pi/2, pi/2] and is
measured in image coordinates (y grows downward)."""


def region_stats(region):
    """Compute the centroid and orientation of a region from its moments.

    ``theta = 1/2 * arctan2(2 * mu11, mu20 - mu02)``. A region without a
    dominant direction (``mu11 = 0`` and ``mu20 = mu02``) gets ``theta=0``.

    Parameters
    ----------
    region : Region
        At least two pixels.

    Returns
    -------
    stats : GeometryStats

    Examples
    --------
    >>> s = region_stats(Region(1, [0, 1, 2], [0, 1, 2]))
    >>> s.x, s.y, s.mu11
    (1.0, 1.0, 2.0)
    >>> round(s.theta, 6)
    0.785398
    """
    if len(region) < 2:
        raise ValueError("region_stats needs at least 2 pixels, but the "
                         "region has %i" % len(region))
    x = region.cols.astype(np.float64)
    y = region.rows.astype(np.float64)
    xc, yc = x.mean(), y.mean()
    dx, dy = x - xc, y - yc
    mu11 = float(np.sum(dx * dy))
    mu20 = float(np.sum(dx ** 2))
    mu02 = float(np.sum(dy ** 2))

    # moments of symmetric regions can come out a few ulps off zero
    scale = max(mu20, mu02, 1.)
    if abs(mu11) <= 1e-12 * scale:
        mu11 = 0.
    diff = mu20 - mu02
    if abs(diff) <= 1e-12 * scale:
        diff = 0.

    theta = 0.5 * np.arctan2(2. * mu11, diff)
    if theta <= -np.pi / 2.:
        theta += np.pi
    return GeometryStats(float(xc), float(yc), float(theta), mu11, mu20, mu02)


def _minor_variance(stats, n):
    cov = np.array([[stats.mu20, stats.mu11],
                    [stats.mu11, stats.mu02]]) / n
    return float(np.linalg.eigvalsh(cov)[0])


def _axis_distance(x, y, stats):
    # perpendicular distance to the line through the centroid along theta
    return np.abs(-(x - stats.x) * np.sin(stats.theta) +
                  (y - stats.y) * np.cos(stats.theta))


def find_heads(region, prominence=0.3, smoothing=3):
    """Find the head columns of a blob from its vertical projection.

    The per-column pixel count is smoothed with a moving average and its
    local maxima with a prominence of at least ``prominence`` times the
    blob height are returned.

    Returns
    -------
    peaks : np.ndarray
        Absolute column indices, increasing.

    profile : np.ndarray
        The smoothed per-column count over the blob's bounding box.
    """
    x0 = region.bbox[0]
    profile = np.bincount(region.cols - x0,
                          minlength=region.width).astype(np.float64)
    if smoothing > 1:
        profile = ndimage.uniform_filter1d(profile, size=smoothing,
                                           mode='constant')

    # zero padding lets a maximum on the bounding box border count
    padded = np.concatenate([[0.], profile, [0.]])
    peaks, _ = signal.find_peaks(padded,
                                 prominence=prominence * region.height)
    return peaks - 1 + x0, profile


def _cut_columns(peaks, profile, x0):
    cuts = []
    for left, right in zip(peaks[:-1], peaks[1:]):
        seg = profile[left - x0:right - x0 + 1]
        low = np.flatnonzero(seg == seg.min())
        # first run of the minimum
        run_end = low[0]
        while run_end + 1 in low:
            run_end += 1
        cuts.append(left + (low[0] + run_end + 1) // 2)
    return cuts


def split_person_shadow(blob, grey, prominence=0.3, min_row_change=3,
                        smoothing=3):
    """Split a blob into people and find the shadow part of each.

    The blob is cut between head columns (:func:`find_heads`) at the
    middle of the lowest stretch of the vertical projection. Within each
    sub-blob, the row below the centre of gravity where the per-row pixel
    count changes the most marks the start of the shadow. The rows above it
    form the person; the shadow candidate ``R2`` is made of the pixels from
    that row down that lie farther from the person's main axis than the
    person's own spread.

    Parameters
    ----------
    blob : Region
        A foreground blob.

    grey : np.ndarray, shape=(height, width)
        The grey frame the blob was extracted from.

    prominence : float, optional (default=0.3)
        Minimum head peak prominence, as a fraction of the blob height.

    min_row_change : int, optional (default=3)
        The smallest per-row count change that starts a shadow.

    smoothing : int, optional (default=3)
        Width of the projection's moving average.

    Returns
    -------
    pairs : list of tuple
        ``(person, shadow)`` per head, where ``person`` is the sub-blob
        Region and ``shadow`` the R2 Region or None.
    """
    grey = np.asarray(grey)
    if blob.bbox[2] >= grey.shape[1] or blob.bbox[3] >= grey.shape[0]:
        raise ValueError("Blob %r does not fit in a frame of shape %r"
                         % (blob, grey.shape))

    peaks, profile = find_heads(blob, prominence=prominence,
                                smoothing=smoothing)
    if not peaks.size:
        return [(blob, None)]

    bounds = [-np.inf] + _cut_columns(peaks, profile, blob.bbox[0]) + \
        [np.inf]
    pairs = []
    for lo, hi in zip(bounds[:-1], bounds[1:]):
        sub = blob.subset((blob.cols >= lo) & (blob.cols < hi))
        if sub is None:
            continue
        pairs.append((sub, _shadow_part(sub, min_row_change)))
    return pairs


def _shadow_part(sub, min_row_change):
    if len(sub) < 2:
        return None
    cy = float(sub.rows.mean())
    y0 = sub.bbox[1]
    counts = np.bincount(sub.rows - y0).astype(np.float64)
    change = np.abs(np.diff(counts))  # change[i] is row y0 + i + 1
    rows = np.arange(y0 + 1, y0 + counts.size)
    below = rows > cy
    if not below.any():
        return None
    change = np.where(below, change, -1.)
    i = int(np.argmax(change))
    if change[i] < min_row_change:
        return None
    y_start = rows[i]

    person = sub.subset(sub.rows < y_start)
    if person is None or len(person) < 2:
        person = sub
    stats = region_stats(person)
    spread = np.sqrt(3. * max(_minor_variance(stats, len(person)), 0.)) + 1.

    dist = _axis_distance(sub.cols.astype(np.float64),
                          sub.rows.astype(np.float64), stats)
    return sub.subset((sub.rows >= y_start) & (dist > spread))


class ShadowGaussianModel(object):
    """Gaussian model of a shadow region's position and intensity.

    ``G(s, t, g) = exp(-(w_s s^2 / var_s + w_t t^2 / var_t
    + w_g (g - mean_g)^2 / var_g))``, where ``s`` and ``t`` are the
    coordinates of a pixel along and across the region's orientation,
    relative to its centroid.

    Parameters
    ----------
    shadow : Region
        The shadow candidate R2.

    grey : np.ndarray, shape=(height, width)
        The grey frame the intensities are taken from.

    weights : tuple, optional (default=(1., 1., 1.))
        ``(w_s, w_t, w_g)``.

    variance_scale : float, optional (default=9.)
        Multiplies the second moments of R2 into the model variances.
    """
    def __init__(self, shadow, grey, weights=(1., 1., 1.),
                 variance_scale=9.):
        self.stats = region_stats(shadow)
        self.weights = tuple(float(w) for w in weights)

        s, t = self.coordinates(shadow.cols, shadow.rows)
        g = grey[shadow.rows, shadow.cols]
        self.var_s = max(variance_scale * float(np.mean(s ** 2)), 1.)
        self.var_t = max(variance_scale * float(np.mean(t ** 2)), 1.)
        self.mean_g = float(np.mean(g))
        self.var_g = max(variance_scale * float(np.var(g)), 1.)

    def coordinates(self, x, y):
        """Rotate pixel coordinates into the model's ``(s, t)`` frame."""
        theta = self.stats.theta
        dx = np.asarray(x, dtype=np.float64) - self.stats.x
        dy = np.asarray(y, dtype=np.float64) - self.stats.y
        s = dx * np.cos(theta) + dy * np.sin(theta)
        t = -dx * np.sin(theta) + dy * np.cos(theta)
        return s, t

    def evaluate(self, x, y, g):
        """Evaluate G at pixel coordinates ``(x, y)`` with intensity ``g``."""
        s, t = self.coordinates(x, y)
        w_s, w_t, w_g = self.weights
        g = np.asarray(g, dtype=np.float64)
        return np.exp(-(w_s * s ** 2 / self.var_s +
                        w_t * t ** 2 / self.var_t +
                        w_g * (g - self.mean_g) ** 2 / self.var_g))


def classify_geometry(blob, pairs, grey, tau_g=0.2, weights=(1., 1., 1.),
                      variance_scale=9., min_shadow_pixels=8):
    """Label the pixels of a blob as shadow (True) or object (False).

    Every pixel of a sub-blob whose shadow candidate has at least
    ``min_shadow_pixels`` pixels is labelled shadow iff the sub-blob's
    :class:`ShadowGaussianModel` gives it ``G >= tau_g``.

    Returns
    -------
    shadow : np.ndarray, shape=(len(blob),), dtype=bool
        Aligned with ``blob.rows`` / ``blob.cols``.
    """
    x0, y0 = blob.bbox[0], blob.bbox[1]
    local = np.zeros((blob.height, blob.width), dtype=bool)
    for person, r2 in pairs:
        if r2 is None or len(r2) < min_shadow_pixels:
            continue
        model = ShadowGaussianModel(r2, grey, weights=weights,
                                    variance_scale=variance_scale)
        g = grey[person.rows, person.cols]
        agree = model.evaluate(person.cols, person.rows, g) >= tau_g
        local[person.rows[agree] - y0, person.cols[agree] - x0] = True
    return local[blob.rows - y0, blob.cols - x0]


class GeometryDetector(BaseShadowDetector):
    """Shadow detection from the shape of upright people and their shadows.

    Every foreground blob is split into people by head detection on its
    vertical projection; for each person a shadow region is found below
    the centre of gravity and a Gaussian model of its position and
    intensity classifies the pixels of the person's sub-blob.

    Parameters
    ----------
    prominence : float, optional (default=0.3)
        Head peak prominence as a fraction of the blob height.

    min_row_change : int, optional (default=3)
        Smallest per-row pixel count change that starts a shadow.

    tau_g : float, optional (default=0.2)
        Pixels with ``G >= tau_g`` are shadow.

    w_s, w_t, w_g : float, optional (default=1.)
        The weights of the position and intensity terms of G.

    variance_scale : float, optional (default=9.)
        Multiplies the moments of the shadow region into model variances.

    min_shadow_pixels : int, optional (default=8)
        Shadow regions smaller than this are ignored.

    min_blob_size : int, optional (default=2)
        Blobs smaller than this are left as Object.
    """
    def __init__(self, prominence=0.3, min_row_change=3, tau_g=0.2,
                 w_s=1., w_t=1., w_g=1., variance_scale=9.,
                 min_shadow_pixels=8, min_blob_size=2):

        self.prominence = prominence
        self.min_row_change = min_row_change
        self.tau_g = tau_g
        self.w_s = w_s
        self.w_t = w_t
        self.w_g = w_g
        self.variance_scale = variance_scale
        self.min_shadow_pixels = min_shadow_pixels
        self.min_blob_size = min_blob_size

    def _check_params(self):
        validate_float(self.prominence, 'prominence')
        validate_float(self.tau_g, 'tau_g')
        for name in ('w_s', 'w_t', 'w_g'):
            if getattr(self, name) < 0:
                raise ValueError("%s must be non-negative, but got %r"
                                 % (name, getattr(self, name)))
        if self.variance_scale <= 0:
            raise ValueError("variance_scale must be positive, but got %r"
                             % self.variance_scale)
        if self.min_row_change < 0 or self.min_shadow_pixels < 1 or \
                self.min_blob_size < 2:
            raise ValueError("Expected min_row_change >= 0, "
                             "min_shadow_pixels >= 1 and min_blob_size >= 2")

    def _detect(self, frame, background, foreground):
        grey = to_grey(frame)
        shadow = np.zeros(foreground.shape, dtype=bool)
        weights = (self.w_s, self.w_t, self.w_g)

        for blob in connected_components(foreground,
                                         min_size=self.min_blob_size):
            pairs = split_person_shadow(blob, grey,
                                        prominence=self.prominence,
                                        min_row_change=self.min_row_change)
            labels = classify_geometry(
                blob, pairs, grey, tau_g=self.tau_g, weights=weights,
                variance_scale=self.variance_scale,
                min_shadow_pixels=self.min_shadow_pixels)
            shadow[blob.rows[labels], blob.cols[labels]] = True
            logger.debug("Blob %r: %i people, %i shadow pixels",
                         blob, len(pairs), int(labels.sum()))
        return shadow
