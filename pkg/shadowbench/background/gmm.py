# -*- coding: utf-8 -*-
#
# Per-pixel Gaussian mixture background model

from __future__ import absolute_import, division

import logging

import numpy as np
from scipy import ndimage
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from ..imaging.color import round_half_away
from ..utils.validation import check_frame, check_mask, check_same_shape, \
    validate_float

__all__ = [
    'GaussianMixtureBackground',
    'clean_foreground'
]

logger = logging.getLogger(__name__)

_SQUARE = np.ones((3, 3), dtype=bool)


def clean_foreground(mask):
    """Apply a 3x3 opening followed by a 3x3 closing to a foreground mask.

    The closing treats the outside of the image as foreground, so blobs
    touching the border are not eaten away.
    """
    mask = check_mask(mask)
    opened = ndimage.binary_opening(mask, structure=_SQUARE)
    dilated = ndimage.binary_dilation(opened, structure=_SQUARE)
    return ndimage.binary_erosion(dilated, structure=_SQUARE, border_value=1)


class GaussianMixtureBackground(BaseEstimator):
    """Adaptive mixture-of-Gaussians background subtraction.

    Every pixel is modelled by up to ``n_components`` RGB Gaussians, each
    with a weight, a mean and one variance shared by the three channels.
    A frame pixel matches a component when its squared distance to the
    mean is at most ``match_threshold ** 2`` times the variance. Among the
    matching components, the one with the highest ``weight / sigma`` is
    updated with rate ``learning_rate``; if none matches, the component
    with the lowest weight is replaced by a new one centred on the pixel.
    Components are ranked by ``weight / sigma`` and the top ones whose
    cumulative weight first covers ``background_ratio`` model the
    background. A pixel is foreground unless its matched component is one
    of them.

    The first observed frame initialises one component per pixel and
    yields an empty foreground mask. Alternatively, a known static
    background image can be installed with :meth:`set_background`, in
    which case the foreground is valid from the first frame and
    :meth:`background_image` returns that image unchanged.

    Parameters
    ----------
    n_components : int, optional (default=5)
        The maximum number of Gaussians per pixel.

    learning_rate : float, optional (default=0.01)
        The update rate of the weights, means and variances.

    match_threshold : float, optional (default=2.5)
        The match gate, in standard deviations.

    background_ratio : float, optional (default=0.7)
        The fraction of the total weight explained by background components.

    min_variance : float, optional (default=15.)
        The variance floor, in squared intensity units.

    init_variance : float, optional (default=225.)
        The variance of newly created components.

    init_weight : float, optional (default=0.05)
        The weight of newly created components, before renormalisation.

    morphology : bool, optional (default=True)
        Whether to clean the foreground mask with :func:`clean_foreground`.

    Attributes
    ----------
    weights_ : np.ndarray, shape=(height, width, n_components)
        The component weights. Inactive components have weight 0.

    means_ : np.ndarray, shape=(height, width, n_components, 3)
        The component means.

    variances_ : np.ndarray, shape=(height, width, n_components)
        The component variances.

    n_frames_ : int
        The number of frames observed so far.
    """
    def __init__(self, n_components=5, learning_rate=0.01,
                 match_threshold=2.5, background_ratio=0.7,
                 min_variance=15., init_variance=225., init_weight=0.05,
                 morphology=True):

        self.n_components = n_components
        self.learning_rate = learning_rate
        self.match_threshold = match_threshold
        self.background_ratio = background_ratio
        self.min_variance = min_variance
        self.init_variance = init_variance
        self.init_weight = init_weight
        self.morphology = morphology

    def _check_params(self):
        if int(self.n_components) != self.n_components or \
                self.n_components < 1:
            raise ValueError("n_components must be a positive integer, but "
                             "got %r" % self.n_components)
        validate_float(self.learning_rate, 'learning_rate',
                       lower_inclusive=False)
        validate_float(self.background_ratio, 'background_ratio',
                       lower_inclusive=False)
        validate_float(self.init_weight, 'init_weight',
                       lower_inclusive=False, upper_inclusive=False)
        if self.match_threshold <= 0:
            raise ValueError("match_threshold must be positive, but got %r"
                             % self.match_threshold)
        if self.min_variance <= 0:
            raise ValueError("min_variance must be positive, but got %r"
                             % self.min_variance)
        if self.init_variance < self.min_variance:
            raise ValueError("init_variance (%r) must not be smaller than "
                             "min_variance (%r)"
                             % (self.init_variance, self.min_variance))

    def _initialize(self, image, variance):
        height, width = image.shape[:2]
        k = int(self.n_components)
        self.means_ = np.zeros((height, width, k, 3), dtype=np.float64)
        self.means_[:, :, 0] = image
        self.variances_ = np.full((height, width, k), float(variance))
        self.weights_ = np.zeros((height, width, k), dtype=np.float64)
        self.weights_[:, :, 0] = 1.
        self.n_frames_ = 0
        logger.debug("Initialised a %i-component background model of "
                     "shape %r", k, (height, width))

    def set_background(self, image):
        """Initialise the model from a known static background image.

        Parameters
        ----------
        image : array-like, shape=(height, width, 3)
            The clean background. It is returned verbatim by
            :meth:`background_image` from now on.

        Returns
        -------
        self
        """
        self._check_params()
        image = check_frame(image, name='background')
        self._initialize(image.astype(np.float64), self.min_variance)
        self.static_background_ = image.copy()
        return self

    def fit(self, frames, y=None):
        """Reset the model and observe a sequence of frames in order.

        Parameters
        ----------
        frames : iterable of array-like, shape=(height, width, 3)
            The frames, in temporal order.

        y : None
            Passthrough for ``Pipeline`` compatibility.

        Returns
        -------
        self
        """
        for attr in ('means_', 'variances_', 'weights_', 'n_frames_',
                     'static_background_'):
            self.__dict__.pop(attr, None)
        for frame in frames:
            self.observe(frame)
        return self

    @property
    def bypass(self):
        """Whether a static background image was installed."""
        return hasattr(self, 'static_background_')

    def observe(self, frame):
        """Update the model with a frame and get its foreground mask.

        Parameters
        ----------
        frame : array-like, shape=(height, width, 3)
            The next frame of the sequence.

        Returns
        -------
        foreground : np.ndarray, shape=(height, width), dtype=bool
        """
        self._check_params()
        frame = check_frame(frame)
        x = frame.astype(np.float64)

        if not hasattr(self, 'means_'):
            self._initialize(x, self.init_variance)
            self.n_frames_ = 1
            return np.zeros(frame.shape[:2], dtype=bool)

        check_same_shape(frame, self.weights_, names=('frame', 'model'))
        foreground = self._update(x)
        self.n_frames_ += 1
        if self.morphology:
            foreground = clean_foreground(foreground)
        return foreground

    def _update(self, x):
        w, mu, var = self.weights_, self.means_, self.variances_
        lr = self.learning_rate

        d2 = np.sum((x[:, :, np.newaxis, :] - mu) ** 2, axis=-1)
        match = (d2 <= self.match_threshold ** 2 * var) & (w > 0)
        matched = match.any(axis=-1)
        best = np.argmax(np.where(match, w / np.sqrt(var), -np.inf), axis=-1)

        w *= 1. - lr

        # matched pixels: pull the best component toward the observation
        rows, cols = np.nonzero(matched)
        k = best[rows, cols]
        w[rows, cols, k] += lr
        diff = x[rows, cols] - mu[rows, cols, k]
        mu[rows, cols, k] += lr * diff
        v = var[rows, cols, k]
        var[rows, cols, k] = np.maximum(
            v + lr * (np.sum(diff ** 2, axis=-1) - v), self.min_variance)

        # unmatched pixels: replace the weakest component
        rows, cols = np.nonzero(~matched)
        k = np.argmin(w[rows, cols], axis=-1)
        mu[rows, cols, k] = x[rows, cols]
        var[rows, cols, k] = self.init_variance
        w[rows, cols, k] = self.init_weight

        w /= w.sum(axis=-1, keepdims=True)

        # rank components by fitness and find the background ranks
        order = np.argsort(-(w / np.sqrt(var)), axis=-1, kind='stable')
        ranked = np.take_along_axis(w, order, axis=-1)
        background_rank = (np.cumsum(ranked, axis=-1) - ranked) < \
            self.background_ratio
        rank = np.argsort(order, axis=-1, kind='stable')
        best_rank = np.take_along_axis(rank, best[..., np.newaxis], axis=-1)
        is_background = np.take_along_axis(background_rank, best_rank,
                                           axis=-1)[..., 0]
        return ~(matched & is_background)

    def background_image(self):
        """Get the current background reference image.

        Returns
        -------
        background : np.ndarray, shape=(height, width, 3), dtype=uint8
            The mean of the highest-weight component of every pixel, or the
            installed static background in bypass mode.
        """
        check_is_fitted(self, 'means_')
        if self.bypass:
            return self.static_background_.copy()
        best = np.argmax(self.weights_, axis=-1)
        mean = np.take_along_axis(
            self.means_, best[:, :, np.newaxis, np.newaxis], axis=2)[:, :, 0]
        return np.clip(round_half_away(mean), 0, 255).astype(np.uint8)
