# -*- coding: utf-8 -*-
#
# Physical shadow detector: a scene-level Gaussian mixture over the colour
# attenuation feature, learned online from weak shadow candidates.

from __future__ import absolute_import, division

import logging

import numpy as np
from sklearn.utils.validation import check_random_state

from ..base import BaseShadowDetector
from ..imaging.color import rgb_to_hsv, to_grey
from ..imaging.gradients import gradient_field
from ..utils.validation import check_mask, validate_float

__all__ = [
    'FEATURE_VOLUME',
    'PhysicalDetector',
    'colour_feature',
    'penalised_rate',
    'weak_shadow_candidates'
]

logger = logging.getLogger(__name__)

# volume of the feature domain: alpha in [0, 2], theta in [-pi, pi],
# phi in [0, pi]
FEATURE_VOLUME = 2. * (2. * np.pi) * np.pi


def colour_feature(frame, background):
    """Compute the colour attenuation feature ``[alpha, theta, phi]``.

    With ``v = background - frame``, ``alpha = |v| / |background|`` is the
    relative attenuation, ``theta = arctan2(v_G, v_R)`` and
    ``phi = arccos(v_B / |v|)`` give the direction of the attenuation
    vector.

    Parameters
    ----------
    frame, background : array-like, shape=(..., 3)
        RGB values. Single pixels are accepted.

    Returns
    -------
    features : np.ndarray, shape=(..., 3)
        The features. Undefined entries are NaN.

    defined : np.ndarray, shape=(...), dtype=bool
        False where ``v`` or the background is the zero vector.

    Examples
    --------
    >>> feat, ok = colour_feature((50, 50, 50), (100, 100, 100))
    >>> bool(ok)
    True
    >>> [round(float(f), 4) for f in feat]
    [0.5, 0.7854, 0.9553]
    """
    f = np.asarray(frame, dtype=np.float64)
    b = np.asarray(background, dtype=np.float64)
    v = b - f
    norm_v = np.sqrt(np.sum(v ** 2, axis=-1))
    norm_b = np.sqrt(np.sum(b ** 2, axis=-1))
    defined = (norm_v > 0) & (norm_b > 0)

    features = np.full(v.shape, np.nan)
    with np.errstate(divide='ignore', invalid='ignore'):
        features[..., 0] = np.where(defined, norm_v / norm_b, np.nan)
        features[..., 1] = np.where(defined,
                                    np.arctan2(v[..., 1], v[..., 0]), np.nan)
        cos_phi = np.clip(v[..., 2] / norm_v, -1., 1.)
        features[..., 2] = np.where(defined, np.arccos(cos_phi), np.nan)
    return features, defined


def weak_shadow_candidates(frame_hsv, background_hsv, foreground, v_lo=0.1,
                           v_hi=0.95, s_max=0.2):
    """Select foreground pixels that look like attenuated background.

    A candidate has a value ratio ``F_V / B_V`` in the open interval
    ``(v_lo, v_hi)`` and a saturation change ``|F_S - B_S|`` of at most
    ``s_max``.
    """
    foreground = check_mask(foreground, name='foreground')
    fv, bv = frame_hsv[..., 2], background_hsv[..., 2]
    lit = bv > 0
    ratio = np.divide(fv, bv, out=np.zeros_like(fv), where=lit)
    ds = np.abs(frame_hsv[..., 1] - background_hsv[..., 1])
    return foreground & lit & (ratio > v_lo) & (ratio < v_hi) & (ds <= s_max)


def penalised_rate(rate, grad_frame, grad_background, sigma):
    """Shrink the learning rate where the frame has more texture.

    ``rate * exp(-max(0, |grad F| - |grad B|) / sigma)``

    Examples
    --------
    >>> float(penalised_rate(0.05, 3., 8., 10.))
    0.05
    >>> round(float(penalised_rate(0.05, 18., 8., 10.)), 6)
    0.018394
    """
    excess = np.maximum(0., np.asarray(grad_frame, dtype=np.float64) -
                        np.asarray(grad_background, dtype=np.float64))
    return rate * np.exp(-excess / sigma)


class PhysicalDetector(BaseShadowDetector):
    """Learn the appearance of shadows in the scene and classify by posterior.

    A weak detector (:func:`weak_shadow_candidates`) selects foreground
    pixels that could be shadows. Their colour features
    (:func:`colour_feature`) train one global mixture of diagonal
    Gaussians, sample by sample, with a learning rate that is penalised
    where the frame shows stronger gradients than the background
    (:func:`penalised_rate`). Once ``warmup_frames`` frames have been
    learned, a weak candidate is labelled Shadow when the posterior mass
    of the confident components (weight above ``min_weight``) exceeds
    ``posterior_threshold``; the alternative hypothesis is an object
    feature spread uniformly over the feature domain with prior
    ``object_prior``.

    Parameters
    ----------
    n_components : int, optional (default=5)
        The number of mixture slots.

    learning_rate : float, optional (default=0.05)
        The base learning rate.

    gradient_sigma : float, optional (default=10.)
        The scale of the gradient penalty, in intensity units.

    match_threshold : float, optional (default=2.5)
        A sample matches a component when it lies within this many standard
        deviations of its mean in every dimension.

    posterior_threshold : float, optional (default=0.5)
        The shadow posterior above which a candidate is labelled Shadow.

    object_prior : float, optional (default=0.5)
        The prior probability of the object hypothesis.

    min_weight : float, optional (default=0.1)
        Components heavier than this are considered shadow components.

    warmup_frames : int, optional (default=25)
        The number of learned frames before any pixel is labelled Shadow.

    v_lo, v_hi : float, optional (default=0.1, 0.95)
        The value-ratio bounds of the weak detector.

    s_max : float, optional (default=0.2)
        The saturation bound of the weak detector.

    init_variance : tuple, optional (default=(0.01, 0.05, 0.05))
        The variance of new components, per feature dimension.

    min_variance : tuple, optional (default=(1e-4, 1e-3, 1e-3))
        The variance floor, per feature dimension.

    max_samples : int, optional (default=1000)
        The maximum number of candidates learned per frame. Larger candidate
        sets are subsampled with ``random_state``.

    model_file : str or None, optional (default=None)
        A model saved with :meth:`save_model` to warm-start from. A
        warm-started model classifies from the first frame.

    random_state : int, RandomState or None, optional (default=0)
        Seeds the candidate subsampling.

    Attributes
    ----------
    weights_ : np.ndarray, shape=(n_components,)
        The component weights. Empty slots have weight 0.

    means_ : np.ndarray, shape=(n_components, 3)
        The component means.

    variances_ : np.ndarray, shape=(n_components, 3)
        The diagonal component variances.

    n_frames_ : int
        The number of frames learned.
    """
    stateful = True

    def __init__(self, n_components=5, learning_rate=0.05,
                 gradient_sigma=10., match_threshold=2.5,
                 posterior_threshold=0.5, object_prior=0.5, min_weight=0.1,
                 warmup_frames=25, v_lo=0.1, v_hi=0.95, s_max=0.2,
                 init_variance=(0.01, 0.05, 0.05),
                 min_variance=(1e-4, 1e-3, 1e-3), max_samples=1000,
                 model_file=None, random_state=0):

        self.n_components = n_components
        self.learning_rate = learning_rate
        self.gradient_sigma = gradient_sigma
        self.match_threshold = match_threshold
        self.posterior_threshold = posterior_threshold
        self.object_prior = object_prior
        self.min_weight = min_weight
        self.warmup_frames = warmup_frames
        self.v_lo = v_lo
        self.v_hi = v_hi
        self.s_max = s_max
        self.init_variance = init_variance
        self.min_variance = min_variance
        self.max_samples = max_samples
        self.model_file = model_file
        self.random_state = random_state

    def _check_params(self):
        if int(self.n_components) != self.n_components or \
                self.n_components < 1:
            raise ValueError("n_components must be a positive integer, but "
                             "got %r" % self.n_components)
        validate_float(self.learning_rate, 'learning_rate',
                       lower_inclusive=False)
        validate_float(self.posterior_threshold, 'posterior_threshold')
        validate_float(self.object_prior, 'object_prior',
                       lower_inclusive=False, upper_inclusive=False)
        validate_float(self.min_weight, 'min_weight')
        validate_float(self.v_lo, 'v_lo')
        validate_float(self.v_hi, 'v_hi')
        if not self.v_lo < self.v_hi:
            raise ValueError("Expected v_lo < v_hi, but got v_lo=%r, v_hi=%r"
                             % (self.v_lo, self.v_hi))
        validate_float(self.s_max, 's_max')
        for name in ('gradient_sigma', 'match_threshold'):
            if getattr(self, name) <= 0:
                raise ValueError("%s must be positive, but got %r"
                                 % (name, getattr(self, name)))
        if self.warmup_frames < 0 or self.max_samples < 1:
            raise ValueError("warmup_frames must be >= 0 and max_samples "
                             ">= 1, but got %r and %r"
                             % (self.warmup_frames, self.max_samples))
        for name in ('init_variance', 'min_variance'):
            var = np.asarray(getattr(self, name), dtype=np.float64)
            if var.shape != (3,) or np.any(var <= 0):
                raise ValueError("%s must be 3 positive variances, but got %r"
                                 % (name, getattr(self, name)))
        if np.any(np.asarray(self.init_variance) <
                  np.asarray(self.min_variance)):
            raise ValueError("init_variance must not be below min_variance")

    def _ensure_model(self):
        if hasattr(self, 'weights_'):
            return
        self.random_state_ = check_random_state(self.random_state)
        if self.model_file is not None:
            self.load_model(self.model_file)
            return
        m = int(self.n_components)
        self.weights_ = np.zeros(m)
        self.means_ = np.zeros((m, 3))
        self.variances_ = np.tile(
            np.asarray(self.init_variance, dtype=np.float64), (m, 1))
        self.n_frames_ = 0

    def _candidates(self, frame, background, foreground):
        return weak_shadow_candidates(rgb_to_hsv(frame),
                                      rgb_to_hsv(background), foreground,
                                      self.v_lo, self.v_hi, self.s_max)

    def partial_fit(self, frame, background, foreground):
        """Learn the colour features of the weak candidates of one frame.

        Returns
        -------
        self
        """
        self._check_params()
        frame, background, foreground = self._check_inputs(
            frame, background, foreground)
        self._ensure_model()

        candidates = self._candidates(frame, background, foreground)
        features, defined = colour_feature(frame, background)
        rows, cols = np.nonzero(candidates & defined)

        if rows.size > self.max_samples:
            keep = np.sort(self.random_state_.choice(
                rows.size, int(self.max_samples), replace=False))
            rows, cols = rows[keep], cols[keep]

        if rows.size:
            grad_f = gradient_field(to_grey(frame)).magnitude
            grad_b = gradient_field(to_grey(background)).magnitude
            rates = penalised_rate(self.learning_rate, grad_f[rows, cols],
                                   grad_b[rows, cols], self.gradient_sigma)
            self.update(features[rows, cols], rates)

        self.n_frames_ += 1
        logger.debug("Learned %i shadow candidates (frame %i)",
                     rows.size, self.n_frames_)
        return self

    def update(self, samples, rates):
        """Run the online mixture update over a batch of samples, in order.

        Each sample updates the heaviest component it matches, or replaces
        an empty or the lightest slot when it matches none.

        Parameters
        ----------
        samples : array-like, shape=(n_samples, 3)
            Colour features.

        rates : array-like, shape=(n_samples,)
            The learning rate of each sample.
        """
        self._ensure_model()
        w, mu, var = self.weights_, self.means_, self.variances_
        floor = np.asarray(self.min_variance, dtype=np.float64)
        init = np.asarray(self.init_variance, dtype=np.float64)
        gate = self.match_threshold

        for x, r in zip(np.atleast_2d(samples), np.atleast_1d(rates)):
            match = (w > 0) & np.all(np.abs(x - mu) <= gate * np.sqrt(var),
                                     axis=1)
            w *= 1. - r
            if match.any():
                k = np.argmax(np.where(match, w, -1.))
                w[k] += r
                d = x - mu[k]
                mu[k] += r * d
                var[k] = np.maximum((1. - r) * var[k] + r * d ** 2, floor)
            else:
                k = np.argmin(w)
                w[k] = r
                mu[k] = x
                var[k] = init
            w /= w.sum()
        return self

    def shadow_posterior(self, features):
        """Posterior probability that features were generated by shadows.

        Parameters
        ----------
        features : array-like, shape=(n_samples, 3)

        Returns
        -------
        posterior : np.ndarray, shape=(n_samples,)
        """
        self._ensure_model()
        x = np.atleast_2d(np.asarray(features, dtype=np.float64))
        w, mu, var = self.weights_, self.means_, self.variances_

        d2 = np.sum((x[:, np.newaxis, :] - mu) ** 2 / var, axis=-1)
        norm = np.sqrt((2. * np.pi) ** 3 * np.prod(var, axis=-1))
        lik = w * np.exp(-0.5 * d2) / norm

        confident = (w > self.min_weight) & (w > 0)
        prior = 1. - self.object_prior
        shadow = prior * lik[:, confident].sum(axis=1)
        total = prior * lik.sum(axis=1) + self.object_prior / FEATURE_VOLUME
        return shadow / total

    def _detect(self, frame, background, foreground):
        self._ensure_model()
        shadow = np.zeros(foreground.shape, dtype=bool)
        if self.n_frames_ < self.warmup_frames:
            return shadow

        candidates = self._candidates(frame, background, foreground)
        features, defined = colour_feature(frame, background)
        sel = candidates & defined
        if sel.any():
            post = self.shadow_posterior(features[sel])
            shadow[sel] = post > self.posterior_threshold
        return shadow

    def save_model(self, path):
        """Write the mixture as one row per component.

        Each row holds the weight, the three means and the three variances.
        """
        self._ensure_model()
        table = np.column_stack([self.weights_, self.means_,
                                 self.variances_])
        np.savetxt(path, table, fmt='%.17g',
                   header='weight alpha theta phi var_alpha var_theta '
                          'var_phi')

    def load_model(self, path):
        """Read a mixture written by :meth:`save_model`.

        The loaded model counts as warmed up.
        """
        table = np.atleast_2d(np.loadtxt(path, dtype=np.float64))
        if table.shape[1] != 7:
            raise ValueError("Expected 7 columns in %r, but got %i"
                             % (path, table.shape[1]))
        self.weights_ = table[:, 0].copy()
        self.means_ = table[:, 1:4].copy()
        self.variances_ = table[:, 4:7].copy()
        self.n_frames_ = int(self.warmup_frames)
        if not hasattr(self, 'random_state_'):
            self.random_state_ = check_random_state(self.random_state)
        logger.info("Loaded a %i-component shadow model from %s",
                    table.shape[0], path)
        return self
