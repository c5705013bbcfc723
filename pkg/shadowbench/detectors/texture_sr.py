# -*- coding: utf-8 -*-
#
# Small-region texture shadow detector: photometric gain candidates
# verified by Gabor projections of each pixel's neighbourhood.

from __future__ import absolute_import, division

import numpy as np
from scipy import ndimage

from ..base import BaseShadowDetector
from ..imaging.color import to_grey
from ..utils.validation import check_grey, check_mask, validate_float, \
    validate_odd

__all__ = [
    'BANK_PRESETS',
    'GaborBank',
    'SmallRegionTextureDetector',
    'build_bank',
    'classify_texture_sr',
    'gabor_kernel',
    'photometric_gain_candidates',
    'project_patch',
    'select_kernels'
]

BANK_PRESETS = {
    # 4 wavelengths x 6 orientations x 2 phases
    'full': dict(wavelengths=(3., 4., 6., 8.), n_orientations=6),
    # 2 wavelengths x 4 orientations x 2 phases
    'reduced': dict(wavelengths=(4., 8.), n_orientations=4),
}


def gabor_kernel(size, wavelength, theta, phase, sigma, gamma=1.):
    """Build one zero-mean, unit-norm Gabor kernel.

    Parameters
    ----------
    size : int
        The odd side of the square kernel.

    wavelength : float
        The wavelength of the carrier, in pixels.

    theta : float
        The orientation of the carrier, in radians.

    phase : float
        The phase offset of the carrier, in radians.

    sigma : float
        The standard deviation of the Gaussian envelope, in pixels.

    gamma : float, optional (default=1.)
        The spatial aspect ratio of the envelope.
    """
    validate_odd(size, 'size', minimum=3)
    half = size // 2
    y, x = np.meshgrid(np.arange(-half, half + 1),
                       np.arange(-half, half + 1), indexing='ij')

    x_theta = x * np.cos(theta) + y * np.sin(theta)
    y_theta = -x * np.sin(theta) + y * np.cos(theta)
    gb = np.exp(-.5 * (x_theta ** 2 + gamma ** 2 * y_theta ** 2) /
                sigma ** 2) * np.cos(2. * np.pi / wavelength * x_theta + phase)

    gb -= gb.mean()
    return gb / np.linalg.norm(gb)


class GaborBank(object):
    """A set of same-size Gabor kernels.

    Parameters
    ----------
    kernels : np.ndarray, shape=(n_kernels, size, size)
        The kernels.

    params : list of tuple
        ``(wavelength, theta, phase, sigma)`` of every kernel.
    """
    def __init__(self, kernels, params):
        kernels = np.asarray(kernels, dtype=np.float64)
        if kernels.ndim != 3 or kernels.shape[1] != kernels.shape[2]:
            raise ValueError("kernels must have shape (n, size, size), but "
                             "got %r" % (kernels.shape,))
        if len(params) != kernels.shape[0]:
            raise ValueError("Got %i kernels but %i parameter tuples"
                             % (kernels.shape[0], len(params)))
        self.kernels = kernels
        self.params = list(params)

    def __len__(self):
        return self.kernels.shape[0]

    def __repr__(self):
        return 'GaborBank(n_kernels=%i, size=%i)' % (len(self), self.size)

    @property
    def size(self):
        return self.kernels.shape[1]

    def subset(self, indices):
        """Get a bank made of the kernels at ``indices``, in that order."""
        indices = list(indices)
        return GaborBank(self.kernels[indices],
                         [self.params[i] for i in indices])


def build_bank(size=9, wavelengths=(3., 4., 6., 8.), n_orientations=6,
               phases=(0., np.pi / 2.), sigma_ratio=0.56):
    """Build a Gabor bank over a grid of wavelengths, orientations, phases.

    Orientations are spread evenly over ``[0, pi)``; the envelope width of
    every kernel is ``sigma_ratio * wavelength``. The bank is a pure
    function of its arguments.

    Examples
    --------
    >>> len(build_bank())
    48
    >>> len(build_bank(**BANK_PRESETS['reduced']))
    16
    """
    validate_odd(size, 'size', minimum=3)
    if n_orientations < 1 or not len(wavelengths) or not len(phases):
        raise ValueError("The kernel grid must not be empty")

    kernels, params = [], []
    for wavelength in wavelengths:
        sigma = sigma_ratio * wavelength
        for i in range(n_orientations):
            theta = np.pi * i / n_orientations
            for phase in phases:
                kernels.append(gabor_kernel(size, wavelength, theta, phase,
                                            sigma))
                params.append((float(wavelength), theta, float(phase),
                               sigma))
    return GaborBank(np.array(kernels), params)


def select_kernels(bank, grey, n_keep):
    """Rank the kernels of a bank by their response energy on an image.

    The kernels are ordered by decreasing mean squared response to
    ``grey`` (ties keep bank order) and the first ``n_keep`` are returned
    as a new bank.

    Parameters
    ----------
    bank : GaborBank
        The full bank.

    grey : array-like, shape=(height, width)
        The calibration image.

    n_keep : int
        The number of kernels to keep, in [1, len(bank)].
    """
    grey = check_grey(grey, name='grey', min_size=bank.size)
    if not 1 <= n_keep <= len(bank):
        raise ValueError("n_keep must be in [1, %i], but got %r"
                         % (len(bank), n_keep))
    energy = np.array([np.mean(ndimage.correlate(grey, k, mode='constant')
                               ** 2) for k in bank.kernels])
    order = np.argsort(-energy, kind='stable')
    return bank.subset(order[:int(n_keep)])


def project_patch(patch, bank):
    """Project a ``size x size`` patch onto every kernel of a bank."""
    patch = np.asarray(patch, dtype=np.float64)
    if patch.shape != (bank.size, bank.size):
        raise ValueError("Expected a %ix%i patch, but got shape=%r"
                         % (bank.size, bank.size, patch.shape))
    return bank.kernels.reshape(len(bank), -1).dot(patch.ravel())


def _responses(grey, bank):
    return np.stack([ndimage.correlate(grey, k, mode='constant')
                     for k in bank.kernels])


def photometric_gain_candidates(frame_grey, background_grey, foreground,
                                g_lo=0.1):
    """Select foreground pixels darker than the background.

    A pixel is a candidate iff it is foreground and ``F / B`` lies in the
    open interval ``(g_lo, 1)``. Pixels with ``B = 0`` are never
    candidates.
    """
    f = check_grey(frame_grey, name='frame_grey')
    b = check_grey(background_grey, name='background_grey')
    foreground = check_mask(foreground, name='foreground')
    lit = b > 0
    ratio = np.divide(f, b, out=np.zeros_like(f), where=lit)
    return foreground & lit & (ratio > g_lo) & (ratio < 1.)


def classify_texture_sr(frame_grey, background_grey, foreground, bank,
                        tau_d=0.35, g_lo=0.1, eps=1e-6):
    """Label the photometric gain candidates whose texture matches as shadow.

    For each candidate, the neighbourhood is projected onto every kernel
    of the bank in the frame and in the background; the pixel is shadow
    iff ``|feat_F - feat_B| / (|feat_B| + eps) <= tau_d``. Candidates whose
    neighbourhood crosses the image border are left out.

    Returns
    -------
    shadow : np.ndarray, shape=(height, width), dtype=bool
    """
    f = check_grey(frame_grey, name='frame_grey', min_size=bank.size)
    b = check_grey(background_grey, name='background_grey',
                   min_size=bank.size)
    candidates = photometric_gain_candidates(f, b, foreground, g_lo=g_lo)

    half = bank.size // 2
    inner = np.zeros(f.shape, dtype=bool)
    inner[half:f.shape[0] - half, half:f.shape[1] - half] = True
    candidates &= inner

    shadow = np.zeros(f.shape, dtype=bool)
    if not candidates.any():
        return shadow

    feat_f = _responses(f, bank)[:, candidates]
    feat_b = _responses(b, bank)[:, candidates]
    dist = np.linalg.norm(feat_f - feat_b, axis=0) / \
        (np.linalg.norm(feat_b, axis=0) + eps)
    shadow[candidates] = dist <= tau_d
    return shadow


class SmallRegionTextureDetector(BaseShadowDetector):
    """Gabor texture correlation over small neighbourhoods.

    Parameters
    ----------
    bank : str, optional (default='full')
        The kernel grid: 'full' (48 kernels) or 'reduced' (16 kernels).

    kernel_size : int, optional (default=9)
        The odd side of the kernels and of the neighbourhoods.

    n_keep : int or None, optional (default=None)
        If set, only the ``n_keep`` kernels with the most energy on the
        first background seen are used (see :func:`select_kernels`).

    tau_d : float, optional (default=0.35)
        The normalised feature distance threshold.

    g_lo : float, optional (default=0.1)
        The lower bound of the photometric gain.

    Attributes
    ----------
    bank_ : GaborBank
        The kernels in use, built on the first call to ``detect``.
    """
    def __init__(self, bank='full', kernel_size=9, n_keep=None, tau_d=0.35,
                 g_lo=0.1):

        self.bank = bank
        self.kernel_size = kernel_size
        self.n_keep = n_keep
        self.tau_d = tau_d
        self.g_lo = g_lo

    def _check_params(self):
        if self.bank not in BANK_PRESETS:
            raise ValueError("bank must be one of %r, but got %r"
                             % (sorted(BANK_PRESETS), self.bank))
        validate_odd(self.kernel_size, 'kernel_size', minimum=3)
        if self.tau_d < 0:
            raise ValueError("tau_d must be non-negative, but got %r"
                             % self.tau_d)
        validate_float(self.g_lo, 'g_lo', upper_inclusive=False)

    def _get_bank(self, background_grey):
        key = (self.bank, self.kernel_size, self.n_keep)
        if getattr(self, '_bank_key', None) != key:
            bank = build_bank(size=int(self.kernel_size),
                              **BANK_PRESETS[self.bank])
            if self.n_keep is not None:
                bank = select_kernels(bank, background_grey, self.n_keep)
            self.bank_ = bank
            self._bank_key = key
        return self.bank_

    def _detect(self, frame, background, foreground):
        f, b = to_grey(frame), to_grey(background)
        return classify_texture_sr(f, b, foreground, self._get_bank(b),
                                   tau_d=self.tau_d, g_lo=self.g_lo)
