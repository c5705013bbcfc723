# -*- coding: utf-8 -*-
#
# The base class shared by all shadow detectors

from __future__ import absolute_import

from abc import ABCMeta, abstractmethod

import numpy as np
from sklearn.base import BaseEstimator

from .labels import make_trimask
from .utils.validation import check_frame, check_mask, check_same_shape

__all__ = [
    'BaseShadowDetector'
]


class BaseShadowDetector(BaseEstimator, metaclass=ABCMeta):
    """The base class for all shadow detectors.

    A detector splits the foreground of a frame into Object and Shadow
    pixels, given the frame, the background reference and the foreground
    mask produced by the background model. The constructor keyword
    arguments are the detector's tunables, so ``get_params``,
    ``set_params`` and ``sklearn.base.clone`` work on every detector.

    Stateless detectors only implement ``_detect``. Stateful detectors set
    ``stateful = True`` and learn from every frame in ``partial_fit``, which
    the pipeline calls in frame order before ``detect``.

    Examples
    --------
    The following is an example of how to subclass a BaseShadowDetector:

        >>> import numpy as np
        >>> from shadowbench.base import BaseShadowDetector
        >>> class AllObject(BaseShadowDetector):
        ...     def _detect(self, frame, background, foreground):
        ...         return np.zeros(foreground.shape, dtype=bool)
        ...
        >>> AllObject()
        AllObject()
    """
    stateful = False

    def _check_params(self):
        """Validate the parameters, raising ValueError when out of range."""

    def _check_inputs(self, frame, background, foreground):
        frame = check_frame(frame, name='frame')
        background = check_frame(background, name='background')
        foreground = check_mask(foreground, name='foreground')
        check_same_shape(frame, background, foreground,
                         names=('frame', 'background', 'foreground'))
        return frame, background, foreground

    def partial_fit(self, frame, background, foreground):
        """Update the detector's state with one frame.

        A no-op for stateless detectors.

        Returns
        -------
        self
        """
        return self

    def detect(self, frame, background, foreground):
        """Label the foreground pixels of a frame as Object or Shadow.

        Parameters
        ----------
        frame : array-like, shape=(height, width, 3)
            The current RGB frame.

        background : array-like, shape=(height, width, 3)
            The background reference image.

        foreground : array-like, shape=(height, width)
            The foreground mask from the background model.

        Returns
        -------
        trimask : np.ndarray, shape=(height, width), dtype=uint8
            Background where ``foreground`` is False, otherwise Shadow or
            Object.
        """
        self._check_params()
        frame, background, foreground = self._check_inputs(
            frame, background, foreground)
        shadow = np.asarray(self._detect(frame, background, foreground),
                            dtype=bool)
        return make_trimask(foreground, shadow & foreground)

    @abstractmethod
    def _detect(self, frame, background, foreground):
        """Return a bool mask of the Shadow pixels; inputs are validated."""
