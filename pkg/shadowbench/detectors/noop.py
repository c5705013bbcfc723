# -*- coding: utf-8 -*-
#
# The "no shadow removal" baseline

from __future__ import absolute_import

import numpy as np

from ..base import BaseShadowDetector

__all__ = [
    'NoShadowDetector'
]


class NoShadowDetector(BaseShadowDetector):
    """Label every foreground pixel Object.

    The baseline for tracking without shadow removal, and the harness
    overhead reference for timing.
    """
    def _detect(self, frame, background, foreground):
        return np.zeros(foreground.shape, dtype=bool)
