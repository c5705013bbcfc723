# -*- coding: utf-8 -*-

from __future__ import absolute_import

import numpy as np
from sklearn.base import clone

from shadowbench.detectors import DETECTORS, METHODS, NoShadowDetector, \
    get_detector
from shadowbench.labels import BACKGROUND, OBJECT
from shadowbench.testing import assert_raises


def test_every_method_is_registered():
    for name in METHODS:
        assert name in DETECTORS
        det = get_detector(name)
        assert type(det) is DETECTORS[name]

        # every detector survives a clone with its params intact
        assert clone(det).get_params() == det.get_params()


def test_params_are_forwarded():
    det = get_detector('texture_sr', bank='reduced', tau_d=0.2)
    assert det.bank == 'reduced'
    assert det.tau_d == 0.2


def test_unknown_method():
    assert_raises(ValueError, get_detector, 'sunlight')
    assert_raises(TypeError, get_detector, 'chromacity', colour=True)


def test_no_shadow_detector():
    frame = np.full((8, 8, 3), 100, dtype=np.uint8)
    fg = np.zeros((8, 8), dtype=bool)
    fg[2:6, 2:6] = True
    out = get_detector('none').detect(frame, frame // 2, fg)
    assert isinstance(get_detector('none'), NoShadowDetector)
    assert np.all(out[fg] == OBJECT)
    assert np.all(out[~fg] == BACKGROUND)
