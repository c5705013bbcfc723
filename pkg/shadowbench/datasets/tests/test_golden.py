# -*- coding: utf-8 -*-

from __future__ import absolute_import

import numpy as np

from shadowbench.datasets import GOLDEN_SCENE, load_golden_masks
from shadowbench.labels import OBJECT, SHADOW
from shadowbench.testing import assert_raises


def test_golden_masks_ship_with_the_package():
    masks = load_golden_masks()
    assert sorted(masks) == ['%06d.png' % t
                             for t in range(GOLDEN_SCENE['n_frames'])]
    for name, mask in masks.items():
        assert mask.shape == (80, 120)
        assert mask.dtype == np.uint8
        assert (mask == OBJECT).any(), name
        assert (mask == SHADOW).any(), name


def test_no_golden_masks():
    assert_raises(ValueError, load_golden_masks, 'hue')
    assert_raises(ValueError, load_golden_masks, 'physical', 'texture_sr')
