# -*- coding: utf-8 -*-

from __future__ import absolute_import, division

import numpy as np
from numpy.testing import assert_array_equal, assert_array_almost_equal
from sklearn.utils.validation import check_random_state

from shadowbench.imaging import (desaturate, hsv_to_rgb, hue_distance,
                                 rgb_to_hsv, round_half_away, to_grey)
from shadowbench.testing import assert_raises

random_state = check_random_state(42)
frame = random_state.randint(0, 256, size=(16, 16, 3)).astype(np.uint8)


def test_rgb_to_hsv_examples():
    assert_array_almost_equal(rgb_to_hsv((255, 0, 0)), [0., 1., 1.])
    assert_array_almost_equal(rgb_to_hsv((0, 0, 0)), [0., 0., 0.])
    assert_array_almost_equal(rgb_to_hsv((128, 128, 128)),
                              [0., 0., 128. / 255.])

    # pure green and blue sit at 120 and 240 degrees
    assert_array_almost_equal(rgb_to_hsv((0, 255, 0)), [120., 1., 1.])
    assert_array_almost_equal(rgb_to_hsv((0, 0, 255)), [240., 1., 1.])


def test_rgb_to_hsv_ranges():
    hsv = rgb_to_hsv(frame)
    assert hsv.shape == frame.shape
    assert np.all((hsv[..., 0] >= 0) & (hsv[..., 0] < 360))
    assert np.all((hsv[..., 1] >= 0) & (hsv[..., 1] <= 1))
    assert np.all((hsv[..., 2] >= 0) & (hsv[..., 2] <= 1))

    # achromatic pixels always get the canonical hue
    grey = np.repeat(frame[..., :1], 3, axis=2)
    assert np.all(rgb_to_hsv(grey)[..., 0] == 0)


def test_rgb_to_hsv_rejects_bad_input():
    assert_raises(ValueError, rgb_to_hsv, (1, 2))
    assert_raises(ValueError, rgb_to_hsv, (256, 0, 0))


def test_hsv_round_trip():
    back = hsv_to_rgb(rgb_to_hsv(frame)).astype(int)
    assert np.abs(back - frame.astype(int)).max() <= 1


def test_hue_distance():
    assert hue_distance(359, 2) == 3
    assert hue_distance(10, 10) == 0
    assert hue_distance(0, 180) == 180

    h = random_state.uniform(0, 360, size=(3, 500))
    d_ab = hue_distance(h[0], h[1])
    d_ba = hue_distance(h[1], h[0])
    d_bc = hue_distance(h[1], h[2])
    d_ac = hue_distance(h[0], h[2])
    assert_array_almost_equal(d_ab, d_ba)
    assert np.all(d_ab <= 180)
    assert np.all(d_ac <= d_ab + d_bc + 1e-9)


def test_round_half_away():
    assert_array_equal(round_half_away([0.5, 1.5, 2.5, 147.3, -0.5]),
                       [1., 2., 3., 147., -1.])


def test_desaturate_identity_and_grey():
    assert_array_equal(desaturate(frame, 0.), frame)
    grey = desaturate(frame, 1.)
    assert np.all(grey[..., 0] == grey[..., 1])
    assert np.all(grey[..., 1] == grey[..., 2])


def test_desaturate_half():
    f = np.array([[[100, 200, 0]]], dtype=np.uint8)
    # grey = 0.299 * 100 + 0.587 * 200 = 147.3
    assert_array_equal(desaturate(f, 0.5)[0, 0], [124, 174, 74])


def test_desaturate_monotone():
    orig = frame.astype(np.float64)
    grey = to_grey(frame)[..., np.newaxis]
    for lam in (0.25, 0.5, 0.75, 1.):
        dist = np.abs(desaturate(frame, lam) - grey)
        # within 8-bit rounding of the exact blend
        assert np.all(dist <= (1. - lam) * np.abs(orig - grey) + 0.5 + 1e-9)


def test_desaturate_hsv_mode():
    assert_array_equal(desaturate(frame, 0., mode='hsv'), frame)
    out = desaturate(frame, 1., mode='hsv')
    assert np.all(out[..., 0] == out[..., 2])
    assert_raises(ValueError, desaturate, frame, 0.5, mode='sepia')


def test_desaturate_rejects_lambda():
    assert_raises(ValueError, desaturate, frame, -0.1)
    assert_raises(ValueError, desaturate, frame, 1.1)


def test_to_grey():
    f = np.array([[[100, 200, 0]]], dtype=np.uint8)
    assert_array_almost_equal(to_grey(f), [[147.3]])
