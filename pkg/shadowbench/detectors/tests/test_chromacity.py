# -*- coding: utf-8 -*-

from __future__ import absolute_import

import numpy as np
from numpy.testing import assert_array_equal
from sklearn.utils.validation import check_random_state

from shadowbench.detectors import ChromacityDetector, chromacity_votes, \
    rgb_chromacity_votes, window_majority
from shadowbench.imaging import hsv_to_rgb, hue_distance, rgb_to_hsv
from shadowbench.labels import BACKGROUND, OBJECT, SHADOW
from shadowbench.testing import assert_raises

random_state = check_random_state(42)


def _pixel(hsv):
    return hsv_to_rgb(np.array(hsv, dtype=np.float64)).reshape(1, 1, 3)


def test_attenuated_pixel_is_shadow():
    b = _pixel([30., 0.5, 0.8])
    f = _pixel([30., 0.45, 0.48])  # V ratio 0.6, dS = -0.05
    det = ChromacityDetector(beta1=0.4, beta2=0.9, tau_s=0.1, tau_h=10.,
                             window=1)
    out = det.detect(f, b, np.ones((1, 1), dtype=bool))
    assert out[0, 0] == SHADOW


def test_brightened_pixel_is_object():
    b = _pixel([30., 0.5, 0.5])
    f = _pixel([30., 0.5, 0.7])
    out = ChromacityDetector(window=1).detect(f, b, np.ones((1, 1)))
    assert out[0, 0] == OBJECT


def test_zero_background_value_never_votes():
    f = np.zeros((1, 1, 3), dtype=np.uint8)
    b = np.zeros((1, 1, 3), dtype=np.uint8)
    out = ChromacityDetector(window=1).detect(f, b, np.ones((1, 1)))
    assert out[0, 0] == OBJECT


def test_window_majority_is_strict():
    fg = np.ones((5, 5), dtype=bool)
    votes = np.zeros(25, dtype=bool)
    votes[:12] = True
    assert not window_majority(votes.reshape(5, 5), fg, 5)[2, 2]

    votes[12] = True
    assert window_majority(votes.reshape(5, 5), fg, 5)[2, 2]


def test_window_majority_ignores_background():
    # 3 foreground pixels in the window, 2 of them voting
    fg = np.zeros((5, 5), dtype=bool)
    fg[2, 1:4] = True
    votes = np.zeros((5, 5), dtype=bool)
    votes[2, 1:3] = True
    out = window_majority(votes, fg, 5)
    assert out[2, 2]
    assert not out[~fg].any()


def test_window_majority_matches_brute_force():
    for window in (3, 5):
        half = window // 2
        for _ in range(3):
            fg = random_state.rand(12, 15) < 0.6
            votes = random_state.rand(12, 15) < 0.5
            expected = np.zeros(fg.shape, dtype=bool)
            for r in range(12):
                for c in range(15):
                    rows = slice(max(r - half, 0), r + half + 1)
                    cols = slice(max(c - half, 0), c + half + 1)
                    n_fg = fg[rows, cols].sum()
                    n_votes = (votes & fg)[rows, cols].sum()
                    expected[r, c] = fg[r, c] and 2 * n_votes > n_fg
            assert_array_equal(window_majority(votes, fg, window), expected)


def _brute_force_votes(f, b, fg, beta1, beta2, tau_s, tau_h):
    height, width = fg.shape
    out = np.zeros(fg.shape, dtype=bool)
    for r in range(height):
        for c in range(width):
            if not fg[r, c]:
                continue
            fh, fs, fv = rgb_to_hsv(f[r, c])
            bh, bs, bv = rgb_to_hsv(b[r, c])
            if bv == 0:
                continue
            out[r, c] = beta1 <= fv / bv <= beta2 and \
                fs - bs <= tau_s and hue_distance(fh, bh) <= tau_h
    return out


def test_window_one_matches_brute_force():
    det = ChromacityDetector(window=1)
    for _ in range(5):
        b = random_state.randint(0, 256, size=(16, 16, 3)).astype(np.uint8)
        scale = random_state.uniform(0.3, 1.1, size=(16, 16, 1))
        f = np.clip(np.round(b * scale), 0, 255).astype(np.uint8)
        fg = random_state.rand(16, 16) < 0.7

        expected = _brute_force_votes(f, b, fg, det.beta1, det.beta2,
                                      det.tau_s, det.tau_h)
        out = det.detect(f, b, fg)
        assert_array_equal(out == SHADOW, expected)
        assert_array_equal(out == BACKGROUND, ~fg)


def test_background_count_preserved():
    b = random_state.randint(0, 256, size=(20, 20, 3)).astype(np.uint8)
    f = (b * 0.6).astype(np.uint8)
    fg = random_state.rand(20, 20) < 0.5
    out = ChromacityDetector().detect(f, b, fg)
    assert (out == BACKGROUND).sum() == (~fg).sum()
    assert not np.any(out[fg] == BACKGROUND)


def test_value_scaling_invariance():
    hsv_b = np.dstack([random_state.uniform(0, 360, (16, 16)),
                       random_state.uniform(0, 1, (16, 16)),
                       random_state.uniform(0.2, 1, (16, 16))])
    hsv_f = hsv_b.copy()
    hsv_f[..., 2] *= random_state.uniform(0.2, 1.2, (16, 16))
    fg = np.ones((16, 16), dtype=bool)

    args = (0.4, 0.9, 0.1, 60.)
    base = chromacity_votes(hsv_f, hsv_b, fg, *args)
    for k in (0.25, 0.5, 2.):
        scaled_f, scaled_b = hsv_f.copy(), hsv_b.copy()
        scaled_f[..., 2] *= k
        scaled_b[..., 2] *= k
        assert_array_equal(
            chromacity_votes(scaled_f, scaled_b, fg, *args), base)


def test_param_validation():
    f = np.zeros((3, 3, 3), dtype=np.uint8)
    fg = np.ones((3, 3), dtype=bool)
    for params in (dict(beta1=0.9, beta2=0.4), dict(beta2=1.2),
                   dict(tau_s=2.), dict(tau_h=200.), dict(window=4),
                   dict(window=0)):
        det = ChromacityDetector(**params)
        assert_raises(ValueError, det.detect, f, f, fg)

    # shape mismatch
    assert_raises(ValueError, ChromacityDetector().detect, f, f,
                  np.ones((2, 3)))


def test_rgb_votes_match_hsv_votes():
    args = (0.4, 0.9, 0.1, 60.)
    for _ in range(3):
        b = random_state.randint(0, 256, size=(12, 12, 3)).astype(np.uint8)
        scale = random_state.uniform(0.3, 1.1, size=(12, 12, 1))
        f = np.clip(np.round(b * scale), 0, 255).astype(np.uint8)
        fg = random_state.rand(12, 12) < 0.5
        assert_array_equal(
            rgb_chromacity_votes(f, b, fg, *args),
            chromacity_votes(rgb_to_hsv(f), rgb_to_hsv(b), fg, *args))

    empty = np.zeros((12, 12), dtype=bool)
    assert not rgb_chromacity_votes(f, b, empty, *args).any()
