# -*- coding: utf-8 -*-

from __future__ import absolute_import

import numpy as np
from numpy.testing import assert_array_equal, assert_array_almost_equal
from sklearn.base import clone
from sklearn.exceptions import NotFittedError
from sklearn.utils.validation import check_random_state

from shadowbench.background import GaussianMixtureBackground, \
    clean_foreground
from shadowbench.testing import assert_raises

random_state = check_random_state(42)
scene = random_state.randint(20, 230, size=(30, 40, 3)).astype(np.uint8)


def test_cold_start_is_empty():
    model = GaussianMixtureBackground()
    fg = model.observe(scene)
    assert fg.shape == scene.shape[:2]
    assert not fg.any()
    assert model.n_frames_ == 1


def test_static_scene_stays_background():
    model = GaussianMixtureBackground()
    for _ in range(5):
        fg = model.observe(scene)
        # from the second frame on, nothing moves
        assert not fg.any()
        assert_array_almost_equal(model.weights_.sum(axis=-1), 1.)


def test_stationary_convergence():
    model = GaussianMixtureBackground().fit([scene] * 100)
    bg = model.background_image()
    assert np.abs(bg.astype(int) - scene.astype(int)).max() <= 1
    assert np.all(model.variances_ >= model.min_variance)


def test_square_is_foreground():
    model = GaussianMixtureBackground()
    for _ in range(20):
        model.observe(scene)

    frame = scene.copy()
    frame[10:20, 15:25] = 255
    frame[10:20, 15:25, 2] = 0
    fg = model.observe(frame)

    expected = np.zeros(fg.shape, dtype=bool)
    expected[10:20, 15:25] = True
    assert_array_equal(fg, expected)

    # the newcomer does not replace the background reference
    assert_array_equal(model.background_image(), scene)


def test_weights_and_variance_floor():
    model = GaussianMixtureBackground(min_variance=15.)
    rs = check_random_state(1)
    for _ in range(30):
        noise = rs.normal(0, 3, size=scene.shape)
        frame = np.clip(scene + noise, 0, 255).round().astype(np.uint8)
        model.observe(frame)
        assert_array_almost_equal(model.weights_.sum(axis=-1), 1., decimal=6)
        assert np.all(model.variances_ >= 15.)
        assert (model.weights_ > 0).sum(axis=-1).max() <= 5


def test_background_image_takes_heaviest_mode():
    model = GaussianMixtureBackground(n_components=2)
    model.observe(np.zeros((1, 1, 3), dtype=np.uint8))
    model.weights_[0, 0] = [0.3, 0.7]
    model.means_[0, 0] = [[10., 10., 10.], [200., 100., 50.]]
    assert_array_equal(model.background_image()[0, 0], [200, 100, 50])


def test_bypass_mode():
    bg = scene.copy()
    model = GaussianMixtureBackground().set_background(bg)
    assert model.bypass

    frame = scene.copy()
    frame[5:15, 5:15] = 0
    fg = model.observe(frame)
    assert fg[5:15, 5:15].all()
    assert fg.sum() == 100

    # returned verbatim, never rebuilt from the mixture
    assert_array_equal(model.background_image(), bg)


def test_unfitted_and_mismatch():
    model = GaussianMixtureBackground()
    assert_raises(NotFittedError, model.background_image)
    model.observe(scene)
    assert_raises(ValueError, model.observe, scene[:10])


def test_fit_resets():
    model = GaussianMixtureBackground().set_background(scene)
    model.fit([scene[:10, :10]] * 3)
    assert not model.bypass
    assert model.n_frames_ == 3


def test_param_validation():
    for params in (dict(n_components=0), dict(learning_rate=0.),
                   dict(background_ratio=1.5), dict(min_variance=-1.),
                   dict(init_variance=1.), dict(match_threshold=0.)):
        model = GaussianMixtureBackground(**params)
        assert_raises(ValueError, model.observe, scene)

    model = clone(GaussianMixtureBackground(learning_rate=0.05))
    assert model.get_params()['learning_rate'] == 0.05


def test_clean_foreground():
    m = np.zeros((12, 12), dtype=bool)
    m[2, 2] = True  # speckle
    m[0:6, 6:12] = True  # touches the border
    out = clean_foreground(m)
    assert not out[2, 2]
    assert_array_equal(out[0:6, 6:12], True)
    assert out.sum() == 36
