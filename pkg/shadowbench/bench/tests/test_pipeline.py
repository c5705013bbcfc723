# -*- coding: utf-8 -*-

from __future__ import absolute_import

import os
import warnings

import numpy as np
from numpy.testing import assert_almost_equal, assert_array_equal
import pandas as pd

from shadowbench.bench import EVAL_COLUMNS, SUMMARY_SEQUENCE, \
    TRACKING_COLUMNS, BenchConfig, desaturation_sweep, iter_detections, \
    run_detect, run_eval, run_trackeval, time_method, write_report
from shadowbench.datasets import GOLDEN_SCENE, load_golden_masks, \
    load_sequence, make_sequence, write_sequence
from shadowbench.detectors import METHODS
from shadowbench.exceptions import ConfigError, MissingGroundTruthError, \
    SequenceError
from shadowbench.imaging import read_trimask
from shadowbench.metrics import aggregate, score_masks
from shadowbench.testing import assert_raises


def _synthetic(tmpdir, kind, **kwargs):
    kwargs.setdefault('random_state', 0)
    seq = make_sequence(kind, **kwargs)
    return load_sequence(write_sequence(seq, str(tmpdir)))


def _quiet(func, *args, **kwargs):
    with warnings.catch_warnings():
        warnings.simplefilter('ignore')
        return func(*args, **kwargs)


def _avg(scores, method):
    row = scores[(scores.method == method) &
                 (scores.sequence != SUMMARY_SEQUENCE)]
    return float(row.avg.iloc[0])


def test_detections_cover_requested_frames(tmpdir):
    spec = _synthetic(tmpdir, 'person', n_frames=8, labelled_from=6)
    config = BenchConfig()
    dets = list(iter_detections(spec, 'chromacity', config))
    assert [d.index for d in dets] == list(range(8))
    assert all(d.seconds >= 0 for d in dets)

    dets = list(iter_detections(spec, 'physical', config, only={6, 7}))
    assert [d.index for d in dets] == [6, 7]
    assert dets[0].trimask.shape == (80, 120)


def test_detect_is_deterministic(tmpdir):
    spec = _synthetic(tmpdir, 'hue', n_frames=6)
    config = BenchConfig()
    config.set('output.write_overlays', 'true')
    first = os.path.join(str(tmpdir), 'first')
    second = os.path.join(str(tmpdir), 'second')
    for method in ('chromacity', 'physical'):
        run_detect(spec, method, config, first)
        run_detect(spec, method, config, second)

        names = sorted(os.listdir(os.path.join(first, 'hue', method)))
        assert '000005.png' in names
        assert 'overlays' in names
        for name in names:
            if name == 'overlays':
                continue
            with open(os.path.join(first, 'hue', method, name), 'rb') as a:
                with open(os.path.join(second, 'hue', method, name),
                          'rb') as b:
                    assert a.read() == b.read()


def test_detect_matches_golden_masks(tmpdir):
    spec = _synthetic(tmpdir, **GOLDEN_SCENE)
    out = os.path.join(str(tmpdir), 'out')
    run_detect(spec, 'chromacity', BenchConfig(), out)

    golden = load_golden_masks(GOLDEN_SCENE['kind'], 'chromacity')
    mask_dir = os.path.join(out, spec.name, 'chromacity')
    assert sorted(os.listdir(mask_dir)) == sorted(golden)
    for name, expected in golden.items():
        assert_array_equal(read_trimask(os.path.join(mask_dir, name)),
                           expected, err_msg=name)


def test_eval_rows_and_quality(tmpdir):
    spec = _synthetic(tmpdir, 'textured')
    scores, frames = _quiet(run_eval, [spec], list(METHODS), BenchConfig())

    # one row per method, then one summary row per method
    assert list(scores.columns) == EVAL_COLUMNS
    assert EVAL_COLUMNS[:8] == ['sequence', 'method', 'lambda', 'eta', 'xi',
                               'avg', 'ms_per_frame', 'frames_scored']
    assert EVAL_COLUMNS[-1] == 'tuned'
    assert len(scores) == 10
    assert list(scores.method[:5]) == list(METHODS)
    assert list(scores.sequence[5:]) == [SUMMARY_SEQUENCE] * 5
    assert (scores.frames_scored[:5] == 10).all()
    assert not scores.tuned.any()
    assert ((scores.eta >= 0) & (scores.eta <= 1)).all()

    # the large-region texture test wins on textured ground
    lr = _avg(scores, 'texture_lr')
    assert lr >= 0.8
    for method in METHODS:
        assert lr >= _avg(scores, method)

    # ten frames and a macro row per method
    assert len(frames) == 5 * 11
    assert (frames.frame == 'macro').sum() == 5


def test_targeted_scenes(tmpdir):
    config = BenchConfig()
    for kind, method in [('hue', 'chromacity'), ('physical', 'physical'),
                         ('weak', 'texture_sr')]:
        spec = _synthetic(tmpdir, kind)
        scores, _ = _quiet(run_eval, [spec], [method], config)
        assert _avg(scores, method) >= 0.8, (kind, method)


def test_lambda_grid_rows(tmpdir):
    spec = _synthetic(tmpdir, 'hue', n_frames=33)
    scores, _ = _quiet(run_eval, [spec], ['chromacity', 'none'],
                       BenchConfig(), lambda_grid=(0., 0.5, 1.))
    assert len(scores) == 2 * 3 * 2
    jobs = scores[scores.sequence != SUMMARY_SEQUENCE]
    assert list(jobs['lambda']) == [0., 0.5, 1.] * 2


def test_scores_match_the_written_masks(tmpdir):
    spec = _synthetic(tmpdir, 'textured', n_frames=34)
    out = os.path.join(str(tmpdir), 'out')
    os.makedirs(out)
    scores, _ = _quiet(run_eval, [spec], ['chromacity', 'texture_lr'],
                       BenchConfig(), mask_dir=out)
    path = write_report(scores, os.path.join(out, 'eval.csv'))
    report = pd.read_csv(path)

    for method in ('chromacity', 'texture_lr'):
        mask_dir = os.path.join(out, 'textured', method, 'lambda_0')
        counts = [score_masks(read_trimask(os.path.join(mask_dir, name)),
                              spec.read_gt(int(name[:-4])))
                  for name in sorted(os.listdir(mask_dir))]
        assert len(counts) == 4
        expected = aggregate(counts)
        row = report[(report.method == method) &
                     (report.sequence == 'textured')].iloc[0]
        assert_almost_equal(row.eta, expected.eta, decimal=9)
        assert_almost_equal(row.xi, expected.xi, decimal=9)


def test_unlabelled_sequence_is_skipped(tmpdir):
    spec = _synthetic(tmpdir, 'hue', n_frames=5, labelled_from=5)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter('always')
        scores, frames = run_eval([spec], ['chromacity'], BenchConfig())
    assert any('no labelled frames' in str(w.message) for w in caught)
    assert len(scores) == 2
    assert scores.frames_scored.iloc[0] == 0
    assert np.isnan(scores.eta.iloc[0])
    assert len(frames) == 0


def test_sequence_override_is_marked(tmpdir):
    spec = _synthetic(tmpdir, 'hue', n_frames=31)
    config = BenchConfig()
    _quiet(config.set, 'sequence.hue.chromacity.window', '3')
    scores, _ = _quiet(run_eval, [spec], ['chromacity', 'none'], config)
    assert list(scores.tuned) == [True, False, True, False]


def test_desaturation_sweep(tmpdir):
    spec = _synthetic(tmpdir, 'hue')
    config = BenchConfig()

    chroma = _quiet(desaturation_sweep, spec, 'chromacity', config,
                    lambda_grid=(0., 1.))
    lr = _quiet(desaturation_sweep, spec, 'texture_lr', config,
                lambda_grid=(0., 1.))
    assert list(chroma['lambda']) == [0., 1.]

    chroma_drop = chroma.avg.iloc[0] - chroma.avg.iloc[1]
    lr_drop = lr.avg.iloc[0] - lr.avg.iloc[1]
    assert chroma_drop >= 0.1
    assert lr_drop < chroma_drop

    # the lambda=0 point is the plain evaluation
    plain, _ = _quiet(run_eval, [spec], ['chromacity'], config)
    assert plain.eta.iloc[0] == chroma.eta.iloc[0]
    assert plain.xi.iloc[0] == chroma.xi.iloc[0]

    assert_raises(ConfigError, desaturation_sweep, spec, 'chromacity',
                  config, lambda_grid=(0., 0.5))


def test_timing_order(tmpdir):
    spec = _synthetic(tmpdir, 'textured', n_frames=20)
    config = BenchConfig()
    ms = dict((method, time_method(spec, method, config))
              for method in METHODS)

    assert min(ms, key=ms.get) == 'chromacity'
    assert max(ms, key=ms.get) == 'texture_sr'
    assert ms['texture_sr'] >= 5 * ms['chromacity']
    assert time_method(spec, 'none', config) < ms['chromacity']

    config.set('texture_sr.bank', 'reduced')
    assert time_method(spec, 'texture_sr', config) <= \
        0.45 * ms['texture_sr']


def test_timing_needs_enough_frames(tmpdir):
    spec = _synthetic(tmpdir, 'hue', n_frames=12)
    assert_raises(SequenceError, time_method, spec, 'chromacity',
                  BenchConfig())


def test_shadow_removal_helps_tracking(tmpdir):
    spec = _synthetic(tmpdir, 'crossing')
    scores = _quiet(run_trackeval, [spec], list(METHODS), BenchConfig())

    assert list(scores.columns) == TRACKING_COLUMNS
    assert len(scores) == 6
    assert list(scores.shadow_method) == ['none'] + list(METHODS)
    assert (scores.tracker == 'cc').all()
    assert not scores.mota.isnull().any()

    mota = dict(zip(scores.shadow_method, scores.mota))
    assert mota['texture_lr'] >= mota['none'] + 0.15


def test_trackeval_needs_gt_tracks(tmpdir):
    spec = _synthetic(tmpdir, 'hue', n_frames=3)._replace(tracks_file=None)
    assert_raises(MissingGroundTruthError, run_trackeval, [spec],
                  ['chromacity'], BenchConfig())


def test_unreadable_frame_gives_undefined_rows(tmpdir):
    spec = _synthetic(tmpdir, 'crossing', n_frames=4, labelled_from=0)
    with open(spec.frame_files[2][1], 'w') as f:
        f.write('not a png')

    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter('always')
        scores = run_trackeval([spec], ['chromacity'], BenchConfig())
    assert sum('Tracking crossing' in str(w.message) for w in caught) == 2
    assert list(scores.shadow_method) == ['none', 'chromacity']
    assert scores.mota.isnull().all()
    assert scores.motp.isnull().all()
