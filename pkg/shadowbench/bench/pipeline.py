# -*- coding: utf-8 -*-
#
# Running detectors over sequences: background model, shadow detection,
# scoring, timing and tracking, fanned out over (sequence, method) jobs.

from __future__ import absolute_import, division

from collections import namedtuple
import logging
import os
from timeit import default_timer
import warnings

import numpy as np
import pandas as pd
from joblib import Parallel, delayed

from ..exceptions import ConfigError, SequenceError
from ..imaging.color import desaturate
from ..imaging.io import render_overlay, write_grey, write_frame
from ..labels import OBJECT
from ..metrics import aggregate, macro_average, score_masks, score_mot
from ..tracking import default_gate, track_blobs

__all__ = [
    'EVAL_COLUMNS',
    'FRAME_COLUMNS',
    'SUMMARY_SEQUENCE',
    'TIMING_COLUMNS',
    'TRACKING_COLUMNS',
    'Detection',
    'desaturation_sweep',
    'iter_detections',
    'run_detect',
    'run_eval',
    'run_trackeval',
    'time_method',
    'write_report'
]

logger = logging.getLogger(__name__)

EVAL_COLUMNS = ['sequence', 'method', 'lambda', 'eta', 'xi', 'avg',
                'ms_per_frame', 'frames_scored', 'tuned']
FRAME_COLUMNS = ['sequence', 'method', 'lambda', 'frame', 'eta', 'xi',
                 'avg']
TIMING_COLUMNS = ['sequence', 'method', 'ms_per_frame', 'frames_timed']
TRACKING_COLUMNS = ['sequence', 'shadow_method', 'tracker', 'mota', 'motp']

# the sequence name of the per-method summary rows
SUMMARY_SEQUENCE = 'ALL'

Detection = namedtuple('Detection', ['index', 'frame', 'trimask',
                                     'seconds'])
Detection.__doc__ = """One detected frame: its index, the (possibly
desaturated) frame, the TriMask and the detector time in seconds."""


def iter_detections(spec, method, config, lam=0., only=None):
    """Run the background model and a detector over a sequence.

    Frames (and the static background, if the sequence has one) are
    desaturated with ``lam`` first. The background model observes every
    frame; stateful detectors learn from every frame; ``detect`` runs on
    the frames in ``only`` (all frames if None). The recorded time covers
    the detector's ``partial_fit`` and ``detect`` of the yielded frame.

    Parameters
    ----------
    spec : SequenceSpec
        The sequence.

    method : str
        A method name, or 'none'.

    config : BenchConfig
        Supplies the estimator parameters, with the sequence's overrides.

    lam : float, optional (default=0.)
        The desaturation rate.

    only : container of int or None, optional (default=None)
        The frame indices to detect.

    Yields
    ------
    detection : Detection
    """
    mode = config.get('eval.desaturation_mode')
    bg_model = config.background(spec.name)
    detector = config.detector(method, spec.name)

    static = spec.read_background()
    if static is not None:
        bg_model.set_background(desaturate(static, lam, mode))

    for index, frame in spec.iter_frames():
        frame = desaturate(frame, lam, mode)
        foreground = bg_model.observe(frame)
        background = bg_model.background_image()
        wanted = only is None or index in only

        start = default_timer()
        if detector.stateful:
            detector.partial_fit(frame, background, foreground)
        if not wanted:
            continue
        trimask = detector.detect(frame, background, foreground)
        yield Detection(index, frame, trimask, default_timer() - start)


def _ms_per_frame(seconds, warmup):
    seconds = seconds[warmup:]
    if not seconds:
        return np.nan
    return 1000. * float(np.mean(seconds))


def _frame_names(spec):
    return dict((i, os.path.basename(p)) for i, p in spec.frame_files)


def _makedirs(path):
    if not os.path.isdir(path):
        os.makedirs(path)
    return path


def run_detect(spec, method, config, out_dir):
    """Write the TriMask of every frame of a sequence.

    Masks go to ``out_dir/<sequence>/<method>/`` under the frame's file
    name, as 8-bit PNGs; overlays go to ``.../overlays/`` when
    ``output.write_overlays`` is set.

    Returns
    -------
    ms_per_frame : float
        The mean detector time after ``timing.warmup_frames`` frames.
    """
    names = _frame_names(spec)
    mask_dir = _makedirs(os.path.join(out_dir, spec.name, method))
    overlays = config.get('output.write_overlays')
    if overlays:
        overlay_dir = _makedirs(os.path.join(mask_dir, 'overlays'))

    seconds = []
    for det in iter_detections(spec, method, config):
        write_grey(os.path.join(mask_dir, names[det.index]), det.trimask)
        if overlays:
            write_frame(os.path.join(overlay_dir, names[det.index]),
                        render_overlay(det.frame, det.trimask))
        seconds.append(det.seconds)

    ms = _ms_per_frame(seconds, config.get('timing.warmup_frames'))
    logger.info("%s/%s: wrote %i masks (%.2f ms/frame)", spec.name, method,
                len(seconds), ms)
    return ms


def _lambda_tag(lam):
    return 'lambda_%s' % ('%.3f' % lam).rstrip('0').rstrip('.')


def _eval_job(spec, method, lam, config, mask_dir):
    labelled = set(spec.labelled_indices)
    tuned = config.is_tuned(spec.name, method)
    if not labelled:
        msg = "Sequence %r has no labelled frames; skipped" % spec.name
        logger.warning(msg)
        warnings.warn(msg, UserWarning)
        row = dict(sequence=spec.name, method=method, lambda_=lam,
                   eta=np.nan, xi=np.nan, avg=np.nan, ms_per_frame=np.nan,
                   frames_scored=0, tuned=tuned)
        return row, []

    if mask_dir is not None:
        names = _frame_names(spec)
        mask_dir = _makedirs(os.path.join(mask_dir, spec.name, method,
                                          _lambda_tag(lam)))

    counts, seconds = [], []
    for det in iter_detections(spec, method, config, lam=lam, only=labelled):
        counts.append((det.index, score_masks(det.trimask,
                                              spec.read_gt(det.index))))
        seconds.append(det.seconds)
        if mask_dir is not None:
            write_grey(os.path.join(mask_dir, names[det.index]), det.trimask)

    # every scored frame is timed
    score = aggregate([c for _, c in counts], _ms_per_frame(seconds, 0))
    logger.info("%s/%s lambda=%g: eta=%.4f xi=%.4f over %i frames",
                spec.name, method, lam, score.eta, score.xi,
                score.frames_scored)
    row = dict(sequence=spec.name, method=method, lambda_=lam,
               eta=score.eta, xi=score.xi, avg=score.avg,
               ms_per_frame=score.ms_per_frame,
               frames_scored=score.frames_scored, tuned=tuned)
    return row, counts


def _frame_rows(row, counts):
    rows = [[row['sequence'], row['method'], row['lambda_'], str(index),
             c.eta, c.xi, (c.eta + c.xi) / 2.] for index, c in counts]
    if counts:
        eta, xi, avg = macro_average([c for _, c in counts])
        rows.append([row['sequence'], row['method'], row['lambda_'],
                     'macro', eta, xi, avg])
    return rows


def _summary_rows(df):
    rows = []
    for (method, lam), group in df.groupby(['method', 'lambda'],
                                           sort=False):
        scored = group[group.frames_scored > 0]
        rows.append([SUMMARY_SEQUENCE, method, lam,
                     scored.eta.mean(), scored.xi.mean(), scored.avg.mean(),
                     scored.ms_per_frame.mean(),
                     int(group.frames_scored.sum()),
                     bool(group.tuned.any())])
    return pd.DataFrame(rows, columns=EVAL_COLUMNS)


def _check_sanity(df, band):
    for _, row in df.iterrows():
        low = [name for name in ('eta', 'xi') if row[name] < band]
        if low:
            msg = ("%s on %s: %s below the sanity band of %.2f"
                   % (row['method'], row['sequence'], ' and '.join(low),
                      band))
            logger.warning(msg)
            warnings.warn(msg, UserWarning)


def run_eval(specs, methods, config, lambda_grid=None, mask_dir=None):
    """Score methods against the ground truth of sequences.

    Every (sequence, method, lambda) combination is an independent job,
    run with ``eval.n_jobs`` joblib workers. The counts of the labelled
    frames are pooled per job (see :func:`aggregate`).

    Parameters
    ----------
    specs : list of SequenceSpec
        The sequences.

    methods : list of str
        The methods to score.

    config : BenchConfig
        The configuration.

    lambda_grid : iterable of float or None, optional (default=None)
        The desaturation rates; ``eval.lambda_grid`` if None.

    mask_dir : str or None, optional (default=None)
        If set, the scored masks are written to
        ``mask_dir/<sequence>/<method>/lambda_<lambda>/``.

    Returns
    -------
    scores : pd.DataFrame
        One row per job, sorted, followed by one summary row per (method,
        lambda) averaging the scored sequences. Columns are
        :data:`EVAL_COLUMNS`: the eight score columns, then ``tuned``,
        which is True when a per-sequence override set the method's
        parameters.

    frame_scores : pd.DataFrame
        The per-frame scores of every job and their macro average.
    """
    if lambda_grid is None:
        lambda_grid = config.get('eval.lambda_grid')
    jobs = [(spec, method, float(lam)) for spec in specs
            for method in methods for lam in lambda_grid]
    logger.info("Evaluating %i jobs", len(jobs))

    results = Parallel(n_jobs=config.get('eval.n_jobs'))(
        delayed(_eval_job)(spec, method, lam, config, mask_dir)
        for spec, method, lam in jobs)

    # order does not depend on scheduling
    results.sort(key=lambda r: (r[0]['sequence'], list(methods).index(
        r[0]['method']), r[0]['lambda_']))

    df = pd.DataFrame([[r['sequence'], r['method'], r['lambda_'], r['eta'],
                        r['xi'], r['avg'], r['ms_per_frame'],
                        r['frames_scored'], r['tuned']]
                       for r, _ in results], columns=EVAL_COLUMNS)
    _check_sanity(df[df.frames_scored > 0], config.get('eval.sanity_band'))

    frames = pd.DataFrame([fr for r, counts in results
                           for fr in _frame_rows(r, counts)],
                          columns=FRAME_COLUMNS)
    scores = pd.concat([df, _summary_rows(df)], ignore_index=True)
    return scores, frames


def desaturation_sweep(spec, method, config, lambda_grid=None):
    """Score one method on increasingly desaturated versions of a sequence.

    Frames and background are desaturated, the ground truth is not. The
    ``lambda=0`` point is the plain evaluation.

    Parameters
    ----------
    lambda_grid : iterable of float or None, optional (default=None)
        The desaturation rates, including 0 and 1. ``eval.sweep_grid`` if
        None.

    Returns
    -------
    curve : pd.DataFrame
        The rows of :func:`run_eval` for the sequence and method, one per
        rate, without the summary.
    """
    if lambda_grid is None:
        lambda_grid = config.get('eval.sweep_grid')
    grid = sorted(float(lam) for lam in lambda_grid)
    if not grid or grid[0] != 0. or grid[-1] != 1.:
        raise ConfigError("The desaturation grid must include 0 and 1, but "
                          "got %r" % (grid,))
    scores, _ = run_eval([spec], [method], config, lambda_grid=grid)
    return scores[scores.sequence != SUMMARY_SEQUENCE] \
        .reset_index(drop=True)


def time_method(spec, method, config):
    """Mean detector time per frame on a sequence, in milliseconds.

    The detector processes every frame; the first ``timing.warmup_frames``
    frames are not timed. Background modelling is not timed.

    Raises
    ------
    SequenceError
        If fewer than ``timing.min_frames`` frames remain to be timed.
    """
    warmup = config.get('timing.warmup_frames')
    min_frames = config.get('timing.min_frames')
    if spec.n_frames - warmup < min_frames:
        raise SequenceError("Sequence %r has %i frames; timing needs %i "
                            "after %i warm-up frames"
                            % (spec.name, spec.n_frames, min_frames, warmup))
    seconds = [det.seconds for det in iter_detections(spec, method, config)]
    ms = _ms_per_frame(seconds, warmup)
    logger.info("%s/%s: %.3f ms/frame", spec.name, method, ms)
    return ms


def _track_job(spec, method, config, gt_tracks):
    shape, indices, masks = None, [], []
    for det in iter_detections(spec, method, config):
        shape = det.trimask.shape
        indices.append(det.index)
        masks.append(det.trimask == OBJECT)

    tracker = config.tracker()
    tracks = track_blobs(masks, frame_indices=indices,
                         **tracker.get_params())
    gate = config.get('tracking.mot_gate')
    if gate is None:
        gate = default_gate(shape)
    mota, motp = score_mot(tracks, gt_tracks, gate)
    logger.info("%s/%s: %i tracks, MOTA=%.4f MOTP=%.3f", spec.name, method,
                len(tracks), mota, motp)
    return [spec.name, method, 'cc', mota, motp]


def _safe_track_job(spec, method, config, gt_tracks):
    try:
        return _track_job(spec, method, config, gt_tracks)
    except Exception as e:
        msg = "Tracking %s with %s failed: %s" % (spec.name, method, e)
        logger.error(msg)
        warnings.warn(msg, UserWarning)
        return [spec.name, method, 'cc', np.nan, np.nan]


def run_trackeval(specs, methods, config):
    """Track the objects left after shadow removal and score the tracks.

    For every sequence, the 'none' baseline and every method are run; the
    Object pixels of the TriMasks feed the blob tracker, whose tracks are
    scored against the sequence's ground truth tracks. A method that fails
    gets an undefined row; the baseline is always reported.

    Returns
    -------
    scores : pd.DataFrame
        Columns are :data:`TRACKING_COLUMNS`.

    Raises
    ------
    MissingGroundTruthError
        If a sequence has no ground truth tracks.
    """
    options = ['none'] + [m for m in methods if m != 'none']
    gt = dict((spec.name, spec.read_tracks()) for spec in specs)

    rows = Parallel(n_jobs=config.get('eval.n_jobs'))(
        delayed(_safe_track_job)(spec, method, config, gt[spec.name])
        for spec in specs for method in options)
    rows.sort(key=lambda r: (r[0], options.index(r[1])))
    return pd.DataFrame(rows, columns=TRACKING_COLUMNS)


def write_report(df, path):
    """Write a report as CSV with a fixed float format."""
    df.to_csv(path, index=False, float_format='%.10g', na_rep='nan')
    logger.info("Wrote %s", path)
    return path
