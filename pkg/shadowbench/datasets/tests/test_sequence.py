# -*- coding: utf-8 -*-

from __future__ import absolute_import

import os

import numpy as np

from shadowbench.datasets import load_sequence, make_sequence, \
    read_gt_tracks, write_sequence
from shadowbench.exceptions import ImageReadError, MissingGroundTruthError, \
    SequenceError
from shadowbench.imaging import write_frame, write_grey
from shadowbench.testing import assert_raises


def _frame(value=100):
    return np.full((8, 10, 3), value, dtype=np.uint8)


def _make_dir(tmpdir, names, gt_names=()):
    root = os.path.join(str(tmpdir), 'seq')
    os.makedirs(os.path.join(root, 'frames'))
    for name in names:
        write_frame(os.path.join(root, 'frames', name), _frame())
    if gt_names:
        os.makedirs(os.path.join(root, 'gt'))
        for name in gt_names:
            write_grey(os.path.join(root, 'gt', name),
                       np.zeros((8, 10), dtype=np.uint8))
    return root


def test_frames_are_ordered_by_number(tmpdir):
    root = _make_dir(tmpdir, ['000010.png', '000002.png', '000001.png'],
                     gt_names=['000002.png'])
    spec = load_sequence(root)
    assert spec.name == 'seq'
    assert spec.frame_indices == [1, 2, 10]
    assert spec.labelled_indices == [2]
    assert spec.background is None
    assert spec.tracks_file is None
    assert [i for i, _ in spec.iter_frames()] == [1, 2, 10]
    assert spec.read_gt(2).shape == (8, 10)
    assert_raises(MissingGroundTruthError, spec.read_gt, 1)
    assert_raises(MissingGroundTruthError, spec.read_tracks)


def test_layout_errors(tmpdir):
    assert_raises(SequenceError, load_sequence,
                  os.path.join(str(tmpdir), 'nowhere'))

    root = os.path.join(str(tmpdir), 'empty')
    os.makedirs(os.path.join(root, 'frames'))
    assert_raises(SequenceError, load_sequence, root)


def test_bad_frame_names(tmpdir):
    root = _make_dir(tmpdir, ['000001.png', 'frame_a.png'])
    assert_raises(SequenceError, load_sequence, root)


def test_duplicate_indices(tmpdir):
    root = _make_dir(tmpdir, ['1.png', '0001.png'])
    assert_raises(SequenceError, load_sequence, root)


def test_orphan_masks(tmpdir):
    root = _make_dir(tmpdir, ['000001.png'], gt_names=['000005.png'])
    assert_raises(SequenceError, load_sequence, root)


def test_unreadable_frame(tmpdir):
    root = _make_dir(tmpdir, ['000001.png'])
    with open(os.path.join(root, 'frames', '000002.png'), 'w') as f:
        f.write('not a png')
    spec = load_sequence(root)
    frames = spec.iter_frames()
    next(frames)
    assert_raises(ImageReadError, next, frames)


def test_read_gt_tracks(tmpdir):
    path = os.path.join(str(tmpdir), 'tracks.txt')
    with open(path, 'w') as f:
        f.write("# frame track x y w h\n"
                "0 2 10 20 5 3\n"
                "0 1 0 0 4 4\n"
                "1 2 12 20 5 3\n")
    tracks = read_gt_tracks(path)
    assert [t.track_id for t in tracks] == [1, 2]
    assert tracks[1].frames == [0, 1]
    assert tracks[1].centroids[0] == (12., 21.)
    assert tracks[0].centroids[0] == (1.5, 1.5)

    with open(path, 'w') as f:
        f.write("0 1 0 0 4\n")
    assert_raises(SequenceError, read_gt_tracks, path)

    with open(path, 'w') as f:
        f.write("0 1 0 0 4 4\n0 1 3 3 4 4\n")
    assert_raises(SequenceError, read_gt_tracks, path)

    assert_raises(MissingGroundTruthError, read_gt_tracks,
                  os.path.join(str(tmpdir), 'absent.txt'))


def test_written_synthetic_sequence_loads(tmpdir):
    seq = make_sequence('person', n_frames=6, labelled_from=4,
                        random_state=0)
    root = write_sequence(seq, str(tmpdir))
    spec = load_sequence(root)

    assert spec.name == 'person'
    assert spec.n_frames == 6
    assert spec.labelled_indices == [4, 5]
    assert spec.background is not None
    assert np.array_equal(spec.read_background(), seq.background)
    assert np.array_equal(spec.read_gt(5), seq.gt[5])

    tracks = spec.read_tracks()
    assert [t.track_id for t in tracks] == [t.track_id for t in seq.tracks]
    for read, made in zip(tracks, seq.tracks):
        assert read.frames == made.frames
        assert read.centroids == made.centroids


def test_spec_replace_keeps_fields(tmpdir):
    seq = make_sequence('person', n_frames=3, labelled_from=1,
                        random_state=0)
    spec = load_sequence(write_sequence(seq, str(tmpdir)))

    assert spec.n_frames == 3
    bare = spec._replace(tracks_file=None, gt_files={})
    assert bare.tracks_file is None
    assert bare.labelled_indices == []
    assert bare.n_frames == 3
    assert bare.frame_files == spec.frame_files
    assert_raises(MissingGroundTruthError, bare.read_tracks)
