# -*- coding: utf-8 -*-

from __future__ import absolute_import, division

from collections import namedtuple
import logging
import os

import pandas as pd

from ..exceptions import MissingGroundTruthError, SequenceError
from ..imaging.io import read_frame, read_trimask
from ..tracking.blob import Track

__all__ = [
    'SequenceSpec',
    'TRACK_COLUMNS',
    'load_sequence',
    'read_gt_tracks',
    'write_gt_tracks'
]

logger = logging.getLogger(__name__)

TRACK_COLUMNS = ['frame_index', 'track_id', 'x', 'y', 'w', 'h']


def _indexed_pngs(directory, what):
    # {index: path} of the zero-padded numeric PNG names in a directory
    found = {}
    for fname in sorted(os.listdir(directory)):
        stem, ext = os.path.splitext(fname)
        if ext.lower() != '.png':
            continue
        if not stem.isdigit():
            raise SequenceError("%s file %r in %r is not named by a frame "
                                "number" % (what, fname, directory))
        index = int(stem)
        if index in found:
            raise SequenceError("%s files %r and %r share the index %i"
                                % (what, os.path.basename(found[index]),
                                   fname, index))
        found[index] = os.path.join(directory, fname)
    return found


class SequenceSpec(namedtuple('SequenceSpec',
                              ['name', 'root', 'frame_files', 'background',
                               'gt_files', 'tracks_file'])):
    """A benchmark sequence on disk.

    Attributes
    ----------
    name : str
        The directory name of the sequence.

    root : str
        The sequence directory.

    frame_files : list of tuple
        ``(index, path)`` per frame, by increasing index.

    background : str or None
        The clean background image, if the sequence ships one.

    gt_files : dict
        ``{index: path}`` of the ground truth TriMasks.

    tracks_file : str or None
        The ground truth tracks.
    """
    __slots__ = ()

    @property
    def frame_indices(self):
        return [i for i, _ in self.frame_files]

    @property
    def labelled_indices(self):
        return sorted(self.gt_files)

    @property
    def n_frames(self):
        return len(self.frame_files)

    def iter_frames(self):
        """Yield ``(index, frame)`` in order."""
        for index, path in self.frame_files:
            yield index, read_frame(path)

    def read_background(self):
        """The bypass background image, or None."""
        if self.background is None:
            return None
        return read_frame(self.background)

    def read_gt(self, index):
        """The ground truth TriMask of a frame."""
        try:
            return read_trimask(self.gt_files[index])
        except KeyError:
            raise MissingGroundTruthError("Sequence %r has no ground truth "
                                          "for frame %i" % (self.name, index))

    def read_tracks(self):
        """The ground truth tracks."""
        if self.tracks_file is None:
            raise MissingGroundTruthError("Sequence %r has no tracks.txt"
                                          % self.name)
        return read_gt_tracks(self.tracks_file)


def load_sequence(path):
    """Index a sequence directory.

    The directory holds ``frames/`` with PNG frames named by zero-padded
    frame numbers, and optionally ``background.png`` (a clean background
    that replaces the learned one), ``gt/`` with TriMask PNGs named like
    the frames they label, and ``tracks.txt``.

    Parameters
    ----------
    path : str
        The sequence directory.

    Returns
    -------
    spec : SequenceSpec
    """
    path = os.path.normpath(path)
    if not os.path.isdir(path):
        raise SequenceError("%r is not a directory" % path)
    frames_dir = os.path.join(path, 'frames')
    if not os.path.isdir(frames_dir):
        raise SequenceError("%r has no frames/ directory" % path)

    frames = _indexed_pngs(frames_dir, 'Frame')
    if not frames:
        raise SequenceError("%r contains no frames" % frames_dir)

    gt = {}
    gt_dir = os.path.join(path, 'gt')
    if os.path.isdir(gt_dir):
        gt = _indexed_pngs(gt_dir, 'Mask')
        orphans = sorted(set(gt) - set(frames))
        if orphans:
            raise SequenceError("Masks in %r reference missing frames %r"
                                % (gt_dir, orphans))

    background = os.path.join(path, 'background.png')
    tracks = os.path.join(path, 'tracks.txt')
    spec = SequenceSpec(
        name=os.path.basename(path), root=path,
        frame_files=sorted(frames.items()),
        background=background if os.path.isfile(background) else None,
        gt_files=gt,
        tracks_file=tracks if os.path.isfile(tracks) else None)

    logger.info("Sequence %s: %i frames, %i labelled%s", spec.name,
                spec.n_frames, len(gt), ', static background'
                if spec.background else '')
    return spec


def read_gt_tracks(path):
    """Read ground truth tracks from a ``frame_index track_id x y w h`` file.

    One whitespace-separated observation per line; ``(x, y)`` is the
    top-left corner of the box. Lines starting with ``#`` are ignored.

    Returns
    -------
    tracks : list of Track
        Ordered by track id, each centred on its boxes.
    """
    try:
        df = pd.read_csv(path, sep=r'\s+', header=None, names=TRACK_COLUMNS,
                         comment='#')
        df = df.astype(int)
    except (IOError, OSError) as e:
        raise MissingGroundTruthError("Cannot read tracks %r: %s" % (path, e))
    except (ValueError, pd.errors.ParserError) as e:
        raise SequenceError("Malformed tracks file %r: %s" % (path, e))

    tracks = []
    for track_id, group in df.groupby('track_id', sort=True):
        boxes = group[['x', 'y', 'w', 'h']].values.tolist()
        try:
            tracks.append(Track.from_boxes(int(track_id),
                                           group['frame_index'].tolist(),
                                           boxes))
        except ValueError as e:
            raise SequenceError("Malformed tracks file %r: %s" % (path, e))
    return tracks


def write_gt_tracks(path, tracks):
    """Write tracks in the format read by :func:`read_gt_tracks`."""
    rows = [(t, track.track_id) + tuple(box)
            for track in tracks
            for t, box in zip(track.frames, track.boxes)]
    df = pd.DataFrame(rows, columns=TRACK_COLUMNS)
    df.sort_values(['frame_index', 'track_id']).to_csv(
        path, sep=' ', header=False, index=False)
