# -*- coding: utf-8 -*-
#
# Connected component blob tracker

from __future__ import absolute_import, division

import logging

import numpy as np
from sklearn.base import BaseEstimator

from ..imaging.regions import connected_components
from ..utils.validation import check_mask

__all__ = [
    'BlobTracker',
    'Track',
    'default_gate',
    'track_blobs'
]

logger = logging.getLogger(__name__)


def default_gate(shape, fraction=0.1):
    """A fraction of the frame diagonal, in pixels.

    Examples
    --------
    >>> default_gate((30, 40))
    5.0
    """
    return fraction * float(np.hypot(shape[0], shape[1]))


class Track(object):
    """The observations of one tracked object.

    Parameters
    ----------
    track_id : int
        The identity of the track.

    Attributes
    ----------
    frames : list of int
        Strictly increasing frame indices.

    centroids : list of tuple
        ``(x, y)`` per observation, in pixels.

    boxes : list of tuple
        ``(x, y, w, h)`` per observation, ``(x, y)`` being the top-left
        pixel.
    """
    def __init__(self, track_id):
        self.track_id = track_id
        self.frames = []
        self.centroids = []
        self.boxes = []

    def __len__(self):
        return len(self.frames)

    def __repr__(self):
        return 'Track(track_id=%r, n_observations=%i)' % (self.track_id,
                                                          len(self))

    def add(self, frame_index, centroid, box):
        """Append an observation. Frame indices must strictly increase."""
        frame_index = int(frame_index)
        if self.frames and frame_index <= self.frames[-1]:
            raise ValueError("Track %r: frame %i does not follow frame %i"
                             % (self.track_id, frame_index, self.frames[-1]))
        self.frames.append(frame_index)
        self.centroids.append((float(centroid[0]), float(centroid[1])))
        self.boxes.append(tuple(int(v) for v in box))
        return self

    @classmethod
    def from_boxes(cls, track_id, frames, boxes):
        """Build a track from bounding boxes, centred on the box centre."""
        track = cls(track_id)
        for t, (x, y, w, h) in sorted(zip(frames, boxes)):
            track.add(t, (x + (w - 1) / 2., y + (h - 1) / 2.), (x, y, w, h))
        return track


class BlobTracker(BaseEstimator):
    """Track foreground blobs by greedy nearest-centroid association.

    Every frame, the connected components of at least ``min_area`` pixels
    become observations. All (live track, observation) pairs within
    ``gate`` pixels are visited by increasing centroid distance and
    associated when both are still free. Unmatched observations start new
    tracks; a track left unmatched for more than ``max_misses``
    consecutive frames is terminated.

    Parameters
    ----------
    min_area : int, optional (default=30)
        The smallest blob tracked, in pixels.

    gate : float or None, optional (default=None)
        The association gate in pixels. None uses 10% of the frame
        diagonal.

    max_misses : int, optional (default=3)
        The number of consecutive frames a track may go unmatched.

    Attributes
    ----------
    tracks_ : list of Track
        Every track started so far, ordered by id.
    """
    def __init__(self, min_area=30, gate=None, max_misses=3):
        self.min_area = min_area
        self.gate = gate
        self.max_misses = max_misses

    def _check_params(self):
        if self.min_area < 1:
            raise ValueError("min_area must be >= 1, but got %r"
                             % self.min_area)
        if self.gate is not None and self.gate <= 0:
            raise ValueError("gate must be positive, but got %r" % self.gate)
        if self.max_misses < 0:
            raise ValueError("max_misses must be >= 0, but got %r"
                             % self.max_misses)

    def reset(self):
        """Forget all tracks."""
        self.tracks_ = []
        self._live = {}  # track id -> consecutive misses
        return self

    def update(self, frame_index, mask):
        """Associate the blobs of one frame to the live tracks.

        Parameters
        ----------
        frame_index : int
            The index of the frame, larger than the previous one.

        mask : array-like, shape=(height, width)
            The foreground mask after shadow removal.

        Returns
        -------
        self
        """
        self._check_params()
        mask = check_mask(mask)
        if not hasattr(self, 'tracks_'):
            self.reset()
        gate = default_gate(mask.shape) if self.gate is None else self.gate

        obs = [(r.centroid, r.bbox) for r in
               connected_components(mask, min_size=self.min_area)]
        live = sorted(self._live)

        pairs = []
        for i, tid in enumerate(live):
            last = np.asarray(self.tracks_[tid].centroids[-1])
            for j, (centroid, _) in enumerate(obs):
                d = float(np.linalg.norm(last - np.asarray(centroid)))
                if d <= gate:
                    pairs.append((d, i, j))

        used_t, used_o = set(), set()
        for d, i, j in sorted(pairs):
            if i in used_t or j in used_o:
                continue
            used_t.add(i)
            used_o.add(j)
            self._observe(live[i], frame_index, obs[j])

        for i, tid in enumerate(live):
            if i in used_t:
                continue
            self._live[tid] += 1
            if self._live[tid] > self.max_misses:
                del self._live[tid]
                logger.debug("Track %i terminated at frame %i", tid,
                             frame_index)

        for j, o in enumerate(obs):
            if j not in used_o:
                tid = len(self.tracks_)
                self.tracks_.append(Track(tid))
                self._observe(tid, frame_index, o)
        return self

    def _observe(self, tid, frame_index, observation):
        centroid, (x0, y0, x1, y1) = observation
        self.tracks_[tid].add(frame_index, centroid,
                              (x0, y0, x1 - x0 + 1, y1 - y0 + 1))
        self._live[tid] = 0

    def fit(self, masks, y=None):
        """Track a whole sequence of masks, indexed from 0.

        Returns
        -------
        self
        """
        self.reset()
        for t, mask in enumerate(masks):
            self.update(t, mask)
        return self


def track_blobs(masks, frame_indices=None, **params):
    """Run a :class:`BlobTracker` over a sequence of foreground masks.

    Parameters
    ----------
    masks : iterable of array-like
        The foreground masks, in frame order.

    frame_indices : iterable of int or None, optional (default=None)
        The index of every mask; 0, 1, ... by default.

    **params : keyword args
        Passed to :class:`BlobTracker`.

    Returns
    -------
    tracks : list of Track
    """
    masks = list(masks)
    if frame_indices is None:
        frame_indices = range(len(masks))
    tracker = BlobTracker(**params).reset()
    for t, mask in zip(frame_indices, masks):
        tracker.update(t, mask)
    logger.debug("Tracked %i blobs over %i frames", len(tracker.tracks_),
                 len(masks))
    return tracker.tracks_
