# -*- coding: utf-8 -*-
#
# Multiple object tracking accuracy and precision with Hungarian matching

from __future__ import absolute_import, division

from collections import namedtuple
import logging

import numpy as np
from scipy.optimize import linear_sum_assignment

__all__ = [
    'MotCounts',
    'hungarian',
    'mot_counts',
    'score_mot'
]

logger = logging.getLogger(__name__)


class MotCounts(namedtuple('MotCounts',
                           ['misses', 'false_positives', 'mismatches',
                            'n_objects', 'dist_sum', 'n_matches'])):
    """Tracking error events accumulated over frames.

    ``n_objects`` is the number of ground truth object-frames and
    ``n_matches`` the number of matched pairs whose centroid distances sum
    to ``dist_sum``.
    """
    __slots__ = ()

    def __add__(self, other):
        return MotCounts(*(a + b for a, b in zip(self, other)))

    @property
    def mota(self):
        """``1 - (misses + false positives + mismatches) / objects``."""
        if not self.n_objects:
            return np.nan
        errors = self.misses + self.false_positives + self.mismatches
        return 1. - errors / self.n_objects

    @property
    def motp(self):
        """The mean centroid distance of the matched pairs, in pixels."""
        if not self.n_matches:
            return np.nan
        return self.dist_sum / self.n_matches


def hungarian(cost):
    """Solve the minimum cost one-to-one assignment of a cost matrix.

    For an ``n x m`` matrix, ``min(n, m)`` pairs are assigned.

    Parameters
    ----------
    cost : array-like, shape=(n, m)
        Non-negative, finite costs.

    Returns
    -------
    rows, cols : np.ndarray
        The assigned row and column indices, ordered by row.

    Examples
    --------
    >>> rows, cols = hungarian([[4, 1, 3], [2, 0, 5], [3, 2, 2]])
    >>> cols.tolist()
    [1, 0, 2]
    """
    cost = np.asarray(cost, dtype=np.float64)
    if cost.ndim != 2:
        raise ValueError("cost must be a 2D matrix, but got shape=%r"
                         % (cost.shape,))
    if not np.all(np.isfinite(cost)) or np.any(cost < 0):
        raise ValueError("cost must be finite and non-negative")
    return linear_sum_assignment(cost)


def _by_frame(tracks):
    # frame index -> {track id: centroid}
    frames = {}
    for track in tracks:
        for t, centroid in zip(track.frames, track.centroids):
            frames.setdefault(t, {})[track.track_id] = \
                np.asarray(centroid, dtype=np.float64)
    return frames


def mot_counts(tracks, gt_tracks, gate):
    """Accumulate the tracking error events of hypotheses against truth.

    Frames are visited in order. A correspondence from an earlier frame is
    kept while both tracks are present and within ``gate``; the remaining
    objects and hypotheses are matched by :func:`hungarian` on their
    centroid distances, and pairs farther apart than ``gate`` are
    rejected. An object matched to another hypothesis than its last one is
    a mismatch. Unmatched objects are misses, unmatched hypotheses false
    positives.

    Parameters
    ----------
    tracks : iterable of Track
        The hypotheses.

    gt_tracks : iterable of Track
        The ground truth.

    gate : float
        The largest centroid distance of a match, in pixels.

    Returns
    -------
    counts : MotCounts
    """
    if gate <= 0:
        raise ValueError("gate must be positive, but got %r" % gate)
    hyp, truth = _by_frame(tracks), _by_frame(gt_tracks)

    last = {}  # object id -> hypothesis id of its last match
    m = fp = mme = g = c = 0
    dist_sum = 0.
    for t in sorted(set(hyp) | set(truth)):
        objects, hyps = truth.get(t, {}), hyp.get(t, {})
        matches, taken = {}, set()

        for o, h in sorted(last.items()):
            if o in objects and h in hyps and h not in taken:
                d = np.linalg.norm(objects[o] - hyps[h])
                if d <= gate:
                    matches[o] = (h, d)
                    taken.add(h)

        free_o = sorted(o for o in objects if o not in matches)
        free_h = sorted(h for h in hyps if h not in taken)
        if free_o and free_h:
            dist = np.array([[np.linalg.norm(objects[o] - hyps[h])
                              for h in free_h] for o in free_o])
            # out-of-gate pairs are only chosen when nothing else is left
            cost = np.where(dist <= gate, dist, dist + 1e6)
            for i, j in zip(*hungarian(cost)):
                if dist[i, j] <= gate:
                    o, h = free_o[i], free_h[j]
                    if o in last and last[o] != h:
                        mme += 1
                    matches[o] = (h, dist[i, j])

        g += len(objects)
        c += len(matches)
        m += len(objects) - len(matches)
        fp += len(hyps) - len(matches)
        for o, (h, d) in matches.items():
            dist_sum += d
            last[o] = h

    counts = MotCounts(m, fp, mme, g, float(dist_sum), c)
    logger.debug("MOT counts: %r", counts)
    return counts


def score_mot(tracks, gt_tracks, gate):
    """Compute MOTA and MOTP of hypotheses against ground truth tracks.

    See :func:`mot_counts` for the matching rules.

    Returns
    -------
    mota, motp : float
        NaN when undefined (no ground truth objects, no matches).
    """
    counts = mot_counts(tracks, gt_tracks, gate)
    return counts.mota, counts.motp
