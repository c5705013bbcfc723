# -*- coding: utf-8 -*-
#
# Shadow detection and discrimination rates

from __future__ import absolute_import, division

from collections import namedtuple

import numpy as np

from ..exceptions import MissingGroundTruthError
from ..labels import OBJECT, SHADOW
from ..utils.validation import check_same_shape, check_trimask

__all__ = [
    'EvalCounts',
    'MethodScore',
    'aggregate',
    'macro_average',
    'rate',
    'score_masks'
]


def rate(tp, fn):
    """``tp / (tp + fn)``, or NaN when the denominator is zero.

    Examples
    --------
    >>> rate(8, 2)
    0.8
    >>> rate(0, 0)
    nan
    """
    total = tp + fn
    if not total:
        return np.nan
    return tp / total


class EvalCounts(namedtuple('EvalCounts', ['tp_s', 'fn_s', 'tp_f', 'fn_f'])):
    """Pixel tallies of one or more scored frames.

    ``tp_s``/``fn_s`` count ground truth shadow pixels predicted Shadow /
    Object, ``tp_f``/``fn_f`` ground truth object pixels predicted Object /
    Shadow. Counts add up across frames with ``+``.
    """
    __slots__ = ()

    def __add__(self, other):
        return EvalCounts(*(a + b for a, b in zip(self, other)))

    @property
    def eta(self):
        """The shadow detection rate."""
        return rate(self.tp_s, self.fn_s)

    @property
    def xi(self):
        """The shadow discrimination rate."""
        return rate(self.tp_f, self.fn_f)


EvalCounts.zero = EvalCounts(0, 0, 0, 0)


MethodScore = namedtuple('MethodScore', ['eta', 'xi', 'avg', 'ms_per_frame',
                                         'frames_scored'])
MethodScore.__doc__ = """The score of a method on a sequence.

``eta`` and ``xi`` are NaN when undefined, and so is ``avg`` if either is.
"""


def score_masks(pred, gt):
    """Count the scored pixels of a predicted TriMask against ground truth.

    Only ground truth foreground (Object or Shadow) pixels are scored; a
    prediction of Background on them counts neither way.

    Parameters
    ----------
    pred : array-like, shape=(height, width)
        The predicted TriMask.

    gt : array-like, shape=(height, width)
        The ground truth TriMask.

    Returns
    -------
    counts : EvalCounts
    """
    pred = check_trimask(pred, name='pred')
    gt = check_trimask(gt, name='gt')
    check_same_shape(pred, gt, names=('pred', 'gt'))

    gt_s, gt_f = gt == SHADOW, gt == OBJECT
    p_s, p_f = pred == SHADOW, pred == OBJECT
    return EvalCounts(int(np.count_nonzero(gt_s & p_s)),
                      int(np.count_nonzero(gt_s & p_f)),
                      int(np.count_nonzero(gt_f & p_f)),
                      int(np.count_nonzero(gt_f & p_s)))


def aggregate(counts, ms_per_frame=np.nan):
    """Pool the pixel counts of several frames into one score.

    Parameters
    ----------
    counts : iterable of EvalCounts
        One entry per labelled frame.

    ms_per_frame : float, optional (default=NaN)
        The timing to attach to the score.

    Returns
    -------
    score : MethodScore

    Examples
    --------
    >>> s = aggregate([EvalCounts(8, 2, 9, 1)])
    >>> round(s.eta, 6), round(s.xi, 6), round(s.avg, 6)
    (0.8, 0.9, 0.85)
    """
    counts = list(counts)
    if not counts:
        raise MissingGroundTruthError("Cannot aggregate zero labelled frames")
    total = sum(counts, EvalCounts.zero)
    eta, xi = total.eta, total.xi
    return MethodScore(eta, xi, (eta + xi) / 2., float(ms_per_frame),
                       len(counts))


def macro_average(counts):
    """Average the per-frame rates, skipping frames where one is undefined.

    Returns
    -------
    eta, xi, avg : float
        NaN when no frame defines the rate.
    """
    etas = np.array([c.eta for c in counts], dtype=np.float64)
    xis = np.array([c.xi for c in counts], dtype=np.float64)

    def _mean(x):
        x = x[~np.isnan(x)]
        return float(x.mean()) if x.size else np.nan

    eta, xi = _mean(etas), _mean(xis)
    return eta, xi, (eta + xi) / 2.
