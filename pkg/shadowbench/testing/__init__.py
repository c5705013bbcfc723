# -*- coding: utf-8 -*-
#
# Test helpers: exception assertions and slow-but-obvious reference
# implementations that the fast code paths are checked against.

from __future__ import absolute_import

from collections import deque
import itertools

import numpy as np

from ..labels import OBJECT, SHADOW

__all__ = [
    'assert_raises',
    'bfs_components',
    'brute_force_counts',
    'exhaustive_assignment_cost'
]


def assert_raises(exception_type, func, *args, **kwargs):
    """Assert that a function raises an exception.

    If ``func`` raises a different exception, *that* exception propagates.
    If it raises nothing, an ``AssertionError`` is raised.

    Parameters
    ----------
    exception_type : type
        The expected exception type.

    func : callable
        The function that is expected to raise.

    Examples
    --------
    >>> def function_that_raises():
    ...     raise ValueError("boo!")
    >>> assert_raises(ValueError, function_that_raises)
    """
    try:
        func(*args, **kwargs)
    except exception_type:
        pass
    else:
        raise AssertionError("%s did not raise %r"
                             % (getattr(func, '__name__', func),
                                exception_type))


def bfs_components(mask):
    """Label the 8-connected components of a binary mask with a BFS.

    Components are numbered in raster order of their first pixel.

    Parameters
    ----------
    mask : array-like, shape=(height, width)
        Binary mask.

    Returns
    -------
    components : list of set
        One set of ``(row, col)`` tuples per component.
    """
    mask = np.asarray(mask, dtype=bool)
    height, width = mask.shape
    seen = np.zeros_like(mask)
    components = []
    for r in range(height):
        for c in range(width):
            if not mask[r, c] or seen[r, c]:
                continue
            comp = set()
            queue = deque([(r, c)])
            seen[r, c] = True
            while queue:
                y, x = queue.popleft()
                comp.add((y, x))
                for dy in (-1, 0, 1):
                    for dx in (-1, 0, 1):
                        yy, xx = y + dy, x + dx
                        if 0 <= yy < height and 0 <= xx < width and \
                                mask[yy, xx] and not seen[yy, xx]:
                            seen[yy, xx] = True
                            queue.append((yy, xx))
            components.append(comp)
    return components


def brute_force_counts(pred, gt):
    """Tally (TP_S, FN_S, TP_F, FN_F) one pixel at a time."""
    tp_s = fn_s = tp_f = fn_f = 0
    for p, g in zip(np.ravel(pred), np.ravel(gt)):
        if g == SHADOW:
            if p == SHADOW:
                tp_s += 1
            elif p == OBJECT:
                fn_s += 1
        elif g == OBJECT:
            if p == OBJECT:
                tp_f += 1
            elif p == SHADOW:
                fn_f += 1
    return tp_s, fn_s, tp_f, fn_f


def exhaustive_assignment_cost(cost):
    """Minimum cost of a one-to-one assignment, by trying every option.

    For an ``n x m`` matrix, ``min(n, m)`` pairs are assigned.
    """
    cost = np.asarray(cost, dtype=np.float64)
    n, m = cost.shape
    if n > m:
        cost, n, m = cost.T, m, n
    best = np.inf
    for cols in itertools.permutations(range(m), n):
        best = min(best, sum(cost[i, j] for i, j in enumerate(cols)))
    return best
