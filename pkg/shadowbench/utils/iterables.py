# -*- coding: utf-8 -*-

from __future__ import absolute_import

__all__ = [
    'is_iterable',
    'split_csv'
]


def is_iterable(x):
    """Determine whether an element is iterable.

    Strings have ``__iter__`` in Python 3 but are treated as scalars here,
    since a comma-separated string is something we still need to split.

    Parameters
    ----------
    x : object
        The object or primitive to test.
    """
    if isinstance(x, str):
        return False
    return hasattr(x, '__iter__')


def split_csv(value, cast=str):
    """Split a comma-separated command line or config value.

    Empty items are dropped, whitespace is stripped and every item is
    passed through ``cast``. Iterables are cast item-wise and returned as
    a list.

    Parameters
    ----------
    value : str or iterable
        The value to split, e.g. ``"0, 0.5, 1"``.

    cast : callable, optional (default=str)
        Applied to every item.

    Examples
    --------
    >>> split_csv("0, 0.5,1", cast=float)
    [0.0, 0.5, 1.0]
    >>> split_csv("chromacity,texture_lr")
    ['chromacity', 'texture_lr']
    >>> split_csv((1, 2), cast=float)
    [1.0, 2.0]
    """
    if is_iterable(value):
        return [cast(v) for v in value]
    return [cast(v.strip()) for v in str(value).split(',') if v.strip()]
