# -*- coding: utf-8 -*-

from __future__ import absolute_import

import numpy as np

from shadowbench.utils.iterables import is_iterable, split_csv


def test_is_iterable():
    assert is_iterable([1, 2])
    assert is_iterable(np.arange(3))
    assert not is_iterable('a,b')
    assert not is_iterable(3)


def test_split_csv():
    assert split_csv(' a, ,b ') == ['a', 'b']
    assert split_csv('') == []
    assert split_csv('1,2', cast=int) == [1, 2]
    assert split_csv(np.array([0, 1]), cast=float) == [0., 1.]
