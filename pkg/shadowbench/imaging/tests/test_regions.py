# -*- coding: utf-8 -*-

from __future__ import absolute_import

import numpy as np
from numpy.testing import assert_array_equal
from sklearn.utils.validation import check_random_state

from shadowbench.imaging import Region, connected_components, \
    label_components
from shadowbench.testing import assert_raises, bfs_components


def test_diagonal_pixels_are_connected():
    m = np.zeros((4, 4), dtype=bool)
    m[0, 0] = m[1, 1] = m[2, 2] = True
    regions = connected_components(m)
    assert len(regions) == 1
    assert regions[0].pixels == {(0, 0), (1, 1), (2, 2)}


def test_empty_mask():
    assert connected_components(np.zeros((5, 5))) == []
    labels, n = label_components(np.zeros((5, 5)))
    assert n == 0
    assert_array_equal(labels, 0)


def test_matches_bfs_on_random_masks():
    rs = check_random_state(42)
    for _ in range(20):
        m = rs.rand(16, 16) < 0.35
        expected = bfs_components(m)
        regions = connected_components(m)
        assert len(regions) == len(expected)
        for region, comp in zip(regions, expected):
            assert set(zip(region.rows.tolist(),
                           region.cols.tolist())) == comp

        # disjoint and covering the mask
        total = sum(len(r) for r in regions)
        assert total == m.sum()


def test_min_size():
    m = np.zeros((10, 10), dtype=bool)
    m[0, 0] = True
    m[5:8, 5:8] = True
    regions = connected_components(m, min_size=2)
    assert len(regions) == 1
    assert len(regions[0]) == 9


def test_region_properties():
    m = np.zeros((10, 10), dtype=bool)
    m[2:5, 3:7] = True
    region, = connected_components(m)
    assert region.bbox == (3, 2, 6, 4)
    assert region.width == 4
    assert region.height == 3
    assert region.centroid == (4.5, 3.)
    assert_array_equal(region.to_mask(m.shape), m)

    top = region.subset(region.rows == 2)
    assert top.size == 4
    assert region.subset(region.rows == 9) is None


def test_region_rejects_empty():
    assert_raises(ValueError, Region, 1, [], [])
    assert_raises(ValueError, Region, 1, [0, 1], [0])
