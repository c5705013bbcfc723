# -*- coding: utf-8 -*-
#
# Connected regions of binary masks

from __future__ import absolute_import, division

import numpy as np
from scipy import ndimage

from ..utils.validation import check_mask

__all__ = [
    'EIGHT_CONNECTED',
    'Region',
    'connected_components',
    'label_components',
    'regions_from_labels'
]

EIGHT_CONNECTED = np.ones((3, 3), dtype=bool)


class Region(object):
    """An 8-connected set of pixels.

    Parameters
    ----------
    label : int
        The region id.

    rows, cols : array-like, shape=(n_pixels,)
        The pixel coordinates. Must be non-empty and of equal length.

    Attributes
    ----------
    bbox : tuple
        The tight bounding box ``(x_min, y_min, x_max, y_max)``, inclusive.
    """
    def __init__(self, label, rows, cols):
        rows = np.asarray(rows, dtype=np.intp)
        cols = np.asarray(cols, dtype=np.intp)
        if rows.shape != cols.shape or rows.ndim != 1:
            raise ValueError("rows and cols must be 1D and of equal length")
        if not rows.size:
            raise ValueError("A region must contain at least one pixel")

        self.label = int(label)
        self.rows = rows
        self.cols = cols
        self.bbox = (int(cols.min()), int(rows.min()),
                     int(cols.max()), int(rows.max()))

    def __len__(self):
        return self.rows.size

    def __repr__(self):
        return 'Region(label=%i, size=%i, bbox=%r)' \
            % (self.label, len(self), self.bbox)

    @property
    def size(self):
        return self.rows.size

    @property
    def pixels(self):
        """The pixel set as ``{(x, y), ...}``."""
        return set(zip(self.cols.tolist(), self.rows.tolist()))

    @property
    def centroid(self):
        """The centre of gravity ``(x, y)``."""
        return float(self.cols.mean()), float(self.rows.mean())

    @property
    def width(self):
        return self.bbox[2] - self.bbox[0] + 1

    @property
    def height(self):
        return self.bbox[3] - self.bbox[1] + 1

    def to_mask(self, shape):
        """Rasterise the region into a bool mask of ``shape``."""
        mask = np.zeros(shape, dtype=bool)
        mask[self.rows, self.cols] = True
        return mask

    def subset(self, keep, label=None):
        """Get a new region made of the pixels where ``keep`` is True.

        Returns None when no pixel is kept. The subset is not re-checked
        for connectivity.
        """
        keep = np.asarray(keep, dtype=bool)
        if not keep.any():
            return None
        return Region(self.label if label is None else label,
                      self.rows[keep], self.cols[keep])


def label_components(mask):
    """Label the 8-connected components of a mask.

    Returns
    -------
    labels : np.ndarray, shape=(height, width), dtype=int
        0 for background, 1..n for the components in raster order.

    n : int
        The number of components.
    """
    mask = check_mask(mask)
    labels, n = ndimage.label(mask, structure=EIGHT_CONNECTED)
    return labels, n


def connected_components(mask, min_size=1):
    """Partition the foreground of a mask into 8-connected regions.

    Parameters
    ----------
    mask : array-like, shape=(height, width)
        Binary mask.

    min_size : int, optional (default=1)
        Regions with fewer pixels are dropped.

    Returns
    -------
    regions : list of Region
        Disjoint regions, ordered by their first pixel in raster order.
        Region labels are 1-based and match :func:`label_components`.

    Examples
    --------
    >>> m = np.zeros((4, 4), dtype=bool)
    >>> m[0, 0] = m[1, 1] = True
    >>> len(connected_components(m))
    1
    """
    labels, _ = label_components(mask)
    return regions_from_labels(labels, min_size=min_size)


def regions_from_labels(labels, min_size=1):
    """Build one Region per positive label of a label image.

    Labels with fewer than ``min_size`` pixels are skipped.
    """
    regions = []
    for i, slc in enumerate(ndimage.find_objects(labels), start=1):
        if slc is None:
            continue
        rows, cols = np.nonzero(labels[slc] == i)
        if rows.size < min_size:
            continue
        regions.append(Region(i, rows + slc[0].start, cols + slc[1].start))
    return regions
