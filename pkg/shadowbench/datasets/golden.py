# -*- coding: utf-8 -*-
#
# Reference TriMasks shipped with the package

from __future__ import absolute_import

import os

from ..imaging.io import read_trimask

__all__ = [
    'GOLDEN_DIR',
    'GOLDEN_SCENE',
    'load_golden_masks'
]

GOLDEN_DIR = os.path.join(os.path.dirname(__file__), 'data', 'golden')

# the noise-free scene the reference masks were made for:
# make_sequence('physical', n_frames=10, noise=0.)
GOLDEN_SCENE = dict(kind='physical', n_frames=10, noise=0.)


def load_golden_masks(kind='physical', method='chromacity'):
    """Load the reference TriMasks of a method on a synthetic scene.

    The masks are those the method produces with its default parameters
    on the scene described by :data:`GOLDEN_SCENE`, with the scene's
    static background installed in the background model.

    Parameters
    ----------
    kind : str, optional (default='physical')
        The synthetic scene.

    method : str, optional (default='chromacity')
        The detector.

    Returns
    -------
    masks : dict
        Maps the frame file names to their TriMasks.

    Examples
    --------
    >>> masks = load_golden_masks()
    >>> sorted(masks)[:2]
    ['000000.png', '000001.png']
    >>> masks['000000.png'].shape
    (80, 120)
    """
    path = os.path.join(GOLDEN_DIR, kind, method)
    if not os.path.isdir(path):
        raise ValueError("No reference masks for %s on %r" % (method, kind))
    return dict((name, read_trimask(os.path.join(path, name)))
                for name in sorted(os.listdir(path))
                if name.endswith('.png'))
