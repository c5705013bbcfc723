# -*- coding: utf-8 -*-
#
# Synthetic sequences with exact ground truth: textured or flat ground,
# moving objects with a dark rim, and cast shadows that scale the ground
# by a constant factor.

from __future__ import absolute_import, division

from collections import namedtuple
import logging
import os

import numpy as np
from scipy import ndimage
from sklearn.utils.validation import check_random_state

from ..imaging.color import round_half_away
from ..imaging.io import write_frame, write_grey
from ..labels import make_trimask
from ..tracking.blob import Track
from .sequence import write_gt_tracks

__all__ = [
    'Actor',
    'SCENES',
    'Scene',
    'SyntheticSequence',
    'make_sequence',
    'write_sequence'
]

logger = logging.getLogger(__name__)

Actor = namedtuple('Actor', ['colour', 'size', 'start', 'velocity',
                             'shadow_offset', 'shadow_size', 'textured'])
Actor.__doc__ = """A moving object and the shadow it casts.

``size`` and ``shadow_size`` are ``(height, width)``; ``start`` and
``velocity`` are ``(row, col)`` and ``(drow, dcol)`` per frame;
``shadow_offset`` places the shadow's top-left corner relative to the
object's.
"""

Scene = namedtuple('Scene', ['ground', 'textured', 'alpha', 'actors'])
Scene.__doc__ = """Ground colour, whether the ground is textured, the shadow
attenuation factor and the actors of a synthetic scene."""

SyntheticSequence = namedtuple('SyntheticSequence',
                               ['name', 'frames', 'background', 'gt',
                                'tracks'])
SyntheticSequence.__doc__ = """An in-memory synthetic sequence.

``gt`` maps the labelled frame indices to their TriMasks and ``tracks``
holds one ground truth Track per actor.
"""

_SAND = (150., 140., 120.)
_DARK_SAND = tuple(0.45 * c for c in _SAND)


def _two_objects(colour, textured=True):
    return [Actor(colour, (14, 10), (15, 8), (0, 2), (4, 10), (14, 16),
                  textured),
            Actor(colour, (12, 12), (50, 100), (0, -2), (5, -14), (12, 14),
                  textured)]


SCENES = {
    # dark objects of the ground's own hue over texture
    'textured': Scene(_SAND, True, 0.5, _two_objects(_DARK_SAND)),

    # objects told apart from shadows by hue only
    'hue': Scene((90., 140., 200.), True, 0.5,
                 _two_objects((100., 60., 30.))),

    # flat ground, saturated objects brighter than the ground
    'physical': Scene((160., 120., 80.), False, 0.5,
                      _two_objects((40., 170., 60.))),

    # faint shadows much larger than the objects casting them
    'weak': Scene(_SAND, True, 0.75, [
        Actor(_DARK_SAND, (8, 8), (16, 4), (0, 1), (-12, 8), (32, 48), True),
        Actor(_DARK_SAND, (8, 8), (54, 112), (0, -1), (-12, -48), (32, 48),
              True)]),

    # upright people with a shadow lobe at their feet
    'person': Scene((140., 140., 140.), False, 0.5, [
        Actor((60., 40., 100.), (30, 10), (8, 4), (0, 2), (24, 10), (6, 30),
              False),
        Actor((60., 40., 100.), (30, 10), (45, 100), (0, -2), (24, -30),
              (6, 30), False)]),

    # two people in separate lanes whose long shadows join them up
    'crossing': Scene(_SAND, True, 0.5, [
        Actor((200., 40., 40.), (30, 10), (5, 4), (0, 2), (30, -10),
              (12, 50), True),
        Actor((40., 40., 200.), (30, 10), (45, 106), (0, -2), (30, -10),
              (5, 50), True)]),
}


def _texture(shape, random_state):
    # smooth multiplicative texture with unit standard deviation
    t = ndimage.gaussian_filter(random_state.randn(*shape), 1.)
    return np.clip(t / t.std(), -2., 2.)


def _clip_box(row, col, h, w, shape):
    # the visible part of a box as slices, plus its offset in the box
    r0, c0 = max(row, 0), max(col, 0)
    r1, c1 = min(row + h, shape[0]), min(col + w, shape[1])
    if r0 >= r1 or c0 >= c1:
        return None
    return (slice(r0, r1), slice(c0, c1)), (r0 - row, c0 - col)


def _object_patch(actor, random_state, rim=2, rim_factor=0.2):
    h, w = actor.size
    colour = np.asarray(actor.colour, dtype=np.float64)
    if actor.textured:
        patch = colour * (1. + 0.25 * _texture((h, w), random_state)
                          )[..., np.newaxis]
    else:
        patch = np.tile(colour, (h, w, 1))
    patch[:rim] *= rim_factor
    patch[-rim:] *= rim_factor
    patch[rim:-rim, :rim] *= rim_factor
    patch[rim:-rim, -rim:] *= rim_factor
    return patch


def make_sequence(kind, n_frames=40, shape=(80, 120), labelled_from=30,
                  noise=2., random_state=None):
    """Render a synthetic sequence of one of the :data:`SCENES`.

    Each frame is the ground, with every actor's shadow multiplying it by
    the scene's ``alpha``, the actors drawn on top (each with a two pixel
    dark rim) and Gaussian noise added. Ground truth TriMasks are made for
    the frames from ``labelled_from`` on; the ground truth tracks follow
    the visible part of each actor's box.

    Parameters
    ----------
    kind : str
        A key of :data:`SCENES`.

    n_frames : int, optional (default=40)
        The number of frames.

    shape : tuple, optional (default=(80, 120))
        The frame height and width. The scenes are laid out for the
        default.

    labelled_from : int, optional (default=30)
        The first frame with ground truth.

    noise : float, optional (default=2.)
        The standard deviation of the pixel noise.

    random_state : int, RandomState or None, optional (default=None)
        Seeds the textures and the noise.

    Returns
    -------
    sequence : SyntheticSequence
    """
    try:
        scene = SCENES[kind]
    except KeyError:
        raise ValueError("Unknown scene %r; expected one of %r"
                         % (kind, sorted(SCENES)))
    if n_frames < 1:
        raise ValueError("n_frames must be positive, but got %r" % n_frames)
    rs = check_random_state(random_state)
    shape = tuple(int(s) for s in shape)

    ground = np.tile(np.asarray(scene.ground, dtype=np.float64),
                     shape + (1,))
    if scene.textured:
        ground *= (1. + 0.25 * _texture(shape, rs))[..., np.newaxis]
    patches = [_object_patch(actor, rs) for actor in scene.actors]
    tracks = [Track(i + 1) for i in range(len(scene.actors))]

    frames, gt = [], {}
    for t in range(n_frames):
        img = ground.copy()
        shadow = np.zeros(shape, dtype=bool)
        objects = np.zeros(shape, dtype=bool)

        for actor in scene.actors:
            row = actor.start[0] + actor.velocity[0] * t
            col = actor.start[1] + actor.velocity[1] * t
            box = _clip_box(row + actor.shadow_offset[0],
                            col + actor.shadow_offset[1],
                            actor.shadow_size[0], actor.shadow_size[1], shape)
            if box is not None:
                shadow[box[0]] = True
        img[shadow] *= scene.alpha

        for actor, patch, track in zip(scene.actors, patches, tracks):
            row = actor.start[0] + actor.velocity[0] * t
            col = actor.start[1] + actor.velocity[1] * t
            h, w = actor.size
            box = _clip_box(row, col, h, w, shape)
            if box is None:
                continue
            (rows, cols), (dr, dc) = box
            y, x = rows.start, cols.start
            vh, vw = rows.stop - y, cols.stop - x
            img[rows, cols] = patch[dr:dr + vh, dc:dc + vw]
            objects[rows, cols] = True
            track.add(t, (x + (vw - 1) / 2., y + (vh - 1) / 2.),
                      (x, y, vw, vh))

        img += rs.normal(0., noise, size=img.shape)
        frames.append(np.clip(round_half_away(img), 0, 255).astype(np.uint8))
        if t >= labelled_from:
            gt[t] = make_trimask(objects | shadow, shadow & ~objects)

    background = np.clip(round_half_away(ground), 0, 255).astype(np.uint8)
    logger.debug("Rendered %i frames of the %r scene", n_frames, kind)
    return SyntheticSequence(kind, frames, background, gt,
                             [track for track in tracks if len(track)])


def write_sequence(sequence, directory):
    """Write a synthetic sequence in the benchmark layout.

    Creates ``directory/<name>/`` with ``frames/``, ``background.png``,
    ``gt/`` and ``tracks.txt``.

    Returns
    -------
    path : str
        The sequence directory.
    """
    root = os.path.join(directory, sequence.name)
    for sub in ('frames', 'gt'):
        path = os.path.join(root, sub)
        if not os.path.isdir(path):
            os.makedirs(path)

    for t, frame in enumerate(sequence.frames):
        write_frame(os.path.join(root, 'frames', '%06d.png' % t), frame)
    for t, mask in sorted(sequence.gt.items()):
        write_grey(os.path.join(root, 'gt', '%06d.png' % t), mask)
    write_frame(os.path.join(root, 'background.png'), sequence.background)
    write_gt_tracks(os.path.join(root, 'tracks.txt'), sequence.tracks)

    logger.info("Wrote synthetic sequence %s to %s", sequence.name, root)
    return root
