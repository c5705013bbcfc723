# -*- coding: utf-8 -*-
#
# The shadow detectors and the registry mapping method names to them

from .chromacity import *
from .geometry import *
from .noop import *
from .physical import *
from .texture_lr import *
from .texture_sr import *

DETECTORS = {
    'chromacity': ChromacityDetector,
    'physical': PhysicalDetector,
    'geometry': GeometryDetector,
    'texture_sr': SmallRegionTextureDetector,
    'texture_lr': LargeRegionTextureDetector,
    'none': NoShadowDetector,
}

# the five methods, in the order they are reported
METHODS = ('chromacity', 'physical', 'geometry', 'texture_sr', 'texture_lr')


def get_detector(name, **params):
    """Create a detector from its method name.

    Parameters
    ----------
    name : str
        One of the keys of ``DETECTORS``.

    **params : keyword args
        Passed to the detector's constructor.

    Examples
    --------
    >>> get_detector('chromacity', window=3)
    ChromacityDetector(window=3)
    """
    try:
        cls = DETECTORS[name]
    except KeyError:
        raise ValueError("Unknown method %r; expected one of %r"
                         % (name, sorted(DETECTORS)))
    return cls(**params)


__all__ = [s for s in dir() if not s.startswith('_')]
