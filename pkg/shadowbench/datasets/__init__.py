# -*- coding: utf-8 -*-
#
# Loading benchmark sequences from disk, the synthetic scene suite and the
# reference masks shipped with the package

from .golden import *
from .sequence import *
from .synthetic import *

__all__ = [s for s in dir() if not s.startswith('_')]
