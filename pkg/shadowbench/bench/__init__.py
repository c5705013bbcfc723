# -*- coding: utf-8 -*-
#
# The benchmark harness: configuration, pipeline and command line

from .config import *
from .pipeline import *

__all__ = [s for s in dir() if not s.startswith('_')]
