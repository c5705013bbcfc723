# -*- coding: utf-8 -*-

from .shadow import *
from .tracking import *

__all__ = [s for s in dir() if not s.startswith('_')]
