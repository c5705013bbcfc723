# -*- coding: utf-8 -*-

from .blob import *

__all__ = [s for s in dir() if not s.startswith('_')]
