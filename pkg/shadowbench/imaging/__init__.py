# -*- coding: utf-8 -*-

from .color import *
from .gradients import *
from .io import *
from .regions import *

__all__ = [s for s in dir() if not s.startswith('_')]
