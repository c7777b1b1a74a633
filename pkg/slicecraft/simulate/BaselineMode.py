# -*- coding: utf-8 -*-
from enum import Enum


class BaselineMode(str, Enum):
    """
    Whether a simulation also replays the uniform partitioning for comparison.
    """
    Uniform = 'Uniform'
    NoBaseline = 'None'
