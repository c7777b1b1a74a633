# -*- coding: utf-8 -*-
from enum import Enum


class PartitionOrigin(str, Enum):
    """
    Tells which procedure produced a partition.
    """
    Uniform = 'Uniform'
    Proposed = 'Proposed'
    Custom = 'Custom'
