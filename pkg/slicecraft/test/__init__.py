# -*- coding: utf-8 -*-

__all__ = [
    'PartitionOracle', 'RandomInstances'
]

from .PartitionOracle import PartitionOracle
from .RandomInstances import RandomInstances
