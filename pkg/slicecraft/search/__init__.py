# -*- coding: utf-8 -*-
"""
    slicecraft.search.__init__
    ~~~~~~~~~~~~~~~~~~~~~~~~~~

    Two-step partition search: time minimization, then texture clustering under
    a lagrangian time budget.

    :license: MIT, see LICENSE for more details.
"""

__all__ = [
    'SearchFamily', 'SearchConfig', 'Column', 'ColumnLayout', 'CandidateEnumerator', 'CandidateEvaluator',
    'SearchOutcome', 'PartitionSearch', 'MinTimeOracle', 'compositions'
]

from .SearchFamily import SearchFamily
from .SearchConfig import SearchConfig
from .ColumnLayout import Column, ColumnLayout
from .CandidateEnumerator import CandidateEnumerator, compositions
from .CandidateEvaluator import CandidateEvaluator
from .SearchOutcome import SearchOutcome
from .PartitionSearch import PartitionSearch
from .MinTimeOracle import MinTimeOracle
