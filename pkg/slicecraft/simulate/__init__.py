# -*- coding: utf-8 -*-
"""
    slicecraft.simulate.__init__
    ~~~~~~~~~~~~~~~~~~~~~~~~~~~~

    Sequence replay, multi-thread encoding simulation and speed-up reports.

    :license: MIT, see LICENSE for more details.
"""

__all__ = [
    'BaselineMode', 'TimingMode', 'SimConfig', 'DEFAULT_QPS', 'SequenceTrace', 'FrameRecord',
    'QpTotals', 'MethodReport', 'SimReport', 'ComparisonTable', 'SequenceSimulator',
    'SweepRow', 'LambdaSweep', 'SyntheticTraceGenerator', 'SCENARIOS', 'RIVER', 'BLOCKS'
]

from .BaselineMode import BaselineMode
from .TimingMode import TimingMode
from .SimConfig import SimConfig, DEFAULT_QPS
from .SequenceTrace import SequenceTrace
from .FrameRecord import FrameRecord
from .MethodReport import QpTotals, MethodReport
from .SimReport import SimReport
from .ComparisonTable import ComparisonTable
from .SequenceSimulator import SequenceSimulator
from .LambdaSweep import SweepRow, LambdaSweep
from .SyntheticTraceGenerator import SyntheticTraceGenerator, SCENARIOS, RIVER, BLOCKS
