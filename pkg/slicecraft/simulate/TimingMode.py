# -*- coding: utf-8 -*-
from enum import Enum


class TimingMode(str, Enum):
    """
    How partitioning overhead is charged to the reduced encoding time.

    ``measured``: wall-clock time of both search steps.
    ``modeled``: evaluated candidates times a fixed cost per candidate, reproducible across runs.
    ``none``: no overhead.
    """
    Measured = 'measured'
    Modeled = 'modeled'
    NoTiming = 'none'
