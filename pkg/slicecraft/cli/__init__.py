# -*- coding: utf-8 -*-
"""
    slicecraft.cli.__init__
    ~~~~~~~~~~~~~~~~~~~~~~~

    Command-line front end: config merging, command dispatch and report emission.

    :license: MIT, see LICENSE for more details.
"""

__all__ = ['RunConfig', 'COMMANDS', 'SvgLineChart', 'SlicecraftCommands']

from .RunConfig import RunConfig, COMMANDS
from .SvgLineChart import SvgLineChart
from .SlicecraftCommands import SlicecraftCommands
