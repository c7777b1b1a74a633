# -*- coding: utf-8 -*-
"""
    slicecraft.__init__
    ~~~~~~~~~~~~~~~~~~~

    Tile and rectangular slice partitioning for multi-thread video encoding.

    :license: MIT, see LICENSE for more details.
"""

__all__ = []
