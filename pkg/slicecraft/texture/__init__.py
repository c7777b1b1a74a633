# -*- coding: utf-8 -*-
"""
    slicecraft.texture.__init__
    ~~~~~~~~~~~~~~~~~~~~~~~~~~~

    Raw frame ingestion, per-CTU luma statistics and the slice clustering objective.

    :license: MIT, see LICENSE for more details.
"""

__all__ = [
    'YuvFile', 'TextureStats', 'TextureAnalyzer', 'ITextureSource',
    'FlatTextureSource', 'YuvTextureSource', 'StatsCacheTextureSource'
]

from .YuvFile import YuvFile
from .TextureStats import TextureStats
from .TextureAnalyzer import TextureAnalyzer
from .ITextureSource import ITextureSource
from .FlatTextureSource import FlatTextureSource
from .YuvTextureSource import YuvTextureSource
from .StatsCacheTextureSource import StatsCacheTextureSource
