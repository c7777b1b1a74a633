# -*- coding: utf-8 -*-
from typing import Optional

from .ITextureSource import ITextureSource
from .TextureStats import TextureStats
from ..grid import CtuGrid


class FlatTextureSource(ITextureSource):
    """
    Texture source used when no frames are available: every frame is constant,
    so clustering never prefers one partition over another.
    """

    def __init__(self, grid: CtuGrid):
        self.__grid = grid

    def get_stats(self, correlation_id: Optional[str], poc: int) -> TextureStats:
        return TextureStats.flat(self.__grid, poc)
