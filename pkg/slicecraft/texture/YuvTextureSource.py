# -*- coding: utf-8 -*-
import threading
from typing import Dict, Optional

from .ITextureSource import ITextureSource
from .TextureAnalyzer import TextureAnalyzer
from .TextureStats import TextureStats
from .YuvFile import YuvFile
from ..grid import CtuGrid


class YuvTextureSource(ITextureSource):
    """
    Computes frame statistics from a raw YUV 4:2:0 file and caches them per picture.

    With a texture period p > 1 only pictures whose poc is a multiple of p are analyzed;
    the others reuse the statistics of the latest such picture.
    """

    def __init__(self, path: str, grid: CtuGrid, bit_depth: int = 8, texture_period: int = 1):
        """
        :param path: raw file path.
        :param grid: the CTU grid of the frames.
        :param bit_depth: sample bit depth.
        :param texture_period: (optional) analysis period in pictures.
        """
        self.__path = path
        self.__grid = grid
        self.__bit_depth = bit_depth
        self.__texture_period = max(1, texture_period)
        self.__cache: Dict[int, TextureStats] = {}
        self.__lock = threading.Lock()

    def get_stats(self, correlation_id: Optional[str], poc: int) -> TextureStats:
        anchor = poc - poc % self.__texture_period
        with self.__lock:
            stats = self.__cache.get(anchor)
        if stats is None:
            luma = YuvFile.load_yuv_frame(self.__path, self.__grid.frame_width, self.__grid.frame_height,
                                          anchor, self.__bit_depth, correlation_id)
            stats = TextureAnalyzer.ctu_stats(luma, self.__grid, anchor, correlation_id)
            with self.__lock:
                self.__cache[anchor] = stats
        return stats
