# -*- coding: utf-8 -*-
from abc import ABC
from typing import Optional

from .TextureStats import TextureStats


class ITextureSource(ABC):
    """
    Interface for components that provide luma statistics of sequence frames.

    Example:

    .. code-block:: python

        class MyTextureSource(ITextureSource):
            def get_stats(self, correlation_id, poc):
                return TextureAnalyzer.ctu_stats(my_planes[poc], my_grid, poc)
    """

    def get_stats(self, correlation_id: Optional[str], poc: int) -> TextureStats:
        """
        Gets statistics of a frame.

        :param correlation_id: (optional) transaction id to trace execution through call chain.
        :param poc: picture order count of the frame.
        :return: the frame statistics.
        """
        raise NotImplementedError('Method from interface definition')
