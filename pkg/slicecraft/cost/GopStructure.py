# -*- coding: utf-8 -*-
from typing import List

from pip_services3_commons.errors import ConfigException


class GopStructure:
    """
    Hierarchical-B random access group of pictures: temporal layers and encode order.
    """

    @staticmethod
    def check_gop_size(gop_size: int):
        if gop_size < 2 or gop_size & (gop_size - 1) != 0:
            raise ConfigException(
                None, 'BAD_GOP_SIZE', 'GOP size must be a power of two, got ' + str(gop_size)
            ).with_details('gop_size', gop_size)

    @staticmethod
    def temporal_layer_of_poc(poc: int, gop_size: int) -> int:
        """
        Gets the temporal layer of a picture: 0 for GOP anchors, otherwise
        log2(gop_size) - trailing_zeros(poc mod gop_size).

        :param poc: picture order count.
        :param gop_size: GOP size, a power of two.
        :return: the temporal layer.
        """
        GopStructure.check_gop_size(gop_size)
        offset = poc % gop_size
        if offset == 0:
            return 0
        trailing_zeros = (offset & -offset).bit_length() - 1
        return gop_size.bit_length() - 1 - trailing_zeros

    @staticmethod
    def random_access_encode_order(frame_count: int, gop_size: int) -> List[int]:
        """
        Lists pictures 0..frame_count-1 in hierarchical-B encode order:
        0, 16, 8, 4, 2, 1, 3, 6, 5, 7, 12, ... for a GOP of 16.
        A trailing partial GOP is anchored on the last picture.
        """
        GopStructure.check_gop_size(gop_size)
        if frame_count <= 0:
            return []

        order = [0]

        def bisect(lo: int, hi: int):
            if hi - lo < 2:
                return
            mid = (lo + hi) // 2
            order.append(mid)
            bisect(lo, mid)
            bisect(mid, hi)

        start = 0
        while start < frame_count - 1:
            anchor = min(start + gop_size, frame_count - 1)
            order.append(anchor)
            bisect(start, anchor)
            start = anchor
        return order
