# -*- coding: utf-8 -*-
"""
    slicecraft.texture.YuvFile
    ~~~~~~~~~~~~~~~~~~~~~~~~~~

    Raw planar YUV 4:2:0 file access.

    :license: MIT, see LICENSE for more details.
"""
import os
from typing import Iterable, Optional

import numpy as np
from pip_services3_commons.errors import FileException

from ..errors import FrameFormatException, FrameRangeException


class YuvFile:
    """
    Reads and writes raw planar 4:2:0 video. 8-bit samples take one byte,
    deeper samples take two little-endian bytes. Geometry and bit depth are
    always supplied by the caller, never inferred from the file.
    Only the luma plane is ever read; chroma planes are skipped.
    """

    @staticmethod
    def bytes_per_sample(bit_depth: int) -> int:
        if bit_depth < 8 or bit_depth > 16:
            raise FrameFormatException(
                None, 'BAD_BIT_DEPTH', 'Bit depth must be within 8..16, got ' + str(bit_depth)
            )
        return 1 if bit_depth == 8 else 2

    @staticmethod
    def sample_type(bit_depth: int) -> np.dtype:
        return np.dtype(np.uint8) if YuvFile.bytes_per_sample(bit_depth) == 1 else np.dtype('<u2')

    @staticmethod
    def frame_bytes(frame_w: int, frame_h: int, bit_depth: int) -> int:
        chroma = ((frame_w + 1) // 2) * ((frame_h + 1) // 2)
        return (frame_w * frame_h + 2 * chroma) * YuvFile.bytes_per_sample(bit_depth)

    @staticmethod
    def frame_count(path: str, frame_w: int, frame_h: int, bit_depth: int,
                    correlation_id: Optional[str] = None) -> int:
        """
        Counts complete frames in a raw file.

        :raises FileException: when the file cannot be accessed.
        :raises FrameFormatException: when the size is not a multiple of the frame size.
        """
        frame_bytes = YuvFile.frame_bytes(frame_w, frame_h, bit_depth)
        try:
            size = os.path.getsize(path)
        except OSError as err:
            raise FileException(correlation_id, 'READ_FAILED', 'Cannot access ' + str(path) + ': ' + str(err))
        if size % frame_bytes != 0:
            raise FrameFormatException(
                correlation_id, 'BAD_FRAME_FORMAT',
                'File ' + str(path) + ' holds ' + str(size) + ' bytes, not a multiple of frame size '
                + str(frame_bytes)
            ).with_details('frame_bytes', frame_bytes)
        return size // frame_bytes

    @staticmethod
    def load_yuv_frame(path: str, frame_w: int, frame_h: int, poc: int, bit_depth: int = 8,
                       correlation_id: Optional[str] = None) -> np.ndarray:
        """
        Loads the luma plane of one picture.

        :param path: raw file path.
        :param frame_w: frame width in pixels.
        :param frame_h: frame height in pixels.
        :param poc: picture index in the file.
        :param bit_depth: sample bit depth (8 or 10 in practice).
        :param correlation_id: (optional) transaction id to trace execution through call chain.
        :return: a frame_h x frame_w array of luma samples.
        """
        count = YuvFile.frame_count(path, frame_w, frame_h, bit_depth, correlation_id)
        if poc < 0 or poc >= count:
            raise FrameRangeException(
                correlation_id, 'FRAME_OUT_OF_RANGE',
                'Picture ' + str(poc) + ' is beyond the ' + str(count) + ' frames of ' + str(path)
            )
        offset = poc * YuvFile.frame_bytes(frame_w, frame_h, bit_depth)
        try:
            luma = np.fromfile(path, dtype=YuvFile.sample_type(bit_depth), count=frame_w * frame_h, offset=offset)
        except OSError as err:
            raise FileException(correlation_id, 'READ_FAILED', 'Cannot read ' + str(path) + ': ' + str(err))
        return luma.reshape(frame_h, frame_w)

    @staticmethod
    def write_frames(path: str, lumas: Iterable[np.ndarray], bit_depth: int = 8,
                     correlation_id: Optional[str] = None):
        """
        Writes luma planes as 4:2:0 frames with neutral (mid-level) chroma.
        """
        dtype = YuvFile.sample_type(bit_depth)
        neutral = 1 << (bit_depth - 1)
        try:
            with open(path, 'wb') as f:
                for luma in lumas:
                    h, w = luma.shape
                    chroma = np.full(2 * ((w + 1) // 2) * ((h + 1) // 2), neutral, dtype=dtype)
                    f.write(np.ascontiguousarray(luma, dtype=dtype).tobytes())
                    f.write(chroma.tobytes())
        except OSError as err:
            raise FileException(correlation_id, 'WRITE_FAILED', 'Cannot write ' + str(path) + ': ' + str(err))
