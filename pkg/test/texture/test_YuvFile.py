# -*- coding: utf-8 -*-
import numpy as np
import pytest

from slicecraft.errors import FrameFormatException, FrameRangeException
from slicecraft.texture import YuvFile


class TestYuvFile:

    def test_frame_bytes(self):
        assert YuvFile.frame_bytes(64, 64, 8) == 64 * 64 * 3 // 2
        assert YuvFile.frame_bytes(64, 64, 10) == 64 * 64 * 2 * 3 // 2
        # Odd sizes round chroma up.
        assert YuvFile.frame_bytes(5, 3, 8) == 15 + 2 * 3 * 2

    def test_single_frame(self, tmp_path):
        path = str(tmp_path / 'one.yuv')
        luma = np.arange(64 * 64, dtype=np.int64).reshape(64, 64) % 251
        YuvFile.write_frames(path, [luma.astype(np.uint8)])

        loaded = YuvFile.load_yuv_frame(path, 64, 64, 0)
        assert loaded.shape == (64, 64)
        assert loaded.size == 4096
        assert np.array_equal(loaded, luma)

        with pytest.raises(FrameRangeException):
            YuvFile.load_yuv_frame(path, 64, 64, 1)

    def test_ten_bit_offset(self, tmp_path):
        path = str(tmp_path / 'two.yuv')
        first = np.full((64, 64), 1023, dtype=np.uint16)
        second = (np.arange(64 * 64).reshape(64, 64) % 1024).astype(np.uint16)
        YuvFile.write_frames(path, [first, second], bit_depth=10)

        assert (tmp_path / 'two.yuv').stat().st_size == 2 * 64 * 64 * 2 * 3 // 2
        assert np.array_equal(YuvFile.load_yuv_frame(path, 64, 64, 1, 10), second)
        assert np.array_equal(YuvFile.load_yuv_frame(path, 64, 64, 0, 10), first)

    def test_truncated_file(self, tmp_path):
        path = tmp_path / 'bad.yuv'
        path.write_bytes(b'\x00' * 100)
        with pytest.raises(FrameFormatException):
            YuvFile.load_yuv_frame(str(path), 64, 64, 0)

    def test_bad_bit_depth(self):
        with pytest.raises(FrameFormatException):
            YuvFile.bytes_per_sample(4)
