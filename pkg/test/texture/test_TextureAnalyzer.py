# -*- coding: utf-8 -*-
import numpy as np
import pytest

from slicecraft.errors import GeometryException
from slicecraft.grid import CtuGrid, PartitionValidator, RectSlice, TileGrid, UniformPartitioner
from slicecraft.test import PartitionOracle, RandomInstances
from slicecraft.texture import TextureAnalyzer, TextureStats


class TestTextureAnalyzer:

    def test_constant_plane(self):
        grid = CtuGrid(128, 128, 64)
        stats = TextureAnalyzer.ctu_stats(np.full((128, 128), 100, dtype=np.uint8), grid)
        assert np.all(stats.counts == 4096)
        assert np.all(stats.sums == 409600)
        assert np.all(stats.sumsqs == 40960000)
        for n in (1, 2, 4):
            assert TextureAnalyzer.partition_sse(stats, UniformPartitioner.partition(grid, n)) == 0

    def test_one_white_pixel(self):
        grid = CtuGrid(128, 128, 64)
        luma = np.zeros((128, 128), dtype=np.uint8)
        luma[70, 10] = 255
        stats = TextureAnalyzer.ctu_stats(luma, grid)
        assert int(stats.sums.sum()) == 255
        assert stats.sums[1, 0] == 255
        assert stats.sumsqs[1, 0] == 65025

    def test_partial_ctus(self):
        grid = CtuGrid(100, 40, 32)
        stats = TextureAnalyzer.ctu_stats(np.ones((40, 100), dtype=np.uint8), grid)
        assert stats.counts.shape == (2, 4)
        assert stats.counts[0, 3] == 4 * 32
        assert stats.counts[1, 3] == 4 * 8
        assert int(stats.counts.sum()) == 4000

    def test_matches_naive_loop(self):
        instances = RandomInstances(11)
        grid = CtuGrid(70, 50, 32)
        luma = instances.luma(grid, 10)
        stats = TextureAnalyzer.ctu_stats(luma, grid)
        for y in range(grid.rows):
            for x in range(grid.cols):
                block = [int(v) for v in luma[y * 32:(y + 1) * 32, x * 32:(x + 1) * 32].ravel()]
                assert stats.counts[y, x] == len(block)
                assert stats.sums[y, x] == sum(block)
                assert stats.sumsqs[y, x] == sum(v * v for v in block)

    def test_ten_bit_large_ctus(self):
        grid = CtuGrid(128, 128, 128)
        stats = TextureAnalyzer.ctu_stats(np.full((128, 128), 1023, dtype=np.uint16), grid)
        assert stats.sumsqs[0, 0] == 1023 * 1023 * 128 * 128

    def test_two_tone_split(self):
        grid = CtuGrid(256, 256, 32)
        luma = np.zeros((256, 256), dtype=np.uint8)
        luma[:, 128:] = 200
        stats = TextureAnalyzer.ctu_stats(luma, grid)

        vertical = PartitionValidator.validate(
            grid, TileGrid((4, 4), (8,)), [RectSlice(0, 0, 0, 4, 8), RectSlice(1, 4, 0, 4, 8)]
        )
        horizontal = PartitionValidator.validate(
            grid, TileGrid((8,), (8,)), [RectSlice(0, 0, 0, 8, 4), RectSlice(1, 0, 4, 8, 4)]
        )
        assert TextureAnalyzer.partition_sse(stats, vertical) == 0
        # Each half: 32768 pixels, half at 0 and half at 200.
        assert TextureAnalyzer.partition_sse(stats, horizontal) == 2 * 32768 * 100 * 100

    def test_whole_frame_slice(self):
        instances = RandomInstances(5)
        grid = CtuGrid(64, 64, 32)
        luma = instances.luma(grid)
        stats = TextureAnalyzer.ctu_stats(luma, grid)
        p = UniformPartitioner.partition(grid, 1)
        values = luma.astype(np.float64)
        assert TextureAnalyzer.partition_sse(stats, p) == pytest.approx(float(((values - values.mean()) ** 2).sum()))

    def test_exact_against_pixels(self):
        instances = RandomInstances(2024)
        for _ in range(50):
            grid = CtuGrid(int(instances.rng.integers(1, 65)), int(instances.rng.integers(1, 65)), 32)
            luma = instances.luma(grid)
            stats = TextureAnalyzer.ctu_stats(luma, grid)
            p = instances.partition(grid)
            expected = PartitionOracle.pixel_sse(luma, grid, p.slices)
            assert TextureAnalyzer.partition_sse_exact(stats, p) == expected
            assert TextureAnalyzer.partition_sse(stats, p) == pytest.approx(float(expected), rel=1e-9, abs=1e-6)

    def test_refinement_never_increases(self):
        instances = RandomInstances(8)
        for _ in range(30):
            grid = CtuGrid.from_cells(int(instances.rng.integers(1, 5)), int(instances.rng.integers(2, 5)), 32)
            stats = TextureAnalyzer.ctu_stats(instances.luma(grid), grid)
            whole = UniformPartitioner.partition(grid, 1)
            cut = int(instances.rng.integers(1, grid.rows))
            split = PartitionValidator.validate(
                grid, TileGrid((grid.cols,), (grid.rows,)),
                [RectSlice(0, 0, 0, grid.cols, cut), RectSlice(1, 0, cut, grid.cols, grid.rows - cut)]
            )
            assert TextureAnalyzer.partition_sse_exact(stats, split) <= TextureAnalyzer.partition_sse_exact(stats, whole)

    def test_grid_mismatch(self):
        stats = TextureStats.flat(CtuGrid.from_cells(2, 2))
        with pytest.raises(GeometryException):
            TextureAnalyzer.partition_sse(stats, UniformPartitioner.partition(CtuGrid.from_cells(3, 2), 1))

    def test_stats_json(self):
        grid = CtuGrid(64, 40, 32)
        stats = TextureAnalyzer.ctu_stats(RandomInstances(1).luma(grid), grid, poc=9)
        restored = TextureStats.from_json(stats.to_json())
        assert restored.poc == 9
        assert restored.grid == grid
        assert np.array_equal(restored.sumsqs, stats.sumsqs)
