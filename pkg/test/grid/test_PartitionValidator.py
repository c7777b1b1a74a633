# -*- coding: utf-8 -*-
import itertools

import pytest

from slicecraft.errors import CoverageException, GeometryException, OverlapException, StructureException
from slicecraft.grid import CtuGrid, Partition, PartitionValidator, RectSlice, TileGrid
from slicecraft.test import PartitionOracle, RandomInstances


class TestPartitionValidator:
    grid: CtuGrid = None

    def setup_method(self):
        self.grid = CtuGrid.from_cells(8, 8)

    def test_four_tiles(self):
        tiles = TileGrid((4, 4), (4, 4))
        slices = [RectSlice(0, 0, 0, 4, 4), RectSlice(1, 4, 0, 4, 4),
                  RectSlice(2, 0, 4, 4, 4), RectSlice(3, 4, 4, 4, 4)]
        p = PartitionValidator.validate(self.grid, tiles, slices)
        assert p.slice_count == 4
        assert sum(p.areas()) == 64

    def test_single_slice(self):
        p = PartitionValidator.validate(self.grid, TileGrid((8,), (8,)), [RectSlice(0, 0, 0, 8, 8)])
        assert p.slice_count == 1

    def test_merged_tiles(self):
        tiles = TileGrid((4, 4), (4, 4))
        slices = [RectSlice(0, 0, 0, 8, 4), RectSlice(1, 0, 4, 4, 4), RectSlice(2, 4, 4, 4, 4)]
        assert PartitionValidator.validate(self.grid, tiles, slices).slice_count == 3

    def test_area_ratio(self):
        tiles = TileGrid((4, 4), (4, 4))
        slices = [RectSlice(0, 0, 0, 8, 4), RectSlice(1, 0, 4, 4, 4), RectSlice(2, 4, 4, 4, 4)]
        p = PartitionValidator.validate(self.grid, tiles, slices)
        assert p.area_ratio() == 2.0
        assert p.satisfies_area_constraint(3.0)
        assert not p.satisfies_area_constraint(2.0)

    def test_row_runs_inside_tile(self):
        tiles = TileGrid((4, 4), (8,))
        slices = [RectSlice(0, 0, 0, 4, 3), RectSlice(1, 0, 3, 4, 5), RectSlice(2, 4, 0, 4, 8)]
        assert PartitionValidator.validate(self.grid, tiles, slices).slice_count == 3

    def test_run_crossing_tile_rows(self):
        tiles = TileGrid((4, 4), (4, 4))
        slices = [
            RectSlice(0, 0, 0, 4, 2), RectSlice(1, 0, 2, 4, 3), RectSlice(2, 0, 5, 4, 3),
            RectSlice(3, 4, 0, 4, 4), RectSlice(4, 4, 4, 4, 4)
        ]
        with pytest.raises(StructureException):
            PartitionValidator.validate(self.grid, tiles, slices)

    def test_partial_tile_width(self):
        tiles = TileGrid((8,), (8,))
        slices = [RectSlice(0, 0, 0, 4, 8), RectSlice(1, 4, 0, 4, 8)]
        with pytest.raises(StructureException):
            PartitionValidator.validate(self.grid, tiles, slices)

    def test_overlap(self):
        tiles = TileGrid((8,), (4, 4))
        slices = [RectSlice(0, 0, 0, 8, 5), RectSlice(1, 0, 4, 8, 4)]
        with pytest.raises(OverlapException):
            PartitionValidator.validate(self.grid, tiles, slices)

    def test_hole(self):
        tiles = TileGrid((8,), (4, 4))
        with pytest.raises(CoverageException):
            PartitionValidator.validate(self.grid, tiles, [RectSlice(0, 0, 0, 8, 4)])

    def test_out_of_grid(self):
        tiles = TileGrid((8,), (8,))
        with pytest.raises(GeometryException):
            PartitionValidator.validate(self.grid, tiles, [RectSlice(0, 0, 0, 9, 8)])

    def test_tile_sums(self):
        with pytest.raises(GeometryException):
            PartitionValidator.validate(self.grid, TileGrid((7,), (8,)), [RectSlice(0, 0, 0, 8, 8)])

    def test_duplicate_ids(self):
        tiles = TileGrid((8,), (4, 4))
        slices = [RectSlice(0, 0, 0, 8, 4), RectSlice(0, 0, 4, 8, 4)]
        with pytest.raises(StructureException):
            PartitionValidator.validate(self.grid, tiles, slices)

    def test_agrees_with_exhaustive_checker(self):
        # Every tile grid and every set of up to three rectangles on a 3x3 grid.
        grid = CtuGrid.from_cells(3, 3)
        rects = [(x0, y0, w, h)
                 for x0 in range(3) for y0 in range(3)
                 for w in range(1, 4 - x0) for h in range(1, 4 - y0)]
        splits = [(3,), (1, 2), (2, 1), (1, 1, 1)]
        checked = 0
        for widths, heights in itertools.product(splits, splits):
            tiles = TileGrid(widths, heights)
            for count in (1, 2, 3):
                for chosen in itertools.combinations(rects, count):
                    if sum(w * h for _, _, w, h in chosen) != 9:
                        continue
                    slices = [RectSlice(i, *r) for i, r in enumerate(chosen)]
                    expected = PartitionOracle.is_legal(grid, tiles, slices)
                    try:
                        PartitionValidator.validate(grid, tiles, slices)
                        actual = True
                    except (OverlapException, CoverageException, StructureException):
                        actual = False
                    assert actual == expected, str((widths, heights, chosen))
                    checked += 1
        assert checked > 100

    def test_random_partitions_are_legal(self):
        instances = RandomInstances(7)
        for _ in range(50):
            grid = instances.grid(6, 6)
            p = instances.partition(grid)
            assert sum(p.areas()) == grid.cell_count
            assert PartitionOracle.is_legal(grid, p.tiles, p.slices)

    def test_json_revalidates(self):
        tiles = TileGrid((4, 4), (8,))
        p = PartitionValidator.validate(self.grid, tiles, [RectSlice(0, 0, 0, 4, 8), RectSlice(1, 4, 0, 4, 8)])
        value = p.to_json()
        assert value['tile_cols'] == [4, 4]
        assert value['origin'] == 'Custom'
        assert Partition.from_json(value) == p

        value['slices'][1]['w'] = 3
        with pytest.raises(CoverageException):
            Partition.from_json(value)
