# -*- coding: utf-8 -*-
from slicecraft.grid import CtuGrid, PartitionRenderer, UniformPartitioner


class TestPartitionRenderer:

    def test_quadrants(self):
        p = UniformPartitioner.partition(CtuGrid.from_cells(4, 4), 4)
        assert PartitionRenderer.render_ascii(p) == '0011\n0011\n2233\n2233'

    def test_one_slice(self):
        p = UniformPartitioner.partition(CtuGrid.from_cells(3, 2), 1)
        assert PartitionRenderer.render_ascii(p) == '000\n000'

    def test_symbols(self):
        assert PartitionRenderer.symbol(9) == '9'
        assert PartitionRenderer.symbol(10) == 'A'
        assert PartitionRenderer.symbol(36) == 'a'
