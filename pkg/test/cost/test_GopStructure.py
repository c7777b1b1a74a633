# -*- coding: utf-8 -*-
import pytest
from pip_services3_commons.errors import ConfigException

from slicecraft.cost import GopStructure


class TestGopStructure:

    def test_temporal_layers(self):
        layers = [GopStructure.temporal_layer_of_poc(poc, 16) for poc in range(17)]
        assert layers == [0, 4, 3, 4, 2, 4, 3, 4, 1, 4, 3, 4, 2, 4, 3, 4, 0]

    def test_encode_order(self):
        assert GopStructure.random_access_encode_order(17, 16) == \
            [0, 16, 8, 4, 2, 1, 3, 6, 5, 7, 12, 10, 9, 11, 14, 13, 15]

    def test_encode_order_is_a_permutation(self):
        for frames in (1, 2, 9, 33, 40):
            order = GopStructure.random_access_encode_order(frames, 8)
            assert sorted(order) == list(range(frames))

    def test_partial_gop(self):
        assert GopStructure.random_access_encode_order(5, 16) == [0, 4, 2, 1, 3]

    def test_bad_gop_size(self):
        with pytest.raises(ConfigException):
            GopStructure.temporal_layer_of_poc(3, 12)
        with pytest.raises(ConfigException):
            GopStructure.check_gop_size(1)
