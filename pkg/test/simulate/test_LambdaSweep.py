# -*- coding: utf-8 -*-
import pytest
from pip_services3_commons.errors import InvalidStateException

from slicecraft.simulate import LambdaSweep, SweepRow


class TestLambdaSweep:

    def test_select_within_uniform_sse(self):
        rows = [
            SweepRow(4, 0.3, 3.0, 3.1, 80.0, 1.0),
            SweepRow(4, 0.0, 3.5, 3.6, 120.0, 1.0),
            SweepRow(4, 0.1, 3.2, 3.3, 95.0, 1.0),
        ]
        sweep = LambdaSweep(rows, uniform_sse=100.0)
        assert [r.lam for r in sweep.rows] == [0.0, 0.1, 0.3]
        assert [r.selected for r in sweep.rows] == [False, True, False]
        sweep.check_monotonic()

    def test_select_falls_back_to_fastest(self):
        rows = [SweepRow(2, 0.0, 1.9, 1.9, 50.0, 0.0), SweepRow(2, 0.2, 1.9, 1.9, 40.0, 0.0)]
        assert LambdaSweep.select(rows, uniform_sse=10.0) == 0
        assert LambdaSweep.select(rows) == 0
        assert LambdaSweep.select([]) is None

    def test_growing_sse(self):
        rows = [SweepRow(2, 0.0, 1.9, 1.9, 50.0, 0.0), SweepRow(2, 0.2, 1.8, 1.8, 51.0, 0.0)]
        with pytest.raises(InvalidStateException):
            LambdaSweep(rows).check_monotonic('123')

    def test_csv(self):
        sweep = LambdaSweep([SweepRow(2, 0.0, 1.5, 1.5, 10.0, 0.0)], 20.0)
        lines = sweep.to_csv().splitlines()
        assert lines[0] == 'n_threads,lambda,sigma,sigma_excl,sse,theta,selected'
        assert lines[1] == '2,0.0,1.5,1.5,10.0,0.0,1'
        assert sweep.to_csv(with_header=False) == lines[1] + '\n'
