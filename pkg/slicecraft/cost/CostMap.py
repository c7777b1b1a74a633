# -*- coding: utf-8 -*-
"""
    slicecraft.cost.CostMap
    ~~~~~~~~~~~~~~~~~~~~~~~

    Per-CTU encoding times of one frame.

    :license: MIT, see LICENSE for more details.
"""
from typing import Any, Optional

import numpy as np

from .EstimateSource import EstimateSource
from .GopStructure import GopStructure
from ..errors import FrameFormatException, GeometryException
from ..grid import CtuGrid, SummedAreaTable


class CostMap:
    """
    Per-CTU encoding durations in microseconds for one frame, tagged with its
    picture order count, temporal layer and QP.

    Holds either true times T(c_i) or, when produced by the estimator, estimated
    times. The source tag and source poc disclose the provenance.
    """

    def __init__(self, grid: CtuGrid, times: Any, poc: int, temporal_layer: int = 0, qp: Optional[int] = None,
                 source: EstimateSource = EstimateSource.Measured, source_poc: Optional[int] = None):
        """
        Creates a cost map.

        :param grid: the CTU grid.
        :param times: rows x cols durations, or a flat row-major sequence of them.
        :param poc: picture order count of the frame the times belong to.
        :param temporal_layer: temporal layer of that frame.
        :param qp: (optional) quantizer of the encoding run.
        :param source: provenance of the times.
        :param source_poc: (optional) the frame the times were copied from.
        """
        values = np.array(times, dtype=np.float64)
        if values.size != grid.cell_count:
            raise GeometryException(
                None, 'BAD_COST_MAP',
                'Cost map holds ' + str(values.size) + ' times for ' + str(grid.cell_count) + ' CTUs'
            )
        values = values.reshape(grid.rows, grid.cols)
        if not np.all(np.isfinite(values)) or np.any(values < 0):
            raise FrameFormatException(None, 'BAD_COST_MAP', 'CTU times must be finite and not negative')
        values.setflags(write=False)

        self.__grid = grid
        self.__times = values
        self.__poc = poc
        self.__temporal_layer = temporal_layer
        self.__qp = qp
        self.__source = source
        self.__source_poc = source_poc
        self.__prefix_sums: Optional[SummedAreaTable] = None

    @staticmethod
    def uniform(grid: CtuGrid, poc: int = 0, temporal_layer: int = 0, qp: Optional[int] = None) -> 'CostMap':
        return CostMap(grid, np.ones((grid.rows, grid.cols)), poc, temporal_layer, qp, EstimateSource.Uniform)

    @property
    def grid(self) -> CtuGrid:
        return self.__grid

    @property
    def times(self) -> np.ndarray:
        return self.__times

    @property
    def poc(self) -> int:
        return self.__poc

    @property
    def temporal_layer(self) -> int:
        return self.__temporal_layer

    @property
    def qp(self) -> Optional[int]:
        return self.__qp

    @property
    def source(self) -> EstimateSource:
        return self.__source

    @property
    def source_poc(self) -> Optional[int]:
        return self.__source_poc

    @property
    def total(self) -> float:
        return self.prefix_sums().total

    def prefix_sums(self) -> SummedAreaTable:
        """
        Gets the summed-area table of the times, built once on first use.
        """
        if self.__prefix_sums is None:
            self.__prefix_sums = SummedAreaTable(self.__times)
        return self.__prefix_sums

    def as_estimate(self, poc: int, temporal_layer: int, source: EstimateSource) -> 'CostMap':
        """
        Copies these times as the estimate for another frame.
        """
        return CostMap(self.__grid, self.__times, poc, temporal_layer, self.__qp, source, self.__poc)

    def to_json(self) -> dict:
        return {
            'poc': self.__poc,
            'qp': self.__qp,
            'temporal_layer': self.__temporal_layer,
            'source': self.__source.value,
            'grid': self.__grid.to_json(),
            'times_us': [float(t) for t in self.__times.ravel()]
        }

    @staticmethod
    def from_json(value: Any, gop_size: Optional[int] = None) -> 'CostMap':
        """
        Restores a cost map from its file representation. A missing temporal layer is
        derived from the GOP size.

        :param value: a dictionary in the cost-map file format.
        :param gop_size: (optional) GOP size used to derive the temporal layer.
        :return: the cost map.
        """
        try:
            grid = CtuGrid.from_json(value['grid'])
            poc = int(value['poc'])
            qp = None if value.get('qp') is None else int(value['qp'])
            layer = value.get('temporal_layer')
            if layer is None:
                layer = GopStructure.temporal_layer_of_poc(poc, gop_size) if gop_size is not None else 0
            source = EstimateSource(value.get('source', EstimateSource.Measured.value))
            return CostMap(grid, value['times_us'], poc, int(layer), qp, source)
        except (KeyError, TypeError, ValueError) as err:
            raise FrameFormatException(None, 'BAD_COST_MAP', 'Cost map is incomplete: ' + str(err))

    def __str__(self):
        return 'CostMap[poc=' + str(self.__poc) + ', qp=' + str(self.__qp) + ', tl=' \
               + str(self.__temporal_layer) + ', ' + self.__source.value + ']'
