# -*- coding: utf-8 -*-
"""
    slicecraft.simulate.SyntheticTraceGenerator
    ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~

    Deterministic synthetic frames and texture-correlated cost maps.

    :license: MIT, see LICENSE for more details.
"""
from typing import List, Optional, Sequence, Tuple

import numpy as np
from pip_services3_commons.errors import ConfigException

from .SequenceTrace import SequenceTrace
from .SimConfig import DEFAULT_QPS
from ..cost import CostMap, EstimateSource, GopStructure
from ..grid import CtuGrid
from ..texture import TextureAnalyzer

RIVER = 'river'
BLOCKS = 'blocks'
SCENARIOS = (RIVER, BLOCKS)


class SyntheticTraceGenerator:
    """
    Generates a sequence whose CTU times follow its texture: each CTU costs a
    QP- and layer-dependent factor times its luma SSE, with optional multiplicative noise.

    ``river`` has a light sky, a textured band drifting down with the poc and dark water
    at the bottom. ``blocks`` scatters random tone rectangles that slide right over time.
    With zero noise the cost of every CTU is exactly proportional to its luma SSE.
    """

    def __init__(self, grid: CtuGrid, scenario: str = RIVER, seed: int = 0, noise: float = 0.1,
                 bit_depth: int = 8):
        if scenario not in SCENARIOS:
            raise ConfigException(None, 'BAD_SCENARIO', 'Scenario ' + str(scenario) + ' is not supported') \
                .with_details('scenario', scenario)
        if noise < 0:
            raise ConfigException(None, 'BAD_NOISE', 'Noise level must be non-negative')
        self.__grid = grid
        self.__scenario = scenario
        self.__seed = seed
        self.__noise = noise
        self.__bit_depth = bit_depth

    @staticmethod
    def qp_scale(qp: int) -> float:
        """
        Relative CTU time at a QP: halves every 6 QP steps above 37.
        """
        return 2.0 ** ((37 - qp) / 6.0)

    def luma(self, poc: int) -> np.ndarray:
        """
        Luma plane of one picture, a pure function of (seed, poc).
        """
        h, w = self.__grid.frame_height, self.__grid.frame_width
        rng = np.random.default_rng([self.__seed, poc])
        if self.__scenario == RIVER:
            plane = np.empty((h, w), dtype=np.float64)
            band_top = int(h * 0.3) + (poc * 2) % max(1, h // 5)
            band_bottom = min(h, band_top + h // 4)
            plane[:band_top] = 200 + rng.normal(0, 2, (band_top, w))
            plane[band_top:band_bottom] = rng.uniform(20, 235, (band_bottom - band_top, w))
            plane[band_bottom:] = 40 + rng.normal(0, 5, (h - band_bottom, w))
        else:
            layout = np.random.default_rng(self.__seed)
            plane = 128 + rng.normal(0, 3, (h, w))
            for _ in range(6):
                bw, bh = layout.integers(w // 8, w // 2 + 1), layout.integers(h // 8, h // 2 + 1)
                x0, y0 = layout.integers(0, w - bw + 1), layout.integers(0, h - bh + 1)
                tone, spread = layout.uniform(16, 240), layout.uniform(0, 60)
                plane[y0:y0 + bh, x0:x0 + bw] = tone + rng.normal(0, 1, (bh, bw)) * spread
            plane = np.roll(plane, poc * 4, axis=1)
        top = (1 << self.__bit_depth) - 1
        plane = np.clip(np.rint(plane * (1 << (self.__bit_depth - 8))), 0, top)
        return plane.astype(np.uint8 if self.__bit_depth == 8 else np.uint16)

    def cost_map(self, luma: np.ndarray, poc: int, qp: int, gop_size: int) -> CostMap:
        stats = TextureAnalyzer.ctu_stats(luma, self.__grid, poc)
        counts = stats.counts.astype(np.float64)
        sse = stats.sumsqs - stats.sums.astype(np.float64) ** 2 / counts
        tl = GopStructure.temporal_layer_of_poc(poc, gop_size)
        # Pixels of a lower layer are coded with more bits.
        factor = SyntheticTraceGenerator.qp_scale(qp) * (1.0 + 0.25 * (gop_size.bit_length() - 1 - tl))
        times = factor * np.maximum(sse, 0.0) / (1 << (2 * (self.__bit_depth - 8)))
        if self.__noise > 0:
            rng = np.random.default_rng([self.__seed, poc, qp])
            times = times * np.clip(1.0 + self.__noise * rng.standard_normal(times.shape), 0.0, None)
        return CostMap(self.__grid, times, poc, tl, qp, EstimateSource.Synthetic)

    def generate(self, frame_count: int, qps: Sequence[int] = DEFAULT_QPS,
                 gop_size: int = 16, yuv: Optional[str] = None) -> Tuple[List[np.ndarray], SequenceTrace]:
        """
        Generates the luma planes and the cost maps of every (poc, qp).

        :param frame_count: number of pictures.
        :param qps: quantizers.
        :param gop_size: random access GOP size.
        :param yuv: (optional) raw file name the trace manifest points to.
        :return: luma planes in display order and the trace.
        """
        if frame_count < 1:
            raise ConfigException(None, 'BAD_FRAME_COUNT', 'At least one frame is required')
        GopStructure.check_gop_size(gop_size)
        lumas = [self.luma(poc) for poc in range(frame_count)]
        maps = [self.cost_map(lumas[poc], poc, qp, gop_size) for qp in qps for poc in range(frame_count)]
        return lumas, SequenceTrace(self.__grid, maps, gop_size, yuv=yuv, bit_depth=self.__bit_depth)
