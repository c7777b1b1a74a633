# -*- coding: utf-8 -*-
from dataclasses import dataclass
from typing import Tuple


@dataclass(frozen=True)
class SliceTimeTable:
    """
    Summed CTU times of every slice of a partition; the largest entry is the frame time.
    """

    times: Tuple[float, ...]

    @property
    def argmax(self) -> int:
        """
        Index of the slowest slice (first one on ties).
        """
        return max(range(len(self.times)), key=lambda j: (self.times[j], -j))

    @property
    def max(self) -> float:
        return max(self.times)
