# -*- coding: utf-8 -*-
from dataclasses import dataclass
from typing import List, Optional

CSV_COLUMNS = [
    'method', 'qp', 'poc', 'temporal_layer', 'frame_total', 't_true', 't_est', 'parallel_time',
    'sse', 'search_time', 'step1_time', 'step2_time', 'estimate_source', 'estimate_source_poc', 'candidates'
]


@dataclass(frozen=True)
class FrameRecord:
    """
    One simulated frame. Times are in the unit of the cost maps (microseconds).

    ``t_true`` is the true time of the slowest slice, ``t_est`` the estimated one the
    search saw, and ``parallel_time`` the frame time with the sequential part included.
    """

    method: str
    qp: int
    poc: int
    temporal_layer: int
    frame_total: float
    t_true: float
    t_est: Optional[float]
    parallel_time: float
    sse: float
    search_time: float = 0.0
    step1_time: float = 0.0
    step2_time: float = 0.0
    estimate_source: Optional[str] = None
    estimate_source_poc: Optional[int] = None
    candidates: int = 0

    def to_json(self) -> dict:
        return {name: getattr(self, name) for name in CSV_COLUMNS}

    def csv_values(self) -> List[str]:
        return ['' if getattr(self, name) is None else str(getattr(self, name)) for name in CSV_COLUMNS]
