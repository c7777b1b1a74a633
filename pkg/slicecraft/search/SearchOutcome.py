# -*- coding: utf-8 -*-
from dataclasses import dataclass
from typing import Optional

from .SearchFamily import SearchFamily
from ..cost import EstimateSource
from ..grid import Partition


@dataclass(frozen=True)
class SearchOutcome:
    """
    Result of the two-step search for one frame.

    ``t_min`` is the minimum estimated frame time over the family; ``best`` minimizes the
    clustering objective among candidates whose estimated time is within
    ``t_min * (1 + lam)``. Search times are wall-clock seconds.
    """

    best: Partition
    t_min: float
    t_best: float
    sse_best: float
    candidates_evaluated: int
    feasible_candidates: int
    lam: float
    family: SearchFamily
    step1_time: float = 0.0
    step2_time: float = 0.0
    estimate_source: EstimateSource = EstimateSource.Uniform
    estimate_source_poc: Optional[int] = None

    @property
    def search_time(self) -> float:
        return self.step1_time + self.step2_time

    def to_json(self, with_times: bool = True) -> dict:
        """
        Converts the outcome into a JSON-compatible dictionary.

        :param with_times: (optional) false to drop wall-clock fields for reproducible output.
        """
        result = {
            't_min': self.t_min,
            't_best': self.t_best,
            'sse_best': self.sse_best,
            'candidates_evaluated': self.candidates_evaluated,
            'feasible_candidates': self.feasible_candidates,
            'lambda': self.lam,
            'family': self.family.value,
            'estimate_source': self.estimate_source.value,
            'estimate_source_poc': self.estimate_source_poc,
            'partition': self.best.to_json()
        }
        if with_times:
            result['step1_time'] = self.step1_time
            result['step2_time'] = self.step2_time
            result['search_time'] = self.search_time
        return result
