# -*- coding: utf-8 -*-
from dataclasses import dataclass
from typing import Dict, List, Sequence

from .FrameRecord import FrameRecord


@dataclass(frozen=True)
class QpTotals:
    """
    Sequence totals of one QP run: T_O is the single-slice time, T_R the simulated
    multi-thread time with partitioning overhead and ``t_reduced_excl`` the same without it.
    """

    qp: int
    t_original: float
    t_reduced: float
    t_reduced_excl: float
    search_time: float
    step1_time: float
    step2_time: float
    sse: float

    @property
    def speedup(self) -> float:
        return self.t_original / self.t_reduced if self.t_reduced > 0 else 1.0

    @property
    def speedup_excl(self) -> float:
        return self.t_original / self.t_reduced_excl if self.t_reduced_excl > 0 else 1.0

    def to_json(self) -> dict:
        return {
            'qp': self.qp,
            'T_O': self.t_original,
            'T_R': self.t_reduced,
            'T_R_excl': self.t_reduced_excl,
            'search_time': self.search_time,
            'sse': self.sse
        }


class MethodReport:
    """
    Frames and aggregates of one partitioning method over all QP runs of a sequence.

    sigma averages T_O / T_R over the QPs; theta is the partitioning time as a
    percentage of the summed T_R.
    """

    def __init__(self, method: str, qps: Sequence[int], frames: List[FrameRecord]):
        self.__method = method
        self.__frames = list(frames)
        self.__per_qp: Dict[int, QpTotals] = {}
        for qp in qps:
            rows = [f for f in self.__frames if f.qp == qp]
            self.__per_qp[qp] = QpTotals(
                qp,
                sum(f.frame_total for f in rows),
                sum(f.parallel_time + f.search_time for f in rows),
                sum(f.parallel_time for f in rows),
                sum(f.search_time for f in rows),
                sum(f.step1_time for f in rows),
                sum(f.step2_time for f in rows),
                sum(f.sse for f in rows)
            )

    @property
    def method(self) -> str:
        return self.__method

    @property
    def frames(self) -> List[FrameRecord]:
        return list(self.__frames)

    @property
    def per_qp(self) -> Dict[int, QpTotals]:
        return dict(self.__per_qp)

    @property
    def sigma(self) -> float:
        return sum(t.speedup for t in self.__per_qp.values()) / len(self.__per_qp)

    @property
    def sigma_excl(self) -> float:
        return sum(t.speedup_excl for t in self.__per_qp.values()) / len(self.__per_qp)

    def _theta(self, part: float) -> float:
        reduced = sum(t.t_reduced for t in self.__per_qp.values())
        return 100.0 * part / reduced if reduced > 0 else 0.0

    @property
    def theta(self) -> float:
        return self._theta(sum(t.search_time for t in self.__per_qp.values()))

    @property
    def theta_step1(self) -> float:
        return self._theta(sum(t.step1_time for t in self.__per_qp.values()))

    @property
    def theta_step2(self) -> float:
        return self._theta(sum(t.step2_time for t in self.__per_qp.values()))

    @property
    def total_sse(self) -> float:
        return sum(t.sse for t in self.__per_qp.values())

    def to_json(self) -> dict:
        return {
            'method': self.__method,
            'sigma': self.sigma,
            'sigma_excl': self.sigma_excl,
            'theta': self.theta,
            'theta_step1': self.theta_step1,
            'theta_step2': self.theta_step2,
            'total_sse': self.total_sse,
            'per_qp': [t.to_json() for t in self.__per_qp.values()],
            'frames': [f.to_json() for f in self.__frames]
        }
