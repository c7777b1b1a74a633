# -*- coding: utf-8 -*-
import csv
import io
from dataclasses import dataclass
from typing import List, Optional, Sequence

from pip_services3_commons.errors import InvalidStateException

from .SimReport import SimReport

SWEEP_COLUMNS = ['n_threads', 'lambda', 'sigma', 'sigma_excl', 'sse', 'theta', 'selected']


@dataclass(frozen=True)
class SweepRow:
    n_threads: int
    lam: float
    sigma: float
    sigma_excl: float
    sse: float
    theta: float
    selected: bool = False

    @staticmethod
    def from_report(report: SimReport) -> 'SweepRow':
        p = report.proposed
        return SweepRow(report.config.n_threads, report.config.lam, p.sigma, p.sigma_excl, p.total_sse, p.theta)


class LambdaSweep:
    """
    Rows of a lambda sweep for one thread count, sorted by lambda.
    """

    def __init__(self, rows: Sequence[SweepRow], uniform_sse: Optional[float] = None):
        self.__rows = sorted(rows, key=lambda r: r.lam)
        self.__uniform_sse = uniform_sse
        selected = LambdaSweep.select(self.__rows, uniform_sse)
        if selected is not None:
            r = self.__rows[selected]
            self.__rows[selected] = SweepRow(r.n_threads, r.lam, r.sigma, r.sigma_excl, r.sse, r.theta, True)

    @property
    def rows(self) -> List[SweepRow]:
        return list(self.__rows)

    @property
    def uniform_sse(self) -> Optional[float]:
        return self.__uniform_sse

    @staticmethod
    def select(rows: Sequence[SweepRow], uniform_sse: Optional[float] = None) -> Optional[int]:
        """
        Index of the best trade-off: the highest sigma among rows whose SSE proxy does not
        exceed the uniform one, or the highest sigma overall when none does.
        Ties go to the smaller lambda.
        """
        if len(rows) == 0:
            return None
        candidates = [i for i, r in enumerate(rows) if uniform_sse is not None and r.sse <= uniform_sse]
        if not candidates:
            candidates = list(range(len(rows)))
        return min(candidates, key=lambda i: (-rows[i].sigma, rows[i].lam))

    def check_monotonic(self, correlation_id: Optional[str] = None, tolerance: float = 1e-9):
        """
        Checks that the SSE proxy does not grow with lambda.

        :raises InvalidStateException: on the first increasing pair.
        """
        for prev, cur in zip(self.__rows, self.__rows[1:]):
            if cur.sse > prev.sse * (1 + tolerance) + tolerance:
                raise InvalidStateException(
                    correlation_id, 'SSE_NOT_MONOTONIC',
                    'SSE grows from ' + str(prev.sse) + ' at lambda ' + str(prev.lam)
                    + ' to ' + str(cur.sse) + ' at lambda ' + str(cur.lam)
                )

    def to_csv(self, with_header: bool = True) -> str:
        out = io.StringIO()
        writer = csv.writer(out, lineterminator='\n')
        if with_header:
            writer.writerow(SWEEP_COLUMNS)
        for r in self.__rows:
            writer.writerow([r.n_threads, r.lam, r.sigma, r.sigma_excl, r.sse, r.theta, int(r.selected)])
        return out.getvalue()
