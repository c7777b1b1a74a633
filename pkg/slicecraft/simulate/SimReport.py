# -*- coding: utf-8 -*-
import csv
import io
from typing import Optional

from .FrameRecord import CSV_COLUMNS
from .MethodReport import MethodReport
from .SimConfig import SimConfig


class SimReport:
    """
    Outcome of one sequence simulation: the proposed method, the optional uniform
    baseline and the Amdahl bound for the configured thread count.
    """

    def __init__(self, config: SimConfig, proposed: MethodReport, uniform: Optional[MethodReport],
                 sigma_max: float, estimator: str, timing: str):
        self.config = config
        self.proposed = proposed
        self.uniform = uniform
        self.sigma_max = sigma_max
        self.estimator = estimator
        self.timing = timing

    def to_json(self) -> dict:
        return {
            'n_threads': self.config.n_threads,
            'qps': list(self.config.qps),
            'seq_frac': self.config.seq_frac,
            'lambda': self.config.lam,
            'gop_size': self.config.gop_size,
            'k_area': self.config.k_area,
            'family': self.config.family.value,
            'estimator': self.estimator,
            'timing': self.timing,
            'sigma_max': self.sigma_max,
            'proposed': self.proposed.to_json(),
            'uniform': None if self.uniform is None else self.uniform.to_json()
        }

    def to_csv(self, with_header: bool = True) -> str:
        """
        Per-frame rows of both methods as CSV text.
        """
        out = io.StringIO()
        writer = csv.writer(out, lineterminator='\n')
        if with_header:
            writer.writerow(['n_threads', 'lambda'] + CSV_COLUMNS)
        prefix = [str(self.config.n_threads), str(self.config.lam)]
        for report in (self.uniform, self.proposed):
            if report is None:
                continue
            for frame in report.frames:
                writer.writerow(prefix + frame.csv_values())
        return out.getvalue()
