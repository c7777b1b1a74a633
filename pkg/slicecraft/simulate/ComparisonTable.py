# -*- coding: utf-8 -*-
from typing import List, Optional, Tuple

from .MethodReport import MethodReport

SSE_LABEL = 'SSE proxy (luma, not BD-rate)'


class ComparisonTable:
    """
    Side-by-side comparison of the uniform and proposed partitionings for one thread count.

    Rows are the SSE clustering proxy (standing in for the rate-distortion column),
    the speed-up with and without partitioning overhead and the overhead share.
    """

    def __init__(self, n_threads: int, lam: float, seq_frac: float, sigma_max: float,
                 proposed: MethodReport, uniform: Optional[MethodReport] = None):
        self.n_threads = n_threads
        self.lam = lam
        self.seq_frac = seq_frac
        self.sigma_max = sigma_max
        self.rows: List[Tuple[str, Optional[float], float]] = [
            (SSE_LABEL, None if uniform is None else uniform.total_sse, proposed.total_sse),
            ('Speed-up sigma', None if uniform is None else uniform.sigma, proposed.sigma),
            ('Speed-up sigma w/o overhead', None if uniform is None else uniform.sigma_excl, proposed.sigma_excl),
            ('Overhead theta (%)', None if uniform is None else uniform.theta, proposed.theta),
            ('  step 1 (%)', None if uniform is None else uniform.theta_step1, proposed.theta_step1),
            ('  step 2 (%)', None if uniform is None else uniform.theta_step2, proposed.theta_step2)
        ]
        self.frames_total = len(proposed.frames)
        self.frames_improved = None
        if uniform is not None:
            baseline = {(f.qp, f.poc): f.parallel_time for f in uniform.frames}
            self.frames_improved = sum(
                1 for f in proposed.frames
                if (f.qp, f.poc) in baseline and f.parallel_time <= baseline[(f.qp, f.poc)]
            )

    @property
    def deltas(self) -> List[Optional[float]]:
        return [None if u is None else p - u for _, u, p in self.rows]

    def to_json(self) -> dict:
        return {
            'n_threads': self.n_threads,
            'lambda': self.lam,
            'seq_frac': self.seq_frac,
            'sigma_max': self.sigma_max,
            'rows': [
                {'metric': name, 'uniform': u, 'proposed': p, 'delta': d}
                for (name, u, p), d in zip(self.rows, self.deltas)
            ],
            'frames_improved': self.frames_improved,
            'frames_total': self.frames_total
        }

    def format_text(self) -> str:
        """
        Renders the table as aligned text.
        """
        def cell(value: Optional[float]) -> str:
            return '-' if value is None else '%.3f' % value

        lines = [
            'N=%d  lambda=%s  s=%s  sigma_max=%.3f' % (self.n_threads, self.lam, self.seq_frac, self.sigma_max),
            '%-32s %16s %16s %16s' % ('Metric', 'Uniform', 'Proposed', 'Delta')
        ]
        for (name, u, p), d in zip(self.rows, self.deltas):
            lines.append('%-32s %16s %16s %16s' % (name, cell(u), cell(p), cell(d)))
        if self.frames_improved is not None:
            lines.append('Frames no slower than uniform: %d/%d' % (self.frames_improved, self.frames_total))
        return '\n'.join(lines) + '\n'
