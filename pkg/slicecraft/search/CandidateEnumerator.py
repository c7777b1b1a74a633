# -*- coding: utf-8 -*-
"""
    slicecraft.search.CandidateEnumerator
    ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~

    Deterministic enumeration of the column-split candidate family.

    :license: MIT, see LICENSE for more details.
"""
from functools import lru_cache
from typing import Iterator, List, Tuple

from .ColumnLayout import Column, Layout
from .SearchConfig import SearchConfig
from ..errors import GeometryException
from ..grid import CtuGrid


@lru_cache(maxsize=None)
def compositions(total: int, parts: int) -> Tuple[Tuple[int, ...], ...]:
    """
    Lists all ways to write total as an ordered sum of parts positive integers,
    in lexicographic order.
    """
    if parts == 1:
        return ((total,),) if total >= 1 else ()
    result = []
    for first in range(1, total - parts + 2):
        for rest in compositions(total - first, parts - 1):
            result.append((first,) + rest)
    return tuple(result)


class CandidateEnumerator:
    """
    Enumerates column-split candidates satisfying k * A_min(P) > A_max(P), lexicographically
    in (tile column count, column widths, slices per column, run heights).

    Branches are cut as soon as they cannot satisfy the area constraint: the smallest
    area can only shrink and the largest only grow as slices are added.
    """

    def __init__(self, grid: CtuGrid, cfg: SearchConfig):
        if cfg.n_slices > grid.cell_count:
            raise GeometryException(
                None, 'TOO_MANY_SLICES',
                'Cannot split ' + str(grid.cell_count) + ' CTUs into ' + str(cfg.n_slices) + ' slices'
            )
        self.__grid = grid
        self.__cfg = cfg

    def layouts(self) -> Iterator[Layout]:
        grid, cfg = self.__grid, self.__cfg
        k, n, rows = cfg.k_area, cfg.n_slices, grid.rows

        for c in range(1, cfg.tile_col_cap(grid) + 1):
            for widths in compositions(grid.cols, c):
                x0s = [sum(widths[:i]) for i in range(c)]
                for runs in compositions(n, c):
                    if max(runs) > rows:
                        continue
                    # Bounds reachable by any choice of heights.
                    smallest_min = min(w * (rows // r) for w, r in zip(widths, runs))
                    largest_max = max(w * -(-rows // r) for w, r in zip(widths, runs))
                    if not k * smallest_min > largest_max:
                        continue
                    yield from self.__split_columns(x0s, widths, runs, 0, (), None, None)

    def __split_columns(self, x0s: List[int], widths: Tuple[int, ...], runs: Tuple[int, ...], i: int,
                        done: Layout, a_min, a_max) -> Iterator[Layout]:
        if i == len(widths):
            yield done
            return
        w = widths[i]
        k = self.__cfg.k_area
        for heights in compositions(self.__grid.rows, runs[i]):
            lo = w * min(heights)
            hi = w * max(heights)
            if a_min is not None:
                lo, hi = min(lo, a_min), max(hi, a_max)
            if not k * lo > hi:
                continue
            yield from self.__split_columns(x0s, widths, runs, i + 1, done + (Column(x0s[i], w, heights),), lo, hi)
