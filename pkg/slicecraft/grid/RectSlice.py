# -*- coding: utf-8 -*-
from dataclasses import dataclass
from typing import Any, Iterator, Tuple

from ..errors import FrameFormatException


@dataclass(frozen=True)
class RectSlice:
    """
    Rectangular slice in CTU coordinates. (x0, y0) is the inclusive top-left cell.
    """

    id: int
    x0: int
    y0: int
    w: int
    h: int

    @property
    def area(self) -> int:
        return self.w * self.h

    @property
    def x1(self) -> int:
        return self.x0 + self.w

    @property
    def y1(self) -> int:
        return self.y0 + self.h

    def cells(self) -> Iterator[Tuple[int, int]]:
        for y in range(self.y0, self.y1):
            for x in range(self.x0, self.x1):
                yield x, y

    def to_json(self) -> dict:
        return {'id': self.id, 'x0': self.x0, 'y0': self.y0, 'w': self.w, 'h': self.h}

    @staticmethod
    def from_json(value: Any) -> 'RectSlice':
        try:
            return RectSlice(int(value['id']), int(value['x0']), int(value['y0']), int(value['w']), int(value['h']))
        except (KeyError, TypeError, ValueError) as err:
            raise FrameFormatException(None, 'BAD_SLICE', 'Slice description is incomplete: ' + str(err))
