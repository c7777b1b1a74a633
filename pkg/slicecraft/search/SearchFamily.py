# -*- coding: utf-8 -*-
from enum import Enum


class SearchFamily(str, Enum):
    """
    Candidate partition families.

    ``ColumnSplit``: tile columns, each split into runs of complete CTU rows.
    ``UniformOnly``: the uniform partition alone.
    """
    ColumnSplit = 'ColumnSplit'
    UniformOnly = 'UniformOnly'
