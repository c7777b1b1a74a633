# -*- coding: utf-8 -*-
"""
    slicecraft.errors.__init__
    ~~~~~~~~~~~~~~~~~~~~~~~~~~

    Domain errors built on the pip-services application exceptions.

    :license: MIT, see LICENSE for more details.
"""

__all__ = [
    'GeometryException', 'OverlapException', 'CoverageException', 'StructureException',
    'FrameFormatException', 'FrameRangeException', 'NoCandidateException', 'SizeLimitException',
    'TraceException'
]

from .CoverageException import CoverageException
from .FrameFormatException import FrameFormatException
from .FrameRangeException import FrameRangeException
from .GeometryException import GeometryException
from .NoCandidateException import NoCandidateException
from .OverlapException import OverlapException
from .SizeLimitException import SizeLimitException
from .StructureException import StructureException
from .TraceException import TraceException
