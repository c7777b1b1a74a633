# -*- coding: utf-8 -*-
from typing import Optional

from pip_services3_commons.errors import BadRequestException


class StructureException(BadRequestException):
    """
    Raised when a slice is neither a rectangle of complete tiles nor a run of
    complete CTU rows inside a single tile.
    """

    def __init__(self, correlation_id: Optional[str] = None, code: str = 'SLICE_STRUCTURE', message: str = None):
        """
        Creates an error instance and assigns its values.

        :param correlation_id: (optional) a unique transaction id to trace execution through call chain.
        :param code: (optional) a unique error code.
        :param message: (optional) a human-readable description of the error.
        """
        super().__init__(correlation_id, code, message)
