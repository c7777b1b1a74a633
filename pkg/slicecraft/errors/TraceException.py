# -*- coding: utf-8 -*-
from typing import List, Optional, Sequence, Tuple

from pip_services3_commons.errors import NotFoundException


class TraceException(NotFoundException):
    """
    Raised when a sequence trace lacks the cost map of a (poc, qp) pair.
    The missing pairs are kept in :attr:`missing`.
    """

    def __init__(self, correlation_id: Optional[str] = None, code: str = 'MISSING_COST_MAP', message: str = None,
                 missing: Sequence[Tuple[int, int]] = ()):
        """
        Creates an error instance and assigns its values.

        :param correlation_id: (optional) a unique transaction id to trace execution through call chain.
        :param code: (optional) a unique error code.
        :param message: (optional) a human-readable description of the error.
        :param missing: (optional) the missing (poc, qp) pairs.
        """
        super().__init__(correlation_id, code, message)
        self.missing: List[Tuple[int, int]] = list(missing)
