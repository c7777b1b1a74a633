# -*- coding: utf-8 -*-
from enum import Enum


class EstimateSource(str, Enum):
    """
    Provenance of a cost map: measured by an encoder (or a synthetic producer), or
    estimated from a previously encoded frame.
    """
    Measured = 'Measured'
    Synthetic = 'Synthetic'
    CoTemporalLayer = 'CoTemporalLayer'
    ClosestFrame = 'ClosestFrame'
    AnyLayer = 'AnyLayer'
    Uniform = 'Uniform'
