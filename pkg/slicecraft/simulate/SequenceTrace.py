# -*- coding: utf-8 -*-
"""
    slicecraft.simulate.SequenceTrace
    ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~

    True CTU times of a sequence, one cost map per (poc, qp).

    :license: MIT, see LICENSE for more details.
"""
import json
import os
from json import JSONDecodeError
from typing import Dict, Iterable, List, Optional, Tuple

from pip_services3_commons.errors import FileException

from ..cost import CostMap, GopStructure
from ..errors import FrameFormatException, GeometryException, TraceException
from ..grid import CtuGrid

MANIFEST_FILE = 'trace.json'


class SequenceTrace:
    """
    A directory of cost-map files plus an optional ``trace.json`` manifest:

    .. code-block:: json

        {"gop_size": 16, "frame_w": 512, "frame_h": 384, "ctu_size": 64,
         "encode_order": [0, 16, 8], "yuv": "frames.yuv", "bit_depth": 8}

    Every other ``*.json`` file of the directory is a cost map.
    """

    def __init__(self, grid: CtuGrid, maps: Iterable[CostMap], gop_size: int = 16,
                 encode_order: Optional[List[int]] = None, yuv: Optional[str] = None, bit_depth: int = 8):
        GopStructure.check_gop_size(gop_size)
        self.__grid = grid
        self.__gop_size = gop_size
        self.__maps: Dict[Tuple[int, int], CostMap] = {}
        for m in maps:
            if m.grid != grid:
                raise GeometryException(None, 'GRID_MISMATCH', 'Cost map ' + str(m) + ' has another grid')
            self.__maps[(m.poc, m.qp)] = m
        self.__encode_order = None if encode_order is None else [int(p) for p in encode_order]
        self.__yuv = yuv
        self.__bit_depth = bit_depth

    @property
    def grid(self) -> CtuGrid:
        return self.__grid

    @property
    def gop_size(self) -> int:
        return self.__gop_size

    @property
    def yuv(self) -> Optional[str]:
        return self.__yuv

    @property
    def bit_depth(self) -> int:
        return self.__bit_depth

    @property
    def pocs(self) -> List[int]:
        return sorted({poc for poc, _ in self.__maps})

    @property
    def qps(self) -> List[int]:
        return sorted({qp for _, qp in self.__maps if qp is not None})

    @property
    def encode_order(self) -> List[int]:
        """
        The explicit encode order of the manifest, or the hierarchical-B order of all pictures.
        """
        if self.__encode_order is not None:
            return list(self.__encode_order)
        pocs = self.pocs
        return GopStructure.random_access_encode_order(pocs[-1] + 1 if pocs else 0, self.__gop_size)

    def get(self, poc: int, qp: int) -> Optional[CostMap]:
        return self.__maps.get((poc, qp))

    def check_complete(self, qps: Iterable[int], correlation_id: Optional[str] = None):
        """
        Checks that every picture of the encode order has a cost map for every QP.

        :raises TraceException: listing the missing (poc, qp) pairs.
        """
        missing = [(poc, qp) for qp in qps for poc in self.encode_order if (poc, qp) not in self.__maps]
        if missing:
            raise TraceException(
                correlation_id, 'MISSING_COST_MAP',
                'Trace lacks ' + str(len(missing)) + ' cost maps, first (poc, qp) = ' + str(missing[0]), missing
            ).with_details('missing', [{'poc': poc, 'qp': qp} for poc, qp in missing])

    @staticmethod
    def file_name(poc: int, qp: Optional[int]) -> str:
        return 'cost_qp' + str(qp) + '_poc' + str(poc).zfill(4) + '.json'

    def save(self, directory: str, correlation_id: Optional[str] = None):
        """
        Writes the manifest and one file per cost map.
        """
        manifest = {
            'gop_size': self.__gop_size,
            'frame_w': self.__grid.frame_width,
            'frame_h': self.__grid.frame_height,
            'ctu_size': self.__grid.ctu_size,
            'bit_depth': self.__bit_depth
        }
        if self.__encode_order is not None:
            manifest['encode_order'] = self.__encode_order
        if self.__yuv is not None:
            manifest['yuv'] = self.__yuv
        try:
            os.makedirs(directory, exist_ok=True)
            with open(os.path.join(directory, MANIFEST_FILE), 'w') as f:
                json.dump(manifest, f, indent=2, sort_keys=True)
            for (poc, qp), m in sorted(self.__maps.items(), key=lambda item: (item[0][1], item[0][0])):
                with open(os.path.join(directory, SequenceTrace.file_name(poc, qp)), 'w') as f:
                    json.dump(m.to_json(), f)
        except OSError as err:
            raise FileException(correlation_id, 'WRITE_FAILED', 'Cannot write trace ' + directory + ': ' + str(err))

    @staticmethod
    def load(directory: str, correlation_id: Optional[str] = None) -> 'SequenceTrace':
        """
        Reads a trace directory.

        :param directory: the trace directory.
        :param correlation_id: (optional) transaction id to trace execution through call chain.
        :return: the loaded trace.
        """
        if not os.path.isdir(directory):
            raise FileException(correlation_id, 'NO_TRACE_DIR', 'Trace directory ' + str(directory) + ' not found')

        manifest = {}
        documents = []
        for name in sorted(os.listdir(directory)):
            if not name.endswith('.json'):
                continue
            path = os.path.join(directory, name)
            try:
                with open(path, 'r') as f:
                    document = json.load(f)
            except OSError as err:
                raise FileException(correlation_id, 'READ_FAILED', 'Cannot read ' + path + ': ' + str(err))
            except JSONDecodeError as err:
                raise FrameFormatException(correlation_id, 'BAD_COST_MAP', path + ' is not JSON: ' + str(err))
            if name == MANIFEST_FILE:
                manifest = document
            elif isinstance(document, dict) and 'times_us' in document:
                documents.append(document)

        gop_size = int(manifest.get('gop_size', 16))
        maps = [CostMap.from_json(d, gop_size) for d in documents]
        if 'frame_w' in manifest:
            grid = CtuGrid(int(manifest['frame_w']), int(manifest['frame_h']), int(manifest.get('ctu_size', 128)))
        elif maps:
            grid = maps[0].grid
        else:
            raise TraceException(correlation_id, 'EMPTY_TRACE', 'Trace directory ' + directory + ' has no cost maps')

        yuv = manifest.get('yuv')
        if yuv is not None and not os.path.isabs(yuv):
            yuv = os.path.join(directory, yuv)
        return SequenceTrace(grid, maps, gop_size, manifest.get('encode_order'), yuv,
                             int(manifest.get('bit_depth', 8)))
