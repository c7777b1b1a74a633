# -*- coding: utf-8 -*-
import json
import os
from json import JSONDecodeError
from typing import Optional

from pip_services3_commons.errors import FileException

from .ITextureSource import ITextureSource
from .TextureStats import TextureStats
from ..errors import FrameFormatException


class StatsCacheTextureSource(ITextureSource):
    """
    Reads frame statistics from cache files named ``stats_poc<poc>.json`` in a directory.
    """

    def __init__(self, directory: str):
        self.__directory = directory

    @staticmethod
    def file_name(poc: int) -> str:
        return 'stats_poc' + str(poc).zfill(4) + '.json'

    @staticmethod
    def write(directory: str, stats: TextureStats, correlation_id: Optional[str] = None) -> str:
        """
        Writes a stats cache file and returns its path.
        """
        path = os.path.join(directory, StatsCacheTextureSource.file_name(stats.poc))
        try:
            with open(path, 'w') as f:
                json.dump(stats.to_json(), f)
        except OSError as err:
            raise FileException(correlation_id, 'WRITE_FAILED', 'Cannot write ' + path + ': ' + str(err))
        return path

    def get_stats(self, correlation_id: Optional[str], poc: int) -> TextureStats:
        path = os.path.join(self.__directory, StatsCacheTextureSource.file_name(poc))
        try:
            with open(path, 'r') as f:
                return TextureStats.from_json(json.load(f))
        except OSError as err:
            raise FileException(correlation_id, 'READ_FAILED', 'Cannot read ' + path + ': ' + str(err))
        except JSONDecodeError as err:
            raise FrameFormatException(correlation_id, 'BAD_STATS_FILE', path + ' is not JSON: ' + str(err))
