# -*- coding: utf-8 -*-
"""
    slicecraft.cli.RunConfig
    ~~~~~~~~~~~~~~~~~~~~~~~~

    Merged command-line and config-file parameters of one run.

    :license: MIT, see LICENSE for more details.
"""
import json
import os
from dataclasses import dataclass
from json import JSONDecodeError
from typing import Any, Dict, Optional, Tuple

from pip_services3_commons.config import ConfigParams
from pip_services3_commons.errors import ConfigException

from ..cost import CO_TEMPORAL_LAYER, ESTIMATOR_MODES
from ..grid import CtuGrid
from ..search import SearchFamily
from ..simulate import DEFAULT_QPS, SCENARIOS, BaselineMode, SimConfig, TimingMode

COMMANDS = ('partition', 'simulate', 'sweep', 'validate', 'stats', 'synth')


def _int_list(value: Optional[str], default: Tuple[int, ...]) -> Tuple[int, ...]:
    if value is None or value == '':
        return default
    try:
        return tuple(int(v) for v in value.split(',') if v.strip() != '')
    except ValueError:
        raise ConfigException(None, 'BAD_LIST', 'Expected comma-separated integers, got ' + value)


def _float_list(value: Optional[str], default: Tuple[float, ...]) -> Tuple[float, ...]:
    if value is None or value == '':
        return default
    try:
        return tuple(float(v) for v in value.split(',') if v.strip() != '')
    except ValueError:
        raise ConfigException(None, 'BAD_LIST', 'Expected comma-separated numbers, got ' + value)


@dataclass(frozen=True)
class RunConfig:
    """
    Everything a command needs. Built from a :class:`ConfigParams` whose keys mirror
    the command-line flags with underscores (``k_area``, ``seq_frac``, ...).
    """

    command: str
    yuv: Optional[str] = None
    trace: Optional[str] = None
    out: Optional[str] = None
    partition: Optional[str] = None
    stats_dir: Optional[str] = None
    width: Optional[int] = None
    height: Optional[int] = None
    bit_depth: int = 8
    ctu: int = 128
    threads: Tuple[int, ...] = (4,)
    workers: Optional[int] = None
    lam: float = 0.0
    lambdas: Tuple[float, ...] = (0.0, 0.1, 0.3)
    k_area: float = 3.0
    family: SearchFamily = SearchFamily.ColumnSplit
    max_tile_cols: Optional[int] = None
    estimator: str = CO_TEMPORAL_LAYER
    gop: int = 16
    seq_frac: float = 0.04
    qps: Tuple[int, ...] = DEFAULT_QPS
    baseline: BaselineMode = BaselineMode.Uniform
    timing: TimingMode = TimingMode.Modeled
    candidate_cost_us: float = 1.0
    texture_period: int = 1
    poc: int = 0
    frames: int = 17
    scenario: str = 'river'
    noise: float = 0.1
    seed: int = 0
    log_level: str = 'warn'

    @staticmethod
    def load_file(path: str) -> Dict[str, Any]:
        """
        Reads a JSON config file with flat keys. Dashes in keys become underscores
        and list values become comma-separated strings.
        """
        try:
            with open(path, 'r') as f:
                document = json.load(f)
        except OSError as err:
            raise ConfigException(None, 'NO_CONFIG_FILE', 'Cannot read config ' + path + ': ' + str(err))
        except JSONDecodeError as err:
            raise ConfigException(None, 'BAD_CONFIG_FILE', path + ' is not JSON: ' + str(err))
        if not isinstance(document, dict):
            raise ConfigException(None, 'BAD_CONFIG_FILE', path + ' must hold a JSON object')

        result = {}
        for key, value in document.items():
            if isinstance(value, (list, tuple)):
                value = ','.join(str(v) for v in value)
            result[key.replace('-', '_')] = value
        return result

    @staticmethod
    def from_config(config: ConfigParams) -> 'RunConfig':
        """
        Validates merged parameters and builds the run configuration.

        :raises ConfigException: on unknown commands, bad values or missing paths.
        """
        command = config.get_as_nullable_string('cmd')
        if command not in COMMANDS:
            raise ConfigException(None, 'BAD_COMMAND', 'Command must be one of ' + ', '.join(COMMANDS)) \
                .with_details('cmd', command)

        def enum(kind, key: str, default):
            value = config.get_as_string_with_default(key, default.value)
            try:
                return kind(value)
            except ValueError:
                raise ConfigException(None, 'BAD_' + key.upper(), 'Unsupported ' + key + ' ' + str(value))

        estimator = config.get_as_string_with_default('estimator', CO_TEMPORAL_LAYER)
        if estimator not in ESTIMATOR_MODES:
            raise ConfigException(None, 'BAD_ESTIMATOR', 'Estimator must be one of ' + ', '.join(ESTIMATOR_MODES))
        scenario = config.get_as_string_with_default('scenario', 'river')
        if scenario not in SCENARIOS:
            raise ConfigException(None, 'BAD_SCENARIO', 'Scenario must be one of ' + ', '.join(SCENARIOS))

        result = RunConfig(
            command=command,
            yuv=config.get_as_nullable_string('yuv'),
            trace=config.get_as_nullable_string('trace'),
            out=config.get_as_nullable_string('out'),
            partition=config.get_as_nullable_string('partition'),
            stats_dir=config.get_as_nullable_string('stats_dir'),
            width=config.get_as_nullable_integer('width'),
            height=config.get_as_nullable_integer('height'),
            bit_depth=config.get_as_integer_with_default('bit_depth', 8),
            ctu=config.get_as_integer_with_default('ctu', 128),
            threads=_int_list(config.get_as_nullable_string('threads'), (4,)),
            workers=config.get_as_nullable_integer('workers'),
            lam=config.get_as_float_with_default('lambda', 0.0),
            lambdas=_float_list(config.get_as_nullable_string('lambdas'), (0.0, 0.1, 0.3)),
            k_area=config.get_as_float_with_default('k_area', 3.0),
            family=enum(SearchFamily, 'family', SearchFamily.ColumnSplit),
            max_tile_cols=config.get_as_nullable_integer('max_tile_cols'),
            estimator=estimator,
            gop=config.get_as_integer_with_default('gop', 16),
            seq_frac=config.get_as_float_with_default('seq_frac', 0.04),
            qps=_int_list(config.get_as_nullable_string('qps'), DEFAULT_QPS),
            baseline=enum(BaselineMode, 'baseline', BaselineMode.Uniform),
            timing=enum(TimingMode, 'timing', TimingMode.Modeled),
            candidate_cost_us=config.get_as_float_with_default('candidate_cost_us', 1.0),
            texture_period=config.get_as_integer_with_default('texture_period', 1),
            poc=config.get_as_integer_with_default('poc', 0),
            frames=config.get_as_integer_with_default('frames', 17),
            scenario=scenario,
            noise=config.get_as_float_with_default('noise', 0.1),
            seed=config.get_as_integer_with_default('seed', 0),
            log_level=config.get_as_string_with_default('log_level', 'warn')
        )
        result.check_paths()
        return result

    def check_paths(self):
        """
        Checks that every referenced input exists and that geometry comes with a raw file.
        """
        for name in ('yuv', 'partition'):
            path = getattr(self, name)
            if path is not None and not os.path.isfile(path):
                raise ConfigException(None, 'NO_' + name.upper(), name + ' file ' + path + ' not found')
        for name in ('trace', 'stats_dir'):
            path = getattr(self, name)
            if path is not None and not os.path.isdir(path):
                raise ConfigException(None, 'NO_' + name.upper(), name + ' directory ' + path + ' not found')
        if self.yuv is not None and self.trace is None and (self.width is None or self.height is None):
            raise ConfigException(None, 'NO_GEOMETRY', '--width and --height are required with --yuv')

    def require(self, *names: str):
        """
        Raises a usage error when a parameter needed by the command is missing.
        """
        for name in names:
            if getattr(self, name) is None:
                raise ConfigException(
                    None, 'MISSING_' + name.upper(),
                    'Command ' + self.command + ' needs --' + name.replace('_', '-')
                )

    def grid(self) -> CtuGrid:
        self.require('width', 'height')
        return CtuGrid(self.width, self.height, self.ctu)

    def sim_config(self, n_threads: int, lam: Optional[float] = None) -> SimConfig:
        return SimConfig(
            n_threads, self.qps, self.seq_frac, self.lam if lam is None else lam, self.gop, self.baseline,
            self.k_area, self.family, self.max_tile_cols, self.estimator
        )
