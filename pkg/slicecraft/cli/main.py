# -*- coding: utf-8 -*-
"""
    slicecraft.cli.main
    ~~~~~~~~~~~~~~~~~~~

    Command-line entry point.

    :license: MIT, see LICENSE for more details.
"""
import argparse
import sys
from typing import List, Optional

from pip_services3_commons.config import ConfigParams
from pip_services3_commons.errors import ApplicationException, ConfigException
from pip_services3_commons.refer import Descriptor, IReferenceable, References
from pip_services3_components.count import LogCounters
from pip_services3_components.log import ConsoleLogger, LogLevel, LogLevelConverter

from .RunConfig import COMMANDS, RunConfig
from .SlicecraftCommands import SlicecraftCommands
from ..build import DefaultSlicecraftFactory
from ..errors import NoCandidateException
from ..search.PartitionSearch import WORKERS_ENV

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DATA = 3
EXIT_INFEASIBLE = 4

CORRELATION_ID = 'slicecraft'


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='slicecraft',
        description='Tile and rectangular slice partitioning for multi-thread video encoding'
    )
    # Defaults stay None so that only explicit flags override the config file.
    parser.add_argument('--cmd', choices=COMMANDS, help='command to run')
    parser.add_argument('--config', help='JSON config file with flat keys mirroring the flags')
    parser.add_argument('--yuv', help='raw YUV 4:2:0 file')
    parser.add_argument('--width', type=int, help='frame width in pixels')
    parser.add_argument('--height', type=int, help='frame height in pixels')
    parser.add_argument('--bit-depth', type=int, help='sample bit depth (default 8)')
    parser.add_argument('--ctu', type=int, help='CTU size: 32, 64 or 128 (default 128)')
    parser.add_argument('--trace', help='trace directory with per-(poc, qp) cost maps')
    parser.add_argument('--out', help='output directory')
    parser.add_argument('--partition', help='partition JSON file (validate)')
    parser.add_argument('--stats-dir', help='directory of texture statistics cache files')
    parser.add_argument('--threads', help='slice (thread) counts, comma separated (default 4)')
    parser.add_argument('--workers', type=int, help='candidate evaluation threads (default $' + WORKERS_ENV + ' or 1)')
    parser.add_argument('--lambda', type=float, help='time budget relaxation of the clustering step (default 0)')
    parser.add_argument('--lambdas', help='lambda values of a sweep (default 0,0.1,0.3)')
    parser.add_argument('--k-area', type=float, help='area ratio constant (default 3)')
    parser.add_argument('--family', help='candidate family: ColumnSplit or UniformOnly')
    parser.add_argument('--max-tile-cols', type=int, help='cap on tile columns')
    parser.add_argument('--estimator', help='CTU time estimator: co_tl or closest')
    parser.add_argument('--gop', type=int, help='random access GOP size (default 16)')
    parser.add_argument('--seq-frac', type=float, help='sequential fraction of the encoder (default 0.04)')
    parser.add_argument('--qps', help='quantizers, comma separated (default 22,27,32,37)')
    parser.add_argument('--baseline', help='Uniform or None')
    parser.add_argument('--timing', help='partitioning overhead: measured, modeled or none (default modeled)')
    parser.add_argument('--candidate-cost-us', type=float, help='modeled cost of one candidate (default 1)')
    parser.add_argument('--texture-period', type=int, help='pictures between texture analyses (default 1)')
    parser.add_argument('--poc', type=int, help='picture to partition or analyze (default 0)')
    parser.add_argument('--frames', type=int, help='synthetic frame count (default 17)')
    parser.add_argument('--scenario', help='synthetic scenario: river or blocks')
    parser.add_argument('--noise', type=float, help='synthetic cost noise level (default 0.1)')
    parser.add_argument('--seed', type=int, help='synthetic generator seed (default 0)')
    parser.add_argument('--log-level', help='console log level (default warn)')
    return parser


def merge_config(args: argparse.Namespace) -> ConfigParams:
    """
    Overlays explicit flags on the config file.
    """
    values = RunConfig.load_file(args.config) if args.config is not None else {}
    for key, value in vars(args).items():
        if key != 'config' and value is not None:
            values[key] = value
    return ConfigParams(values)


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)

    logger = ConsoleLogger()
    counters = LogCounters()
    try:
        config = merge_config(args)
        logger.set_level(LogLevelConverter.to_log_level(config.get_as_string_with_default('log_level', 'warn')))
        cfg = RunConfig.from_config(config)
    except ConfigException as err:
        logger.error(CORRELATION_ID, err, 'Invalid configuration')
        return EXIT_USAGE

    factory = DefaultSlicecraftFactory()
    search = factory.create(DefaultSlicecraftFactory.PartitionSearchDescriptor)
    simulator = factory.create(DefaultSlicecraftFactory.SequenceSimulatorDescriptor)
    commands = SlicecraftCommands(search, simulator)
    references = References.from_tuples(
        Descriptor('pip-services', 'logger', 'console', 'default', '1.0'), logger,
        Descriptor('pip-services', 'counters', 'log', 'default', '1.0'), counters,
        Descriptor('slicecraft', 'search', 'default', 'default', '1.0'), search,
        Descriptor('slicecraft', 'simulator', 'default', 'default', '1.0'), simulator
    )
    for component in (counters, search, simulator, commands):
        if isinstance(component, IReferenceable):
            component.set_references(references)

    try:
        code = commands.run(CORRELATION_ID, cfg)
    except NoCandidateException as err:
        logger.error(CORRELATION_ID, err, 'Search found no feasible partition')
        return EXIT_INFEASIBLE
    except ConfigException as err:
        logger.error(CORRELATION_ID, err, 'Invalid configuration')
        return EXIT_USAGE
    except ApplicationException as err:
        logger.error(CORRELATION_ID, err, 'Command ' + cfg.command + ' failed')
        return EXIT_DATA

    if logger.get_level() in (LogLevel.Debug, LogLevel.Trace):
        counters.dump()
    return code


if __name__ == '__main__':
    sys.exit(main())
