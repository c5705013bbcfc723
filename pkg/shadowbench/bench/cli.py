# -*- coding: utf-8 -*-
#
# The ``shadowbench`` command line

from __future__ import absolute_import, division

import argparse
import logging
import os

import pandas as pd

from .. import __version__
from ..datasets import SCENES, load_sequence, make_sequence, write_sequence
from ..detectors import METHODS
from ..exceptions import ConfigError, ShadowBenchError, exit_code_for
from ..utils.iterables import split_csv
from .config import BenchConfig, read_config
from .pipeline import TIMING_COLUMNS, desaturation_sweep, run_detect, \
    run_eval, run_trackeval, time_method, write_report

__all__ = [
    'main'
]

logger = logging.getLogger(__name__)

EFFECTIVE_CONFIG = 'effective_config.txt'


def _setup(args, grid_key='eval.lambda_grid'):
    # config, sequences and methods of a benchmark subcommand
    if args.config:
        config = read_config(args.config)
    else:
        config = BenchConfig()
    if args.lambda_grid is not None:
        config.set(grid_key, args.lambda_grid)

    methods = split_csv(args.methods) if args.methods else list(METHODS)
    unknown = [m for m in methods if m not in METHODS and m != 'none']
    if unknown or not methods:
        raise ConfigError("Unknown methods %r; expected a subset of %r"
                          % (unknown, list(METHODS)))

    specs = [load_sequence(path) for path in args.seqs]
    if not os.path.isdir(args.out):
        os.makedirs(args.out)
    config.write(os.path.join(args.out, EFFECTIVE_CONFIG))
    return config, specs, methods


def _timing_row(spec, method, ms, config):
    warmup = config.get('timing.warmup_frames')
    return [spec.name, method, ms, max(spec.n_frames - warmup, 0)]


def cmd_detect(args):
    config, specs, methods = _setup(args)
    rows = []
    for spec in specs:
        for method in methods:
            ms = run_detect(spec, method, config,
                            os.path.join(args.out, 'masks'))
            rows.append(_timing_row(spec, method, ms, config))
    write_report(pd.DataFrame(rows, columns=TIMING_COLUMNS),
                 os.path.join(args.out, 'timing.csv'))


def cmd_eval(args):
    config, specs, methods = _setup(args)
    scores, frames = run_eval(specs, methods, config,
                              mask_dir=os.path.join(args.out, 'masks'))
    write_report(scores, os.path.join(args.out, 'eval.csv'))
    write_report(frames, os.path.join(args.out, 'frame_scores.csv'))


def cmd_desat_sweep(args):
    config, specs, methods = _setup(args, grid_key='eval.sweep_grid')
    curves = [desaturation_sweep(spec, method, config)
              for spec in specs for method in methods]
    write_report(pd.concat(curves, ignore_index=True),
                 os.path.join(args.out, 'desaturation.csv'))


def cmd_track_eval(args):
    config, specs, methods = _setup(args)
    write_report(run_trackeval(specs, methods, config),
                 os.path.join(args.out, 'tracking.csv'))


def cmd_bench_time(args):
    config, specs, methods = _setup(args)
    rows = [_timing_row(spec, method, time_method(spec, method, config),
                        config)
            for spec in specs for method in ['none'] + list(methods)]
    write_report(pd.DataFrame(rows, columns=TIMING_COLUMNS),
                 os.path.join(args.out, 'timing.csv'))


def cmd_synth(args):
    scenes = split_csv(args.scenes) if args.scenes else sorted(SCENES)
    for kind in scenes:
        if kind not in SCENES:
            raise ConfigError("Unknown scene %r; expected one of %r"
                              % (kind, sorted(SCENES)))
        write_sequence(make_sequence(kind, n_frames=args.frames,
                                     random_state=args.seed), args.out)


def _parser():
    parser = argparse.ArgumentParser(
        prog='shadowbench',
        description='Moving cast shadow detection benchmark.')
    parser.add_argument('--version', action='version',
                        version='%(prog)s ' + __version__)
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument('-v', '--verbose', action='store_true',
                           help='log per-frame progress')
    verbosity.add_argument('-q', '--quiet', action='store_true',
                           help='only log warnings and errors')

    bench = argparse.ArgumentParser(add_help=False)
    bench.add_argument('--config', help='a "key = value" configuration file')
    bench.add_argument('--seq', dest='seqs', action='append', required=True,
                       metavar='DIR', help='a sequence directory; repeatable')
    bench.add_argument('--methods', metavar='LIST',
                       help='comma-separated methods (default: all five)')
    bench.add_argument('--out', required=True, metavar='DIR',
                       help='the output directory')
    bench.add_argument('--lambda-grid', metavar='CSV',
                       help='comma-separated desaturation rates')

    commands = parser.add_subparsers(dest='command', metavar='command')
    commands.required = True
    for name, func, text in [
            ('detect', cmd_detect, 'write the TriMask of every frame'),
            ('eval', cmd_eval, 'score methods against ground truth masks'),
            ('desat-sweep', cmd_desat_sweep,
             'score methods on desaturated frames'),
            ('track-eval', cmd_track_eval,
             'score tracking after shadow removal'),
            ('bench-time', cmd_bench_time, 'time the detectors')]:
        sub = commands.add_parser(name, parents=[bench], help=text)
        sub.set_defaults(func=func)

    synth = commands.add_parser('synth',
                                help='write the synthetic sequences')
    synth.add_argument('--out', required=True, metavar='DIR')
    synth.add_argument('--scenes', metavar='LIST',
                       help='comma-separated scenes (default: all)')
    synth.add_argument('--frames', type=int, default=40)
    synth.add_argument('--seed', type=int, default=0)
    synth.set_defaults(func=cmd_synth)
    return parser


def main(argv=None):
    """Run the command line; returns the process exit code.

    Usage errors exit with status 2 through argparse.
    """
    args = _parser().parse_args(argv)
    level = logging.INFO
    if args.verbose:
        level = logging.DEBUG
    elif args.quiet:
        level = logging.WARNING
    logging.basicConfig(
        level=level, format='%(asctime)s %(levelname)s %(name)s: %(message)s')

    try:
        args.func(args)
    except ShadowBenchError as e:
        logger.error("%s", e)
        return exit_code_for(e)
    return 0
