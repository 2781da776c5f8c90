#!/usr/bin/env python
#
# Copyright 2026 The edrvfl Developers
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
#

"""
Command line entry point::

    edrvfl train data.csv --label-column class --variant wpedrvfl \
        --hp omega_r=0.6 --hp p=0.3 --seed 1 --out run/
    edrvfl predict run/model.json new.csv
    edrvfl benchmark manifest.json --variants edrvfl,wpedrvfl --seed 0
    edrvfl sweep data.csv --parameter p --values 0,0.2,0.4,0.6,0.8
    edrvfl compare run/results.jsonl published.jsonl
"""

import argparse
import json
import logging
import os
import sys

from edrvfl import __version__
from edrvfl.comparison import build_report, render_table
from edrvfl.config import ConfigError, RunConfig, load_run_config
from edrvfl.dataset import DatasetError, decode_labels, load_dataset, \
    load_feature_csv, load_manifest, load_manifest_entry
from edrvfl.evaluation import EvaluationError, controlled_hyperparams, \
    read_results, repeat_runs, sweep, write_results, write_sweep_csv
from edrvfl.grid import GridError, coarse_grid, grid_from_dict, load_grid
from edrvfl.hyperparams import HyperParams, HyperParamsError
from edrvfl.layer import NetworkError
from edrvfl.model_io import ModelFileError, load_model, save_model
from edrvfl.network import depth_profile, predict, train
from edrvfl.result_store import ResultStore, ResultStoreError, result_key
from edrvfl.solvers import SolverError
from edrvfl.stats import IncompleteMatrix, StatsError, accuracy
from edrvfl.variants import variant_factory

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_DATA = 3
EXIT_NUMERIC = 4

CONFIG_ERRORS = (ConfigError, HyperParamsError, GridError, EvaluationError)
DATA_ERRORS = (DatasetError, ModelFileError, StatsError, ResultStoreError)
NUMERIC_ERRORS = (SolverError, NetworkError)

MODEL_FILE = 'model.json'
TRAIN_REPORT_FILE = 'train_report.json'
RESULTS_FILE = 'results.jsonl'
TIMINGS_FILE = 'timings.jsonl'
COMPARISON_FILE = 'comparison.json'
COMPARISON_TABLE_FILE = 'comparison.txt'


def _hp_assignment(text):
    if '=' not in text:
        raise argparse.ArgumentTypeError(
            'expected key=value, got %r' % text)
    key, value = text.split('=', 1)
    try:
        value = json.loads(value)
    except ValueError:
        pass
    return key.strip(), value


def _float_list(text):
    try:
        return [float(v) for v in text.split(',') if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(
            'expected comma separated numbers, got %r' % text)


def _name_list(text):
    return [v.strip() for v in text.split(',') if v.strip()]


def _dump_json(document, path):
    with open(path, 'w') as out:
        json.dump(document, out, sort_keys=True, indent=2)
        out.write('\n')


def _output_dir(config):
    directory = config.out or '.'
    os.makedirs(directory, exist_ok=True)
    return directory


def _load_config(args):
    config = load_run_config(args.config) if args.config else RunConfig()
    flags = dict(seed=args.seed, jobs=args.jobs, out=args.out)
    for name in ('dataset', 'label_column', 'variant', 'variants', 'folds',
                 'val_fraction', 'repetitions', 'fold_seed'):
        flags[name] = getattr(args, name, None)
    if getattr(args, 'has_header', None) is not None:
        flags['has_header'] = args.has_header
    if getattr(args, 'hp', None):
        hyperparams = dict(config.hyperparams)
        hyperparams.update(args.hp)
        flags['hyperparams'] = hyperparams
    if getattr(args, 'grid', None):
        flags['grid'] = args.grid
    return config.override(**flags)


def _hyperparams(config, variant, seed, defaults=None):
    values = dict(defaults or {})
    values.update(config.hyperparams)
    values.setdefault('renormalize', variant.RENORMALIZE)
    values['seed'] = seed
    return variant.check(HyperParams(values))


def _grid(config):
    if config.grid is None:
        return coarse_grid()
    if isinstance(config.grid, dict):
        return grid_from_dict(config.grid)
    return load_grid(config.grid)


def _require_dataset(config):
    if not config.dataset:
        raise ConfigError('dataset is required')
    return config.dataset


def cmd_train(args):
    config = _load_config(args)
    seed = config.seed
    if seed is None:
        logger.warning('No seed given, using 0')
        seed = 0
    variant = variant_factory(config.variant)
    hp = _hyperparams(config, variant, seed)
    dataset = load_dataset(_require_dataset(config), config.label_column,
                           config.has_header)
    model, outputs = train(dataset, hp)
    directory = _output_dir(config)
    save_model(model, os.path.join(directory, MODEL_FILE))
    report = {
        'dataset': dataset.name,
        'variant': variant.name,
        'hyperparams': dict(hp),
        'layer_accuracies': [accuracy(labels, dataset.y)
                             for labels in outputs.labels],
        'depth_profile': depth_profile(model, dataset.features, dataset.y),
        'sample_weights': [
            None if w is None else {'min': float(w.min()),
                                    'max': float(w.max())}
            for w in outputs.sample_weights],
    }
    _dump_json(report, os.path.join(directory, TRAIN_REPORT_FILE))
    logger.info('Trained %s on %s: ensemble training accuracy %.4f',
                variant.name, dataset.name, report['depth_profile'][-1])
    return EXIT_OK


def cmd_predict(args):
    model = load_model(args.model)
    features = load_feature_csv(args.csv, bool(args.has_header),
                                args.label_column)
    if features.shape[0] and features.shape[1] != model.d:
        raise DatasetError('%s has %d feature columns, the model expects %d'
                           % (args.csv, features.shape[1], model.d))
    labels, _ = predict(model, features)
    out = open(args.out, 'w') if args.out else sys.stdout
    try:
        for label in decode_labels(labels, model.label_names):
            out.write('%s\n' % label)
    finally:
        if args.out:
            out.close()
    return EXIT_OK


def _manifest_entries(config):
    path = _require_dataset(config)
    if path.lower().endswith('.json'):
        return load_manifest(path)
    return [{'name': os.path.splitext(os.path.basename(path))[0],
             'path': path, 'label_column': config.label_column,
             'has_header': config.has_header}]


def cmd_benchmark(args):
    config = _load_config(args)
    if config.seed is None:
        raise ConfigError('seed is required for benchmarks')
    variants = [variant_factory(name) for name in config.variants]
    grid = _grid(config)
    base = HyperParams(config.hyperparams)
    entries = _manifest_entries(config)
    fold_seed = config.seed if config.fold_seed is None else config.fold_seed
    protocol = {
        'grid': grid.to_dict(),
        'base': dict(base.replace(seed=0)),
        'folds': config.folds,
        'val_fraction': config.val_fraction,
        'repetitions': config.repetitions,
        'fold_seed': fold_seed,
    }
    store = ResultStore(args.store) if args.store else None

    results = []
    for entry in entries:
        try:
            dataset = load_manifest_entry(entry)
        except DatasetError as e:
            logger.error('Dataset %s skipped: %s', entry['name'], e)
            continue
        for variant in variants:
            key = result_key(dataset.name, variant.name, config.seed,
                             protocol)
            result = store.lookup(key) if store is not None else None
            if result is not None:
                logger.info('%s on %s already in the store', variant.name,
                            dataset.name)
            else:
                try:
                    result = repeat_runs(
                        dataset, variant, grid, config.repetitions,
                        config.seed, fold_seed, config.folds,
                        config.val_fraction, config.jobs, base)
                except DATA_ERRORS + NUMERIC_ERRORS:
                    logger.exception('%s on %s failed', variant.name,
                                     dataset.name)
                    continue
                if store is not None:
                    store.record(key, result)
            results.append(result)
    if store is not None:
        store.close()
    if not results:
        logger.error('No dataset could be evaluated')
        return EXIT_DATA

    directory = _output_dir(config)
    with open(os.path.join(directory, RESULTS_FILE), 'w') as out:
        write_results(results, out)
    with open(os.path.join(directory, TIMINGS_FILE), 'w') as out:
        for result in results:
            out.write(json.dumps({'dataset': result.dataset,
                                  'variant': result.variant,
                                  'seconds': result.seconds},
                                 sort_keys=True) + '\n')
    try:
        report = build_report(results)
    except IncompleteMatrix as e:
        logger.warning('No comparison report: %s', e)
        return EXIT_OK
    _dump_json(report.to_dict(), os.path.join(directory, COMPARISON_FILE))
    with open(os.path.join(directory, COMPARISON_TABLE_FILE), 'w') as out:
        out.write(render_table(report))
    return EXIT_OK


def cmd_sweep(args):
    config = _load_config(args)
    seed = 0 if config.seed is None else config.seed
    variant = variant_factory('wpedrvfl')
    fixed = _hyperparams(config, variant, seed,
                         defaults=dict(controlled_hyperparams()))
    dataset = load_dataset(_require_dataset(config), config.label_column,
                           config.has_header)
    fold_seed = seed if config.fold_seed is None else config.fold_seed
    rows = sweep(dataset, args.parameter, args.values, fixed, config.folds,
                 fold_seed, config.jobs)
    if config.out:
        with open(config.out, 'w', newline='') as out:
            write_sweep_csv(rows, out, args.parameter)
    else:
        write_sweep_csv(rows, sys.stdout, args.parameter)
    return EXIT_OK


def cmd_compare(args):
    results = []
    for path in args.results:
        results.extend(read_results(path))
    report = build_report(results)
    sys.stdout.write(render_table(report))
    if args.out:
        os.makedirs(args.out, exist_ok=True)
        _dump_json(report.to_dict(), os.path.join(args.out, COMPARISON_FILE))
    return EXIT_OK


def _common_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--config', help='JSON run configuration')
    common.add_argument('--seed', type=int, help='random seed')
    common.add_argument('--jobs', type=int, help='parallel workers')
    common.add_argument('--out', help='output directory or file')
    common.add_argument('--log-level', default='WARNING',
                        choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'])
    common.add_argument('-v', '--verbose', action='count', default=0)
    return common


def _dataset_arguments(parser):
    parser.add_argument('dataset', nargs='?', help='CSV file')
    parser.add_argument('--label-column', help='label column name or index')
    parser.add_argument('--no-header', dest='has_header',
                        action='store_false', default=None)


def build_parser():
    common = _common_parser()
    parser = argparse.ArgumentParser(
        prog='edrvfl', description='Ensemble deep random vector functional '
        'link networks with sample weighting and neuron pruning.')
    parser.add_argument('--version', action='version', version=__version__)
    commands = parser.add_subparsers(dest='command_name', metavar='command')
    commands.required = True

    train_parser = commands.add_parser('train', parents=[common],
                                       help='train one network')
    _dataset_arguments(train_parser)
    train_parser.add_argument('--variant')
    train_parser.add_argument('--hp', type=_hp_assignment, action='append',
                              metavar='KEY=VALUE')
    train_parser.set_defaults(command=cmd_train)

    predict_parser = commands.add_parser('predict', parents=[common],
                                         help='predict labels')
    predict_parser.add_argument('model')
    predict_parser.add_argument('csv')
    predict_parser.add_argument('--label-column',
                                help='column to ignore, if present')
    predict_parser.add_argument('--has-header', action='store_true')
    predict_parser.set_defaults(command=cmd_predict)

    benchmark_parser = commands.add_parser(
        'benchmark', parents=[common], help='cross-validate variants')
    benchmark_parser.add_argument('dataset', nargs='?',
                                  help='dataset manifest or CSV file')
    benchmark_parser.add_argument('--label-column')
    benchmark_parser.add_argument('--no-header', dest='has_header',
                                  action='store_false', default=None)
    benchmark_parser.add_argument('--variants', type=_name_list)
    benchmark_parser.add_argument('--grid', help='JSON grid file')
    benchmark_parser.add_argument('--hp', type=_hp_assignment,
                                  action='append', metavar='KEY=VALUE')
    benchmark_parser.add_argument('--folds', type=int)
    benchmark_parser.add_argument('--val-fraction', dest='val_fraction',
                                  type=float)
    benchmark_parser.add_argument('--repetitions', type=int)
    benchmark_parser.add_argument('--fold-seed', dest='fold_seed', type=int)
    benchmark_parser.add_argument('--store', help='sqlite file of finished '
                                  'results to resume from')
    benchmark_parser.set_defaults(command=cmd_benchmark)

    sweep_parser = commands.add_parser(
        'sweep', parents=[common], help='accuracy against omega_r or p')
    _dataset_arguments(sweep_parser)
    sweep_parser.add_argument('--parameter', required=True,
                              choices=['omega_r', 'p'])
    sweep_parser.add_argument('--values', required=True, type=_float_list)
    sweep_parser.add_argument('--hp', type=_hp_assignment, action='append',
                              metavar='KEY=VALUE')
    sweep_parser.add_argument('--folds', type=int)
    sweep_parser.add_argument('--fold-seed', dest='fold_seed', type=int)
    sweep_parser.set_defaults(command=cmd_sweep)

    compare_parser = commands.add_parser(
        'compare', parents=[common], help='rank and test results files')
    compare_parser.add_argument('results', nargs='+')
    compare_parser.set_defaults(command=cmd_compare)
    return parser


def configure_logging(level, verbose=0):
    if verbose:
        level = 'INFO' if verbose == 1 else 'DEBUG'
    logging.basicConfig(
        stream=sys.stderr, level=getattr(logging, level),
        format='%(asctime)s %(levelname)s %(name)s: %(message)s')


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_CONFIG if e.code else EXIT_OK
    configure_logging(args.log_level, args.verbose)
    try:
        return args.command(args)
    except CONFIG_ERRORS as e:
        sys.stderr.write('edrvfl: configuration error: %s\n' % e)
        return EXIT_CONFIG
    except DATA_ERRORS as e:
        sys.stderr.write('edrvfl: data error: %s\n' % e)
        return EXIT_DATA
    except NUMERIC_ERRORS as e:
        sys.stderr.write('edrvfl: numeric error: %s\n' % e)
        return EXIT_NUMERIC


if __name__ == '__main__':
    sys.exit(main())
