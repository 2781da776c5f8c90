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
Cross-validated evaluation: grid search with an inner validation split,
repetitions over hidden-weight seeds and one-parameter sweeps.
"""

import csv
import json
import logging
import time

import numpy as np
from joblib import Parallel, delayed

from edrvfl.folds import stratified_kfold, train_val_split
from edrvfl.hyperparams import HyperParams
from edrvfl.network import predict, train
from edrvfl.stats import accuracy, mean_std
from edrvfl.variants import variant_factory

logger = logging.getLogger(__name__)

DEFAULT_FOLDS = 4
DEFAULT_VAL_FRACTION = 0.25
DEFAULT_REPETITIONS = 10

SWEEP_PARAMETERS = ('omega_r', 'p')


class EvaluationError(Exception):
    pass


class RunResult(object):
    """
    Outcome of evaluating one variant on one dataset over one or more
    hidden-weight seeds.

    :param dataset: dataset name.
    :param variant: variant name.
    :param seeds: hidden-weight seed of every repetition.
    :param fold_seed: seed of the fold partition shared by all repetitions.
    :param fold_accuracies: test accuracy of every fold, per repetition.
    :param chosen: hyper-parameters selected in every repetition.
    :param seconds: wall-clock time, not part of :py:meth:`to_dict`.
    """
    def __init__(self, dataset, variant, seeds, fold_seed, fold_accuracies,
                 chosen, seconds=0.0):
        self.dataset = dataset
        self.variant = variant
        self.seeds = [int(s) for s in seeds]
        self.fold_seed = int(fold_seed)
        self.fold_accuracies = [[float(a) for a in run]
                                for run in fold_accuracies]
        self.chosen = [HyperParams(hp) for hp in chosen]
        self.seconds = float(seconds)
        if not (len(self.seeds) == len(self.fold_accuracies) ==
                len(self.chosen)) or not self.seeds:
            raise EvaluationError('one seed, fold list and configuration '
                                  'is needed per repetition')

    @property
    def seed_means(self):
        return [mean_std(run)[0] for run in self.fold_accuracies]

    @property
    def mean(self):
        return mean_std(self.seed_means)[0]

    @property
    def std(self):
        return mean_std(self.seed_means)[1]

    @classmethod
    def combine(cls, results):
        """
        Joins single-seed results of the same dataset and variant.
        """
        results = list(results)
        if not results:
            raise EvaluationError('nothing to combine')
        first = results[0]
        return cls(first.dataset, first.variant,
                   [s for r in results for s in r.seeds], first.fold_seed,
                   [a for r in results for a in r.fold_accuracies],
                   [hp for r in results for hp in r.chosen],
                   sum(r.seconds for r in results))

    def to_dict(self):
        return {
            'dataset': self.dataset,
            'variant': self.variant,
            'seeds': self.seeds,
            'fold_seed': self.fold_seed,
            'fold_accuracies': self.fold_accuracies,
            'seed_means': self.seed_means,
            'mean': self.mean,
            'std': self.std,
            'chosen': [dict(hp) for hp in self.chosen],
        }

    @classmethod
    def from_dict(cls, document, seconds=0.0):
        try:
            return cls(document['dataset'], document['variant'],
                       document['seeds'], document['fold_seed'],
                       document['fold_accuracies'], document['chosen'],
                       seconds)
        except (KeyError, TypeError, ValueError) as e:
            raise EvaluationError('Malformed run result: %s' % e)

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True)

    def __repr__(self):
        return 'RunResult(dataset=%r, variant=%r, mean=%.4f, std=%.4f)' % (
            self.dataset, self.variant, self.mean, self.std)


def _fit_and_score(fit_set, test_features, test_y, hp):
    model, _ = train(fit_set, hp)
    labels, _ = predict(model, test_features)
    return accuracy(labels, test_y)


def _parallel(jobs):
    return Parallel(n_jobs=jobs, prefer='processes')


def cross_validate(dataset, hp, plan, jobs=1):
    """
    Test accuracy of one configuration on every fold of ``plan``, training
    on the whole fold-training part.

    :returns: list with one accuracy per fold.
    """
    return _parallel(jobs)(
        delayed(_fit_and_score)(dataset.subset(train_idx),
                                dataset.features[test_idx],
                                dataset.y[test_idx], hp)
        for train_idx, test_idx in plan)


def validation_accuracies(dataset, points, plan, val_fraction, jobs=1):
    """
    Validation accuracy of every grid point on every fold. Each fold
    holds out ``val_fraction`` of its training part, split with the seed
    ``[plan.seed, fold]``.

    :returns: matrix of grid points x folds.
    """
    splits = []
    for fold, (train_idx, _) in enumerate(plan):
        fit, val = train_val_split(train_idx, dataset.y, val_fraction,
                                   [plan.seed, fold])
        splits.append((dataset.subset(fit), dataset.features[val],
                       dataset.y[val]))
    scores = _parallel(jobs)(
        delayed(_fit_and_score)(fit_set, val_features, val_y, hp)
        for hp in points
        for fit_set, val_features, val_y in splits)
    return np.array(scores, dtype=np.float64).reshape(len(points),
                                                      len(splits))


def run_cv(dataset, variant, grid, folds=DEFAULT_FOLDS,
           val_fraction=DEFAULT_VAL_FRACTION, seed=0, fold_seed=None,
           jobs=1, base=None):
    """
    Evaluates a variant on a dataset by k-fold cross-validation.

    Every grid point is scored on a validation part of each fold; the one
    with the best average validation accuracy (first in grid order on ties)
    is re-trained on each whole fold-training part and scored on the fold
    test part.

    :param dataset: whole dataset with raw features.
    :type dataset: :py:class:`edrvfl.dataset.Dataset`
    :param variant: variant name or object.
    :param grid: candidate hyper-parameters.
    :type grid: :py:class:`edrvfl.grid.GridSpec`
    :param seed: hidden-weight seed.
    :param fold_seed: seed of the fold partition, ``seed`` if None.
    :param jobs: number of joblib workers.
    :param base: hyper-parameters not covered by the grid.
    :rtype: :py:class:`RunResult`
    """
    start = time.time()
    variant = variant_factory(variant)
    fold_seed = seed if fold_seed is None else fold_seed
    base = variant.constrain((base or HyperParams()).replace(seed=seed))
    points = list(variant.restrict_grid(grid).points(base))
    plan = stratified_kfold(dataset.y, folds, fold_seed)

    if len(points) == 1:
        chosen = points[0]
    else:
        scores = validation_accuracies(dataset, points, plan, val_fraction,
                                       jobs)
        best = int(np.argmax(scores.mean(axis=1)))
        chosen = points[best]
        logger.debug('%s on %s: %r chosen among %d points', variant.name,
                     dataset.name, chosen, len(points))
    fold_accuracies = cross_validate(dataset, chosen, plan, jobs)
    result = RunResult(dataset.name, variant.name, [seed], fold_seed,
                       [fold_accuracies], [chosen], time.time() - start)
    logger.info('%s on %s with seed %d: %.4f', variant.name, dataset.name,
                seed, result.mean)
    return result


def repeat_runs(dataset, variant, grid, repetitions=DEFAULT_REPETITIONS,
                base_seed=0, fold_seed=None, folds=DEFAULT_FOLDS,
                val_fraction=DEFAULT_VAL_FRACTION, jobs=1, base=None):
    """
    Runs :func:`run_cv` with seeds ``base_seed .. base_seed + repetitions
    - 1``. The fold partition stays the same for every repetition, only the
    random hidden weights change.

    :rtype: :py:class:`RunResult`
    """
    if repetitions < 1:
        raise EvaluationError('at least one repetition is needed, got %r' %
                              repetitions)
    fold_seed = base_seed if fold_seed is None else fold_seed
    return RunResult.combine(
        run_cv(dataset, variant, grid, folds, val_fraction, seed, fold_seed,
               jobs, base)
        for seed in range(base_seed, base_seed + repetitions))


def controlled_hyperparams(**changes):
    """
    Fixed configuration of the weighting and pruning sweeps: lambda 1,
    500 neurons, 3 layers, gamma 1, alpha 0.
    """
    values = {'lambda': 1.0, 'n': 500, 'l_max': 3, 'gamma': 1.0,
              'alpha': 0.0}
    values.update(changes)
    return HyperParams(values)


def sweep(dataset, parameter, values, fixed=None, folds=DEFAULT_FOLDS,
          fold_seed=0, jobs=1):
    """
    Mean cross-validated test accuracy for each value of ``omega_r`` or
    ``p``, every other hyper-parameter held at ``fixed``. Sweeping one of
    them requires the other to be disabled.

    :returns: list of ``(value, accuracy)`` rows.
    :raises: :py:exc:`EvaluationError`
    """
    if parameter not in SWEEP_PARAMETERS:
        raise EvaluationError('sweep parameter must be one of %s, got %r' % (
            ', '.join(SWEEP_PARAMETERS), parameter))
    fixed = fixed or controlled_hyperparams()
    if parameter == 'p' and fixed.weighting:
        raise EvaluationError('omega_r must be 1 when sweeping p')
    if parameter == 'omega_r' and fixed.pruning:
        raise EvaluationError('p must be 0 when sweeping omega_r')
    values = list(values)
    if not values:
        raise EvaluationError('nothing to sweep')
    plan = stratified_kfold(dataset.y, folds, fold_seed)
    rows = []
    for value in values:
        hp = fixed.replace(**{parameter: value})
        mean, _ = mean_std(cross_validate(dataset, hp, plan, jobs))
        logger.info('%s=%r on %s: %.4f', parameter, value, dataset.name,
                    mean)
        rows.append((hp[parameter], mean))
    return rows


def write_sweep_csv(rows, out, parameter):
    writer = csv.writer(out, lineterminator='\n')
    writer.writerow([parameter, 'accuracy'])
    for value, mean in rows:
        writer.writerow([repr(value), repr(mean)])


def write_results(results, out):
    """
    Writes one JSON line per :py:class:`RunResult`.
    """
    for result in results:
        out.write(result.to_json() + '\n')


def read_results(path):
    """
    Reads a results file. Lines holding only ``dataset``, ``variant`` and
    ``mean`` (published results of other methods) are returned as dicts,
    the rest as :py:class:`RunResult`.

    :raises: :py:exc:`EvaluationError`
    """
    results = []
    try:
        with open(path) as fd:
            for number, line in enumerate(fd, 1):
                if not line.strip():
                    continue
                try:
                    document = json.loads(line)
                except ValueError as e:
                    raise EvaluationError('%s:%d: %s' % (path, number, e))
                if isinstance(document, dict) and 'fold_accuracies' in \
                        document:
                    results.append(RunResult.from_dict(document))
                elif isinstance(document, dict) and \
                        {'dataset', 'variant', 'mean'} <= set(document):
                    results.append(document)
                else:
                    raise EvaluationError(
                        '%s:%d: not a run result' % (path, number))
    except OSError as e:
        raise EvaluationError('Cannot read results %s: %s' % (path, e))
    return results
