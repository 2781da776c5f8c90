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
Closed-form output weight solvers.

Every layer classifier of the network is a linear map ``D -> Y`` whose
coefficients are computed in one shot, either by ridge regression (primal or
dual form, optionally with per-sample weights) or with the Moore-Penrose
pseudoinverse.
"""

import logging

import numpy as np
import scipy.linalg as la

logger = logging.getLogger(__name__)

RIDGE = 'ridge'
PSEUDOINVERSE = 'pinv'
SOLVER_METHODS = (RIDGE, PSEUDOINVERSE)


class SolverError(Exception):
    """ Any error relative to the computation of output weights.
    """
    pass


class SingularSystem(SolverError):
    """ The regularized Gram matrix could not be factorized.
    """
    pass


class DimensionMismatch(SolverError):
    """ Operands with incompatible shapes.
    """
    pass


class NegativeWeight(SolverError):
    """ A sample weight below zero was given to a weighted solve.
    """
    pass


class EmptyMatrix(SolverError):
    """ An operation that needs at least one row got none.
    """
    pass


class NonFiniteValues(SolverError):
    """ NaN or infinite entries found in a solver operand.
    """
    pass


def as_finite_matrix(values, name='matrix'):
    """
    Converts values to a two dimensional float64 array, checking that all the
    entries are finite.

    :param values: array-like with two dimensions.
    :param name: name of the operand, used in error messages.
    :type name: string
    :returns: the converted matrix.
    :rtype: numpy.ndarray
    :raises: :py:exc:`DimensionMismatch`, :py:exc:`NonFiniteValues`
    """
    matrix = np.asarray(values, dtype=np.float64)
    if matrix.ndim != 2:
        raise DimensionMismatch(
            '%s must be two dimensional, got shape %s' % (name, matrix.shape))
    if not np.all(np.isfinite(matrix)):
        raise NonFiniteValues('%s has NaN or infinite entries' % name)
    return matrix


def _prepare_system(D, Y, lam):
    D = as_finite_matrix(D, 'design matrix')
    Y = np.asarray(Y, dtype=np.float64)
    if Y.ndim == 1:
        Y = Y.reshape(-1, 1)
    Y = as_finite_matrix(Y, 'target matrix')
    if D.shape[0] != Y.shape[0]:
        raise DimensionMismatch(
            'design matrix has %d rows but target matrix has %d' % (
                D.shape[0], Y.shape[0]))
    if not np.isfinite(lam) or lam < 0:
        raise SolverError('lambda must be a finite non-negative value, '
                          'got %r' % lam)
    return D, Y, float(lam)


def _prepare_weights(w, rows):
    w = np.asarray(w, dtype=np.float64)
    if w.ndim != 1 or w.shape[0] != rows:
        raise DimensionMismatch(
            'expected %d sample weights, got shape %s' % (rows, w.shape))
    if not np.all(np.isfinite(w)):
        raise NonFiniteValues('sample weights have NaN or infinite entries')
    if np.any(w < 0):
        raise NegativeWeight(
            'sample weight %r at position %d is negative' % (
                float(w.min()), int(np.argmin(w))))
    return w


def _spd_solve(gram, rhs, lam):
    """
    Solves ``gram * x = rhs`` through a Cholesky factorization of the
    symmetric matrix ``gram`` (regularization already added).
    """
    try:
        factor = la.cho_factor(gram, lower=True, check_finite=False)
    except la.LinAlgError as e:
        raise SingularSystem(
            'Gram matrix of order %d is singular (lambda=%r): %s' % (
                gram.shape[0], lam, e))
    if lam == 0 and gram.shape[0] > 0:
        # Cholesky succeeds on some singular matrices thanks to rounding
        pivots = np.abs(np.diag(factor[0]))
        tolerance = np.sqrt(gram.shape[0] * np.finfo(np.float64).eps)
        if pivots.min() <= tolerance * pivots.max():
            raise SingularSystem(
                'Gram matrix of order %d is numerically singular and '
                'lambda is 0' % gram.shape[0])
    return la.cho_solve(factor, rhs, check_finite=False)


def _add_ridge(gram, lam):
    gram[np.diag_indices_from(gram)] += lam
    return gram


def solve_ridge_primal(D, Y, lam):
    """
    Ridge regression in the primal space, ``(D'D + lambda I)^-1 D'Y``.

    :param D: design matrix, samples by features.
    :param Y: target matrix, samples by classes.
    :param lam: regularization, non-negative.
    :type lam: float
    :returns: output weights, features by classes.
    :rtype: numpy.ndarray
    :raises: :py:exc:`SingularSystem`, :py:exc:`DimensionMismatch`
    """
    D, Y, lam = _prepare_system(D, Y, lam)
    gram = _add_ridge(D.T.dot(D), lam)
    return _spd_solve(gram, D.T.dot(Y), lam)


def solve_ridge_dual(D, Y, lam):
    """
    Ridge regression in the dual space, ``D' (DD' + lambda I)^-1 Y``.

    Cheaper than the primal form when there are more features than samples.

    :param D: design matrix, samples by features.
    :param Y: target matrix, samples by classes.
    :param lam: regularization, non-negative.
    :type lam: float
    :returns: output weights, features by classes.
    :rtype: numpy.ndarray
    :raises: :py:exc:`SingularSystem`, :py:exc:`DimensionMismatch`
    """
    D, Y, lam = _prepare_system(D, Y, lam)
    kernel = _add_ridge(D.dot(D.T), lam)
    return D.T.dot(_spd_solve(kernel, Y, lam))


def use_primal(D):
    """
    Shape rule shared by every dispatching solver: the primal form is used
    unless there are more columns than rows.
    """
    rows, columns = np.shape(D)
    return columns <= rows


def solve_ridge_auto(D, Y, lam):
    """
    Ridge regression dispatched by shape, see :func:`use_primal`.
    """
    if use_primal(D):
        return solve_ridge_primal(D, Y, lam)
    return solve_ridge_dual(D, Y, lam)


def solve_weighted_ridge(D, Y, lam, w):
    """
    Ridge regression where every sample contributes to the loss with its own
    weight, ``(D'W*D + lambda I)^-1 D'W*Y`` with ``W* = diag(w)``.

    Wide systems use the dual form ``D'S (SDD'S + lambda I)^-1 SY`` with
    ``S = diag(sqrt(w))``, which keeps the factorized matrix symmetric and
    is algebraically the same solution.

    :param D: design matrix, samples by features.
    :param Y: target matrix, samples by classes.
    :param lam: regularization, non-negative.
    :type lam: float
    :param w: non-negative sample weights, one per row of D.
    :returns: output weights, features by classes.
    :rtype: numpy.ndarray
    :raises: :py:exc:`SingularSystem`, :py:exc:`DimensionMismatch`,
        :py:exc:`NegativeWeight`
    """
    D, Y, lam = _prepare_system(D, Y, lam)
    w = _prepare_weights(w, D.shape[0])
    if use_primal(D):
        weighted = D * w[:, np.newaxis]
        gram = _add_ridge(D.T.dot(weighted), lam)
        return _spd_solve(gram, weighted.T.dot(Y), lam)
    root = np.sqrt(w)[:, np.newaxis]
    scaled = D * root
    kernel = _add_ridge(scaled.dot(scaled.T), lam)
    return scaled.T.dot(_spd_solve(kernel, root * Y, lam))


def solve_pseudoinverse(D, Y):
    """
    Minimum norm least squares solution ``D^+ Y``.

    :param D: design matrix, samples by features.
    :param Y: target matrix, samples by classes.
    :returns: output weights, features by classes.
    :rtype: numpy.ndarray
    :raises: :py:exc:`DimensionMismatch`
    """
    D, Y, _ = _prepare_system(D, Y, 0.0)
    return la.pinv(D).dot(Y)


def solve_output_weights(D, Y, lam, weights=None, method=RIDGE):
    """
    Entry point used by the network to solve one layer classifier.

    :param D: design matrix, samples by features.
    :param Y: target matrix, samples by classes.
    :param lam: ridge regularization, ignored by the pseudoinverse.
    :type lam: float
    :param weights: optional sample weights; None means unweighted.
    :param method: ``'ridge'`` or ``'pinv'``.
    :type method: string
    :returns: output weights, features by classes.
    """
    if method == RIDGE:
        if weights is None:
            return solve_ridge_auto(D, Y, lam)
        return solve_weighted_ridge(D, Y, lam, weights)
    if method == PSEUDOINVERSE:
        if weights is None:
            return solve_pseudoinverse(D, Y)
        D, Y, _ = _prepare_system(D, Y, 0.0)
        root = np.sqrt(_prepare_weights(weights, D.shape[0]))[:, np.newaxis]
        return solve_pseudoinverse(D * root, Y * root)
    raise SolverError('Unknown solver method %r, expected one of %s' % (
        method, ', '.join(SOLVER_METHODS)))
