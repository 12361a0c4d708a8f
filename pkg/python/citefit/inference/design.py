# Copyright (c) 2026 The citefit developers
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You may obtain a copy of the License at
#     https://www.gnu.org/licenses/gpl-3.0.txt

import numpy as np

from ..errors import DomainError, InsufficientDataError

__all__ = ['DesignMatrix', 'INTERCEPT']

INTERCEPT = 'intercept'


class DesignMatrix:
    r"""
    Predictors and response of a linear regression.

    Parameters
    ----------
    names : list of str
        Column names, unique. A column named ``'intercept'`` marks a model with
        intercept (centred :math:`R^2`).
    X : array (n, p)
    y : array (n,)
        Response.
    response : str
        Name of the response, for reports.

    Raises
    ------
    DomainError
        Non finite entries, or repeated column names.
    InsufficientDataError
        :math:`n \leq p`.
    """

    def __init__(self, names, X, y, response = 'y'):
        X = np.array(X, dtype=float, ndmin=2)
        y = np.array(y, dtype=float).ravel()
        assert X.ndim == 2, "DesignMatrix : X must be a 2d array"
        assert X.shape[0] == len(y), "DesignMatrix : X has %d rows but y has %d entries" % (X.shape[0], len(y))
        assert X.shape[1] == len(names), "DesignMatrix : %d names for %d columns" % (len(names), X.shape[1])
        names = [str(n) for n in names]
        if len(set(names)) != len(names):
            raise DomainError("design columns are not unique: %s" % names)
        bad = [n for n, ok in zip(names, np.isfinite(X).all(axis=0)) if not ok]
        if bad:
            raise DomainError("non finite values in design columns %s" % bad)
        if not np.isfinite(y).all():
            raise DomainError("non finite values in the response %s" % response)
        if X.shape[0] <= X.shape[1]:
            raise InsufficientDataError("%d observations for %d coefficients" % X.shape)
        self.names, self.X, self.y, self.response = names, X, y, response

    @classmethod
    def from_columns(cls, columns, y, intercept = True, response = 'y'):
        """
        Build from a mapping name -> 1d array (in order), prepending an intercept column if requested.
        """
        names = list(columns)
        cols = [np.asarray(columns[n], dtype=float) for n in names]
        if intercept:
            names.insert(0, INTERCEPT)
            cols.insert(0, np.ones(len(y)))
        return cls(names, np.column_stack(cols) if cols else np.zeros((len(y), 0)), y, response)

    @property
    def n(self): return self.X.shape[0]

    @property
    def p(self): return self.X.shape[1]

    @property
    def has_intercept(self): return INTERCEPT in self.names

    def permuted(self, order):
        """The same regression with rows reordered."""
        order = np.asarray(order)
        return DesignMatrix(self.names, self.X[order], self.y[order], self.response)

    def __repr__(self):
        return "DesignMatrix(%d x %d, %s ~ %s)" % (self.n, self.p, self.response, " + ".join(self.names))
