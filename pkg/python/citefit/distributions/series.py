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

r"""
Frequency distributions of scores and linearized tail fits.
"""

import numpy as np
import pandas as pd

from ..errors import DomainError, InsufficientDataError
from ..inference import DesignMatrix, ols_fit

__all__ = ['FrequencySeries', 'distribution', 'compare_distributions', 'observed_vs_predicted', 'TailFit', 'tail_fit',
           'power_law', 'exponential', 'families']

KINDS = ('discrete', 'cumulative')
BINNINGS = ('unit', 'log')


class FrequencySeries:
    """
    Points (x, y) of a score distribution.

    Attributes
    ----------
    x : array, strictly increasing
    y : array
        Counts (``discrete``) or survival counts :math:`\\#\\{X \\geq x\\}` (``cumulative``).
    kind : {'discrete', 'cumulative'}
    x_log, y_log : bool
        Suggested axis scales.
    n_excluded : int
        Scores left out because they cannot be placed on a log axis (<= 0).
    """

    def __init__(self, x, y, kind, x_log = False, y_log = False, n_excluded = 0, label = ''):
        assert kind in KINDS, "unknown distribution kind %r" % kind
        self.x, self.y = np.asarray(x, dtype=float), np.asarray(y, dtype=float)
        assert self.x.shape == self.y.shape, "FrequencySeries : x and y differ in length"
        self.kind, self.x_log, self.y_log = kind, x_log, y_log
        self.n_excluded, self.label = int(n_excluded), label

    def __len__(self): return len(self.x)

    def __iter__(self): return zip(self.x, self.y)

    @property
    def population(self):
        """Number of scores represented."""
        if not len(self): return 0
        return int(self.y.sum() if self.kind == 'discrete' else self.y[0])

    def to_frame(self):
        return pd.DataFrame({'x': self.x, 'y': self.y})

    def _plot_(self, opt_dict):
        """Plot protocol: a single curve, log axes suggested by the series."""
        d = {'xdata': self.x, 'ydata': self.y, 'label': opt_dict.pop('name', self.label or self.kind),
             'plot_function': 'loglog' if self.x_log and self.y_log else 'plot'}
        d.update(opt_dict)
        return [d]

    def __reduce_to_dict__(self):
        return {'x': self.x, 'y': self.y, 'kind': self.kind, 'x_log': self.x_log, 'y_log': self.y_log,
                'n_excluded': self.n_excluded, 'label': self.label}

    @classmethod
    def __factory_from_dict__(cls, name, d):
        return cls(d['x'], d['y'], d['kind'], d.get('x_log', False), d.get('y_log', False),
                   d.get('n_excluded', 0), d.get('label', name))

    def __repr__(self):
        return "FrequencySeries(%s, %d points, population %d)" % (self.kind, len(self), self.population)

#-------------------------------------------------------------

def _survival(counts):
    return counts[::-1].cumsum()[::-1]

def distribution(scores, kind = 'discrete', binning = 'unit', label = ''):
    """
    Distribution of a set of scores.

    Parameters
    ----------
    scores : array-like
    kind : {'discrete', 'cumulative'}
        Counts, or survival counts :math:`\\#\\{X \\geq x\\}`.
    binning : {'unit', 'log'}
        ``unit``: one point per distinct value. ``log``: the positive scores are grouped
        in bins :math:`[2^j x_0, 2^{j+1} x_0)` from the smallest one :math:`x_0`; the point
        sits at the lower bin edge and non positive scores are excluded (counted in
        ``n_excluded``).

    Raises
    ------
    DomainError
        No score to tally.
    """
    assert kind in KINDS, "unknown distribution kind %r" % kind
    assert binning in BINNINGS, "unknown binning %r" % binning
    s = np.asarray(scores, dtype=float).ravel()
    if s.size == 0: raise DomainError("distribution of an empty set of scores")
    if not np.isfinite(s).all(): raise DomainError("non finite scores")
    if binning == 'unit':
        x, counts = np.unique(s, return_counts=True)
        n_excluded = 0
    else:
        positive = s[s > 0]
        n_excluded = s.size - positive.size
        if positive.size == 0: raise DomainError("no positive score to place on a log scale")
        x0 = positive.min()
        j = np.floor(np.log2(positive / x0) + 1.e-12).astype(int)
        counts = np.bincount(j)
        edges = x0 * 2.0 ** np.arange(len(counts))
        keep = counts > 0
        x, counts = edges[keep], counts[keep]
    y = counts if kind == 'discrete' else _survival(counts)
    return FrequencySeries(x, y, kind, x_log=(binning == 'log'), y_log=(binning == 'log' or kind == 'cumulative'),
                           n_excluded=n_excluded, label=label)

def _value_at(series, x):
    i = np.searchsorted(series.x, x, side='left')
    if series.kind == 'discrete':
        hit = (i < len(series)) & (series.x[np.minimum(i, len(series) - 1)] == x)
        return np.where(hit, series.y[np.minimum(i, len(series) - 1)], 0.0)
    # survival is a step function, constant on (x_{j-1}, x_j]
    return np.where(i < len(series), series.y[np.minimum(i, len(series) - 1)], 0.0)

def compare_distributions(observed, predicted):
    """
    Two series of the same kind evaluated on the union of their x values.

    Returns
    -------
    pandas.DataFrame with columns ``x, observed, predicted``.
    """
    assert observed.kind == predicted.kind, "cannot compare %s and %s series" % (observed.kind, predicted.kind)
    x = np.union1d(observed.x, predicted.x)
    return pd.DataFrame({'x': x, 'observed': _value_at(observed, x), 'predicted': _value_at(predicted, x)})

def observed_vs_predicted(observed, predicted, kind = 'cumulative'):
    """
    Observed scores against the scores a fitted model predicts for the same entities.

    Predicted scores below 0 are floored at 0. When the observed scores are integer
    counts (papers) the predicted ones are rounded to the nearest integer as well;
    fractional scores (scholars) are compared as they are. Both distributions then go
    through :func:`compare_distributions`.

    Parameters
    ----------
    observed, predicted : array-like
        Aligned scores, e.g. ``variables.k`` and ``model.predict(variables)``.
    kind : {'discrete', 'cumulative'}
    """
    observed, predicted = np.asarray(observed, dtype=float), np.asarray(predicted, dtype=float)
    assert observed.shape == predicted.shape, "observed_vs_predicted : the score arrays differ in length"
    predicted = np.maximum(predicted, 0.0)
    if np.array_equal(observed, np.rint(observed)): predicted = np.rint(predicted)
    return compare_distributions(distribution(observed, kind, label='observed'),
                                 distribution(predicted, kind, label='predicted'))

##########################################################################
# Linearized tail families, as (function of x and parameters, name, x transform)

power_law   = lambda X, slope, intercept : np.exp(intercept) * X**slope,        "y = exp(%.6g) x^%.6g",       np.log
exponential = lambda X, slope, intercept : np.exp(intercept + slope * X),       "y = exp(%.6g + %.6g x)",     lambda X : X

families = {'power_law': power_law, 'exponential': exponential}


class TailFit:
    """
    Least-squares line through a distribution on log-log (``power_law``) or lin-log
    (``exponential``) axes.

    The object is callable: ``self(x)`` is the fitted curve.

    Attributes
    ----------
    family : str
    slope : float
        Power-law exponent of y, or exponential rate.
    intercept : float
        Of the linearized fit (:math:`\\ln y` at :math:`\\ln x = 0` or :math:`x = 0`).
    r_squared : float
    n_points : int
    x_min : float or None
    fit : FitResult
    """

    def __init__(self, family, fit, n_points, x_min = None):
        self.family, self.fit, self.n_points, self.x_min = family, fit, n_points, x_min
        self.function, self.fname, _ = families[family]
        self.intercept, self.slope = (float(v) for v in fit.estimates)
        self.r_squared = fit.r_squared

    @property
    def density_exponent(self):
        """For a power-law fit of a survival distribution, the exponent of the density, 1 - slope."""
        return 1.0 - self.slope

    def __call__(self, x): return self.function(np.asarray(x, dtype=float), self.slope, self.intercept)

    def __str__(self):
        return (self.fname % (self.intercept, self.slope)).replace("+ -", "- ") + "  (R2 = %.4g)" % self.r_squared

    def __repr__(self): return "TailFit(%s)" % self

    def __reduce_to_dict__(self):
        return {'family': self.family, 'slope': self.slope, 'intercept': self.intercept,
                'r_squared': self.r_squared, 'n_points': self.n_points, 'x_min': self.x_min}

def tail_fit(series, family = 'power_law', x_min = None):
    """
    Fit a tail family to a distribution.

    Parameters
    ----------
    series : FrequencySeries
    family : {'power_law', 'exponential'}
    x_min : float, optional
        Only the points with :math:`x \\geq x_{min}` are used.

    Raises
    ------
    InsufficientDataError
        Fewer than 3 usable points (y > 0, and x > 0 for a power law).
    """
    assert family in families, "unknown tail family %r, expected one of %s" % (family, list(families))
    x, y = series.x, series.y
    use = y > 0
    if family == 'power_law': use &= x > 0
    if x_min is not None: use &= x >= x_min
    if use.sum() < 3:
        raise InsufficientDataError("%d usable points for a %s fit, at least 3 are needed" % (use.sum(), family))
    transform = families[family][2]
    design = DesignMatrix.from_columns({'x': transform(x[use])}, np.log(y[use]), response='ln_y')
    return TailFit(family, ols_fit(design), int(use.sum()), x_min)
