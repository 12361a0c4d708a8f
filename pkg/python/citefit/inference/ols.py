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
Ordinary least squares with the classical inference statistics.

The solver works on a column pivoted QR factorization :math:`XP = QR`; the
normal-equations solver is kept as an independent cross-check.
"""

import numpy as np
import pandas as pd
import scipy.linalg
from scipy.stats import t as student_t

from ..errors import RankDeficiencyError
from .tdist import t_pvalue, f_pvalue, significance_stars

__all__ = ['FitResult', 'ols_fit', 'normal_equations_fit', 'RCOND_THRESHOLD']

# reciprocal condition number of R below which the design is declared singular
RCOND_THRESHOLD = 1.e-12


class FitResult:
    r"""
    Estimates and inference statistics of a linear regression.

    Attributes
    ----------
    names : list of str
    estimates, standard_errors, t_values, p_values : arrays, one entry per column
    covariance : array (p, p)
        :math:`s^2 (X^T X)^{-1}`.
    r_squared, adj_r_squared : float
    f_statistic, f_pvalue : float
        Test of all slopes being zero, on (df1, df2) degrees of freedom.
    df1, df2 : int
        df2 = n - p; df1 = p - 1 with an intercept, p without.
    residual_std : float
        :math:`s = \sqrt{SSR / (n - p)}`. In a log-linear model it is the composite
        scale of the multiplicative noise, not separable into its factors.
    residuals, fitted : arrays (n,) or None
        Not kept by the dict serialization.
    """

    def __init__(self, names, estimates, standard_errors, covariance, r_squared, adj_r_squared,
                 f_statistic, df1, df2, residual_std, n, response = 'y', has_intercept = True,
                 residuals = None, fitted = None, method = 'qr'):
        self.names = list(names)
        self.estimates = np.asarray(estimates, dtype=float)
        self.standard_errors = np.asarray(standard_errors, dtype=float)
        self.covariance = np.asarray(covariance, dtype=float)
        with np.errstate(divide='ignore', invalid='ignore'):
            self.t_values = self.estimates / self.standard_errors
        self.df1, self.df2, self.n = int(df1), int(df2), int(n)
        self.p_values = np.asarray(t_pvalue(self.t_values, self.df2), dtype=float).reshape(self.estimates.shape)
        self.r_squared, self.adj_r_squared = float(r_squared), float(adj_r_squared)
        self.f_statistic = float(f_statistic)
        self.f_pvalue = f_pvalue(self.f_statistic, self.df1, self.df2) if self.df1 >= 1 else float('nan')
        self.residual_std = float(residual_std)
        self.response, self.has_intercept, self.method = response, has_intercept, method
        self.residuals, self.fitted = residuals, fitted

    @property
    def p(self): return len(self.names)

    @property
    def coefficients(self):
        """name -> estimate"""
        return dict(zip(self.names, self.estimates.tolist()))

    @property
    def stars(self):
        return [significance_stars(p) for p in self.p_values]

    def __getitem__(self, name):
        i = self.names.index(name)
        return dict(name=name, estimate=float(self.estimates[i]), std_error=float(self.standard_errors[i]),
                    t_value=float(self.t_values[i]), p_value=float(self.p_values[i]),
                    stars=significance_stars(self.p_values[i]))

    def __contains__(self, name): return name in self.names

    def table(self):
        """The coefficient table as a DataFrame indexed by column name."""
        return pd.DataFrame({'estimate': self.estimates, 'std_error': self.standard_errors,
                             't_value': self.t_values, 'p_value': self.p_values, 'stars': self.stars},
                            index=pd.Index(self.names, name='name'))

    def confidence_intervals(self, level = 0.95):
        """Two-sided Student t intervals, DataFrame with columns ``lower`` and ``upper``."""
        assert 0 < level < 1, "confidence level must lie in (0, 1)"
        q = student_t.ppf(0.5 * (1 + level), self.df2)
        return pd.DataFrame({'lower': self.estimates - q * self.standard_errors,
                             'upper': self.estimates + q * self.standard_errors},
                            index=pd.Index(self.names, name='name'))

    def summary(self, labels = None):
        """
        Text report: one row per coefficient (estimate, std error, t value, Pr(>|t|), code)
        followed by the residual standard error, :math:`R^2` and the F test.

        ``labels`` optionally maps column names to the names printed.
        """
        labels = labels or {}
        rows = [(labels.get(n, n), "%.4g" % e, "%.4g" % s, "%.3f" % t, "%.2g" % p, st)
                for n, e, s, t, p, st in zip(self.names, self.estimates, self.standard_errors,
                                             self.t_values, self.p_values, self.stars)]
        head = ('', 'Estimate', 'Std. Error', 't value', 'Pr(>|t|)', '')
        w = [max(len(r[i]) for r in rows + [head]) for i in range(6)]
        fmt = lambda r: (r[0].ljust(w[0]) + "".join("  " + r[i].rjust(w[i]) for i in range(1, 5)) + " " + r[5]).rstrip()
        lines = ["Response: %s" % self.response, fmt(head)] + [fmt(r) for r in rows]
        lines += ["---",
                  "Signif. codes:  0 '***' 0.001 '**' 0.01 '*' 0.05 '.' 0.1 ' ' 1",
                  "Residual standard error: %.4g on %d degrees of freedom" % (self.residual_std, self.df2),
                  "Multiple R-squared: %.4g,  Adjusted R-squared: %.4g" % (self.r_squared, self.adj_r_squared)]
        if self.df1 >= 1:
            lines.append("F-statistic: %.4g on %d and %d DF,  p-value: %.3g" % (self.f_statistic, self.df1, self.df2, self.f_pvalue))
        return "\n".join(lines)

    def __str__(self): return self.summary()

    def __repr__(self):
        return "FitResult(%s ~ %s, n = %d, R2 = %.4g)" % (self.response, " + ".join(self.names), self.n, self.r_squared)

    #-------------------------------------------------------------

    def __reduce_to_dict__(self):
        return {'response': self.response, 'method': self.method, 'has_intercept': self.has_intercept,
                'n': self.n, 'df1': self.df1, 'df2': self.df2,
                'r_squared': self.r_squared, 'adj_r_squared': self.adj_r_squared,
                'f_statistic': self.f_statistic, 'f_pvalue': self.f_pvalue,
                'residual_std': self.residual_std,
                'coefficients': [self[n] for n in self.names],
                'covariance': self.covariance.tolist()}

    @classmethod
    def __factory_from_dict__(cls, name, d):
        rows = d['coefficients']
        return cls([r['name'] for r in rows], [float(r['estimate']) for r in rows],
                   [float(r['std_error']) for r in rows], np.array(d['covariance'], dtype=float),
                   float(d['r_squared']), float(d['adj_r_squared']), float(d['f_statistic']),
                   d['df1'], d['df2'], float(d['residual_std']), d['n'], d.get('response', 'y'),
                   d.get('has_intercept', True), method=d.get('method', 'qr'))

#-------------------------------------------------------------

def _fit_result(design, beta, unscaled_covariance, method):
    X, y = design.X, design.y
    n, p = X.shape
    fitted = X @ beta
    residuals = y - fitted
    df2 = n - p
    ssr = float(residuals @ residuals)
    s2 = ssr / df2
    covariance = s2 * unscaled_covariance
    se = np.sqrt(np.clip(np.diag(covariance), 0, None))

    if design.has_intercept:
        sst, df1 = float(((y - y.mean())**2).sum()), p - 1
    else:
        sst, df1 = float(y @ y), p
    r2 = min(1.0, max(0.0, 1.0 - ssr / sst)) if sst > 0 else 1.0
    adj = 1.0 - (1.0 - r2) * (n - int(design.has_intercept)) / df2
    with np.errstate(divide='ignore', invalid='ignore'):
        f = float(np.float64(r2 / df1) / np.float64((1.0 - r2) / df2)) if df1 >= 1 else float('nan')
    return FitResult(design.names, beta, se, covariance, r2, adj, f, df1, df2, np.sqrt(s2), n,
                     design.response, design.has_intercept, residuals, fitted, method)

def _dependent_columns(design, R, piv):
    # right singular vector of the smallest singular value: X[:, piv] @ v ~ 0
    v = scipy.linalg.svd(R)[2][-1]
    involved = np.abs(v) > 1.e-3 * np.abs(v).max()
    return [design.names[j] for j in sorted(piv[involved])]

def ols_fit(design, rcond_threshold = RCOND_THRESHOLD):
    r"""
    Least squares fit of ``design.y`` on the columns of ``design.X``.

    Parameters
    ----------
    design : DesignMatrix
    rcond_threshold : float
        Designs whose triangular factor has a reciprocal condition number below
        this value are rejected.

    Returns
    -------
    FitResult

    Raises
    ------
    RankDeficiencyError
        The columns are (nearly) linearly dependent; ``columns`` lists the
        columns taking part in the dependency.
    """
    Q, R, piv = scipy.linalg.qr(design.X, mode='economic', pivoting=True)
    sv = scipy.linalg.svdvals(R)
    rcond = sv[-1] / sv[0] if sv[0] > 0 else 0.0
    if rcond < rcond_threshold:
        cols = _dependent_columns(design, R, piv)
        raise RankDeficiencyError("design matrix is rank deficient (reciprocal condition number %.3g), "
                                  "dependent columns: %s" % (rcond, ", ".join(cols)), cols)
    p = design.p
    beta = np.empty(p)
    beta[piv] = scipy.linalg.solve_triangular(R, Q.T @ design.y)
    Rinv = scipy.linalg.solve_triangular(R, np.eye(p))
    unscaled = np.empty((p, p))
    unscaled[np.ix_(piv, piv)] = Rinv @ Rinv.T
    return _fit_result(design, beta, unscaled, 'qr')

def normal_equations_fit(design):
    r"""
    Least squares through the normal equations :math:`X^T X \beta = X^T y`.

    Less accurate than :func:`ols_fit` on badly conditioned designs; used to cross-check it.
    """
    XtX = design.X.T @ design.X
    try:
        beta = scipy.linalg.solve(XtX, design.X.T @ design.y, assume_a='pos')
        unscaled = scipy.linalg.inv(XtX)
    except scipy.linalg.LinAlgError as e:
        raise RankDeficiencyError("normal matrix is singular: %s" % e, design.names) from None
    return _fit_result(design, beta, unscaled, 'normal_equations')
