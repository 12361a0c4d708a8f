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
The multiplicative fitness models

.. math::

    k = e^{\alpha'} \phi_a^{\gamma_a} \phi_v^{\gamma_v} \phi_r^{\gamma_r} \tau^{\beta} \epsilon'
    \qquad
    k_s = e^{\alpha'} \bar\phi_a^{\gamma_a} \bar\phi_v^{\gamma_v} \bar\phi_r^{\gamma_r} \bar\tau^{\beta} \rho^{\kappa} \epsilon'

fitted by least squares after taking logarithms.
"""

import numpy as np

from ..errors import InsufficientDataError, DomainError
from ..inference import DesignMatrix, FitResult, INTERCEPT, ols_fit
from ..metrics import Conventions, PaperVariables, ScholarVariables, paper_vars, scholar_vars
from ..utility import mpi

__all__ = ['FittedFitnessModel', 'fit_paper_model', 'fit_scholar_model', 'design_columns', 'model_design',
           'MIN_OBSERVATIONS', 'KINDS', 'SYMBOLS']

KINDS = ('paper', 'scholar')

# design column -> coefficient symbol
SYMBOLS = {INTERCEPT: "alpha'", 'ln_phi_a': 'gamma_a', 'ln_phi_v': 'gamma_v', 'ln_phi_r': 'gamma_r',
           'ln_tau': 'beta', 'ln_rho': 'kappa'}

MIN_OBSERVATIONS = 30

def design_columns(kind, variables):
    """The logarithmic predictors of a model, in order, as a dict name -> array."""
    if kind == 'paper':
        s = variables.conventions.shift
        with np.errstate(divide='ignore'):
            return {'ln_phi_a': np.log(variables.phi_a + s), 'ln_phi_v': np.log(variables.phi_v + s),
                    'ln_phi_r': np.log(variables.phi_r + s), 'ln_tau': np.log(variables.tau)}
    with np.errstate(divide='ignore'):
        return {'ln_phi_a': np.log(variables.phi_a_bar), 'ln_phi_v': np.log(variables.phi_v_bar),
                'ln_phi_r': np.log(variables.phi_r_bar), 'ln_tau': np.log(variables.tau_bar),
                'ln_rho': np.log(variables.rho)}

def _scores(kind, variables):
    return variables.k if kind == 'paper' else variables.k_s

def model_design(kind, variables):
    """The regression of the shifted log score on the log predictors."""
    assert kind in KINDS, "unknown model kind %r" % kind
    with np.errstate(divide='ignore'):
        y = np.log(_scores(kind, variables) + variables.conventions.shift)
    return DesignMatrix.from_columns(design_columns(kind, variables), y, response='ln_k' if kind == 'paper' else 'ln_k_s')


class FittedFitnessModel:
    r"""
    A fitted paper or scholar fitness model.

    Parameters
    ----------
    kind : {'paper', 'scholar'}
    fit : FitResult
        Columns ``intercept, ln_phi_a, ln_phi_v, ln_phi_r, ln_tau`` (and ``ln_rho`` for scholars).
    conventions : Conventions
        The :math:`\tau` convention and zero shift the variables were computed with.
    """

    def __init__(self, kind, fit, conventions = None):
        assert kind in KINDS, "unknown model kind %r" % kind
        self.kind, self.fit = kind, fit
        self.conventions = conventions or Conventions()
        if (kind == 'scholar') != ('ln_rho' in fit.names):
            raise DomainError("a %s model %s the ln_rho column" % (kind, "needs" if kind == 'scholar' else "cannot have"))

    @classmethod
    def with_coefficients(cls, kind, coefficients, conventions = None):
        """
        A model with hand set coefficients, no statistics attached.

        ``coefficients`` maps column names or symbols (``"alpha'"``, ``beta``, ``gamma_a``, ...)
        to values; missing ones are 0.
        """
        names = [INTERCEPT, 'ln_phi_a', 'ln_phi_v', 'ln_phi_r', 'ln_tau'] + (['ln_rho'] if kind == 'scholar' else [])
        by_symbol = {SYMBOLS[n]: n for n in names}
        est = dict.fromkeys(names, 0.0)
        for key, value in coefficients.items():
            name = by_symbol.get(key, key)
            if name not in est: raise DomainError("unknown coefficient %r for a %s model" % (key, kind))
            est[name] = float(value)
        p, nan = len(names), float('nan')
        fit = FitResult(names, [est[n] for n in names], [nan] * p, np.full((p, p), nan), nan, nan, nan,
                        p - 1, 1, nan, p + 1, method='fixed')
        return cls(kind, fit, conventions)

    #-------------------------------------------------------------

    @property
    def coefficients(self):
        """symbol -> estimate"""
        return {SYMBOLS[n]: e for n, e in self.fit.coefficients.items()}

    @property
    def alpha_prime(self): return self.fit.coefficients[INTERCEPT]

    @property
    def beta(self): return self.fit.coefficients['ln_tau']

    @property
    def gammas(self):
        c = self.fit.coefficients
        return {'a': c['ln_phi_a'], 'v': c['ln_phi_v'], 'r': c['ln_phi_r']}

    @property
    def kappa(self): return self.fit.coefficients.get('ln_rho')

    def formula(self):
        """The fitted multiplicative form, e.g. ``k = 0.462 * phi_a^0.326 * ... * tau^0.573 * eps'``."""
        c = self.fit.coefficients
        bar = '' if self.kind == 'paper' else '_bar'
        factors = ["%.3g" % np.exp(c[INTERCEPT])]
        factors += ["%s%s^%.3g" % (n[3:], bar, c[n]) for n in ('ln_phi_a', 'ln_phi_v', 'ln_phi_r', 'ln_tau')]
        if self.kind == 'scholar': factors.append("rho^%.3g" % c['ln_rho'])
        lhs = 'k' if self.kind == 'paper' else 'k_s'
        return "%s = %s * eps'   (e^alpha' = e^%.3g = %.3g)" % (lhs, " * ".join(factors), c[INTERCEPT], np.exp(c[INTERCEPT]))

    def summary(self):
        return self.fit.summary(SYMBOLS) + "\n" + self.formula()

    def __str__(self): return self.summary()

    def __repr__(self):
        return "FittedFitnessModel(%s, %s)" % (self.kind, ", ".join("%s=%.4g" % x for x in self.coefficients.items()))

    #-------------------------------------------------------------

    def _check(self, variables):
        expected = PaperVariables if self.kind == 'paper' else ScholarVariables
        assert isinstance(variables, expected), "a %s model takes %s" % (self.kind, expected.__name__)

    def log_score(self, variables):
        """Fitted shifted log score :math:`\\ln(k + shift)` of every entity."""
        self._check(variables)
        cols = design_columns(self.kind, variables)
        c = self.fit.coefficients
        return c[INTERCEPT] + sum(c[n] * x for n, x in cols.items())

    def predict(self, variables):
        """Model scores :math:`\\hat k = e^{\\hat{\\ln}(k+shift)} - shift`, noise left out."""
        return np.exp(self.log_score(variables)) - self.conventions.shift

    def time_factor(self, variables):
        r""":math:`\tau^\beta` (:math:`\bar\tau^\beta` for scholars)."""
        self._check(variables)
        tau = variables.tau if self.kind == 'paper' else variables.tau_bar
        return tau ** self.beta

    def fitness_factor(self, variables):
        r""":math:`\prod_n \phi_n^{\gamma_n}` over the shifted :math:`\phi` (geometric means for scholars)."""
        self._check(variables)
        g, s = self.gammas, self.conventions.shift
        if self.kind == 'paper':
            phis = (variables.phi_a + s, variables.phi_v + s, variables.phi_r + s)
        else:
            phis = (variables.phi_a_bar, variables.phi_v_bar, variables.phi_r_bar)
        return phis[0] ** g['a'] * phis[1] ** g['v'] * phis[2] ** g['r']

    #-------------------------------------------------------------

    def __reduce_to_dict__(self):
        return {'kind': self.kind, 'conventions': self.conventions.__reduce_to_dict__(),
                'fit': self.fit.__reduce_to_dict__(), 'formula': self.formula()}

    @classmethod
    def __factory_from_dict__(cls, name, d):
        return cls(d['kind'], FitResult.__factory_from_dict__('fit', d['fit']),
                   Conventions.__factory_from_dict__('conventions', d.get('conventions', {})))

#-------------------------------------------------------------

def _fit(kind, variables):
    if len(variables) < MIN_OBSERVATIONS:
        raise InsufficientDataError("%d %ss with variables, at least %d are needed for a fit" % (len(variables), kind, MIN_OBSERVATIONS))
    model = FittedFitnessModel(kind, ols_fit(model_design(kind, variables)), variables.conventions)
    mpi.report("%s model fitted on %d observations, R2 = %.4g" % (kind.capitalize(), len(variables), model.fit.r_squared))
    mpi.report(model.summary(), level=2)
    return model

def fit_paper_model(source, conventions = None):
    """
    Fit the paper fitness model.

    Parameters
    ----------
    source : Corpus or PaperVariables
    conventions : Conventions, optional
        Used when the variables are computed from a corpus.

    Raises
    ------
    InsufficientDataError
        Fewer than 30 papers.
    RankDeficiencyError
        From :func:`~citefit.inference.ols_fit`.
    """
    variables = source if isinstance(source, PaperVariables) else paper_vars(source, conventions)
    return _fit('paper', variables)

def fit_scholar_model(source, conventions = None):
    """
    Fit the scholar fitness model; ``source`` is a Corpus or ScholarVariables.

    All scholars having a single paper makes :math:`\\ln\\rho` vanish identically and
    the fit fails with a :class:`RankDeficiencyError`.
    """
    if isinstance(source, ScholarVariables):
        variables = source
    else:
        variables = scholar_vars(source, paper_vars(source, conventions))
    return _fit('scholar', variables)
