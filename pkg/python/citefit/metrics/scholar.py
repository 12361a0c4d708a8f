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
Scholar level variables: fractional citation scores and geometric means of the
variables of the authored papers.
"""

from dataclasses import dataclass

import numpy as np
import pandas as pd
from scipy.stats import gmean

from ..errors import DomainError
from .conventions import Conventions

__all__ = ['ScholarFitnessVars', 'ScholarVariables', 'fractional_scores', 'geometric_mean', 'scholar_vars']


@dataclass(frozen=True)
class ScholarFitnessVars:
    """Fitness variables of one scholar; the :math:`\\bar\\phi` are means of shifted values."""
    scholar_id: str
    k_s: float
    rho: int
    tau_bar: float
    phi_a_bar: float
    phi_v_bar: float
    phi_r_bar: float


def fractional_scores(corpus):
    r"""
    Fractional citation score of every scholar, :math:`k_s = \sum_i k_i / c_i` over the
    authored papers, :math:`c_i` being the number of authors of paper :math:`i`.

    Returns
    -------
    dict scholar_id -> float, in scholar order.
    """
    scores = dict.fromkeys(corpus.scholars, 0.0)
    for p in corpus:
        share = p.citation_count / p.n_authors
        for a in p.author_ids:
            scores[a] += share
    return scores

def geometric_mean(values):
    """
    :math:`(\\prod_i v_i)^{1/n}`, computed from the mean of the logarithms.

    Raises
    ------
    DomainError
        Empty input or a value <= 0.
    """
    v = np.asarray(values, dtype=float).ravel()
    if v.size == 0: raise DomainError("geometric mean of an empty list")
    if not (v > 0).all(): raise DomainError("geometric mean needs positive values, got %s" % v[~(v > 0)][:5])
    return _gmean(v)

def _gmean(v):
    # zeros allowed (shift 0); clipped so that the mean of equal values is that value
    if not v.all(): return 0.0
    return float(np.clip(gmean(v), v.min(), v.max()))

#-------------------------------------------------------------

class ScholarVariables:
    """
    Fitness variables of the scholars of a corpus, as aligned columns.

    ``tau_bar`` is the geometric mean of the raw :math:`\\tau`, the ``phi_*_bar`` the
    geometric means of the shifted :math:`\\phi`; ``k_s`` is unshifted.
    """
    columns = ('tau_bar', 'phi_a_bar', 'phi_v_bar', 'phi_r_bar', 'k_s', 'rho')

    def __init__(self, keys, tau_bar, phi_a_bar, phi_v_bar, phi_r_bar, k_s, rho, conventions = None):
        self.keys = np.asarray(keys, dtype=object)
        self.tau_bar, self.phi_a_bar, self.phi_v_bar, self.phi_r_bar, self.k_s = (
            np.asarray(x, dtype=float) for x in (tau_bar, phi_a_bar, phi_v_bar, phi_r_bar, k_s))
        self.rho = np.asarray(rho, dtype=int)
        for c in self.columns:
            assert len(getattr(self, c)) == len(self.keys), "ScholarVariables : column %s has the wrong length" % c
        self.conventions = conventions or Conventions()
        self._position = {key: i for i, key in enumerate(self.keys)}

    def __len__(self): return len(self.keys)

    def __contains__(self, key): return key in self._position

    def __getitem__(self, key):
        i = self._position[key]
        return ScholarFitnessVars(key, self.k_s[i], int(self.rho[i]), self.tau_bar[i],
                                  self.phi_a_bar[i], self.phi_v_bar[i], self.phi_r_bar[i])

    def position(self, key): return self._position[key]

    def to_frame(self):
        return pd.DataFrame({c: getattr(self, c) for c in self.columns}, index=pd.Index(self.keys, name='key'))

    def __repr__(self):
        return "ScholarVariables(%d scholars, %s)" % (len(self), self.conventions)

def scholar_vars(corpus, paper_vars):
    """
    Scholar variables from the paper variables.

    Parameters
    ----------
    corpus : Corpus
    paper_vars : PaperVariables
        Its conventions (zero shift) are used for the means.

    Returns
    -------
    ScholarVariables
        :math:`\\rho` and :math:`k_s` count every authored paper. The means run over the
        authored papers that have variables; scholars left with none are omitted.
    """
    shift = paper_vars.conventions.shift
    columns = [paper_vars.tau, paper_vars.phi_a + shift, paper_vars.phi_v + shift, paper_vars.phi_r + shift]
    k_s = fractional_scores(corpus)
    keys, rows = [], []
    for sid, s in corpus.scholars.items():
        pos = [paper_vars.position(pid) for pid in s.paper_ids if pid in paper_vars]
        if not pos: continue
        keys.append(sid)
        rows.append([_gmean(x[pos]) for x in columns] + [k_s[sid], s.rho])
    rows = np.array(rows, dtype=float).reshape(-1, 6)
    return ScholarVariables(keys, rows[:, 0], rows[:, 1], rows[:, 2], rows[:, 3], rows[:, 4],
                            rows[:, 5].astype(int), paper_vars.conventions)
