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
Normalized citation scores

.. math::

    k_t = k / \tau^{\hat\beta} \qquad k_{tf} = k / (\tau^{\hat\beta} \prod_n \phi_n^{\hat\gamma_n})

with the shifted :math:`\phi` of the model conventions, rankings and correlation with a
benchmark score.
"""

import warnings

import numpy as np
import pandas as pd
from scipy.stats import pearsonr

from ..errors import CorpusParseError, CorrelationError, BenchmarkWarning
from ..metrics import paper_vars, scholar_vars
from ..utility.artifacts import write_table

__all__ = ['ScoreTable', 'Ranking', 'load_benchmark', 'score_table', 'rank_and_correlate', 'SCORE_COLUMNS']

SCORE_COLUMNS = ('k', 'k_t', 'k_tf')


class ScoreTable:
    """
    Raw and normalized scores of the papers or the scholars of a corpus.

    Attributes
    ----------
    kind : {'paper', 'scholar'}
    frame : pandas.DataFrame
        Columns ``key, label, year, n_authors`` (papers) or ``key, label, rho`` (scholars),
        then ``k, k_t, k_tf, k_acm``. ``k_acm`` is NaN where no benchmark value is known.
    unmatched : list of str
        Benchmark keys that match no entity.
    """

    def __init__(self, kind, frame, unmatched = ()):
        self.kind, self.frame, self.unmatched = kind, frame.reset_index(drop=True), list(unmatched)

    def __len__(self): return len(self.frame)

    def __getitem__(self, column): return self.frame[column]

    @property
    def has_benchmark(self): return bool(self.frame['k_acm'].notna().any())

    def row(self, key):
        return self.frame.loc[self.frame['key'] == key].iloc[0]

    def write(self, path, config = None):
        return write_table(self.frame, path, config)

    def __repr__(self):
        return "ScoreTable(%d %ss%s)" % (len(self), self.kind, ", with benchmark" if self.has_benchmark else "")

#-------------------------------------------------------------

def load_benchmark(path):
    """
    Read benchmark scores from a two column CSV file ``key,count`` (header line optional).

    Returns
    -------
    dict key -> float
    """
    try:
        frame = pd.read_csv(path, header=None, dtype=str, comment='#', skipinitialspace=True, keep_default_na=False)
    except (OSError, pd.errors.ParserError, pd.errors.EmptyDataError) as e:
        raise CorpusParseError("cannot read benchmark: %s" % e, path) from None
    if frame.shape[1] != 2:
        raise CorpusParseError("benchmark file must have 2 columns, found %d" % frame.shape[1], path)
    counts = pd.to_numeric(frame[1], errors='coerce')
    if len(frame) and np.isnan(counts.iloc[0]):  # header line
        frame, counts = frame.iloc[1:], counts.iloc[1:]
    bad = counts.isna()
    if bad.any():
        raise CorpusParseError("non numeric benchmark count %r" % frame[1][bad].iloc[0], path,
                               int(frame.index[bad][0]) + 1, 'count')
    return dict(zip(frame[0].str.strip(), counts.astype(float)))

def score_table(model, corpus, benchmark = None, variables = None):
    """
    Scores of every entity of the corpus under a fitted model.

    Parameters
    ----------
    model : FittedFitnessModel
        Supplies :math:`\\hat\\beta`, :math:`\\hat\\gamma` and the conventions.
    corpus : Corpus
    benchmark : str, Path or mapping key -> count, optional
        Joined on the key into ``k_acm``. Keys that match nothing are reported with a
        :class:`BenchmarkWarning` and kept in ``unmatched``.
    variables : PaperVariables or ScholarVariables, optional
        Precomputed variables matching ``model.kind``.

    Returns
    -------
    ScoreTable
    """
    if variables is None:
        pv = paper_vars(corpus, model.conventions)
        variables = pv if model.kind == 'paper' else scholar_vars(corpus, pv)
    t, f = model.time_factor(variables), model.fitness_factor(variables)
    keys = list(variables.keys)
    if model.kind == 'paper':
        k = variables.k
        frame = pd.DataFrame({'key': keys, 'label': [corpus.papers[x].title for x in keys],
                              'year': variables.year, 'n_authors': variables.n_authors})
    else:
        k = variables.k_s
        frame = pd.DataFrame({'key': keys, 'label': [corpus.scholars[x].normalized_name for x in keys],
                              'rho': variables.rho})
    frame['k'], frame['k_t'], frame['k_tf'] = k, k / t, k / (t * f)

    if benchmark is not None and not hasattr(benchmark, 'items'):
        benchmark = load_benchmark(benchmark)
    benchmark = dict(benchmark or {})
    frame['k_acm'] = [benchmark.get(x, np.nan) for x in keys]
    known = set(keys)
    unmatched = sorted(x for x in benchmark if x not in known)
    if unmatched:
        warnings.warn("%d benchmark keys match no %s, e.g. %s" % (len(unmatched), model.kind, unmatched[0]),
                      BenchmarkWarning, stacklevel=2)
    return ScoreTable(model.kind, frame, unmatched)

##########################################################################

class Ranking:
    """
    Entities ranked by one score column, with the Pearson correlation of each score
    column with the benchmark over the top rows.

    Attributes
    ----------
    by : str
    top_n : int or None
    rows : pandas.DataFrame
        The top rows, with a leading 1-based ``rank`` column.
    correlations : dict column -> float
        Empty without benchmark.
    n_correlated : int
        Number of top rows having a benchmark value.
    """

    def __init__(self, by, top_n, rows, correlations, n_correlated):
        self.by, self.top_n, self.rows = by, top_n, rows
        self.correlations, self.n_correlated = dict(correlations), n_correlated

    def __len__(self): return len(self.rows)

    @property
    def keys(self): return list(self.rows['key'])

    def __reduce_to_dict__(self):
        return {'by': self.by, 'top_n': self.top_n, 'n_correlated': self.n_correlated,
                'correlations': self.correlations, 'keys': self.keys}

    def __str__(self):
        lines = [self.rows.to_string(index=False)]
        if self.correlations:
            lines.append("Correlation with k_acm over %d rows: " % self.n_correlated +
                         ", ".join("%s %.3f" % x for x in self.correlations.items()))
        return "\n".join(lines)

def rank_and_correlate(table, by = 'k_t', top_n = 20):
    """
    Rank by a score column (descending, ties by key) and correlate with the benchmark.

    Parameters
    ----------
    table : ScoreTable
    by : {'k', 'k_t', 'k_tf'}
    top_n : int or None
        Number of rows kept and correlated; None keeps all.

    Raises
    ------
    CorrelationError
        A benchmark is present but fewer than 3 of the top rows have a value.
    """
    assert by in SCORE_COLUMNS, "ranking column must be one of %s" % (SCORE_COLUMNS,)
    ranked = table.frame.sort_values([by, 'key'], ascending=[False, True], kind='mergesort')
    if top_n is not None: ranked = ranked.head(top_n)
    ranked = ranked.reset_index(drop=True)
    ranked.insert(0, 'rank', np.arange(1, len(ranked) + 1))

    correlations, n = {}, 0
    if table.has_benchmark:
        paired = ranked[ranked['k_acm'].notna()]
        n = len(paired)
        if n < 3:
            raise CorrelationError("correlation needs at least 3 benchmarked rows, %d among the top %s" % (n, top_n))
        for c in SCORE_COLUMNS:
            correlations[c] = float(pearsonr(paired[c].to_numpy(float), paired['k_acm'].to_numpy(float))[0])
    return Ranking(by, top_n, ranked, correlations, n)
