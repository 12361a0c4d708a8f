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
Yearly trends of scores and the effect of team size.
"""

import numpy as np
import pandas as pd

from ..errors import ConfigurationError, DomainError
from ..models import ScoreTable, score_table

__all__ = ['TrendSeries', 'trend', 'AuthorshipSummary', 'authorship_analysis', 'NORMALIZATIONS']

# accepted names -> score column
NORMALIZATIONS = {'none': 'k', 'k': 'k', 'kt': 'k_t', 'k_t': 'k_t', 'ktf': 'k_tf', 'k_tf': 'k_tf'}


class TrendSeries:
    """
    Scores of entities over the years, with yearly arithmetic averages.

    Attributes
    ----------
    points : pandas.DataFrame
        Columns ``key, year, score``, sorted by year then key.
    years : array
        Every year from the first to the last one, contiguous.
    averages : array
        Mean score of each year, NaN for a year without entity.
    label : str
    """

    def __init__(self, points, label = '', year_range = None):
        self.points = points.sort_values(['year', 'key'], kind='mergesort').reset_index(drop=True)
        self.label = label
        if year_range is None:
            year_range = (int(self.points['year'].min()), int(self.points['year'].max())) if len(self.points) else None
        self.years = np.arange(year_range[0], year_range[1] + 1) if year_range else np.zeros(0, dtype=int)
        grouped = self.points.groupby('year')['score']
        self.counts = grouped.size().reindex(self.years, fill_value=0).to_numpy()
        self.averages = grouped.mean().reindex(self.years).to_numpy(dtype=float)

    def __len__(self): return len(self.years)

    def to_frame(self):
        """Yearly summary with columns ``year, n, average``."""
        return pd.DataFrame({'year': self.years, 'n': self.counts, 'average': self.averages})

    def _plot_(self, opt_dict):
        """Plot protocol: the scores as points, the yearly averages as a line."""
        label = opt_dict.pop('name', self.label)
        return [{'xdata': self.points['year'].to_numpy(), 'ydata': self.points['score'].to_numpy(),
                 'label': label, 'plot_function': 'scatter'},
                {'xdata': self.years, 'ydata': self.averages, 'label': label + ' (yearly average)',
                 'plot_function': 'semilogy'}]

    def __repr__(self):
        return "TrendSeries(%s, %d years, %d points)" % (self.label, len(self), len(self.points))

def trend(scores, normalize = 'none', year_range = None):
    """
    Yearly trend of a score.

    Parameters
    ----------
    scores : ScoreTable or mapping (key, year) -> score
        A paper ScoreTable provides the three scores; a mapping only the raw one.
    normalize : {'none', 'k_t', 'k_tf'}
        Score followed (``kt`` and ``ktf`` are accepted too).
    year_range : (int, int), optional
        Defaults to the range of the years present.

    Returns
    -------
    TrendSeries
    """
    if normalize not in NORMALIZATIONS:
        raise ConfigurationError("unknown normalization %r, expected none, k_t or k_tf" % (normalize,))
    column = NORMALIZATIONS[normalize]
    if isinstance(scores, ScoreTable):
        if scores.kind != 'paper': raise DomainError("trends are defined for paper scores")
        points = pd.DataFrame({'key': scores['key'], 'year': scores['year'].astype(int), 'score': scores[column]})
    else:
        if column != 'k':
            raise ConfigurationError("normalized trends need a ScoreTable computed with a fitted model")
        points = pd.DataFrame([(k, int(y), float(s)) for (k, y), s in scores.items()], columns=['key', 'year', 'score'])
    return TrendSeries(points, column, year_range)

#-------------------------------------------------------------

class AuthorshipSummary:
    """
    Scores against the number of authors.

    Attributes
    ----------
    groups : pandas.DataFrame
        Indexed by ``n_authors``; columns ``n`` (papers), mean ``k``, ``k_t``, ``k_tf``.
    team_size : TrendSeries
        Number of authors of each paper over the years.
    """

    def __init__(self, groups, team_size):
        self.groups, self.team_size = groups, team_size

    def decade_means(self):
        """Mean team size of the papers of each decade, indexed by the first year of the decade."""
        p = self.team_size.points
        return p.groupby((p['year'] // 10) * 10)['score'].mean().rename_axis('decade')

    def to_frame(self):
        return self.groups.reset_index()

def authorship_analysis(corpus, model = None, table = None):
    """
    Group the papers by number of authors.

    Parameters
    ----------
    corpus : Corpus
    model : FittedFitnessModel, optional
        A paper model, giving the normalized scores. Without it k_t and k_tf are NaN.
    table : ScoreTable, optional
        Precomputed paper scores.

    Returns
    -------
    AuthorshipSummary
    """
    if table is None and model is not None:
        if model.kind != 'paper': raise DomainError("authorship analysis needs a paper model")
        table = score_table(model, corpus)
    if table is not None:
        frame = table.frame[['key', 'year', 'n_authors', 'k', 'k_t', 'k_tf']]
    else:
        papers = list(corpus)
        frame = pd.DataFrame({'key': [p.paper_id for p in papers], 'year': [p.year for p in papers],
                              'n_authors': [p.n_authors for p in papers],
                              'k': [float(p.citation_count) for p in papers], 'k_t': np.nan, 'k_tf': np.nan})
    grouped = frame.groupby('n_authors')
    groups = grouped[['k', 'k_t', 'k_tf']].mean()
    groups.insert(0, 'n', grouped.size())
    team = TrendSeries(pd.DataFrame({'key': frame['key'], 'year': frame['year'].astype(int),
                                     'score': frame['n_authors'].astype(float)}), 'n_authors',
                       corpus.year_range)
    return AuthorshipSummary(groups, team)
