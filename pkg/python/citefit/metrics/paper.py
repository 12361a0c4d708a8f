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
Temporal prior impact of papers.

For a paper published in year :math:`Y` every count only involves citations made
strictly before :math:`Y`:

* :math:`\phi_a`: citations received by the earlier papers of each author, summed over authors;
* :math:`\phi_v`: mean number of citations received by the earlier papers of the venue;
* :math:`\phi_r`: citations received by the referenced (in corpus) papers.
"""

import warnings, weakref
from dataclasses import dataclass

import numpy as np
import pandas as pd

from ..errors import DomainError, CorpusWarning
from ..utility import mpi
from .conventions import Conventions

__all__ = ['PaperFitnessVars', 'PaperVariables', 'compute_tau', 'compute_phi_a', 'compute_phi_v',
           'compute_phi_r', 'paper_vars']


@dataclass(frozen=True)
class PaperFitnessVars:
    """Fitness variables of one paper (raw, unshifted counts)."""
    paper_id: str
    tau: float
    phi_a: float
    phi_v: float
    phi_r: float

#-------------------------------------------------------------

def compute_tau(paper, collection_year, convention = 'age_plus_one'):
    r"""
    Time factor :math:`\tau` of a paper.

    Parameters
    ----------
    paper : PaperRecord or int
        The paper, or its publication year.
    collection_year : int
    convention : {'age_plus_one', 'age', 'ratio'}

    Raises
    ------
    DomainError
        The paper is younger than the collection year, or :math:`\tau` would be 0
        (``age`` convention, paper of the collection year).
    """
    year = getattr(paper, 'year', paper)
    if year > collection_year:
        raise DomainError("paper of year %d is after the collection year %d" % (year, collection_year))
    if convention == 'age_plus_one':
        return float(collection_year - year + 1)
    if convention == 'age':
        if year == collection_year:
            raise DomainError("tau = 0 for a paper of the collection year under the 'age' convention")
        return float(collection_year - year)
    if convention == 'ratio':
        if year <= 0:
            raise DomainError("the 'ratio' convention needs positive years, got %d" % year)
        return collection_year / year
    raise DomainError("unknown tau convention %r" % (convention,))

#-------------------------------------------------------------

class _PriorIndex:
    # sorted "edge years" max(cited year, citing year) per scholar and venue: a
    # citation is prior to year Y for both ends iff its edge year is < Y
    def __init__(self, corpus):
        edge_years = {pid: np.maximum(corpus.citing_years(pid), p.year) for pid, p in corpus.papers.items()}
        self.author_edges = {sid: np.sort(np.concatenate([edge_years[pid] for pid in s.paper_ids] + [np.zeros(0, int)]))
                             for sid, s in corpus.scholars.items()}
        by_venue = {}
        for p in corpus:
            by_venue.setdefault(p.venue_id, []).append(p.paper_id)
        self.venue_edges = {v: np.sort(np.concatenate([edge_years[pid] for pid in pids]))
                            for v, pids in by_venue.items()}
        self.venue_years = {v: np.sort([corpus.papers[pid].year for pid in pids]) for v, pids in by_venue.items()}

_indices = weakref.WeakKeyDictionary()

def _prior_index(corpus):
    idx = _indices.get(corpus)
    if idx is None:
        idx = _indices[corpus] = _PriorIndex(corpus)
    return idx

def _paper(paper, corpus):
    return corpus.papers[paper] if isinstance(paper, str) else paper

def compute_phi_a(paper, corpus):
    """Citations received before the paper's year by the earlier papers of its authors, summed over authors."""
    p, idx = _paper(paper, corpus), _prior_index(corpus)
    return float(sum(np.searchsorted(idx.author_edges[a], p.year, side='left') for a in p.author_ids))

def compute_phi_v(paper, corpus):
    """
    Mean number of citations received before the paper's year by the earlier papers
    of its venue; 0 for a venue without earlier paper or an unknown (empty) venue.
    """
    p, idx = _paper(paper, corpus), _prior_index(corpus)
    if not p.venue_id: return 0.0
    n = np.searchsorted(idx.venue_years[p.venue_id], p.year, side='left')
    if n == 0: return 0.0
    return float(np.searchsorted(idx.venue_edges[p.venue_id], p.year, side="left") / n)

def compute_phi_r(paper, corpus):
    """Citations received before the paper's year by the in-corpus works it references."""
    p = _paper(paper, corpus)
    return float(sum(corpus.citations_before(r, p.year) for r in p.reference_ids if r in corpus))

##########################################################################

class PaperVariables:
    """
    Fitness variables of all the papers of a corpus, as aligned columns.

    Attributes
    ----------
    keys : array of str
    year, tau, phi_a, phi_v, phi_r, k, n_authors : arrays
        Raw (unshifted) values.
    conventions : Conventions
    excluded : tuple of str
        Papers without variables (:math:`\\tau = 0` under the ``age`` convention).
    """
    columns = ('year', 'tau', 'phi_a', 'phi_v', 'phi_r', 'k', 'n_authors')

    def __init__(self, keys, year, tau, phi_a, phi_v, phi_r, k, n_authors, conventions = None, excluded = ()):
        self.keys = np.asarray(keys, dtype=object)
        self.year, self.tau = np.asarray(year, dtype=int), np.asarray(tau, dtype=float)
        self.phi_a, self.phi_v, self.phi_r = (np.asarray(x, dtype=float) for x in (phi_a, phi_v, phi_r))
        self.k, self.n_authors = np.asarray(k, dtype=float), np.asarray(n_authors, dtype=int)
        for c in self.columns:
            assert len(getattr(self, c)) == len(self.keys), "PaperVariables : column %s has the wrong length" % c
        self.conventions = conventions or Conventions()
        self.excluded = tuple(excluded)
        self._position = {key: i for i, key in enumerate(self.keys)}

    def __len__(self): return len(self.keys)

    def __contains__(self, key): return key in self._position

    def __getitem__(self, key):
        i = self._position[key]
        return PaperFitnessVars(key, self.tau[i], self.phi_a[i], self.phi_v[i], self.phi_r[i])

    def position(self, key): return self._position[key]

    def shifted(self, name):
        """Column ``name`` plus the zero shift."""
        return getattr(self, name) + self.conventions.shift

    def to_frame(self):
        return pd.DataFrame({c: getattr(self, c) for c in self.columns}, index=pd.Index(self.keys, name='key'))

    def __repr__(self):
        return "PaperVariables(%d papers, %s)" % (len(self), self.conventions)

def paper_vars(corpus, conventions = None):
    """
    Fitness variables of every paper of the corpus.

    The papers are split over the MPI nodes; the result does not depend on the number of nodes.

    Parameters
    ----------
    corpus : Corpus
    conventions : Conventions, optional

    Returns
    -------
    PaperVariables
        In corpus order, papers with :math:`\\tau = 0` left out (with a :class:`CorpusWarning`).
    """
    conventions = conventions or Conventions()
    papers = list(corpus.papers.values())
    t = corpus.collection_year
    keep = [p for p in papers if not (conventions.tau_convention == 'age' and p.year == t)]
    if len(keep) < len(papers):
        warnings.warn("%d papers of the collection year have tau = 0 and are left out" % (len(papers) - len(keep)),
                      CorpusWarning, stacklevel=2)
    excluded = tuple(p.paper_id for p in papers if p.year == t) if len(keep) < len(papers) else ()

    n = len(keep)
    phi = np.zeros((n, 3))
    _prior_index(corpus)
    for i in mpi.slice_array(np.arange(n)):
        p = keep[i]
        phi[i] = compute_phi_a(p, corpus), compute_phi_v(p, corpus), compute_phi_r(p, corpus)
    phi = mpi.all_reduce(phi)
    mpi.report("Fitness variables of %d papers computed" % n, level=2)

    return PaperVariables([p.paper_id for p in keep], [p.year for p in keep],
                          [compute_tau(p, t, conventions.tau_convention) for p in keep],
                          phi[:, 0], phi[:, 1], phi[:, 2],
                          [p.citation_count for p in keep], [p.n_authors for p in keep],
                          conventions, excluded)
