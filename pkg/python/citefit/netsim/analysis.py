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
Estimates on grown networks, replicate runs and conversion to a citation corpus.
"""

import os
from concurrent.futures import ThreadPoolExecutor

import numpy as np
import pandas as pd

from ..corpus import Corpus, PaperRecord
from ..errors import InsufficientDataError
from ..inference import DesignMatrix, ols_fit
from ..utility import mpi
from .growth import grow

__all__ = ['estimate_beta', 'stratified_beta', 'replicate', 'export_as_corpus', 'thread_count']

def _beta_fit(entry_time, degree, t):
    use = degree > 0
    if use.sum() < 3:
        raise InsufficientDataError("%d nodes with positive degree, at least 3 are needed" % use.sum())
    design = DesignMatrix.from_columns({'ln_t_ratio': np.log(t / entry_time[use])}, np.log(degree[use]), response='ln_k')
    return ols_fit(design)

def estimate_beta(network, snapshot = None, return_fit = False):
    r"""
    Growth exponent :math:`\beta` of :math:`k_i(t) \propto (t / t_i)^\beta`.

    Regresses :math:`\ln k_i(t)` on :math:`\ln(t / t_i)` over the nodes of positive degree.

    Parameters
    ----------
    network : SimNetwork
    snapshot : int, optional
        Node count :math:`t` of a recorded snapshot; the final state by default.
    return_fit : bool
        Return the FitResult instead of the slope.

    Raises
    ------
    InsufficientDataError
        Fewer than 3 nodes of positive degree.
    """
    t = snapshot if snapshot is not None else network.n_nodes
    degree = network.snapshots[t]
    fit = _beta_fit(network.entry_time[:t], np.asarray(degree), t)
    return fit if return_fit else float(fit.estimates[1])

def stratified_beta(network, n_strata = 10):
    """
    :func:`estimate_beta` within fitness quantile groups.

    Returns
    -------
    pandas.DataFrame
        One row per group with ``stratum, fitness_low, fitness_high, mean_fitness, n, beta``;
        ``beta`` is NaN for groups with fewer than 3 usable nodes.
    """
    t = network.n_nodes
    order = np.argsort(network.fitness, kind='stable')
    rows = []
    for s, idx in enumerate(np.array_split(order, n_strata)):
        f = network.fitness[idx]
        try:
            beta = float(_beta_fit(network.entry_time[idx], network.degree[idx], t).estimates[1])
        except InsufficientDataError:
            beta = np.nan
        rows.append((s, f.min() if len(f) else np.nan, f.max() if len(f) else np.nan,
                     f.mean() if len(f) else np.nan, len(idx), beta))
    return pd.DataFrame(rows, columns=['stratum', 'fitness_low', 'fitness_high', 'mean_fitness', 'n', 'beta'])

#-------------------------------------------------------------

def thread_count(n_threads = None):
    """Worker count: ``n_threads``, capped by the ``CITEFIT_THREADS`` environment variable."""
    n = n_threads or os.cpu_count() or 1
    cap = os.environ.get('CITEFIT_THREADS')
    if cap:
        n = min(n, max(1, int(cap)))
    return max(1, n)

def replicate(configs, n_threads = None):
    """
    Grow independent networks, one per configuration, in a thread pool.

    Every run owns its random stream (its seed), so the results do not depend on the
    number of threads. Returned in the order of ``configs``.
    """
    configs = list(configs)
    n = min(thread_count(n_threads), max(1, len(configs)))
    mpi.report("Growing %d networks on %d threads" % (len(configs), n), level=2)
    if n == 1:
        return [grow(c) for c in configs]
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(grow, configs))

#-------------------------------------------------------------

def export_as_corpus(network, years_per_step = 0.01, start_year = 1974, n_venues = 3,
                     authors_per_paper = (1, 3), author_pool = None):
    """
    A synthetic citation corpus from a grown network.

    Node :math:`i` becomes paper ``p<t_i>`` of year ``start_year + floor((t_i - 1) * years_per_step)``
    and its out-links become its references.

    Parameters
    ----------
    network : SimNetwork
    years_per_step : float
    start_year : int
    n_venues : int
        Venues ``v0 ... `` drawn uniformly.
    authors_per_paper : (int, int)
        Inclusive range of the number of authors, drawn uniformly.
    author_pool : int, optional
        Number of distinct scholars, N // 2 by default.

    Returns
    -------
    Corpus
        The citation count of every paper equals the in-degree of its node.
    """
    N = network.n_nodes
    lo, hi = authors_per_paper
    pool = author_pool or max(hi, N // 2)
    assert 1 <= lo <= hi <= pool, "export_as_corpus : invalid authors_per_paper %s for a pool of %d" % (authors_per_paper, pool)
    seed = network.config.seed if network.config is not None else 0
    rng = np.random.default_rng([seed, 1])
    width = len(str(N))
    pid = lambda i: "p%0*d" % (width, network.entry_time[i])
    refs = [[] for _ in range(N)]
    for s, t in network.edges:
        refs[s].append(pid(t))
    years = start_year + np.floor((network.entry_time - 1) * years_per_step).astype(int)
    papers = []
    for i in range(N):
        c = int(rng.integers(lo, hi + 1))
        authors = tuple("a%0*d" % (len(str(pool)), a) for a in rng.choice(pool, size=c, replace=False))
        venue = "v%d" % rng.integers(n_venues)
        papers.append(PaperRecord(pid(i), int(years[i]), venue, authors, tuple(refs[i])))
    return Corpus(papers, int(years.max()))
