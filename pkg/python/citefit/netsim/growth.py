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
Growth of a network by preferential attachment, optionally weighted by node fitness.

A new node links to :math:`m` distinct existing nodes chosen with probability
proportional to :math:`k_j` (``degree``) or :math:`\eta_j k_j` (``degree_times_fitness``),
:math:`k_j` being the total degree. The growth starts from :math:`m` fully connected nodes.
"""

from dataclasses import dataclass, field, asdict
from pathlib import Path

import numpy as np
import pandas as pd

from ..errors import ConfigurationError
from ..utility import mpi
from ..utility.artifacts import write_table

__all__ = ['SimConfig', 'SimNetwork', 'grow', 'selection_frequencies', 'FITNESS_DISTRIBUTIONS', 'ATTACHMENTS']

FITNESS_DISTRIBUTIONS = ('constant', 'uniform', 'custom')
ATTACHMENTS = ('degree', 'degree_times_fitness')


@dataclass(frozen=True)
class SimConfig:
    """
    Parameters of one growth run.

    n_final : int
        Number of nodes at the end, N >= m (N = m leaves the seed alone).
    m : int
        Links made by every new node.
    fitness_dist : {'constant', 'uniform', 'custom'}
        Fitness 1, uniform on (0, 1), or ``fitness_values``.
    seed : int
    attachment : {'degree', 'degree_times_fitness'}
    fitness_values : tuple of float, optional
        N positive values for ``custom``.
    snapshot_times : tuple of int
        Node counts at which the degrees are recorded; the final state always is.
    """
    n_final: int
    m: int = 3
    fitness_dist: str = 'constant'
    seed: int = 0
    attachment: str = 'degree'
    fitness_values: tuple = None
    snapshot_times: tuple = field(default_factory=tuple)

    def __post_init__(self):
        if self.m < 1: raise ConfigurationError("m must be >= 1, got %d" % self.m)
        if self.n_final < self.m: raise ConfigurationError("n_final (%d) must be >= m (%d)" % (self.n_final, self.m))
        if self.fitness_dist not in FITNESS_DISTRIBUTIONS:
            raise ConfigurationError("unknown fitness distribution %r" % (self.fitness_dist,))
        if self.attachment not in ATTACHMENTS:
            raise ConfigurationError("unknown attachment rule %r" % (self.attachment,))
        if self.fitness_dist == 'custom':
            v = np.asarray(self.fitness_values if self.fitness_values is not None else (), dtype=float)
            if len(v) != self.n_final or not (v > 0).all():
                raise ConfigurationError("custom fitness needs %d positive values" % self.n_final)
            object.__setattr__(self, 'fitness_values', tuple(v.tolist()))
        object.__setattr__(self, 'snapshot_times', tuple(sorted(int(t) for t in self.snapshot_times)))
        for t in self.snapshot_times:
            if not self.m <= t <= self.n_final:
                raise ConfigurationError("snapshot time %d outside [m, n_final]" % t)

    def to_dict(self):
        return asdict(self)


class SimNetwork:
    """
    State of a grown network.

    Attributes
    ----------
    entry_time : array of int
        1-based arrival index :math:`t_i` of every node.
    fitness : array
    degree : array of int
        Total degree (in + out).
    in_degree : array of int
        Links received, i.e. citations.
    edges : array (E, 2) of int
        (new node, existing node), in order of creation.
    snapshots : dict node count -> degree array of the nodes present then
    config : SimConfig or None
    """

    def __init__(self, entry_time, fitness, degree, edges, snapshots = None, config = None, in_degree = None):
        self.entry_time = np.asarray(entry_time, dtype=int)
        self.fitness = np.asarray(fitness, dtype=float)
        self.degree = np.asarray(degree)
        self.edges = np.asarray(edges, dtype=int).reshape(-1, 2)
        self.in_degree = np.asarray(in_degree) if in_degree is not None else \
                         np.bincount(self.edges[:, 1], minlength=len(self.entry_time))
        self.snapshots = dict(snapshots) if snapshots else {len(self.entry_time): self.degree.copy()}
        self.config = config

    @property
    def n_nodes(self): return len(self.entry_time)

    @property
    def out_degree(self): return np.bincount(self.edges[:, 0], minlength=self.n_nodes)

    def save(self, path, config = None):
        """Write ``nodes.csv`` (node, entry_time, fitness, degree, in_degree) and ``edges.csv`` (source, target)."""
        path = Path(path)
        write_table(pd.DataFrame({'node': np.arange(self.n_nodes), 'entry_time': self.entry_time,
                                  'fitness': self.fitness, 'degree': self.degree, 'in_degree': self.in_degree}),
                    path / 'nodes.csv', config)
        write_table(pd.DataFrame(self.edges, columns=['source', 'target']), path / 'edges.csv', config)
        return path

    def __repr__(self):
        return "SimNetwork(%d nodes, %d edges)" % (self.n_nodes, len(self.edges))

#-------------------------------------------------------------

def _draw(cumulative, n, rng):
    # indices drawn with probability proportional to the increments of cumulative
    return np.searchsorted(cumulative, rng.random(n) * cumulative[-1], side='right')

def selection_frequencies(weights, n_draws, rng = None):
    """
    Empirical frequencies of ``n_draws`` single preferential draws, with replacement.

    This is the elementary draw of :func:`grow`.
    """
    rng = rng if rng is not None else np.random.default_rng()
    weights = np.asarray(weights, dtype=float)
    assert weights.sum() > 0, "selection_frequencies : all weights vanish"
    idx = _draw(np.cumsum(weights), n_draws, rng)
    return np.bincount(idx, minlength=len(weights)) / float(n_draws)

def _targets(weights, m, rng):
    # m distinct nodes, duplicates are drawn again
    if weights.sum() <= 0:
        return rng.choice(len(weights), size=m, replace=False)
    assert np.count_nonzero(weights) >= m, "fewer than m nodes can be reached"
    cumulative = np.cumsum(weights)
    chosen = []
    while len(chosen) < m:
        for j in _draw(cumulative, m - len(chosen), rng):
            if j not in chosen: chosen.append(int(j))
    return chosen

def grow(config):
    """
    Grow a network.

    Parameters
    ----------
    config : SimConfig

    Returns
    -------
    SimNetwork
        Fully determined by the configuration, seed included.
    """
    N, m = config.n_final, config.m
    rng = np.random.default_rng(config.seed)
    if config.fitness_dist == 'constant':
        fitness = np.ones(N)
    elif config.fitness_dist == 'uniform':
        fitness = rng.random(N)
    else:
        fitness = np.array(config.fitness_values, dtype=float)

    degree = np.zeros(N, dtype=np.int64)
    edges = [(j, i) for j in range(m) for i in range(j)]
    degree[:m] = m - 1
    snapshots = {}
    pending = list(config.snapshot_times)
    weighted = config.attachment == 'degree_times_fitness'

    for t in range(m, N + 1):
        while pending and pending[0] == t:
            snapshots[pending.pop(0)] = degree[:t].copy()
        if t == N: break
        w = degree[:t] * fitness[:t] if weighted else degree[:t].astype(float)
        for j in _targets(w, m, rng):
            edges.append((t, j))
            degree[j] += 1
        degree[t] = m
    snapshots[N] = degree.copy()
    mpi.report("Network grown to %d nodes and %d edges" % (N, len(edges)), level=2)
    return SimNetwork(np.arange(1, N + 1), fitness, degree, edges, snapshots, config)
