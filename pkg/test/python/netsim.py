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

import os, tempfile, unittest
from unittest import mock

import numpy as np
from scipy.stats import spearmanr

from citefit.corpus import ingest
from citefit.distributions import distribution, tail_fit
from citefit.errors import ConfigurationError
from citefit.netsim import *
from citefit.utility.artifacts import read_table, read_config_header
from citefit.utility.comparison_tests import assert_arrays_are_close, assert_corpora_are_equal

class test_growth(unittest.TestCase):

    def test_smallest_growth(self):
        net = grow(SimConfig(4, 3))
        assert_arrays_are_close(net.degree, [3, 3, 3, 3])
        self.assertEqual(sorted(map(tuple, net.edges[3:])), [(3, 0), (3, 1), (3, 2)])

    def test_seed_only(self):
        net = grow(SimConfig(3, 3))
        self.assertEqual(len(net.edges), 3)
        assert_arrays_are_close(net.degree, [2, 2, 2])

    def test_tree(self):
        net = grow(SimConfig(50, 1, seed=4))
        self.assertEqual(len(net.edges), 49)
        self.assertTrue(np.all(net.edges[:, 1] < net.edges[:, 0]))

    def test_invariants(self):
        for attachment in ATTACHMENTS:
            net = grow(SimConfig(500, 3, 'uniform', 1, attachment))
            self.assertEqual(net.degree.sum(), 2 * len(net.edges))
            assert_arrays_are_close(net.in_degree + net.out_degree, net.degree)
            assert_arrays_are_close(net.out_degree[3:], np.full(497, 3))
            self.assertEqual(len(net.edges), 3 + 3 * 497)
            # no multiple links
            self.assertEqual(len(set(map(tuple, net.edges))), len(net.edges))
            assert_arrays_are_close(net.entry_time, np.arange(1, 501))

    def test_determinism(self):
        a, b = grow(SimConfig(300, 2, 'uniform', 8)), grow(SimConfig(300, 2, 'uniform', 8))
        self.assertTrue(np.array_equal(a.edges, b.edges))
        self.assertTrue(np.array_equal(a.fitness, b.fitness))
        c = grow(SimConfig(300, 2, 'uniform', 9))
        self.assertFalse(np.array_equal(a.edges, c.edges))

    def test_snapshots(self):
        net = grow(SimConfig(400, 2, seed=3, snapshot_times=(200, 100)))
        self.assertEqual(sorted(net.snapshots), [100, 200, 400])
        self.assertEqual(len(net.snapshots[100]), 100)
        self.assertEqual(net.snapshots[100].sum(), 2 * (1 + 2 * 98))
        self.assertTrue(np.all(net.snapshots[200] <= net.degree[:200]))

    def test_custom_fitness(self):
        values = np.linspace(0.1, 2, 100)
        net = grow(SimConfig(100, 2, 'custom', fitness_values=values, attachment='degree_times_fitness'))
        assert_arrays_are_close(net.fitness, values)

    def test_configuration_errors(self):
        for kw in (dict(n_final=10, m=0), dict(n_final=2, m=3), dict(n_final=10, fitness_dist='gaussian'),
                   dict(n_final=10, attachment='age'), dict(n_final=10, fitness_dist='custom', fitness_values=(1, 2)),
                   dict(n_final=3, m=1, fitness_dist='custom', fitness_values=(1, 0, 2)),
                   dict(n_final=10, snapshot_times=(11,))):
            with self.assertRaises(ConfigurationError):
                SimConfig(**kw)

    def test_unbiased_draws(self):
        rng = np.random.default_rng(41)
        w = rng.uniform(0, 5, 50)
        n = 200000
        f = selection_frequencies(w, n, rng)
        p = w / w.sum()
        z = np.abs(f - p) / np.sqrt(p * (1 - p) / n)
        self.assertTrue(np.mean(z < 3) >= 0.95)
        self.assertTrue(np.all(z < 5))
        # zero weights are never drawn
        w[::2] = 0
        self.assertTrue(np.all(selection_frequencies(w, 1000, rng)[::2] == 0))

    def test_save(self):
        net = grow(SimConfig(30, 2, 'uniform', 5))
        with tempfile.TemporaryDirectory() as d:
            net.save(d, net.config.to_dict())
            nodes = read_table(os.path.join(d, 'nodes.csv'))
            edges = read_table(os.path.join(d, 'edges.csv'))
            self.assertEqual(read_config_header(os.path.join(d, 'edges.csv'))['n_final'], 30)
        self.assertEqual(list(nodes.columns), ['node', 'entry_time', 'fitness', 'degree', 'in_degree'])
        assert_arrays_are_close(nodes['degree'], net.degree)
        assert_arrays_are_close(edges.to_numpy(), net.edges)

class test_analysis(unittest.TestCase):

    def test_planted_beta(self):
        t = np.arange(1, 1001)
        net = SimNetwork(t, np.ones(1000), 3 * np.sqrt(1000 / t), [])
        fit = estimate_beta(net, return_fit=True)
        self.assertAlmostEqual(fit.estimates[1], 0.5, 10)
        self.assertAlmostEqual(fit.estimates[0], np.log(3), 10)
        self.assertAlmostEqual(estimate_beta(net), 0.5, 10)

    def test_scale_free_growth(self):
        nets = replicate([SimConfig(10000, 3, seed=s) for s in range(5)], 2)
        betas = [estimate_beta(n) for n in nets]
        for b in betas:
            self.assertTrue(0.4 <= b <= 0.6, "beta = %s" % b)
        gammas = [tail_fit(distribution(n.degree, 'cumulative'), 'power_law', x_min=6).density_exponent for n in nets]
        for g in gammas:
            self.assertTrue(abs(g - 3) <= 0.3, "density exponents %s" % gammas)

    def test_snapshot_beta(self):
        net = grow(SimConfig(3000, 3, seed=6, snapshot_times=(1500,)))
        self.assertTrue(0.35 <= estimate_beta(net, 1500) <= 0.65)

    def test_fitness_strata(self):
        net = grow(SimConfig(10000, 3, 'uniform', 12, 'degree_times_fitness'))
        s = stratified_beta(net, 10)
        self.assertEqual(list(s.columns), ['stratum', 'fitness_low', 'fitness_high', 'mean_fitness', 'n', 'beta'])
        self.assertEqual(s['n'].sum(), 10000)
        self.assertTrue(np.all(np.diff(s['mean_fitness']) > 0))
        self.assertTrue(spearmanr(s['mean_fitness'], s['beta'])[0] >= 0.9)
        self.assertTrue(s['beta'].iloc[-1] > s['beta'].iloc[0] + 0.3)
        # fitter nodes collect more links
        peers = (net.entry_time > 1000) & (net.entry_time <= 2000)
        self.assertTrue(spearmanr(net.fitness[peers], net.degree[peers])[0] > 0.6)

    def test_replicate(self):
        configs = [SimConfig(200, 2, 'uniform', s) for s in range(6)]
        serial = [grow(c) for c in configs]
        for nets in (replicate(configs, 4), replicate(configs, 1)):
            for a, b in zip(nets, serial):
                self.assertTrue(np.array_equal(a.edges, b.edges))

    def test_thread_cap(self):
        with mock.patch.dict(os.environ, {'CITEFIT_THREADS': '2'}):
            self.assertEqual(thread_count(8), 2)
            self.assertEqual(thread_count(1), 1)
        with mock.patch.dict(os.environ, {'CITEFIT_THREADS': ''}):
            self.assertEqual(thread_count(8), 8)

class test_export(unittest.TestCase):

    def test_corpus(self):
        net = grow(SimConfig(500, 3, 'uniform', 7, 'degree_times_fitness'))
        c = export_as_corpus(net, 0.02)
        self.assertEqual(len(c), 500)
        self.assertEqual(list(c.papers)[:2], ['p001', 'p002'])
        assert_arrays_are_close([p.citation_count for p in c], net.in_degree)
        self.assertEqual(c.year_range, (1974, 1983))
        self.assertEqual(c.collection_year, 1983)
        self.assertEqual(c.temporal_violations, ())
        self.assertTrue(all(1 <= p.n_authors <= 3 for p in c))
        self.assertTrue(set(c.venues) <= {'v0', 'v1', 'v2'})
        self.assertEqual(export_as_corpus(net, 0.02).papers['p250'], c.papers['p250'])

    def test_jsonl_round_trip(self):
        c = export_as_corpus(grow(SimConfig(200, 2, 'uniform', 3)), 0.05)
        with tempfile.TemporaryDirectory() as d:
            path = c.export(os.path.join(d, 'sim.jsonl'), 'jsonl')
            back = ingest(path, 'jsonl')
        assert_corpora_are_equal(c, back)

if __name__ == '__main__':
    unittest.main()
