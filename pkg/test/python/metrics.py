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

import os, tempfile, unittest, warnings
from unittest import mock

import numpy as np

from citefit.corpus import PaperRecord, Corpus
from citefit.errors import ConfigurationError, CorpusWarning, DomainError
from citefit.metrics import *
import citefit.utility.mpi as mpi
from citefit.utility.comparison_tests import assert_arrays_are_close, assert_relatively_close

from toy_corpora import toy_corpus, simulated_corpus

class test_paper_vars(unittest.TestCase):

    def test_tau(self):
        self.assertEqual(compute_tau(2004, 2004), 1.0)
        self.assertEqual(compute_tau(1991, 2004), 14.0)
        self.assertEqual(compute_tau(1974, 2004), 31.0)
        self.assertEqual(compute_tau(1991, 2004, 'age'), 13.0)
        self.assertAlmostEqual(compute_tau(1974, 2004, 'ratio'), 2004 / 1974)
        self.assertEqual(compute_tau(PaperRecord('A', 2000, 'V', ('X',)), 2003), 4.0)
        with self.assertRaises(DomainError): compute_tau(2004, 2004, 'age')
        with self.assertRaises(DomainError): compute_tau(2005, 2004)

    def test_conventions(self):
        c = Conventions('age', 0)
        self.assertEqual(c.shift, 0.0)
        self.assertEqual(Conventions.__factory_from_dict__('c', c.__reduce_to_dict__()), c)
        with self.assertRaises(ConfigurationError): Conventions('days')
        with self.assertRaises(ConfigurationError): Conventions(shift=-1)
        with self.assertRaises(ConfigurationError): Conventions(shift=float('nan'))

    def test_toy(self):
        c = toy_corpus()
        pv = paper_vars(c)
        self.assertEqual(list(pv.keys), ['A', 'B', 'C'])
        assert_arrays_are_close(pv.k, [2, 1, 0])
        assert_arrays_are_close(pv.tau, [4, 2, 1])
        assert_arrays_are_close(pv.phi_a, [0, 0, 0])
        assert_arrays_are_close(pv.phi_v, [0, 0, 0.5])
        assert_arrays_are_close(pv.phi_r, [0, 0, 1])
        assert_arrays_are_close(pv.n_authors, [1, 2, 1])
        self.assertEqual(pv['C'], PaperFitnessVars('C', 1.0, 0.0, 0.5, 1.0))
        assert_arrays_are_close(pv.shifted('phi_r'), [1, 1, 2])
        # the single paper functions agree with the table
        for p in c:
            self.assertEqual((compute_phi_a(p, c), compute_phi_v(p, c), compute_phi_r(p.paper_id, c)),
                             (pv[p.paper_id].phi_a, pv[p.paper_id].phi_v, pv[p.paper_id].phi_r))

    def test_author_prior_impact(self):
        # D (X, 2004) sees the 3 citations received by A and B before 2004
        c = toy_corpus([PaperRecord('D', 2004, 'W', ('X', 'Z'))])
        self.assertEqual(compute_phi_a('D', c), 3.0)
        # E (X, 2003) only sees the citation of A by B in 2002
        c = toy_corpus([PaperRecord('E', 2003, 'W', ('X',))])
        self.assertEqual(compute_phi_a('E', c), 1.0)

    def test_reference_monotonicity(self):
        base = paper_vars(toy_corpus())
        more = paper_vars(toy_corpus([PaperRecord('D', 2001, 'W', ('Z',), ('A',))]))
        self.assertEqual(more['C'].phi_r, base['C'].phi_r + 1)
        self.assertEqual(more['B'].phi_r, 1.0)

    def test_venue(self):
        papers = [PaperRecord('P1', 2000, 'W', ('a',)), PaperRecord('P2', 2000, 'W', ('b',)),
                  PaperRecord('Q1', 2001, 'U', ('c',), ('P1',)), PaperRecord('Q2', 2001, 'U', ('d',), ('P1',)),
                  PaperRecord('R', 2002, 'W', ('e',)), PaperRecord('S', 2002, '', ('e',), ('P1',))]
        c = Corpus(papers)
        self.assertEqual(compute_phi_v('R', c), 1.0)
        self.assertEqual(compute_phi_v('P1', c), 0.0)
        self.assertEqual(compute_phi_v('S', c), 0.0)
        self.assertEqual(compute_phi_r('S', c), 2.0)

    def test_age_convention(self):
        with warnings.catch_warnings(record=True) as w:
            warnings.simplefilter('always')
            pv = paper_vars(toy_corpus(), Conventions('age'))
        self.assertTrue(any(issubclass(x.category, CorpusWarning) for x in w))
        self.assertEqual(list(pv.keys), ['A', 'B'])
        self.assertEqual(pv.excluded, ('C',))
        assert_arrays_are_close(pv.tau, [3, 1])
        self.assertNotIn('C', pv)

    def test_temporal_soundness(self):
        # later papers never change the variables of an earlier one
        c = simulated_corpus()
        full = paper_vars(c)
        for year in np.unique(c.years)[::7]:
            part = paper_vars(c.truncated(year + 1))
            pos = [full.position(k) for k in part.keys]
            for name in ('tau', 'phi_a', 'phi_v', 'phi_r'):
                assert_arrays_are_close(getattr(part, name), getattr(full, name)[pos], 1e-12)

    def test_brute_force(self):
        c = simulated_corpus(n=120)
        pv = paper_vars(c)
        for p in c:
            prior = lambda q: sum(1 for r in c.citing_papers(q.paper_id) if c.papers[r].year < p.year)
            earlier = lambda q: q.year < p.year
            phi_a = sum(prior(q) for a in p.author_ids for q in c.papers_of(a) if earlier(q))
            venue = [q for q in c if q.venue_id == p.venue_id and earlier(q)]
            phi_v = sum(prior(q) for q in venue) / len(venue) if venue else 0.0
            phi_r = sum(prior(c.papers[r]) for r in p.reference_ids if r in c)
            v = pv[p.paper_id]
            self.assertEqual((v.phi_a, v.phi_r), (phi_a, phi_r))
            self.assertAlmostEqual(v.phi_v, phi_v, 12)

    def test_node_slices(self):
        # the slices of every node, summed, give the full computation
        c = simulated_corpus(n=120)
        full = paper_vars(c)
        for size in (2, 3, 7):
            total = np.zeros((len(full), 3))
            for rank in range(size):
                with mock.patch.object(mpi, 'size', size), mock.patch.object(mpi, 'rank', rank), \
                     mock.patch.object(mpi, 'all_reduce', lambda x, op = None: x):
                    part = paper_vars(c)
                self.assertEqual(list(part.keys), list(full.keys))
                assert_arrays_are_close(part.k, full.k)
                total += np.column_stack([part.phi_a, part.phi_v, part.phi_r])
            assert_arrays_are_close(total, np.column_stack([full.phi_a, full.phi_v, full.phi_r]), 1e-12)

class test_scholar_vars(unittest.TestCase):

    def test_fractional_scores(self):
        self.assertEqual(fractional_scores(toy_corpus()), {'X': 2.5, 'Y': 0.5})

    def test_geometric_mean(self):
        rng = np.random.default_rng(3)
        for _ in range(1000):
            v = rng.uniform(0.1, 50, rng.integers(1, 20))
            g = geometric_mean(v)
            self.assertTrue(v.min() * (1 - 1e-12) <= g <= v.max() * (1 + 1e-12))
            self.assertAlmostEqual(geometric_mean(3 * v) / g, 3, 10)
            self.assertAlmostEqual(np.log(g), np.log(v).mean(), 10)
        self.assertEqual(geometric_mean([5, 5, 5]), 5.0)
        self.assertEqual(geometric_mean([5]), 5.0)
        self.assertEqual(geometric_mean([0.1]), 0.1)
        self.assertAlmostEqual(geometric_mean([2, 8]), 4, 12)
        self.assertAlmostEqual(geometric_mean([1, 10, 100]), 10, 12)
        for _ in range(200):
            v = np.full(rng.integers(1, 10), rng.uniform(0.01, 1000))
            self.assertEqual(geometric_mean(v), v[0])
        with self.assertRaises(DomainError): geometric_mean([])
        with self.assertRaises(DomainError): geometric_mean([1, 0])

    def test_toy(self):
        c = toy_corpus()
        sv = scholar_vars(c, paper_vars(c))
        self.assertEqual(list(sv.keys), ['X', 'Y'])
        assert_arrays_are_close(sv.k_s, [2.5, 0.5])
        assert_arrays_are_close(sv.rho, [2, 2])
        assert_arrays_are_close(sv.tau_bar, [np.sqrt(8), np.sqrt(2)], 1e-12)
        assert_arrays_are_close(sv.phi_a_bar, [1, 1], 1e-12)
        assert_arrays_are_close(sv.phi_v_bar, [1, np.sqrt(1.5)], 1e-12)
        assert_arrays_are_close(sv.phi_r_bar, [1, np.sqrt(2)], 1e-12)
        self.assertEqual(sv['X'].rho, 2)

    def test_conservation(self):
        c = simulated_corpus()
        pv = paper_vars(c)
        sv = scholar_vars(c, pv)
        self.assertAlmostEqual(sv.k_s.sum(), pv.k.sum(), 8)
        self.assertEqual(sv.rho.sum(), pv.n_authors.sum())

    def test_age_convention(self):
        with warnings.catch_warnings():
            warnings.simplefilter('ignore')
            c = toy_corpus()
            sv = scholar_vars(c, paper_vars(c, Conventions('age')))
        # rho and k_s still count C, the means do not
        assert_arrays_are_close(sv.rho, [2, 2])
        assert_arrays_are_close(sv.k_s, [2.5, 0.5])
        assert_arrays_are_close(sv.tau_bar, [np.sqrt(3), 1.0], 1e-12)

    def test_single_paper_scholar(self):
        c = toy_corpus([PaperRecord('D', 2001, 'W', ('Z',), ('A',))])
        pv = paper_vars(c)
        sv = scholar_vars(c, pv)
        d, z = pv['D'], sv['Z']
        self.assertEqual(z.rho, 1)
        self.assertEqual(z.tau_bar, d.tau)
        self.assertEqual(z.phi_a_bar, d.phi_a + 1)
        self.assertEqual(z.phi_v_bar, d.phi_v + 1)
        self.assertEqual(z.phi_r_bar, d.phi_r + 1)

class test_vars_file(unittest.TestCase):

    def test_round_trip(self):
        c = simulated_corpus()
        conv = Conventions('ratio', 0.5)
        pv = paper_vars(c, conv)
        sv = scholar_vars(c, pv)
        with tempfile.TemporaryDirectory() as d:
            path = write_vars(pv, sv, os.path.join(d, 'vars.csv'))
            pv2, sv2 = read_vars(path)
        self.assertEqual(pv2.conventions, conv)
        self.assertEqual(list(pv2.keys), list(pv.keys))
        self.assertEqual(list(sv2.keys), list(sv.keys))
        for name in ('tau', 'phi_a', 'phi_v', 'phi_r', 'k'):
            assert_relatively_close(getattr(pv2, name), getattr(pv, name))
        for name in ('tau_bar', 'phi_a_bar', 'phi_v_bar', 'phi_r_bar', 'k_s'):
            assert_relatively_close(getattr(sv2, name), getattr(sv, name))
        self.assertTrue(np.array_equal(pv2.year, pv.year))
        self.assertTrue(np.array_equal(sv2.rho, sv.rho))

if __name__ == '__main__':
    unittest.main()
