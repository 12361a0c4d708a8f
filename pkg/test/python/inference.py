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

import numpy as np
from scipy.integrate import quad
from scipy.special import erfc, gammaln

from citefit.errors import DomainError, InsufficientDataError, RankDeficiencyError
from citefit.inference import *
from citefit.utility.artifacts import write_json, read_json
from citefit.utility.comparison_tests import assert_arrays_are_close, assert_relatively_close, assert_fits_are_close

def random_design(rng, n = 200, p = 5, noise = 0.3, intercept = True):
    X = rng.normal(size=(n, p))
    beta = rng.uniform(-2, 2, p + int(intercept))
    y = (beta[0] if intercept else 0) + X @ beta[int(intercept):] + rng.normal(0, noise, n)
    cols = {"x%d" % j: X[:, j] for j in range(p)}
    return DesignMatrix.from_columns(cols, y, intercept), beta

def t_density(x, df):
    return np.exp(gammaln((df + 1) / 2) - gammaln(df / 2) - 0.5 * np.log(df * np.pi)
                  - (df + 1) / 2 * np.log1p(x * x / df))

class test_tdist(unittest.TestCase):

    def test_moderate(self):
        oracle = 2 * quad(t_density, 2, np.inf, args=(60,))[0]
        p = t_pvalue(2, 60)
        self.assertAlmostEqual(p, oracle, 8)
        self.assertTrue(abs(p - 0.0499) < 1e-3)
        self.assertEqual(t_pvalue(0, 10), 1.0)
        self.assertEqual(t_pvalue(-2.5, 17), t_pvalue(2.5, 17))

    def test_far_tail(self):
        p = t_pvalue(12, 600)
        self.assertTrue(0 < p < 1e-28)
        self.assertTrue(0 < t_pvalue(40, 1000) < p)

    def test_gaussian_limit(self):
        x = np.array([0.5, 1, 1.96, 2, 3])
        assert_arrays_are_close(t_pvalue(x, 1e6), erfc(x / np.sqrt(2)), 1e-6)

    def test_monotonic(self):
        t = np.linspace(0, 30, 301)
        for df in (1, 3, 30, 300):
            p = t_pvalue(t, df)
            self.assertEqual(p.shape, t.shape)
            self.assertTrue(np.all(np.diff(p) <= 0))
            self.assertTrue(np.all((p >= 0) & (p <= 1)))
        # heavier tails for fewer degrees of freedom
        self.assertTrue(t_pvalue(3, 5) > t_pvalue(3, 50) > t_pvalue(3, 5000))

    def test_f(self):
        # F(1, df) is the square of t(df)
        self.assertAlmostEqual(f_pvalue(2.5**2, 1, 40), t_pvalue(2.5, 40), 12)
        self.assertEqual(f_pvalue(0, 3, 40), 1.0)
        self.assertEqual(f_pvalue(np.inf, 3, 40), 0.0)

    def test_stars(self):
        for p, s in [(5e-4, '***'), (0.005, '**'), (0.03, '*'), (0.07, '.'), (0.5, ''), (float('nan'), ''), (None, '')]:
            self.assertEqual(significance_stars(p), s)

class test_ols(unittest.TestCase):

    def test_noiseless_line(self):
        x = np.arange(10.)
        fit = ols_fit(DesignMatrix.from_columns({'x': x}, 1 + 2 * x))
        assert_arrays_are_close(fit.estimates, [1, 2], 1e-12)
        self.assertEqual(fit.r_squared, 1.0)
        self.assertEqual((fit.df1, fit.df2, fit.n), (1, 8, 10))
        self.assertTrue(fit.residual_std < 1e-12)
        self.assertEqual(fit.names, ['intercept', 'x'])

    def test_oracle(self):
        rng = np.random.default_rng(11)
        for _ in range(50):
            d, _ = random_design(rng)
            fit = ols_fit(d)
            beta, *_ = np.linalg.lstsq(d.X, d.y, rcond=None)
            assert_arrays_are_close(fit.estimates, beta, 1e-8)
            r = d.y - d.X @ beta
            s2 = r @ r / (d.n - d.p)
            assert_arrays_are_close(fit.standard_errors, np.sqrt(np.diag(s2 * np.linalg.inv(d.X.T @ d.X))), 1e-8)
            sst = ((d.y - d.y.mean())**2).sum()
            self.assertAlmostEqual(fit.r_squared, 1 - r @ r / sst, 10)
            self.assertAlmostEqual(fit.adj_r_squared, 1 - (r @ r / (d.n - d.p)) / (sst / (d.n - 1)), 10)
            assert_relatively_close(fit.f_statistic, ((sst - r @ r) / (d.p - 1)) / s2, 1e-8)
            assert_fits_are_close(normal_equations_fit(d), fit, 1e-8)

    def test_orthogonality(self):
        rng = np.random.default_rng(12)
        d, _ = random_design(rng, 500, 4)
        fit = ols_fit(d)
        assert_arrays_are_close(d.X.T @ fit.residuals, np.zeros(d.p), 1e-9)
        assert_arrays_are_close(fit.fitted + fit.residuals, d.y, 1e-12)

    def test_permutation_invariance(self):
        rng = np.random.default_rng(13)
        d, _ = random_design(rng)
        assert_fits_are_close(ols_fit(d.permuted(rng.permutation(d.n))), ols_fit(d), 1e-10)

    def test_no_intercept(self):
        rng = np.random.default_rng(14)
        d, _ = random_design(rng, intercept=False)
        fit = ols_fit(d)
        self.assertFalse(fit.has_intercept)
        self.assertEqual(fit.df1, d.p)
        r = fit.residuals
        self.assertAlmostEqual(fit.r_squared, 1 - r @ r / (d.y @ d.y), 10)

    def test_rank_deficiency(self):
        rng = np.random.default_rng(15)
        x, z = rng.normal(size=(2, 50))
        with self.assertRaises(RankDeficiencyError) as e:
            ols_fit(DesignMatrix.from_columns({'x': x, 'x2': 2 * x, 'z': z}, rng.normal(size=50)))
        self.assertEqual(e.exception.columns, ['x', 'x2'])
        with self.assertRaises(RankDeficiencyError) as e:
            ols_fit(DesignMatrix.from_columns({'x': x, 'c': np.full(50, 3.)}, rng.normal(size=50)))
        self.assertEqual(e.exception.columns, ['intercept', 'c'])

    def test_invalid_designs(self):
        with self.assertRaises(InsufficientDataError):
            DesignMatrix.from_columns({'x': [1., 2.]}, [1., 2.])
        with self.assertRaises(DomainError):
            DesignMatrix.from_columns({'x': [1., np.nan, 3., 4.]}, [1., 2., 3., 4.])
        with self.assertRaises(DomainError):
            DesignMatrix.from_columns({'x': [1., 2., 3., 5.]}, [1., 2., np.inf, 4.])
        with self.assertRaises(DomainError):
            DesignMatrix(['x', 'x'], np.ones((5, 2)), np.ones(5))

    def test_inference_outputs(self):
        rng = np.random.default_rng(16)
        d, _ = random_design(rng, 100, 2)
        fit = ols_fit(d)
        row = fit['x1']
        self.assertEqual(row['name'], 'x1')
        self.assertAlmostEqual(row['t_value'], row['estimate'] / row['std_error'], 12)
        self.assertAlmostEqual(row['p_value'], t_pvalue(row['t_value'], 97), 14)
        self.assertIn('x0', fit)
        self.assertEqual(list(fit.table().columns), ['estimate', 'std_error', 't_value', 'p_value', 'stars'])
        ci = fit.confidence_intervals(0.95)
        half = (ci['upper'] - ci['lower']).to_numpy() / 2
        assert_arrays_are_close(t_pvalue(half / fit.standard_errors, 97), np.full(3, 0.05), 1e-10)
        text = fit.summary(labels={'x1': 'slope'})
        self.assertIn('slope', text)
        self.assertIn('Signif. codes', text)
        self.assertIn('on 97 degrees of freedom', text)
        self.assertIn('F-statistic', text)

    def test_serialization(self):
        rng = np.random.default_rng(17)
        fit = ols_fit(random_design(rng)[0])
        with tempfile.TemporaryDirectory() as d:
            path = write_json(fit.__reduce_to_dict__(), os.path.join(d, 'fit.json'))
            back = FitResult.__factory_from_dict__('fit', read_json(path))
        assert_fits_are_close(back, fit, 1e-14)
        assert_arrays_are_close(back.covariance, fit.covariance, 1e-14)
        self.assertEqual((back.df1, back.df2, back.n), (fit.df1, fit.df2, fit.n))
        self.assertAlmostEqual(back.f_pvalue, fit.f_pvalue, 14)
        self.assertIsNone(back.residuals)

    def test_coverage(self):
        # estimates fall within 3 standard errors of the planted values
        rng = np.random.default_rng(18)
        inside = total = 0
        for _ in range(100):
            d, beta = random_design(rng, 5000, 5, noise=1.0)
            fit = ols_fit(d)
            inside += int(np.sum(np.abs(fit.estimates - beta) < 3 * fit.standard_errors))
            total += len(beta)
        self.assertTrue(inside >= 0.95 * total, "%d of %d within 3 SE" % (inside, total))

if __name__ == '__main__':
    unittest.main()
