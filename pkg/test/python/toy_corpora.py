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

# Small corpora shared by the tests

import numpy as np

from citefit.corpus import Corpus, PaperRecord
from citefit.netsim import SimConfig, grow, export_as_corpus

def toy_corpus(extra = (), **kw):
    """
    A (X, 2000); B (X and Y, 2002) cites A; C (Y, 2003) cites A and B.

    k = (2, 1, 0), phi_r(C) = 1, phi_a(C) = 0, k_s(X) = 2.5, k_s(Y) = 0.5.
    """
    papers = [PaperRecord('A', 2000, 'V', ('X',)),
              PaperRecord('B', 2002, 'V', ('X', 'Y'), ('A',)),
              PaperRecord('C', 2003, 'V', ('Y',), ('A', 'B'))]
    return Corpus(papers + list(extra), **kw)

def simulated_corpus(n = 300, m = 2, seed = 5, years_per_step = 0.05, **kw):
    """A corpus exported from a network grown with uniform fitness."""
    net = grow(SimConfig(n, m, 'uniform', seed, 'degree_times_fitness'))
    return export_as_corpus(net, years_per_step, **kw)

def planted_columns(rng, n):
    """Positive predictors spread over a few decades, as the real variables are."""
    phi_a = np.exp(rng.normal(2.0, 1.2, n))
    phi_v = np.exp(rng.normal(1.0, 0.8, n))
    phi_r = np.exp(rng.normal(3.0, 1.5, n))
    tau = rng.integers(1, 32, n).astype(float)
    return phi_a, phi_v, phi_r, tau
