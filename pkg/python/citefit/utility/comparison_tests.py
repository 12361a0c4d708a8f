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

import numpy as np

__all__ = ['assert_arrays_are_close', 'assert_relatively_close', 'assert_series_are_close',
           'assert_fits_are_close', 'assert_corpora_are_equal']

def assert_arrays_are_close(a, b, precision = 1.e-6):
    a, b = np.asarray(a, dtype=float), np.asarray(b, dtype=float)
    assert a.shape == b.shape, "Arrays have different shapes %s and %s"%(a.shape, b.shape)
    d = np.amax(np.abs(a - b)) if a.size else 0.0
    assert d < precision, "Arrays are different. Difference is %s.\n %s \n\n --------- \n\n %s"%(d,a,b)

def assert_relatively_close(a, b, precision = 1.e-8):
    a, b = np.asarray(a, dtype=float), np.asarray(b, dtype=float)
    scale = np.maximum(np.abs(b), 1.0)
    d = np.amax(np.abs(a - b) / scale) if a.size else 0.0
    assert d < precision, "Relative difference %s exceeds %s.\n %s \n\n --------- \n\n %s"%(d, precision, a, b)

def assert_series_are_close(a, b, precision = 1.e-6):
    assert a.kind == b.kind, "series of kind %s and %s"%(a.kind, b.kind)
    assert_arrays_are_close(a.x, b.x, precision)
    assert_arrays_are_close(a.y, b.y, precision)

def assert_fits_are_close(a, b, precision = 1.e-8):
    assert a.names == b.names, "fits have different coefficients %s vs %s"%(a.names, b.names)
    assert_relatively_close(a.estimates, b.estimates, precision)
    assert_relatively_close(a.standard_errors, b.standard_errors, precision)
    assert abs(a.r_squared - b.r_squared) < precision, "R^2 %s vs %s"%(a.r_squared, b.r_squared)

def assert_corpora_are_equal(a, b):
    assert list(a.papers) == list(b.papers), "corpora have different paper keys"
    assert list(a.scholars) == list(b.scholars), "corpora have different scholar keys"
    assert a.collection_year == b.collection_year, "collection years %s and %s"%(a.collection_year, b.collection_year)
    assert a.min_year == b.min_year, "first years %s and %s"%(a.min_year, b.min_year)
    for pid, p in a.papers.items():
        q = b.papers[pid]
        assert (p.year, p.venue_id, p.author_ids, p.reference_ids, p.citation_count) == \
               (q.year, q.venue_id, q.author_ids, q.reference_ids, q.citation_count), "paper %s differs"%pid
