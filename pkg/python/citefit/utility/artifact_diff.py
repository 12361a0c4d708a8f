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
Compare two artifact directories (or files) written by ``citefit``.

CSV tables are compared column by column, numbers up to a precision; JSON documents
recursively; any other file byte for byte. Usage::

    python -m citefit.utility.artifact_diff run1/ run2/ [-p 1e-8] [-v]
"""

import json, sys
from pathlib import Path

import numpy as np

from .artifacts import read_table, read_config_header

__all__ = ['compare', 'compare_tables', 'artifact_diff']

verbose = 0

def _fail(failures, key, message):
    failures.append("Comparison of '%s' has failed:\n %s" % (key, message))

def compare(key, a, b, precision, failures):
    """Compare two decoded JSON values named key, appending the differences to failures."""
    if verbose and key: print("Comparing %s ...." % key)
    num = (int, float)
    if isinstance(a, num) and isinstance(b, num) and not isinstance(a, bool) and not isinstance(b, bool):
        if not abs(a - b) <= precision * max(1.0, abs(b)):
            _fail(failures, key, "a - b = %s" % (a - b))
    elif type(a) != type(b):
        _fail(failures, key, "different types %s and %s" % (type(a).__name__, type(b).__name__))
    elif isinstance(a, dict):
        if sorted(a) != sorted(b):
            _fail(failures, key, "different keys\n %s \n vs\n %s" % (sorted(a), sorted(b)))
        for k in a:
            if k in b: compare(key + '/' + k, a[k], b[k], precision, failures)
    elif isinstance(a, list):
        if len(a) != len(b):
            _fail(failures, key, "lists of different size %d and %d" % (len(a), len(b)))
        else:
            for n, (x, y) in enumerate(zip(a, b)):
                compare("%s[%d]" % (key, n), x, y, precision, failures)
    elif a != b:
        _fail(failures, key, "'%s' and '%s' are different" % (a, b))

def compare_tables(key, a, b, precision, failures):
    """Compare two CSV artifacts: config header, columns, then values."""
    compare(key + '#config', read_config_header(a), read_config_header(b), precision, failures)
    ta, tb = read_table(a), read_table(b)
    if list(ta.columns) != list(tb.columns) or len(ta) != len(tb):
        _fail(failures, key, "tables of shape %s %s and %s %s" % (ta.shape, list(ta.columns), tb.shape, list(tb.columns)))
        return
    for c in ta.columns:
        x, y = ta[c], tb[c]
        if x.dtype.kind in 'fi' and y.dtype.kind in 'fi':
            x, y = x.to_numpy(float), y.to_numpy(float)
            same = np.isclose(x, y, rtol=precision, atol=precision, equal_nan=True)
        else:
            same = (x.astype(str) == y.astype(str)).to_numpy()
        if not same.all():
            i = int(np.argmin(same))
            _fail(failures, "%s:%s" % (key, c), "row %d: %s vs %s" % (i, x[i], y[i]))

def _compare_files(key, a, b, precision, failures):
    if a.suffix == '.csv':
        compare_tables(key, a, b, precision, failures)
    elif a.suffix == '.json':
        with open(a, encoding='utf-8') as fa, open(b, encoding='utf-8') as fb:
            compare(key, json.load(fa), json.load(fb), precision, failures)
    elif a.read_bytes() != b.read_bytes():
        _fail(failures, key, "files differ")

def artifact_diff(path1, path2, precision = 1.e-8):
    """
    Compare two artifacts or artifact directories.

    Returns
    -------
    list of str
        The differences found, empty when the artifacts agree.
    """
    p1, p2 = Path(path1), Path(path2)
    failures = []
    if p1.is_dir() and p2.is_dir():
        f1 = {str(p.relative_to(p1)) for p in p1.rglob('*') if p.is_file()}
        f2 = {str(p.relative_to(p2)) for p in p2.rglob('*') if p.is_file()}
        for k in sorted(f1 ^ f2):
            _fail(failures, k, "present in only one directory")
        for k in sorted(f1 & f2):
            _compare_files(k, p1 / k, p2 / k, precision, failures)
    else:
        _compare_files(p1.name, p1, p2, precision, failures)
    return failures

def main(argv = None):
    import argparse
    parser = argparse.ArgumentParser(description="Compare citefit artifacts numerically")
    parser.add_argument('path1', help="first artifact or directory")
    parser.add_argument('path2', help="second artifact or directory")
    parser.add_argument('--verbose', '-v', action='store_true', help="")
    parser.add_argument('--precision', '-p', action='store', type=float, default=1.e-8, help="")
    args = parser.parse_args(argv)
    global verbose
    verbose = args.verbose

    failures = artifact_diff(args.path1, args.path2, args.precision)
    if failures:
        print('-'*50, file=sys.stderr)
        print('-'*20 + '  FAILED  ' + '-'*20, file=sys.stderr)
        print('-'*50, file=sys.stderr)
        for x in failures:
            print(x, file=sys.stderr)
            print('-'*50, file=sys.stderr)
        return 1
    return 0

if __name__ == "__main__":
    sys.exit(main())
