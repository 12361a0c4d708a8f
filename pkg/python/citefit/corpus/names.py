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

"""
Rule based author name unification.
"""

import csv, json, re, unicodedata
from collections.abc import Mapping
from pathlib import Path

from ..errors import ConfigurationError

__all__ = ['normalize_name', 'normalize_names', 'load_name_overrides']

_non_word = re.compile(r"[^\w]+", re.UNICODE)

def normalize_name(raw):
    r"""
    Canonical form of one author name.

    The name is case folded, accents and punctuation are removed and the
    ``"Last, First"`` order is turned into ``"First Last"``, so that
    ``"Shneiderman, B."`` and ``"B. Shneiderman"`` both give ``"b shneiderman"``.
    The function is idempotent.

    Parameters
    ----------
    raw : str
        Name as found in the source record.

    Returns
    -------
    str
    """
    s = unicodedata.normalize('NFKD', raw)
    s = "".join(c for c in s if not unicodedata.combining(c))
    if ',' in s:
        last, first = s.split(',', 1)
        s = first + ' ' + last
    s = _non_word.sub(' ', s).replace('_', ' ')
    return " ".join(s.casefold().split())

def _override_table(overrides):
    # raw (and normalized raw) -> canonical, conflicts are errors
    pairs = overrides.items() if isinstance(overrides, Mapping) else overrides
    table = {}
    for raw, canonical in pairs:
        for key in {raw, normalize_name(raw)}:
            if table.setdefault(key, canonical) != canonical:
                raise ConfigurationError("conflicting name overrides for %r: %r and %r" % (raw, table[key], canonical))
    return table

def normalize_names(raw_names, overrides = None):
    """
    Map raw author names to canonical names.

    Parameters
    ----------
    raw_names : iterable of str
    overrides : mapping or iterable of (raw, canonical) pairs, optional
        Manual corrections. They are applied after the automatic normalization and
        win over it. An override is matched on the raw name or on its normalized form.

    Returns
    -------
    dict
        raw name -> canonical name, in order of first appearance.

    Raises
    ------
    ConfigurationError
        When two override entries send the same name to different canonical forms.
    """
    table = _override_table(overrides) if overrides else {}
    result = {}
    for raw in raw_names:
        if raw in result: continue
        norm = normalize_name(raw)
        result[raw] = table.get(raw, table.get(norm, norm))
    return result

def load_name_overrides(path):
    """
    Read a name override file as a list of (raw, canonical) pairs.

    A ``.json`` file holds one object ``{"raw": "canonical", ...}``; any other file is
    read as two-column CSV (``raw,canonical``, header line optional).
    Duplicate keys are preserved so that :func:`normalize_names` can report conflicts.
    """
    path = Path(path)
    if path.suffix.lower() == '.json':
        with open(path, encoding='utf-8') as f:
            try:
                return json.load(f, object_pairs_hook=list)
            except json.JSONDecodeError as e:
                raise ConfigurationError("name override file %s: %s" % (path, e)) from e
    pairs = []
    with open(path, newline='', encoding='utf-8') as f:
        for n, row in enumerate(csv.reader(f), 1):
            if not row or row[0].startswith('#'): continue
            if len(row) != 2:
                raise ConfigurationError("name override file %s, line %d: expected 2 columns" % (path, n))
            if n == 1 and [c.strip().lower() for c in row] == ['raw', 'canonical']: continue
            pairs.append((row[0].strip(), row[1].strip()))
    return pairs
