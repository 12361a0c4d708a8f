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
Reading and writing of the tabular (CSV) and JSON artifacts.

Every artifact may carry the run configuration: as a leading comment line
``# citefit-config: {...}`` for CSV files and under the ``"config"`` key for JSON
files. Keys are sorted and no timestamp is written, so identical runs give
byte-identical files.
"""

import json, math
from pathlib import Path

import numpy as np
import pandas as pd

__all__ = ['CONFIG_PREFIX', 'write_table', 'read_table', 'read_config_header', 'write_json', 'read_json']

CONFIG_PREFIX = '# citefit-config: '

def _jsonable(x):
    if isinstance(x, dict): return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)): return [_jsonable(v) for v in x]
    if isinstance(x, np.ndarray): return [_jsonable(v) for v in x.tolist()]
    if isinstance(x, np.integer): return int(x)
    if isinstance(x, (float, np.floating)):
        x = float(x)
        return x if math.isfinite(x) else repr(x)  # 'nan', 'inf', '-inf'
    if isinstance(x, Path): return str(x)
    return x

def write_table(frame, path, config = None, float_format = '%.10g'):
    """Write a DataFrame as UTF-8 CSV with header row, preceded by the config line."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, 'w', encoding='utf-8', newline='') as f:
        if config is not None:
            f.write(CONFIG_PREFIX + json.dumps(_jsonable(config), sort_keys=True) + '\n')
        frame.to_csv(f, index=False, float_format=float_format, lineterminator='\n')
    return path

def _n_comment_lines(path):
    n = 0
    with open(path, encoding='utf-8') as f:
        for line in f:
            if not line.startswith('#'): break
            n += 1
    return n

def read_table(path, **kw):
    """Read a CSV artifact written by :func:`write_table` (leading comment lines skipped)."""
    return pd.read_csv(path, skiprows=_n_comment_lines(path), **kw)

def read_config_header(path):
    """The configuration echoed in a CSV artifact, or None."""
    with open(path, encoding='utf-8') as f:
        line = f.readline()
    return json.loads(line[len(CONFIG_PREFIX):]) if line.startswith(CONFIG_PREFIX) else None

def write_json(obj, path, config = None):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    d = dict(obj)
    if config is not None: d['config'] = config
    with open(path, 'w', encoding='utf-8') as f:
        json.dump(_jsonable(d), f, indent=2, sort_keys=True)
        f.write('\n')
    return path

def read_json(path):
    with open(path, encoding='utf-8') as f:
        return json.load(f)
