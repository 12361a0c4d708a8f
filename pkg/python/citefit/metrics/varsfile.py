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
The ``vars.csv`` artifact: paper and scholar variables in one table.

Columns ``entity, key, year, tau, phi_a, phi_v, phi_r, k, rho, n_authors``. Paper rows hold
the raw variables; scholar rows hold :math:`\\bar\\tau`, the means of the shifted
:math:`\\phi` and :math:`k_s` in the ``k`` column. The conventions travel in the config header.
"""

import numpy as np
import pandas as pd

from ..errors import CorpusParseError
from ..utility.artifacts import write_table, read_table, read_config_header
from .conventions import Conventions
from .paper import PaperVariables
from .scholar import ScholarVariables

__all__ = ['VARS_COLUMNS', 'write_vars', 'read_vars']

VARS_COLUMNS = ['entity', 'key', 'year', 'tau', 'phi_a', 'phi_v', 'phi_r', 'k', 'rho', 'n_authors']

def write_vars(paper_vars, scholar_vars, path, config = None):
    """Write both variable tables; ``config`` defaults to the conventions."""
    papers = pd.DataFrame({'entity': 'paper', 'key': paper_vars.keys, 'year': paper_vars.year,
                           'tau': paper_vars.tau, 'phi_a': paper_vars.phi_a, 'phi_v': paper_vars.phi_v,
                           'phi_r': paper_vars.phi_r, 'k': paper_vars.k, 'rho': pd.NA,
                           'n_authors': paper_vars.n_authors})
    scholars = pd.DataFrame({'entity': 'scholar', 'key': scholar_vars.keys, 'year': pd.NA,
                             'tau': scholar_vars.tau_bar, 'phi_a': scholar_vars.phi_a_bar,
                             'phi_v': scholar_vars.phi_v_bar, 'phi_r': scholar_vars.phi_r_bar,
                             'k': scholar_vars.k_s, 'rho': scholar_vars.rho, 'n_authors': pd.NA})
    frame = pd.concat([papers, scholars], ignore_index=True)[VARS_COLUMNS]
    for c in ('year', 'rho', 'n_authors'):
        frame[c] = frame[c].astype('Int64')
    if config is None: config = paper_vars.conventions.__reduce_to_dict__()
    return write_table(frame, path, config)

def read_vars(path, conventions = None):
    """
    Read a ``vars.csv`` file back.

    The conventions are taken from ``conventions`` or else from the config header.

    Returns
    -------
    (PaperVariables, ScholarVariables)
    """
    frame = read_table(path, dtype={'key': str})
    missing = [c for c in VARS_COLUMNS if c not in frame.columns]
    if missing: raise CorpusParseError("not a vars file, missing columns %s" % missing, path)
    if conventions is None:
        conventions = Conventions.__factory_from_dict__('Conventions', read_config_header(path) or {})
    p = frame[frame['entity'] == 'paper']
    s = frame[frame['entity'] == 'scholar']
    paper_vars = PaperVariables(p['key'].to_numpy(), p['year'].to_numpy(dtype=int), p['tau'], p['phi_a'],
                                p['phi_v'], p['phi_r'], p['k'], p['n_authors'].to_numpy(dtype=int), conventions)
    scholar_vars = ScholarVariables(s['key'].to_numpy(), s['tau'], s['phi_a'], s['phi_v'], s['phi_r'], s['k'],
                                    s['rho'].to_numpy(dtype=int), conventions)
    return paper_vars, scholar_vars
