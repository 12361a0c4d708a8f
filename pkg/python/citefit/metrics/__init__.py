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
Temporal fitness variables of papers and scholars.
"""
from .conventions import Conventions, TAU_CONVENTIONS
from .paper import (PaperFitnessVars, PaperVariables, compute_tau, compute_phi_a, compute_phi_v,
                    compute_phi_r, paper_vars)
from .scholar import ScholarFitnessVars, ScholarVariables, fractional_scores, geometric_mean, scholar_vars
from .varsfile import VARS_COLUMNS, write_vars, read_vars

__all__ = ['Conventions', 'TAU_CONVENTIONS', 'PaperFitnessVars', 'PaperVariables', 'compute_tau',
           'compute_phi_a', 'compute_phi_v', 'compute_phi_r', 'paper_vars', 'ScholarFitnessVars',
           'ScholarVariables', 'fractional_scores', 'geometric_mean', 'scholar_vars',
           'VARS_COLUMNS', 'write_vars', 'read_vars']
