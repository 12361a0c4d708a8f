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
Paper and scholar fitness models, normalized scores and rankings.
"""
from .model import (FittedFitnessModel, fit_paper_model, fit_scholar_model, design_columns, model_design,
                    MIN_OBSERVATIONS, KINDS, SYMBOLS)
from .scores import ScoreTable, Ranking, load_benchmark, score_table, rank_and_correlate, SCORE_COLUMNS

__all__ = ['FittedFitnessModel', 'fit_paper_model', 'fit_scholar_model', 'design_columns', 'model_design',
           'MIN_OBSERVATIONS', 'KINDS', 'SYMBOLS', 'ScoreTable', 'Ranking', 'load_benchmark', 'score_table',
           'rank_and_correlate', 'SCORE_COLUMNS']
