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
Score distributions, tail fits, yearly trends and authorship analysis.
"""
from .series import (FrequencySeries, distribution, compare_distributions, observed_vs_predicted, TailFit, tail_fit,
                     power_law, exponential, families)
from .trend import TrendSeries, trend, AuthorshipSummary, authorship_analysis, NORMALIZATIONS

__all__ = ['FrequencySeries', 'distribution', 'compare_distributions', 'observed_vs_predicted', 'TailFit', 'tail_fit', 'power_law',
           'exponential', 'families', 'TrendSeries', 'trend', 'AuthorshipSummary', 'authorship_analysis',
           'NORMALIZATIONS']
