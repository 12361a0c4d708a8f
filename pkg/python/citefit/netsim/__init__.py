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
Preferential attachment growth simulator and growth exponent estimates.
"""
from .growth import SimConfig, SimNetwork, grow, selection_frequencies, FITNESS_DISTRIBUTIONS, ATTACHMENTS
from .analysis import estimate_beta, stratified_beta, replicate, export_as_corpus, thread_count

__all__ = ['SimConfig', 'SimNetwork', 'grow', 'selection_frequencies', 'FITNESS_DISTRIBUTIONS', 'ATTACHMENTS',
           'estimate_beta', 'stratified_beta', 'replicate', 'export_as_corpus', 'thread_count']
