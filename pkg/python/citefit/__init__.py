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
citefit: fitness analysis of citation networks.

Subpackages
-----------
corpus          reading, cleaning and exporting citation corpora
metrics         temporal prior impact variables of papers and scholars
inference       least squares with inference statistics
models          paper and scholar fitness models, normalized scores
distributions   score distributions, tail fits, trends
netsim          preferential attachment growth simulator
cli             the ``citefit`` command
"""

__version__ = '1.0.0'

__all__ = ['__version__']
