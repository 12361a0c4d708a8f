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
Citation corpus: records, name unification, ingestion and export.
"""
from .records import PaperRecord, ScholarRecord, IngestReport
from .names import normalize_name, normalize_names, load_name_overrides
from .corpus import Corpus, yearly_profile
from .ingest import ingest, read_records, FORMATS

__all__ = ['PaperRecord', 'ScholarRecord', 'IngestReport', 'normalize_name', 'normalize_names',
           'load_name_overrides', 'Corpus', 'yearly_profile', 'ingest', 'read_records', 'FORMATS']
