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

from dataclasses import dataclass, field, asdict

__all__ = ['PaperRecord', 'ScholarRecord', 'IngestReport']


@dataclass(frozen=True)
class PaperRecord:
    """
    One publication.

    ``citation_count`` is the number of in-corpus papers whose reference list
    contains this paper. It is always recomputed by :class:`~citefit.corpus.Corpus`.
    References to papers outside the corpus are kept as opaque keys.
    """
    paper_id: str
    year: int
    venue_id: str
    author_ids: tuple
    reference_ids: tuple = ()
    citation_count: int = 0
    title: str = ''

    @property
    def n_authors(self):
        return len(self.author_ids)


@dataclass(frozen=True)
class ScholarRecord:
    """A unified author: canonical key, the raw spellings met, and the authored papers."""
    scholar_id: str
    normalized_name: str
    alias_names: tuple = ()
    paper_ids: tuple = ()

    @property
    def rho(self):
        return len(self.paper_ids)


@dataclass
class IngestReport:
    """Counters collected while reading and cleaning a corpus file."""
    source: str = ''
    format: str = ''
    records_read: int = 0
    papers: int = 0
    scholars: int = 0
    venues: int = 0
    references: int = 0
    in_corpus_references: int = 0
    dangling_references: int = 0
    dropped_authorless: list = field(default_factory=list)
    dropped_duplicate_ids: list = field(default_factory=list)
    dropped_out_of_window: list = field(default_factory=list)
    duplicate_authors_removed: int = 0
    duplicate_references_removed: int = 0
    self_references_removed: int = 0
    temporal_violations: int = 0
    collection_year: int = None

    def __reduce_to_dict__(self):
        return asdict(self)

    @classmethod
    def __factory_from_dict__(cls, name, d):
        return cls(**{k: v for k, v in d.items() if k in cls.__dataclass_fields__})

    def __str__(self):
        return ("%(records_read)d records read from %(source)s: %(papers)d papers, %(scholars)d scholars, "
                "%(venues)d venues, %(references)d references (%(in_corpus_references)d in corpus, "
                "%(dangling_references)d dangling)") % asdict(self) + \
               ", dropped %d authorless, %d duplicate, %d out of window" % (
                   len(self.dropped_authorless), len(self.dropped_duplicate_ids), len(self.dropped_out_of_window))
