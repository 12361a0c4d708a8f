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

import json, warnings
from dataclasses import replace
from pathlib import Path
from types import MappingProxyType

import numpy as np
import pandas as pd

from ..errors import DomainError, TemporalOrderError, CorpusWarning
from ..utility.artifacts import write_table
from .records import ScholarRecord

__all__ = ['Corpus', 'yearly_profile', 'JSONL_META_KEY']

# key of the leading line of an exported JSONL corpus, holding the corpus metadata
JSONL_META_KEY = '_corpus'


class Corpus:
    r"""
    An indexed, immutable citation corpus.

    Papers are stored in (year, paper_id) order. The citation count :math:`k_i` of
    every paper is recomputed from the reference lists at construction; the value
    found in the input records is ignored.

    Attributes
    ----------
    papers : mapping paper_id -> PaperRecord
    scholars : mapping scholar_id -> ScholarRecord
    venues : mapping venue_id -> label
    collection_year : int
        The census year :math:`t`. Defaults to the largest publication year.
    temporal_violations : tuple of (citing_id, cited_id)
        References to in-corpus papers published after the citing paper.
    ingest_report : IngestReport or None
    """

    def __init__(self, papers, collection_year = None, min_year = None, strict_years = False,
                 scholars = None, venues = None, ingest_report = None):
        """
        Parameters
        ----------
        papers : iterable of PaperRecord
            Paper keys must be unique and every paper must have at least one author.
        collection_year : int, optional
        min_year : int, optional
            Lower end of the admissible publication years.
        strict_years : bool
            Raise :class:`TemporalOrderError` on a reference to a later paper instead of
            keeping it with a warning.
        scholars : iterable of ScholarRecord, optional
            Supplies canonical names and aliases; the paper lists are rebuilt anyway.
        venues : mapping venue_id -> label, optional
        """
        papers = sorted(papers, key=lambda p: (p.year, p.paper_id))
        ids = [p.paper_id for p in papers]
        if len(set(ids)) != len(ids):
            raise DomainError("duplicate paper keys in corpus")
        for p in papers:
            if not p.author_ids:
                raise DomainError("paper %s has no author" % p.paper_id)
            if len(set(p.author_ids)) != len(p.author_ids) or len(set(p.reference_ids)) != len(p.reference_ids):
                raise DomainError("paper %s has duplicate authors or references" % p.paper_id)

        self.collection_year = int(collection_year) if collection_year is not None else \
                               (max(p.year for p in papers) if papers else None)
        self.min_year = min_year
        self.strict_years = strict_years
        for p in papers:
            if p.year > self.collection_year or (min_year is not None and p.year < min_year):
                raise DomainError("paper %s (%d) outside the year window [%s, %s]" % (p.paper_id, p.year, min_year, self.collection_year))

        self._index = {pid: i for i, pid in enumerate(ids)}
        self.years = np.array([p.year for p in papers], dtype=int)

        # citation index
        cited_by = [[] for _ in papers]
        violations = []
        for i, p in enumerate(papers):
            for r in p.reference_ids:
                j = self._index.get(r)
                if j is None: continue
                cited_by[j].append(i)
                if p.year < papers[j].year: violations.append((p.paper_id, r))
        if violations:
            if strict_years:
                raise TemporalOrderError("%d references point to later papers, e.g. %s -> %s" % ((len(violations),) + violations[0]))
            warnings.warn("%d references point to papers published later (kept)" % len(violations), CorpusWarning, stacklevel=2)
        self.temporal_violations = tuple(violations)
        self._cited_by = [np.array(c, dtype=int) for c in cited_by]
        self._citing_years = [np.sort(self.years[c]) for c in self._cited_by]

        papers = [replace(p, citation_count=len(c)) for p, c in zip(papers, cited_by)]
        self.papers = MappingProxyType({p.paper_id: p for p in papers})

        # scholars
        given = {s.scholar_id: s for s in scholars} if scholars is not None else {}
        authored = {}
        for p in papers:
            for a in p.author_ids: authored.setdefault(a, []).append(p.paper_id)
        self.scholars = MappingProxyType({
            a: ScholarRecord(a, given[a].normalized_name if a in given else a,
                             tuple(given[a].alias_names) if a in given else (), tuple(pids))
            for a, pids in sorted(authored.items())})

        labels = dict(venues) if venues else {}
        self.venues = MappingProxyType({v: labels.get(v, v) for v in sorted({p.venue_id for p in papers})})
        self.ingest_report = ingest_report

    #-------------------------------------------------------------

    def __len__(self): return len(self.papers)

    def __iter__(self): return iter(self.papers.values())

    def __contains__(self, paper_id): return paper_id in self._index

    def __repr__(self):
        return "Corpus(%d papers, %d scholars, %d venues, collection year %s)" % (
            len(self.papers), len(self.scholars), len(self.venues), self.collection_year)

    def __reduce__(self):
        return self.__class__, (tuple(self.papers.values()), self.collection_year, self.min_year,
                                self.strict_years, tuple(self.scholars.values()), dict(self.venues))

    def index(self, paper_id):
        """Position of a paper in the (year, paper_id) ordering."""
        return self._index[paper_id]

    def citing_papers(self, paper_id):
        """The in-corpus papers whose reference list contains paper_id."""
        keys = list(self.papers)
        return tuple(keys[i] for i in self._cited_by[self._index[paper_id]])

    def citing_years(self, paper_id):
        """Sorted publication years of the in-corpus papers citing paper_id."""
        return self._citing_years[self._index[paper_id]]

    def citations_before(self, paper_id, year):
        """Number of citations paper_id received from papers published strictly before year."""
        return int(np.searchsorted(self._citing_years[self._index[paper_id]], year, side='left'))

    def papers_of(self, scholar_id):
        return tuple(self.papers[pid] for pid in self.scholars[scholar_id].paper_ids)

    @property
    def year_range(self):
        return (int(self.years.min()), int(self.years.max())) if len(self.years) else None

    @property
    def n_references(self):
        """All reference entries, within and without the corpus."""
        return sum(len(p.reference_ids) for p in self.papers.values())

    @property
    def n_in_corpus_references(self):
        return sum(len(c) for c in self._cited_by)

    def truncated(self, year):
        """The corpus of the papers published strictly before year, same collection year."""
        return Corpus([p for p in self.papers.values() if p.year < year], self.collection_year,
                      self.min_year, False, self.scholars.values(), self.venues)

    #-------------------------------------------------------------

    def export(self, path, format = 'csv', config = None):
        """
        Write the corpus so that :func:`~citefit.corpus.ingest` reads it back identically.

        ``csv`` writes the directory ``path`` with ``papers.csv``, ``authors.csv``,
        ``refs.csv`` and ``corpus.json``; ``jsonl`` writes to ``path`` a leading
        ``{"_corpus": {...}}`` line with the same metadata, then one paper per line.
        """
        path = Path(path)
        papers = list(self.papers.values())
        if format == 'csv':
            path.mkdir(parents=True, exist_ok=True)
            write_table(pd.DataFrame({'paper_id': [p.paper_id for p in papers],
                                      'year': [p.year for p in papers],
                                      'venue_id': [p.venue_id for p in papers],
                                      'title': [p.title for p in papers]}), path / 'papers.csv', config)
            write_table(pd.DataFrame([(p.paper_id, n, self.scholars[a].normalized_name)
                                      for p in papers for n, a in enumerate(p.author_ids, 1)],
                                     columns=['paper_id', 'position', 'author']), path / 'authors.csv', config)
            write_table(pd.DataFrame([(p.paper_id, r) for p in papers for r in p.reference_ids],
                                     columns=['paper_id', 'reference_id']), path / 'refs.csv', config)
            with open(path / 'corpus.json', 'w', encoding='utf-8') as f:
                meta = {'collection_year': self.collection_year, 'min_year': self.min_year, 'canonical_names': True}
                if config is not None: meta['config'] = config
                json.dump(meta, f, indent=2, sort_keys=True)
                f.write('\n')
        elif format == 'jsonl':
            path.parent.mkdir(parents=True, exist_ok=True)
            with open(path, 'w', encoding='utf-8') as f:
                meta = {'collection_year': self.collection_year, 'min_year': self.min_year, 'canonical_names': True}
                if config is not None: meta['config'] = config
                f.write(json.dumps({JSONL_META_KEY: meta}, sort_keys=True) + '\n')
                for p in papers:
                    f.write(json.dumps({'paper_id': p.paper_id, 'year': p.year, 'venue': p.venue_id,
                                        'title': p.title,
                                        'authors': [self.scholars[a].normalized_name for a in p.author_ids],
                                        'references': list(p.reference_ids)}, sort_keys=True) + '\n')
        else:
            raise ValueError("unknown export format %r" % format)
        return path

##########################################################################

def yearly_profile(corpus):
    """
    Yearly counts of papers, references made and citations received.

    Returns
    -------
    pandas.DataFrame
        Indexed by every year of the corpus range (contiguous), columns ``papers``,
        ``references`` (reference entries of the papers published that year, within
        and without the corpus) and ``citations`` (citations received by the papers
        published that year). Column sums equal the corpus totals.
    """
    columns = ['papers', 'references', 'citations']
    if not len(corpus):
        return pd.DataFrame(columns=columns, index=pd.Index([], name='year'), dtype=int)
    lo, hi = corpus.year_range
    counts = np.zeros((hi - lo + 1, 3), dtype=int)
    for p in corpus:
        counts[p.year - lo] += (1, len(p.reference_ids), p.citation_count)
    return pd.DataFrame(counts, index=pd.Index(range(lo, hi + 1), name='year'), columns=columns)
