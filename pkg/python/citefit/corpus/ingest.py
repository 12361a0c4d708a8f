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
Readers for the XML, CSV and JSONL corpus layouts.

Each reader yields raw records ``dict(paper_id, year, venue, title, authors,
references, locus)``; :func:`ingest` unifies names, cleans the records and builds
the :class:`Corpus`.
"""

import json, re, warnings
import xml.etree.ElementTree as ET
from pathlib import Path

import pandas as pd

from ..errors import CorpusParseError, CorpusWarning
from ..utility import mpi
from ..utility.artifacts import read_table
from .corpus import Corpus, JSONL_META_KEY
from .names import normalize_names
from .records import PaperRecord, ScholarRecord, IngestReport

__all__ = ['ingest', 'read_records', 'FORMATS']

FORMATS = ('xml', 'csv', 'jsonl')

_record_tags = ('article', 'paper', 'record')
_venue_tags = ('source', 'venue', 'conference', 'journal')
_year_re = re.compile(r"-?\d{4}(?!\d)|-?\d+$")

def _year(value, path, line = None, element = None):
    # "2004" or dates such as "2004-10-12"
    s = str(value).strip()
    m = _year_re.match(s)
    if m is None:
        raise CorpusParseError("invalid year %r" % (value,), path, line, element) from None
    return int(m.group(0))

#-------------------------------------------------------------
#  XML (InfoVis 2004 contest style)
#-------------------------------------------------------------

def _text(el, tags):
    for t in tags:
        c = el.find(t)
        if c is not None and c.text and c.text.strip(): return c.text.strip()
    return None

def _ref_id(el):
    return (el.get('id') or el.get('ref') or (el.text or '')).strip()

def _read_xml(path):
    try:
        root = ET.parse(path).getroot()
    except ET.ParseError as e:
        line = e.position[0] if getattr(e, 'position', None) else None
        raise CorpusParseError("malformed XML: %s" % e, path, line) from None
    records = root.iter() if root.tag not in _record_tags else [root]
    n = 0
    for el in records:
        if el.tag not in _record_tags: continue
        n += 1
        locus = "%s[%d]" % (el.tag, n)
        pid = el.get('id') or _text(el, ('id', 'article_id', 'paper_id'))
        if not pid: raise CorpusParseError("record without id", path, element=locus)
        year = _text(el, ('year', 'date', 'pubyear'))
        if year is None: raise CorpusParseError("record %s without year" % pid, path, element=locus)
        authors = [a.text.strip() for a in el.iter('author') if a.text and a.text.strip()]
        refs_el = el.find('references')
        refs = [_ref_id(r) for r in (refs_el if refs_el is not None else el.iter('reference'))]
        yield dict(paper_id=pid.strip(), year=_year(year, path, element=locus + '/year'),
                   venue=_text(el, _venue_tags) or '', title=_text(el, ('title',)) or '',
                   authors=authors, references=[r for r in refs if r], locus=locus)

#-------------------------------------------------------------
#  CSV triple
#-------------------------------------------------------------

def _csv(path, required):
    if not path.exists(): raise CorpusParseError("missing file", path)
    try:
        frame = read_table(path, dtype=str, keep_default_na=False)
    except (pd.errors.ParserError, UnicodeDecodeError) as e:
        raise CorpusParseError("malformed CSV: %s" % e, path) from None
    for c in required:
        if c not in frame.columns: raise CorpusParseError("missing column", path, element=c)
    return frame

def _read_csv(path):
    papers = _csv(path / 'papers.csv', ('paper_id', 'year'))
    authors = _csv(path / 'authors.csv', ('paper_id', 'author'))
    refs = _csv(path / 'refs.csv', ('paper_id', 'reference_id'))
    if 'position' in authors.columns:
        authors = authors.assign(_pos=pd.to_numeric(authors['position'], errors='coerce'))
        authors = authors.sort_values(['paper_id', '_pos'], kind='stable')
    by_paper = {k: list(g['author']) for k, g in authors.groupby('paper_id', sort=False)}
    refs_by = {k: list(g['reference_id']) for k, g in refs.groupby('paper_id', sort=False)}
    venue_col = next((c for c in ('venue_id', 'venue', 'source') if c in papers.columns), None)
    for n, row in enumerate(papers.itertuples(index=False), 2):
        row = row._asdict()
        pid = row['paper_id'].strip()
        if not pid: raise CorpusParseError("empty paper_id", path / 'papers.csv', n, 'paper_id')
        yield dict(paper_id=pid, year=_year(row['year'], path / 'papers.csv', n, 'year'),
                   venue=row[venue_col].strip() if venue_col else '', title=row.get('title', ''),
                   authors=[a.strip() for a in by_paper.get(row['paper_id'], []) if a.strip()],
                   references=[r.strip() for r in refs_by.get(row['paper_id'], []) if r.strip()],
                   locus="papers.csv line %d" % n)

#-------------------------------------------------------------
#  JSONL
#-------------------------------------------------------------

def _jsonl_meta(path):
    with open(path, encoding='utf-8') as f:
        for line in f:
            if not line.strip(): continue
            try:
                d = json.loads(line)
            except json.JSONDecodeError:
                return {}
            return d[JSONL_META_KEY] if isinstance(d, dict) and isinstance(d.get(JSONL_META_KEY), dict) else {}
    return {}

def _read_jsonl(path):
    with open(path, encoding='utf-8') as f:
        for n, line in enumerate(f, 1):
            if not line.strip(): continue
            try:
                d = json.loads(line)
            except json.JSONDecodeError as e:
                raise CorpusParseError("malformed JSON: %s" % e.msg, path, n) from None
            if not isinstance(d, dict): raise CorpusParseError("expected an object", path, n)
            if JSONL_META_KEY in d and 'paper_id' not in d: continue
            pid = d.get('paper_id', d.get('id'))
            if pid is None: raise CorpusParseError("missing paper_id", path, n, 'paper_id')
            if 'year' not in d: raise CorpusParseError("missing year", path, n, 'year')
            authors, refs = d.get('authors', []), d.get('references', [])
            if not isinstance(authors, list) or not isinstance(refs, list):
                raise CorpusParseError("authors and references must be lists", path, n)
            yield dict(paper_id=str(pid), year=_year(d['year'], path, n, 'year'),
                       venue=str(d.get('venue', d.get('venue_id', d.get('source', ''))) or ''),
                       title=str(d.get('title', '') or ''), authors=[str(a) for a in authors],
                       references=[str(r) for r in refs], locus="line %d" % n)

def read_records(path, format):
    """The raw records of a corpus file (a directory for ``csv``), in file order."""
    path = Path(path)
    if format not in FORMATS: raise ValueError("unknown corpus format %r, expected one of %s" % (format, FORMATS))
    if format == 'csv':
        if not path.is_dir(): raise CorpusParseError("CSV corpus must be a directory", path)
        return list(_read_csv(path))
    if not path.is_file(): raise CorpusParseError("no such file", path)
    return list(_read_xml(path) if format == 'xml' else _read_jsonl(path))

##########################################################################

def ingest(path, format, collection_year = None, min_year = None, strict_years = False, name_overrides = None):
    r"""
    Load a citation corpus.

    Parameters
    ----------
    path : str or Path
        XML or JSONL file, or directory holding ``papers.csv``, ``authors.csv`` and
        ``refs.csv`` (plus an optional ``corpus.json`` with ``collection_year`` and
        ``min_year``).
    format : {'xml', 'csv', 'jsonl'}
    collection_year : int, optional
        Census year; defaults to the latest publication year kept.
    min_year : int, optional
    strict_years : bool
        Reject references to later papers instead of keeping them.
    name_overrides : mapping or list of pairs, optional
        Manual name corrections, see :func:`normalize_names`.

    Returns
    -------
    Corpus
        With ``ingest_report`` filled in.

    Notes
    -----
    Records without author are dropped with a :class:`CorpusWarning`, as are records
    with a duplicate key (the first one wins) and records outside the year window.
    Duplicate authors and references, and self references, are removed.
    """
    path = Path(path)
    records = read_records(path, format)
    meta = {}
    if format == 'csv' and (path / 'corpus.json').exists():
        with open(path / 'corpus.json', encoding='utf-8') as f:
            meta = json.load(f)
    elif format == 'jsonl':
        meta = _jsonl_meta(path)
    if collection_year is None: collection_year = meta.get('collection_year')
    if min_year is None: min_year = meta.get('min_year')

    report = IngestReport(source=str(path), format=format, records_read=len(records))
    raw_names = [a for r in records for a in r['authors']]
    # an exported corpus already holds canonical names
    names = {a: a for a in raw_names} if meta.get('canonical_names') and not name_overrides \
            else normalize_names(raw_names, name_overrides)

    seen, kept, aliases = set(), [], {}
    for r in records:
        if r['paper_id'] in seen:
            report.dropped_duplicate_ids.append(r['paper_id'])
            warnings.warn("duplicate paper %s at %s dropped" % (r['paper_id'], r['locus']), CorpusWarning, stacklevel=2)
            continue
        seen.add(r['paper_id'])
        authors = []
        for a in r['authors']:
            c = names[a]
            if not c: continue
            aliases.setdefault(c, set()).add(a)
            if c in authors: report.duplicate_authors_removed += 1
            else: authors.append(c)
        if not authors:
            report.dropped_authorless.append(r['paper_id'])
            warnings.warn("paper %s has no author and is removed" % r['paper_id'], CorpusWarning, stacklevel=2)
            continue
        refs = []
        for x in r['references']:
            if x == r['paper_id']: report.self_references_removed += 1
            elif x in refs: report.duplicate_references_removed += 1
            else: refs.append(x)
        kept.append(PaperRecord(r['paper_id'], r['year'], r['venue'], tuple(authors), tuple(refs), 0, r['title']))

    if collection_year is None and kept: collection_year = max(p.year for p in kept)
    papers = []
    for p in kept:
        if p.year > collection_year or (min_year is not None and p.year < min_year):
            report.dropped_out_of_window.append(p.paper_id)
            warnings.warn("paper %s (%d) outside [%s, %s] is removed" % (p.paper_id, p.year, min_year, collection_year),
                          CorpusWarning, stacklevel=2)
        else:
            papers.append(p)

    used = {a for p in papers for a in p.author_ids}
    scholars = [ScholarRecord(c, c, tuple(sorted(aliases[c]))) for c in sorted(used)]
    corpus = Corpus(papers, collection_year, min_year, strict_years, scholars, ingest_report=report)

    report.papers, report.scholars, report.venues = len(corpus.papers), len(corpus.scholars), len(corpus.venues)
    report.references = corpus.n_references
    report.in_corpus_references = corpus.n_in_corpus_references
    report.dangling_references = report.references - report.in_corpus_references
    report.temporal_violations = len(corpus.temporal_violations)
    report.collection_year = corpus.collection_year
    mpi.report(str(report))
    return corpus
