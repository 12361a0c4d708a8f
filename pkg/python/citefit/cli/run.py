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
The ``citefit`` command.

Every subcommand writes its artifacts with the resolved :class:`RunConfig` echoed in
them. A failure prints ``{"error": ..., "stage": ..., "message": ...}`` on stderr and
exits with status 1; command line errors exit with status 2.
"""

import argparse, json, os, sys
from pathlib import Path

from ..corpus import ingest, load_name_overrides, yearly_profile, FORMATS
from ..distributions import (distribution, observed_vs_predicted, tail_fit, trend, authorship_analysis,
                             NORMALIZATIONS)
from ..errors import CitefitError, ConfigurationError, CorpusParseError
from ..metrics import paper_vars, scholar_vars, fractional_scores, write_vars, read_vars, TAU_CONVENTIONS
from ..models import (FittedFitnessModel, fit_paper_model, fit_scholar_model, score_table,
                      rank_and_correlate, SCORE_COLUMNS)
from ..netsim import (SimConfig, grow, estimate_beta, stratified_beta, export_as_corpus,
                      FITNESS_DISTRIBUTIONS, ATTACHMENTS)
from ..utility import mpi
from ..utility.artifacts import write_table, write_json, read_json
from .config import RunConfig

__all__ = ['build_parser', 'run', 'main']

COMMANDS = ('ingest', 'vars', 'fit', 'rank', 'dist', 'trend', 'authors', 'simulate', 'pipeline')


class _Stage:
    # name of the stage running, for error reports
    name = None

#-------------------------------------------------------------
#  Argument parsing
#-------------------------------------------------------------

def _existing(path):
    if not os.path.exists(path):
        raise argparse.ArgumentTypeError("no such file or directory: %s" % path)
    return path

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--config', type=_existing, help="JSON configuration file, overridden by the flags")
    common.add_argument('-v', '--verbose', action='count', default=0, help="more output, repeatable")
    common.add_argument('--quiet', action='store_true', help="no progress output")
    common.add_argument('--output-format', dest='output_format', choices=('csv', 'json'), help="tabular artifacts as CSV (default) or JSON")

    conventions = argparse.ArgumentParser(add_help=False)
    conventions.add_argument('--tau-convention', dest='tau_convention', choices=TAU_CONVENTIONS)
    conventions.add_argument('--shift', type=float, help="added to k and phi before logarithms (default 1)")

    reading = argparse.ArgumentParser(add_help=False)
    reading.add_argument('--collection-year', dest='collection_year', type=int)
    reading.add_argument('--min-year', dest='min_year', type=int)
    reading.add_argument('--strict-years', dest='strict_years', action='store_const', const=True,
                         help="reject references to later papers")
    reading.add_argument('--name-overrides', dest='name_overrides', type=_existing,
                         help="CSV (raw,canonical) or JSON file of author name corrections")

    source = argparse.ArgumentParser(add_help=False)
    source.add_argument('--in', dest='input', type=_existing, required=True, help="corpus file or CSV directory")
    source.add_argument('--format', choices=('xml', 'csv', 'jsonl'), required=True)

    corpus = argparse.ArgumentParser(add_help=False)
    corpus.add_argument('--corpus', type=_existing, required=True, help="corpus directory written by 'citefit ingest'")

    scoring = argparse.ArgumentParser(add_help=False)
    scoring.add_argument('--benchmark', type=_existing, help="two column CSV key,count")
    scoring.add_argument('--by', choices=SCORE_COLUMNS)
    scoring.add_argument('--top', dest='top_n', type=int)

    series = argparse.ArgumentParser(add_help=False)
    series.add_argument('--normalize', choices=sorted(NORMALIZATIONS))
    series.add_argument('--kind', choices=('discrete', 'cumulative'))
    series.add_argument('--binning', choices=('unit', 'log'))

    simulation = argparse.ArgumentParser(add_help=False)
    simulation.add_argument('--n', dest='n_final', type=int, help="final number of nodes")
    simulation.add_argument('--m', type=int, help="links per new node")
    simulation.add_argument('--fitness', choices=FITNESS_DISTRIBUTIONS[:2])
    simulation.add_argument('--attachment', choices=ATTACHMENTS)
    simulation.add_argument('--seed', type=int)
    simulation.add_argument('--years-per-step', dest='years_per_step', type=float)
    simulation.add_argument('--threads', dest='n_threads', type=int)

    parser = argparse.ArgumentParser(prog='citefit', description="Fitness analysis of citation networks")
    sub = parser.add_subparsers(dest='command', required=True, metavar='command')

    p = sub.add_parser('ingest', parents=[common, source, reading], help="read and clean a corpus")
    p.add_argument('--out', required=True, help="directory of the cleaned corpus (CSV) and of ingest_report.json")

    p = sub.add_parser('vars', parents=[common, corpus, conventions], help="paper and scholar fitness variables")
    p.add_argument('--out', required=True)

    p = sub.add_parser('fit', parents=[common, conventions], help="fit a fitness model")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument('--vars', dest='vars_file', type=_existing, help="vars.csv")
    g.add_argument('--corpus', type=_existing)
    p.add_argument('--model', choices=('paper', 'scholar'))
    p.add_argument('--out', required=True)

    p = sub.add_parser('rank', parents=[common, corpus, scoring], help="normalized scores and ranking")
    p.add_argument('--fit', type=_existing, required=True)
    p.add_argument('--out', required=True)

    for name, text in (('dist', "score distribution"), ('trend', "yearly score trend")):
        p = sub.add_parser(name, parents=[common, corpus, series, conventions], help=text)
        p.add_argument('--fit', type=_existing, help="required for a normalized score")
        p.add_argument('--out', required=True)
        if name == 'dist':
            p.add_argument('--model', choices=('paper', 'scholar'), help="paper (default) or scholar scores")
            p.add_argument('--vs-predicted', dest='vs_predicted', action='store_true',
                           help="observed against model predicted scores, needs --fit")

    p = sub.add_parser('authors', parents=[common, corpus], help="scores against the number of authors")
    p.add_argument('--fit', type=_existing)
    p.add_argument('--out', required=True)
    p.add_argument('--team-size', dest='team_size', help="yearly team size output (default team_size.csv next to --out)")

    p = sub.add_parser('simulate', parents=[common, simulation], help="grow a preferential attachment network")
    p.add_argument('--out', required=True, help="output directory")
    p.add_argument('--as-corpus', dest='as_corpus', action='store_true', help="also write the network as a corpus")

    p = sub.add_parser('pipeline', parents=[common, source, reading, conventions, scoring, simulation],
                       help="run every stage")
    p.add_argument('--out', required=True, help="output directory")
    p.add_argument('--simulate', action='store_true', help="also run the simulator into net/")
    return parser

#-------------------------------------------------------------
#  Stages
#-------------------------------------------------------------

def _write_frame(frame, path, cfg, extra = None):
    config = dict(cfg.to_dict(), **(extra or {}))
    path = Path(path)
    if cfg.output_format == 'json':
        return write_json({'rows': frame.to_dict(orient='records')}, path.with_suffix('.json'), config)
    return write_table(frame, path, config)

def _load_corpus(path, cfg, format = None):
    path = Path(path)
    format = format or ('csv' if path.is_dir() else path.suffix.lstrip('.').lower())
    if format not in FORMATS:
        raise ConfigurationError("unknown corpus format %r for %s, expected one of %s" % (format, path, ", ".join(FORMATS)))
    overrides = load_name_overrides(cfg.name_overrides) if cfg.name_overrides else None
    return ingest(path, format, cfg.collection_year, cfg.min_year, bool(cfg.strict_years), overrides)

def _load_model(path):
    try:
        return FittedFitnessModel.__factory_from_dict__('model', read_json(path))
    except json.JSONDecodeError as e:
        raise ConfigurationError("%s is not a JSON file: %s" % (path, e.msg)) from None
    except (KeyError, TypeError, ValueError, AssertionError) as e:
        raise ConfigurationError("%s is not a fitted model (%s: %s)" % (path, type(e).__name__, e)) from None

def _load_vars(path):
    try:
        return read_vars(path)
    except ValueError as e:
        raise CorpusParseError("not a vars file: %s" % e, path) from None

def stage_ingest(cfg, out, report = None):
    corpus = _load_corpus(cfg.input, cfg, cfg.format)
    out = Path(out)
    corpus.export(out, 'csv', cfg.to_dict())
    report = Path(report) if report is not None else out / 'ingest_report.json'
    write_json(corpus.ingest_report.__reduce_to_dict__(), report, cfg.to_dict())
    mpi.report(str(corpus.ingest_report), level=2)
    return corpus

def stage_vars(cfg, corpus, out):
    pv = paper_vars(corpus, cfg.conventions)
    sv = scholar_vars(corpus, pv)
    write_vars(pv, sv, out, cfg.to_dict())
    mpi.report("Variables of %d papers and %d scholars written to %s" % (len(pv), len(sv), out))
    return pv, sv

def stage_fit(cfg, variables, kind, out):
    model = fit_paper_model(variables) if kind == 'paper' else fit_scholar_model(variables)
    write_json(model.__reduce_to_dict__(), out, cfg.to_dict())
    mpi.report(model.summary())
    return model

def stage_rank(cfg, model, corpus, out):
    table = score_table(model, corpus, cfg.benchmark)
    ranking = rank_and_correlate(table, cfg.by, cfg.top_n)
    _write_frame(ranking.rows, out, cfg)
    if ranking.correlations:
        out = Path(out)
        write_json(ranking.__reduce_to_dict__(), out.with_name(out.stem + '_correlation.json'), cfg.to_dict())
    mpi.report(str(ranking), level=2)
    return table, ranking

def _scores(cfg, corpus, model, normalize, kind = 'paper'):
    column = NORMALIZATIONS[normalize]
    if model is None:
        if column != 'k': raise ConfigurationError("--fit is required for the %s score" % column)
        if kind == 'scholar': return list(fractional_scores(corpus).values()), None
        return [float(p.citation_count) for p in corpus], None
    if model.kind != kind: raise ConfigurationError("%s scores need a %s model, got a %s model" % (kind, kind, model.kind))
    table = score_table(model, corpus)
    return table[column].to_numpy(), table

def stage_dist(cfg, corpus, model, normalize, out, kind = 'paper'):
    scores, _ = _scores(cfg, corpus, model, normalize, kind)
    s = distribution(scores, cfg.kind, cfg.binning, label=NORMALIZATIONS[normalize])
    _write_frame(s.to_frame(), out, cfg, {'n_excluded': s.n_excluded})
    return s

def stage_predicted(cfg, corpus, model, out, variables = None):
    """Observed scores of the entities of the model against the scores it predicts."""
    if variables is None:
        pv = paper_vars(corpus, model.conventions)
        variables = pv if model.kind == 'paper' else scholar_vars(corpus, pv)
    observed = variables.k if model.kind == 'paper' else variables.k_s
    frame = observed_vs_predicted(observed, model.predict(variables), cfg.kind)
    _write_frame(frame, out, cfg, {'model': model.kind})
    return frame

def stage_trend(cfg, corpus, model, normalize, out):
    _, table = _scores(cfg, corpus, model, normalize)
    if table is None:
        scores = {(p.paper_id, p.year): float(p.citation_count) for p in corpus}
        t = trend(scores, normalize, corpus.year_range)
    else:
        t = trend(table, normalize, corpus.year_range)
    out = Path(out)
    _write_frame(t.to_frame(), out, cfg)
    _write_frame(t.points, out.with_name(out.stem + '_points' + out.suffix), cfg)
    return t

def stage_authors(cfg, corpus, model, out, team_out):
    a = authorship_analysis(corpus, model)
    _write_frame(a.to_frame(), out, cfg)
    _write_frame(a.team_size.to_frame(), team_out, cfg)
    return a

def stage_simulate(cfg, out, as_corpus = False):
    attachment = cfg.attachment or ('degree' if cfg.fitness == 'constant' else 'degree_times_fitness')
    sim = SimConfig(cfg.n_final, cfg.m, cfg.fitness, cfg.seed, attachment)
    net = grow(sim)
    out = Path(out)
    net.save(out, cfg.to_dict())
    tail = tail_fit(distribution(net.degree, 'cumulative'), 'power_law', x_min=2 * sim.m)
    summary = {'simulation': sim.to_dict(), 'n_edges': len(net.edges), 'beta': estimate_beta(net),
               'degree_tail': dict(tail.__reduce_to_dict__(), density_exponent=tail.density_exponent)}
    if attachment == 'degree_times_fitness':
        summary['stratified_beta'] = stratified_beta(net).to_dict(orient='list')
    write_json(summary, out / 'summary.json', cfg.to_dict())
    mpi.report("Simulated %d nodes: beta = %.4g, degree density exponent = %.4g"
               % (net.n_nodes, summary['beta'], tail.density_exponent))
    if as_corpus:
        export_as_corpus(net, cfg.years_per_step).export(out / 'corpus', 'csv', cfg.to_dict())
    return net

#-------------------------------------------------------------
#  Commands
#-------------------------------------------------------------

def _cmd_ingest(args, cfg, stage):
    stage_ingest(cfg, args.out)

def _cmd_vars(args, cfg, stage):
    stage_vars(cfg, _load_corpus(args.corpus, cfg), args.out)

def _cmd_fit(args, cfg, stage):
    if args.vars_file:
        pv, sv = _load_vars(args.vars_file)
    else:
        stage.name = 'vars'
        corpus = _load_corpus(args.corpus, cfg)
        pv = paper_vars(corpus, cfg.conventions)
        sv = scholar_vars(corpus, pv)
        stage.name = 'fit'
    stage_fit(cfg, pv if cfg.model == 'paper' else sv, cfg.model, args.out)

def _cmd_rank(args, cfg, stage):
    stage_rank(cfg, _load_model(args.fit), _load_corpus(args.corpus, cfg), args.out)

def _cmd_dist(args, cfg, stage):
    model = _load_model(args.fit) if args.fit else None
    corpus = _load_corpus(args.corpus, cfg)
    if args.vs_predicted:
        if model is None: raise ConfigurationError("--vs-predicted needs --fit")
        if model.kind != cfg.model:
            raise ConfigurationError("%s scores need a %s model, got a %s model" % (cfg.model, cfg.model, model.kind))
        stage_predicted(cfg, corpus, model, args.out)
    else:
        stage_dist(cfg, corpus, model, cfg.normalize, args.out, cfg.model)

def _cmd_trend(args, cfg, stage):
    model = _load_model(args.fit) if args.fit else None
    stage_trend(cfg, _load_corpus(args.corpus, cfg), model, cfg.normalize, args.out)

def _cmd_authors(args, cfg, stage):
    model = _load_model(args.fit) if args.fit else None
    team = args.team_size or Path(args.out).with_name('team_size.csv')
    stage_authors(cfg, _load_corpus(args.corpus, cfg), model, args.out, team)

def _cmd_simulate(args, cfg, stage):
    stage_simulate(cfg, args.out, args.as_corpus)

def _cmd_pipeline(args, cfg, stage):
    out = Path(args.out)
    stage.name = 'ingest'
    corpus = stage_ingest(cfg, out / 'corpus', out / 'ingest_report.json')
    _write_frame(yearly_profile(corpus).reset_index(), out / 'yearly_profile.csv', cfg)
    stage.name = 'vars'
    pv, sv = stage_vars(cfg, corpus, out / 'vars.csv')
    stage.name = 'fit'
    paper_model = stage_fit(cfg, pv, 'paper', out / 'fit_paper.json')
    scholar_model = stage_fit(cfg, sv, 'scholar', out / 'fit_scholar.json')
    stage.name = 'rank'
    stage_rank(cfg, paper_model, corpus, out / 'rank_papers.csv')
    stage_rank(cfg, scholar_model, corpus, out / 'rank_scholars.csv')
    stage.name = 'dist'
    for n in ('k', 'k_t', 'k_tf'):
        stage_dist(cfg, corpus, paper_model, n, out / ('dist_%s.csv' % n))
    stage_predicted(cfg, corpus, paper_model, out / 'dist_observed_vs_predicted_paper.csv', pv)
    stage_predicted(cfg, corpus, scholar_model, out / 'dist_observed_vs_predicted_scholar.csv', sv)
    stage.name = 'trend'
    for n in ('k', 'k_t', 'k_tf'):
        stage_trend(cfg, corpus, paper_model, n, out / ('trend_%s.csv' % n))
    stage.name = 'authors'
    stage_authors(cfg, corpus, paper_model, out / 'authors.csv', out / 'team_size.csv')
    if args.simulate:
        stage.name = 'simulate'
        stage_simulate(cfg, out / 'net')

_commands = {c: globals()['_cmd_' + c] for c in COMMANDS}

#-------------------------------------------------------------

def _report_error(e, stage):
    sys.stderr.write(json.dumps({'error': type(e).__name__, 'stage': stage, 'message': str(e)}, sort_keys=True) + "\n")
    sys.stderr.flush()

def run(argv = None):
    """
    Run the command line ``argv`` (``sys.argv[1:]`` by default).

    Returns
    -------
    int
        0 on success, 1 when a stage fails, 2 on a command line error.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    mpi.verbosity = 0 if args.quiet else 1 + args.verbose
    stage = _Stage()
    stage.name = 'config'
    try:
        cfg = RunConfig.resolve(vars(args), args.config)
        stage.name = args.command
        _commands[args.command](args, cfg, stage)
    except (CitefitError, OSError) as e:
        _report_error(e, stage.name)
        return 1
    return 0

def main():
    sys.exit(run())
