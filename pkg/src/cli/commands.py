# src/cli/commands.py
"""
COMMANDES DU PIPELINE: INFER, PLACE, ROUTERS, ANALYZE, SYNTH
"""

import os

from analysis.collateral import collateral_damage, collateral_rows
from analysis.cone_bypass import cone_bypass
from analysis.correlation import rank_comparison, rank_correlation
from analysis.cost import cost_report
from cli.synthetic import generate_bundle, write_bundle
from inference.corpus import build_corpus, format_corpus, parse_corpus
from ingest.aliases import AliasMap, parse_alias_map
from ingest.countries import parse_as_countries, parse_country_codes
from ingest.prefixes import parse_prefix_to_as, parse_target_prefixes
from ingest.records import CountryMap
from ingest.relationships import parse_relationships
from ingest.rib import parse_rib
from ingest.traces import parse_traces
from placement.incidence import PathIncidence
from placement.key_ases import (cdf_series, coverage_of, cross_coverage, find_key_ases,
                                replacement_summary, stability_series)
from placement.ranking import rank_ases
from routermap.prefix_map import PrefixToAsMap
from routermap.routers import placement_rollup, place_routers, router_rows
from topology.graph import build_graph
from utils.config import config
from utils.exceptions import (ConfigError, DecoyPlaceError, EmptyCorpusError,
                              MissingInputError, NoTracesError)
from utils.helpers import (format_fraction, get_logger, read_json, read_lines, sha256_file,
                           write_csv, write_json, write_lines)

logger = get_logger("cli")


# ---------- chargement des entrées ----------

def _lines(path):
    if not path or not os.path.isfile(path):
        raise MissingInputError(f"fichier introuvable: {path}")
    return read_lines(path)


def load_graph(run_config):
    edges, stats = parse_relationships(_lines(run_config.rels))
    logger.info("relations: %d acceptées, %d rejetées", stats.accepted, stats.rejected)
    return build_graph(edges)


def load_rib(run_config):
    entries, totals = [], {}
    for path in run_config.rib:
        parsed, stats = parse_rib(_lines(path), vantage=os.path.basename(path))
        entries.extend(parsed)
        totals[os.path.basename(path)] = stats.to_dict()
    return entries, totals


def load_targets(run_config):
    targets, _ = parse_target_prefixes(_lines(run_config.prefixes))
    return targets


def load_countries(run_config):
    """CountryMap, ou None sans fichier de pays."""
    if not run_config.countries:
        return None
    mapping, _ = parse_as_countries(_lines(run_config.countries))
    censors = frozenset()
    if run_config.censors:
        censors, _ = parse_country_codes(_lines(run_config.censors))
    return CountryMap(mapping=mapping, censor_set=censors)


def load_corpus(run_config):
    path = run_config.paths or run_config.output_path(config.PATHS_FILE)
    corpus, stats = parse_corpus(_lines(path))
    if stats.rejects:
        logger.warning("fichier de chemins: %d lignes rejetées", stats.rejected)
    if corpus.is_empty():
        raise EmptyCorpusError(f"corpus de chemins vide: {path}")
    return corpus


# ---------- manifeste ----------

def update_manifest(run_config, command):
    """Empreinte de la configuration et sha256 de chaque fichier de sortie."""
    out = run_config.out
    manifest_path = run_config.output_path(config.MANIFEST_FILE)
    commands = []
    if os.path.isfile(manifest_path):
        commands = read_json(manifest_path).get('commands', [])
    if command not in commands:
        commands.append(command)
    outputs = {}
    for root, _, files in os.walk(out):
        for filename in files:
            path = os.path.join(root, filename)
            relative = os.path.relpath(path, out).replace(os.sep, '/')
            if relative != config.MANIFEST_FILE:
                outputs[relative] = sha256_file(path)
    write_json(manifest_path, {
        'config_hash': run_config.config_hash(),
        'commands': commands,
        'outputs': dict(sorted(outputs.items())),
    })


# ---------- commandes ----------

def cmd_infer(run_config):
    run_config.validate(required=('rib', 'rels', 'prefixes'))
    graph = load_graph(run_config)
    entries, rib_stats = load_rib(run_config)
    targets = load_targets(run_config)
    corpus = build_corpus(targets, entries, graph)

    invalid = corpus.invalid_paths(graph)
    if invalid:
        logger.error("%d chemins inférés non valley-free", len(invalid))
    if corpus.is_empty():
        logger.warning("aucun chemin inféré")

    write_lines(run_config.output_path(config.PATHS_FILE), format_corpus(corpus))
    write_json(run_config.output_path(config.INFERENCE_STATS_FILE), {
        'graph': graph.summary(),
        'rib': rib_stats,
        'prefixes': corpus.stats(),
        'total_paths': corpus.total_paths,
        'invalid_paths': len(invalid),
    })
    update_manifest(run_config, 'infer')
    logger.info("infer: %d chemins pour %d préfixes", corpus.total_paths, len(corpus.prefixes))
    return corpus


def _ranking_rows(table, countries):
    rows = []
    for entry in table.entries:
        if entry.paths_containing == 0:
            continue
        cc = countries.label_of(entry.asn) if countries else config.UNKNOWN_COUNTRY
        censor = int(bool(countries and countries.is_censor(entry.asn)))
        rows.append([entry.rank, entry.asn, cc, entry.paths_containing,
                     format_fraction(entry.paths_containing / table.total_paths), censor])
    return rows


def cmd_place(run_config):
    run_config.validate()
    corpus = load_corpus(run_config)
    countries = load_countries(run_config)
    incidence = PathIncidence(corpus)
    table = rank_ases(incidence)
    threshold = run_config.threshold_as

    baseline = find_key_ases(table, incidence, threshold, countries, exclude_censors=False)
    censor_free = find_key_ases(table, incidence, threshold, countries, exclude_censors=True)
    payload = {
        'threshold': threshold,
        'total_paths': incidence.total_paths,
        'selected': censor_free.selected,
        'baseline': baseline.to_dict(),
        'censor_free': censor_free.to_dict(),
        'replacement': replacement_summary(baseline, censor_free),
        'greedy_minimal': bool(censor_free.is_greedy_minimal(incidence)),
    }
    if censor_free.selected:
        payload['coverage_by_country'] = coverage_of(censor_free.selected, incidence, countries).to_dict()
    write_json(run_config.output_path(config.PLACEMENT_FILE), payload)

    write_csv(run_config.output_path(config.RANKING_FILE),
              ['rank', 'asn', 'country', 'paths', 'fraction', 'censor'],
              _ranking_rows(table, countries))
    write_csv(run_config.output_path(config.CDF_FILE),
              ['rank', 'asn', 'country', 'paths', 'unique_added', 'cumulative_paths',
               'cumulative_fraction'],
              [[row.rank, row.asn, row.country, row.paths_containing, row.unique_added,
                row.cumulative_paths, format_fraction(row.cumulative_fraction)]
               for row in cdf_series(table, incidence, config.CDF_TOP_N, countries)])

    prefix_order = ([target.prefix for target in load_targets(run_config)]
                    if run_config.prefixes else corpus.prefixes)
    stability = stability_series(corpus, prefix_order, config.STABILITY_STEPS, threshold, countries)
    write_csv(run_config.output_path(config.STABILITY_FILE),
              ['n_prefixes', 'k', 'coverage', 'threshold_reached'],
              [[row.destinations, row.k, format_fraction(row.coverage), int(row.threshold_reached)]
               for row in stability])

    if run_config.validate_paths and censor_free.selected:
        other, _ = parse_corpus(_lines(run_config.validate_paths))
        if other.is_empty():
            raise EmptyCorpusError(f"corpus de validation vide: {run_config.validate_paths}")
        write_json(run_config.output_path(config.VALIDATION_FILE), {
            'selected': censor_free.selected,
            'coverage': cross_coverage(censor_free.selected, other, countries).to_dict(),
        })
    update_manifest(run_config, 'place')
    return censor_free


def _router_targets(run_config):
    if run_config.asn:
        return sorted(set(run_config.asn))
    placement_path = run_config.output_path(config.PLACEMENT_FILE)
    if os.path.isfile(placement_path):
        return sorted(read_json(placement_path).get('selected', []))
    raise ConfigError("aucun AS pour l'analyse des routeurs (--asn ou placement.json)")


def cmd_routers(run_config):
    run_config.validate(required=('traces', 'p2a'))
    traces, _ = parse_traces(_lines(run_config.traces))
    pairs, _ = parse_prefix_to_as(_lines(run_config.p2a))
    p2a = PrefixToAsMap(pairs)
    alias_map = AliasMap()
    if run_config.aliases:
        alias_map, _ = parse_alias_map(_lines(run_config.aliases))
    countries = load_countries(run_config)

    placements, missing = [], []
    for asn in _router_targets(run_config):
        try:
            records, placement = place_routers(traces, p2a, alias_map, asn,
                                               run_config.threshold_router)
        except NoTracesError as exc:
            logger.error("%s", exc)
            missing.append(asn)
            continue
        placements.append(placement)
        write_csv(run_config.output_path(config.ROUTERS_FILE.format(asn=asn)),
                  ['router', 'class', 'trace_count', 'selected'],
                  router_rows(records, placement))

    if placements:
        rollup = placement_rollup(placements, countries)
        rollup['placements'] = [
            dict(placement.to_dict(),
                 coverage_curve=[round(value, 6) for value in placement.coverage_curve])
            for placement in placements
        ]
        rollup['missing'] = missing
        write_json(run_config.output_path(config.ROLLUP_FILE), rollup)
    update_manifest(run_config, 'routers')
    if missing:
        raise NoTracesError(f"aucune trace pour: {', '.join(f'AS{asn}' for asn in missing)}")
    return placements


def cmd_analyze(run_config):
    """Chaque analyse est indépendante; les échecs sont signalés après écriture des autres."""
    run_config.validate(required=('rels', 'countries'))
    corpus = load_corpus(run_config)
    graph = load_graph(run_config)
    countries = load_countries(run_config)
    incidence = PathIncidence(corpus)
    table = rank_ases(incidence)
    failures = []

    reports = []
    for cc in sorted(countries.censor_set):
        try:
            reports.append(collateral_damage(corpus, countries, cc))
        except DecoyPlaceError as exc:
            failures.append(f"collatéral {cc}: {exc}")
    write_csv(run_config.output_path(config.COLLATERAL_FILE),
              ['country', 'paths_involving', 'foreign_origin', 'fraction', 'reentrant', 'undefined'],
              collateral_rows(reports))

    bypass_rows = []
    candidates = [asn for asn in table.transit_asns() if asn in graph][:config.CONE_BYPASS_TOP_N]
    for asn in candidates:
        try:
            bypass_rows.append(cone_bypass(incidence, graph, asn).to_row())
        except DecoyPlaceError as exc:
            failures.append(f"contournement AS{asn}: {exc}")
    write_csv(run_config.output_path(config.CONE_BYPASS_FILE),
              ['asn', 'customers', 'pct_through_self', 'pct_through_1hop_only', 'pct_neither'],
              bypass_rows)

    comparison = rank_comparison(table, graph, config.RANK_COMPARISON_TOP_N)
    write_csv(run_config.output_path(config.RANK_COMPARISON_FILE),
              ['asn', 'paths', 'frequency_rank', 'cone_size', 'cone_rank'],
              [[row.asn, row.paths_containing, row.frequency_rank, row.cone_size, row.cone_rank]
               for row in comparison])
    coefficient = rank_correlation(comparison)
    if coefficient is None:
        failures.append("spearman: corrélation indéfinie")
    write_json(run_config.output_path(config.SPEARMAN_FILE), {
        'coefficient': None if coefficient is None else round(coefficient, 12),
        'n': len(comparison),
        'undefined': coefficient is None,
    })

    rollup_path = run_config.output_path(config.ROLLUP_FILE)
    if os.path.isfile(rollup_path):
        write_json(run_config.output_path(config.COST_FILE),
                   cost_report(read_json(rollup_path), run_config.unit_cost))
    else:
        logger.warning("pas de %s: coût non calculé", config.ROLLUP_FILE)

    update_manifest(run_config, 'analyze')
    if failures:
        raise DecoyPlaceError("; ".join(failures))
    return reports


def cmd_synth(run_config):
    run_config.validate()
    bundle = generate_bundle(seed=run_config.seed)
    written = write_bundle(bundle, run_config.out)
    update_manifest(run_config, 'synth')
    logger.info("synth: %d fichiers écrits dans %s", len(written), run_config.out)
    return bundle
