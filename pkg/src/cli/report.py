# src/cli/report.py
"""
RAPPORT DE SYNTHÈSE: AGRÉGATION DES SORTIES JSON/CSV ET FIGURES
"""

import os

from cli.commands import update_manifest
from utils.config import config
from utils.figures import FigureExporter
from utils.helpers import get_logger, read_csv, read_json, write_json

logger = get_logger("report")


def _json_if_present(run_config, filename):
    path = run_config.output_path(filename)
    return read_json(path) if os.path.isfile(path) else None


def _csv_if_present(run_config, filename):
    path = run_config.output_path(filename)
    return read_csv(path) if os.path.isfile(path) else None


def build_summary(run_config):
    """Résumé de tous les artefacts présents dans le répertoire de sortie."""
    summary = {'artifacts': []}

    stats = _json_if_present(run_config, config.INFERENCE_STATS_FILE)
    if stats is not None:
        summary['artifacts'].append(config.INFERENCE_STATS_FILE)
        summary['inference'] = {
            'total_paths': stats['total_paths'],
            'invalid_paths': stats['invalid_paths'],
            'prefixes': len(stats['prefixes']),
            'graph': stats['graph'],
        }

    placement = _json_if_present(run_config, config.PLACEMENT_FILE)
    if placement is not None:
        summary['artifacts'].append(config.PLACEMENT_FILE)
        censor_free = placement['censor_free']
        summary['placement'] = {
            'threshold': placement['threshold'],
            'k': censor_free['k'],
            'coverage': censor_free['coverage'],
            'threshold_reached': censor_free['threshold_reached'],
            'baseline_k': placement['baseline']['k'],
            'replacements': placement['replacement']['replacements'],
        }

    rollup = _json_if_present(run_config, config.ROLLUP_FILE)
    if rollup is not None:
        summary['artifacts'].append(config.ROLLUP_FILE)
        summary['routers'] = {
            'total_required': rollup['total_required'],
            'per_country': rollup['per_country'],
            'per_as': {str(item['asn']): {'edge': item['edge'], 'core': item['core'],
                                          'heavy': item['heavy'], 'required': item['required']}
                       for item in rollup['placements']},
        }

    for key, filename in (('cost', config.COST_FILE), ('spearman', config.SPEARMAN_FILE),
                          ('validation', config.VALIDATION_FILE)):
        payload = _json_if_present(run_config, filename)
        if payload is not None:
            summary['artifacts'].append(filename)
            summary[key] = payload

    collateral = _csv_if_present(run_config, config.COLLATERAL_FILE)
    if collateral is not None:
        summary['artifacts'].append(config.COLLATERAL_FILE)
        summary['collateral'] = {row['country']: row['fraction'] or None for row in collateral}
    return summary


def export_figures(run_config, summary):
    threshold_as = run_config.threshold_as
    with FigureExporter(run_config.out) as exporter:
        cdf = _csv_if_present(run_config, config.CDF_FILE)
        if cdf:
            exporter.plot_cdf([int(row['rank']) for row in cdf],
                              [float(row['cumulative_fraction']) for row in cdf], threshold_as)
        placement = _json_if_present(run_config, config.PLACEMENT_FILE)
        if placement and 'coverage_by_country' in placement:
            per_country = placement['coverage_by_country']['per_country']
            exporter.plot_country_coverage({cc: item['fraction'] for cc, item in per_country.items()})
        rollup = _json_if_present(run_config, config.ROLLUP_FILE)
        if rollup:
            exporter.plot_router_curves({item['asn']: item['coverage_curve']
                                         for item in rollup['placements']},
                                        run_config.threshold_router)
        comparison = _csv_if_present(run_config, config.RANK_COMPARISON_FILE)
        if comparison:
            exporter.plot_rank_scatter([float(row['frequency_rank']) for row in comparison],
                                       [float(row['cone_rank']) for row in comparison])
        stability = _csv_if_present(run_config, config.STABILITY_FILE)
        if stability:
            exporter.plot_stability([int(row['n_prefixes']) for row in stability],
                                    [int(row['k']) for row in stability])
        return list(exporter.written)


def cmd_report(run_config):
    run_config.validate()
    summary = build_summary(run_config)
    summary['figures'] = export_figures(run_config, summary)
    write_json(run_config.output_path(config.SUMMARY_FILE), summary)
    update_manifest(run_config, 'report')
    logger.info("rapport: %d artefacts, %d figures",
                len(summary['artifacts']), len(summary['figures']))
    return summary
