# src/placement/key_ases.py
"""
SÉLECTION DES AS CLÉS: PARCOURS GLOUTON PAR FRÉQUENCE, EXCLUSION DES CENSEURS
"""

from dataclasses import dataclass, field

import numpy as np

from placement.incidence import as_incidence
from placement.ranking import rank_ases
from utils.config import config
from utils.helpers import get_logger

logger = get_logger("placement")


@dataclass(frozen=True)
class SelectionRow:
    rank: int               # rang de fréquence global
    asn: int
    country: str
    paths_containing: int
    unique_added: int
    cumulative_paths: int
    cumulative_fraction: float
    censor: bool = False


@dataclass
class PlacementReport:
    selected: list
    coverage: float
    threshold: float
    threshold_reached: bool
    total_paths: int
    excluded_censor: list = field(default_factory=list)   # (asn, pays)
    rows: list = field(default_factory=list)
    censors_excluded: bool = True

    @property
    def k(self):
        return len(self.selected)

    def is_greedy_minimal(self, incidence):
        """Retirer le dernier AS choisi fait passer sous le seuil."""
        if not self.threshold_reached or not self.selected:
            return True
        mask = incidence.covered_mask(self.selected[:-1])
        return mask.sum() / incidence.total_paths < self.threshold

    def to_dict(self):
        return {
            'selected': list(self.selected),
            'k': self.k,
            'coverage': round(self.coverage, 6),
            'threshold': self.threshold,
            'threshold_reached': self.threshold_reached,
            'flag': None if self.threshold_reached else 'threshold unreachable',
            'total_paths': self.total_paths,
            'censors_excluded': self.censors_excluded,
            'excluded_censor': [{'asn': asn, 'country': cc} for asn, cc in self.excluded_censor],
            'rows': [
                {
                    'rank': row.rank,
                    'asn': row.asn,
                    'country': row.country,
                    'censor': row.censor,
                    'paths': row.paths_containing,
                    'unique_added': row.unique_added,
                    'cumulative_paths': row.cumulative_paths,
                    'cumulative_fraction': round(row.cumulative_fraction, 6),
                }
                for row in self.rows
            ],
        }


def _country(countries, asn):
    return countries.label_of(asn) if countries is not None else config.UNKNOWN_COUNTRY


def _greedy_walk(table, incidence, countries, exclude_censors, threshold=None, limit=None):
    """Parcourt les AS par rang; renvoie (lignes, AS censeurs sautés, chemins couverts)."""
    covered = np.zeros(incidence.total_paths, dtype=bool)
    covered_count = 0
    rows, skipped = [], []
    total = incidence.total_paths
    for entry in table.entries:
        if entry.paths_containing == 0:
            break
        if limit is not None and len(rows) >= limit:
            break
        if threshold is not None and total and covered_count / total >= threshold:
            break
        if exclude_censors and countries is not None and countries.is_censor(entry.asn):
            skipped.append((entry.asn, countries.country_of(entry.asn)))
            continue
        path_rows = incidence.rows_of(entry.asn)
        added = int(np.count_nonzero(~covered[path_rows]))
        covered[path_rows] = True
        covered_count += added
        rows.append(SelectionRow(
            rank=entry.rank,
            asn=entry.asn,
            country=_country(countries, entry.asn),
            paths_containing=entry.paths_containing,
            unique_added=added,
            cumulative_paths=covered_count,
            cumulative_fraction=covered_count / total if total else 0.0,
            censor=countries is not None and countries.is_censor(entry.asn),
        ))
    return rows, skipped, covered_count


def find_key_ases(table, corpus, threshold=config.THRESHOLD_AS, countries=None,
                  exclude_censors=True):
    """Les k premiers AS (hors pays censeurs) couvrant au moins `threshold` des chemins."""
    if not 0 < threshold <= 1:
        raise ValueError(f"seuil hors de ]0, 1]: {threshold}")
    incidence = as_incidence(corpus)
    rows, skipped, covered_count = _greedy_walk(
        table, incidence, countries, exclude_censors, threshold=threshold
    )
    total = incidence.total_paths
    coverage = covered_count / total if total else 0.0
    reached = coverage >= threshold
    if not reached:
        logger.warning("seuil %.3f inatteignable: couverture maximale %.4f", threshold, coverage)
    report = PlacementReport(
        selected=[row.asn for row in rows],
        coverage=coverage,
        threshold=threshold,
        threshold_reached=reached,
        total_paths=total,
        excluded_censor=skipped,
        rows=rows,
        censors_excluded=exclude_censors,
    )
    logger.info("%d AS clés couvrent %.2f%% des %d chemins",
                report.k, 100 * coverage, total)
    return report


@dataclass(frozen=True)
class CountryCoverage:
    country: str
    covered: int
    total: int

    @property
    def fraction(self):
        return self.covered / self.total if self.total else 0.0


@dataclass
class CoverageBreakdown:
    covered: int
    total: int
    per_country: dict       # pays d'origine -> CountryCoverage

    @property
    def fraction(self):
        return self.covered / self.total if self.total else 0.0

    def to_dict(self):
        return {
            'covered': self.covered,
            'total': self.total,
            'fraction': round(self.fraction, 6),
            'per_country': {
                cc: {'covered': item.covered, 'total': item.total,
                     'fraction': round(item.fraction, 6)}
                for cc, item in sorted(self.per_country.items())
            },
        }


def coverage_of(as_set, corpus, countries=None):
    """Part des chemins interceptés par `as_set`, globale et par pays d'origine."""
    incidence = as_incidence(corpus)
    mask = incidence.covered_mask(as_set)
    labels = np.array([_country(countries, int(asn)) for asn in incidence.origins], dtype=object)
    per_country = {}
    for cc in sorted(set(labels.tolist())):
        in_country = labels == cc
        per_country[cc] = CountryCoverage(
            country=cc,
            covered=int(np.count_nonzero(mask & in_country)),
            total=int(np.count_nonzero(in_country)),
        )
    return CoverageBreakdown(covered=int(mask.sum()), total=incidence.total_paths,
                             per_country=per_country)


def cdf_series(table, corpus, top_n=config.CDF_TOP_N, countries=None, exclude_censors=False):
    """Lignes (rang, AS, ajout unique, fraction cumulée) des top_n premiers AS."""
    if top_n < 1:
        raise ValueError("top_n doit être >= 1")
    incidence = as_incidence(corpus)
    rows, _, _ = _greedy_walk(table, incidence, countries, exclude_censors, limit=top_n)
    return rows


def replacement_summary(baseline, censor_free):
    """AS censeurs de l'ensemble de base et AS qui les remplacent."""
    baseline_set = set(baseline.selected)
    censor_free_set = set(censor_free.selected)
    replaced = [asn for asn in baseline.selected if asn not in censor_free_set]
    replacements = [asn for asn in censor_free.selected if asn not in baseline_set]
    return {
        'replaced': replaced,
        'replacements': replacements,
        'baseline_coverage': round(baseline.coverage, 6),
        'censor_free_coverage': round(censor_free.coverage, 6),
    }


@dataclass(frozen=True)
class StabilityRow:
    destinations: int
    k: int
    coverage: float
    threshold_reached: bool


def stability_series(corpus, prefix_order, steps=config.STABILITY_STEPS,
                     threshold=config.THRESHOLD_AS, countries=None, exclude_censors=True):
    """k nécessaire quand on ajoute les destinations par ordre de popularité."""
    rows = []
    known = set(corpus.prefixes)
    available = [prefix for prefix in prefix_order if prefix in known]
    sizes = sorted({min(step, len(available)) for step in steps if step > 0})
    for size in sizes:
        sub_corpus = corpus.subset(available[:size])
        if sub_corpus.is_empty():
            continue
        incidence = as_incidence(sub_corpus)
        report = find_key_ases(rank_ases(incidence), incidence, threshold,
                               countries, exclude_censors)
        rows.append(StabilityRow(destinations=size, k=report.k, coverage=report.coverage,
                                 threshold_reached=report.threshold_reached))
    return rows


def cross_coverage(as_set, other_corpus, countries=None):
    """Couverture d'un ensemble choisi sur un corpus, mesurée sur un autre corpus."""
    as_set = list(as_set)
    breakdown = coverage_of(as_set, other_corpus, countries)
    logger.info("validation croisée: %d AS couvrent %.2f%% de %d chemins",
                len(as_set), 100 * breakdown.fraction, breakdown.total)
    return breakdown
