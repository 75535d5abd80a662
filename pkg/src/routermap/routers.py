# src/routermap/routers.py
"""
ROUTEURS DE BORDURE / DE CŒUR ET CHOIX DES ROUTEURS LEURRES PAR AS
"""

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from routermap.trimming import trim_corpus
from utils.config import config
from utils.exceptions import NoTracesError
from utils.helpers import format_fraction, get_logger

logger = get_logger("routermap")


class RouterClass(Enum):
    EDGE = 'edge'
    CORE = 'core'


@dataclass(frozen=True)
class RouterRecord:
    id: str
    asn: int
    classification: RouterClass
    trace_count: int

    @property
    def is_edge(self):
        return self.classification is RouterClass.EDGE


def _routers_of(trimmed, alias_map):
    """RouterIds de l'AS cible présents dans une trace découpée (sans tiers ni '*')."""
    return {alias_map.resolve(address) for address in trimmed.target_hops}


def classify_routers(trimmed_traces, alias_map, asn=None):
    """Un enregistrement par routeur: bordure s'il ouvre ou ferme au moins un segment."""
    counts = Counter()
    edges = set()
    for trimmed in trimmed_traces:
        target_hops = trimmed.target_hops
        if not target_hops:
            continue
        counts.update(_routers_of(trimmed, alias_map))
        edges.add(alias_map.resolve(target_hops[0]))
        edges.add(alias_map.resolve(target_hops[-1]))
        if asn is None:
            asn = trimmed.target
    records = [
        RouterRecord(
            id=router,
            asn=asn,
            classification=RouterClass.EDGE if router in edges else RouterClass.CORE,
            trace_count=counts[router],
        )
        for router in sorted(counts)
    ]
    return records


@dataclass
class RouterPlacement:
    asn: int
    E: int
    C: int
    H: int
    selected_set: list
    trace_coverage: float
    threshold: float
    traces: int
    heavy_set: list = field(default_factory=list)
    heavy_coverage: float = 0.0
    coverage_curve: list = field(default_factory=list)   # fraction cumulée par k
    third_party_hops: int = 0

    @property
    def required(self):
        return min(self.E, self.H)

    @property
    def strategy(self):
        return 'heavy' if self.H < self.E else 'edge'

    def to_dict(self):
        return {
            'asn': self.asn,
            'edge': self.E,
            'core': self.C,
            'heavy': self.H,
            'required': self.required,
            'strategy': self.strategy,
            'traces': self.traces,
            'threshold': self.threshold,
            'trace_coverage': round(self.trace_coverage, 6),
            'heavy_coverage': round(self.heavy_coverage, 6),
            'third_party_hops': self.third_party_hops,
        }


def _coverage(router_sets, chosen):
    if not router_sets:
        return 0.0
    chosen = set(chosen)
    hit = sum(1 for routers in router_sets if routers & chosen)
    return hit / len(router_sets)


def find_key_routers(records, trimmed_traces, threshold=config.THRESHOLD_ROUTER,
                     alias_map=None, asn=None):
    """Plus petit préfixe des routeurs triés par fréquence couvrant `threshold` des traces.

    Le tri place le nombre de traces décroissant puis le RouterId. Les routeurs de
    bordure couvrent toutes les traces; on garde l'ensemble le plus petit.
    """
    if not 0 < threshold <= 1:
        raise ValueError(f"seuil hors de ]0, 1]: {threshold}")
    resolve = alias_map.resolve if alias_map is not None else (lambda address: address)
    router_sets = [
        {resolve(address) for address in trimmed.target_hops}
        for trimmed in trimmed_traces
    ]
    router_sets = [routers for routers in router_sets if routers]
    if asn is None and records:
        asn = records[0].asn
    if not router_sets:
        raise NoTracesError(f"AS{asn}: aucune trace ne traverse cet AS")

    by_router = defaultdict(list)
    for row, routers in enumerate(router_sets):
        for router in routers:
            by_router[router].append(row)

    ordered = sorted(records, key=lambda record: (-record.trace_count, record.id))
    total = len(router_sets)
    covered = np.zeros(total, dtype=bool)
    curve, heavy = [], None
    for position, record in enumerate(ordered, start=1):
        covered[by_router.get(record.id, [])] = True
        fraction = float(covered.sum()) / total
        curve.append(fraction)
        if heavy is None and fraction >= threshold:
            heavy = [r.id for r in ordered[:position]]
    if heavy is None:
        heavy = [record.id for record in ordered]
    heavy_coverage = curve[len(heavy) - 1] if heavy else 0.0

    edge_set = [record.id for record in records if record.is_edge]
    core_count = sum(1 for record in records if not record.is_edge)
    H, E = len(heavy), len(edge_set)
    if H < E:
        selected, coverage = heavy, heavy_coverage
    else:
        selected, coverage = sorted(edge_set), _coverage(router_sets, edge_set)

    third_party = sum(len(trimmed.third_party_hops) for trimmed in trimmed_traces)
    if third_party:
        logger.info("AS%s: %d sauts tiers conservés dans les segments", asn, third_party)
    placement = RouterPlacement(
        asn=asn, E=E, C=core_count, H=H,
        selected_set=selected, trace_coverage=coverage, threshold=threshold,
        traces=total, heavy_set=heavy, heavy_coverage=heavy_coverage,
        coverage_curve=curve, third_party_hops=third_party,
    )
    logger.info("AS%s: E=%d C=%d H=%d -> %d routeurs (%s)",
                asn, E, core_count, H, placement.required, placement.strategy)
    return placement


def place_routers(traces, p2a, alias_map, asn, threshold=config.THRESHOLD_ROUTER):
    """Découpage, classement et sélection pour un AS."""
    trimmed = trim_corpus(traces, p2a, asn)
    records = classify_routers(trimmed, alias_map, asn)
    placement = find_key_routers(records, trimmed, threshold, alias_map, asn)
    return records, placement


def router_rows(records, placement):
    """Lignes de routers_<asn>.csv: router,class,trace_count,selected."""
    selected = set(placement.selected_set)
    return [
        [record.id, record.classification.value, record.trace_count,
         int(record.id in selected)]
        for record in sorted(records, key=lambda record: (-record.trace_count, record.id))
    ]


def coverage_curve_rows(placement):
    return [[k, format_fraction(fraction)]
            for k, fraction in enumerate(placement.coverage_curve, start=1)]


def placement_rollup(placements, countries=None):
    """Total des routeurs requis, avec sous-totaux par pays."""
    placements = list(placements)
    if not placements:
        raise ValueError("aucun placement à agréger")
    per_country = defaultdict(int)
    per_as = {}
    for placement in placements:
        cc = countries.label_of(placement.asn) if countries is not None else config.UNKNOWN_COUNTRY
        per_country[cc] += placement.required
        per_as[str(placement.asn)] = placement.required
    return {
        'total_required': sum(placement.required for placement in placements),
        'per_country': dict(sorted(per_country.items())),
        'per_as': per_as,
        'ases': len(placements),
    }
