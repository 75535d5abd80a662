# src/inference/path_inference.py
"""
INFÉRENCE DES CHEMINS AS -> PRÉFIXE PAR PROLONGEMENT DES CHEMINS SÛRS
"""

from collections import defaultdict
from dataclasses import dataclass, field

from inference.paths import extend_path, path_key
from inference.sure_paths import index_sure_paths
from topology.graph import Relationship
from topology.valley_free import check_valley_free
from utils.helpers import get_logger

logger = get_logger("inference")


@dataclass
class InferenceStats:
    prefix: str
    label: str = ''
    sure_paths: int = 0
    sure_rejected: int = 0       # chemins sûrs non valley-free selon les relations
    rounds: int = 0
    covered: int = 0
    graph_vertices: int = 0
    uncovered: list = field(default_factory=list)

    @property
    def coverage_fraction(self):
        if not self.graph_vertices:
            return 0.0
        return min(1.0, self.covered / self.graph_vertices)

    def to_dict(self):
        return {
            'prefix': self.prefix,
            'label': self.label,
            'sure_paths': self.sure_paths,
            'sure_rejected': self.sure_rejected,
            'rounds': self.rounds,
            'covered': self.covered,
            'graph_vertices': self.graph_vertices,
            'coverage_fraction': round(self.coverage_fraction, 6),
            'uncovered': len(self.uncovered),
        }


def _is_downhill(hops, graph):
    return all(
        graph.relationship(hops[i], hops[i + 1]) is Relationship.PROVIDER_TO_CUSTOMER
        for i in range(len(hops) - 1)
    )


class _RoundState:
    """Meilleurs candidats d'un tour, avant validation."""

    def __init__(self, decided_any, decided_down):
        self.decided_any = decided_any
        self.decided_down = decided_down
        self.new_any = {}
        self.new_down = {}

    @staticmethod
    def _keep_best(table, asn, path):
        current = table.get(asn)
        if current is None or path_key(path) < path_key(current):
            table[asn] = path

    def offer(self, path, downhill):
        asn = path.origin
        if downhill and asn not in self.decided_down:
            self._keep_best(self.new_down, asn, path)
        if asn not in self.decided_any:
            self._keep_best(self.new_any, asn, path)


def infer_paths(prefix, sure, graph, label=''):
    """Choisit un chemin par AS vers `prefix`.

    Tours synchrones par longueur: au tour k, chaque AS sans chemin reçoit les
    chemins sûrs de longueur k qu'il origine et les prolongements d'un voisin
    décidé au tour k-1. Chaque AS garde deux choix: son meilleur chemin et son
    meilleur chemin uniquement descendant, le seul qu'un fournisseur ou un pair
    peut prolonger sans créer de vallée.
    Renvoie (origine -> chemin, InferenceStats).
    """
    stats = InferenceStats(prefix=str(prefix), label=label,
                           graph_vertices=graph.number_of_vertices())
    sure_index = index_sure_paths(sure)
    stats.sure_paths = len(sure_index)

    sure_by_len = defaultdict(list)
    for hops, path in sure_index.items():
        if check_valley_free(hops, graph).ok:
            sure_by_len[len(hops)].append((path, _is_downhill(hops, graph)))
        else:
            stats.sure_rejected += 1
    longest_sure = max(sure_by_len, default=0)

    best_any, best_down = {}, {}
    frontier_any, frontier_down = {}, {}
    length = 0
    while True:
        length += 1
        state = _RoundState(best_any, best_down)
        for path, downhill in sure_by_len.get(length, ()):
            state.offer(path, downhill)

        for asn, path in frontier_down.items():
            for provider in graph.providers(asn):
                if provider not in path.hops:
                    state.offer(extend_path(path, provider, sure_index), True)
            for peer in graph.peers(asn):
                if peer not in path.hops:
                    state.offer(extend_path(path, peer, sure_index), False)
        for asn, path in frontier_any.items():
            for customer in graph.customers(asn):
                if customer not in path.hops:
                    state.offer(extend_path(path, customer, sure_index), False)

        best_any.update(state.new_any)
        best_down.update(state.new_down)
        frontier_any, frontier_down = state.new_any, state.new_down
        logger.debug("%s tour %d: %d nouveaux AS", prefix, length, len(state.new_any))
        if not state.new_any and not state.new_down and length >= longest_sure:
            break

    stats.rounds = length
    stats.covered = len(best_any)
    stats.uncovered = [asn for asn in graph.vertices if asn not in best_any]
    return dict(sorted(best_any.items())), stats
