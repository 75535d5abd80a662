# src/topology/graph.py
"""
GRAPHE DES RELATIONS COMMERCIALES ENTRE AS
"""

from enum import Enum

import networkx as nx

from ingest.relationships import PEER_CODE
from utils.exceptions import ParseHardError, UnknownAsError
from utils.helpers import get_logger

logger = get_logger("topology")


class Relationship(Enum):
    PROVIDER_TO_CUSTOMER = 'p2c'
    CUSTOMER_TO_PROVIDER = 'c2p'
    PEER_TO_PEER = 'p2p'
    NONE = 'none'

    def inverse(self):
        return _INVERSE[self]


_INVERSE = {
    Relationship.PROVIDER_TO_CUSTOMER: Relationship.CUSTOMER_TO_PROVIDER,
    Relationship.CUSTOMER_TO_PROVIDER: Relationship.PROVIDER_TO_CUSTOMER,
    Relationship.PEER_TO_PEER: Relationship.PEER_TO_PEER,
    Relationship.NONE: Relationship.NONE,
}


class RelationshipGraph:
    """Adjacence étiquetée entre AS; immuable une fois construite.

    Chaque paire est stockée dans les deux sens (p2c d'un côté, c2p de l'autre),
    et un second graphe ne garde que les arcs fournisseur -> client pour les cônes.
    """

    def __init__(self):
        self._graph = nx.DiGraph()
        self._customers = nx.DiGraph()
        self.self_edges_rejected = 0

    # ---------- construction ----------
    def _add_pair(self, first, second, label):
        existing = self.relationship(first, second)
        if existing is not Relationship.NONE and existing is not label:
            raise ParseHardError(
                f"relation contradictoire pour AS{first}-AS{second}: "
                f"{existing.value} puis {label.value}"
            )
        self._graph.add_edge(first, second, rel=label)
        self._graph.add_edge(second, first, rel=label.inverse())
        if label is Relationship.PROVIDER_TO_CUSTOMER:
            self._customers.add_edge(first, second)
        else:
            self._customers.add_nodes_from((first, second))

    def add_provider_customer(self, provider, customer):
        self._add_pair(provider, customer, Relationship.PROVIDER_TO_CUSTOMER)

    def add_peering(self, first, second):
        self._add_pair(first, second, Relationship.PEER_TO_PEER)

    # ---------- requêtes ----------
    def __contains__(self, asn):
        return asn in self._graph

    def relationship(self, first, second):
        data = self._graph.get_edge_data(first, second)
        if data is None:
            return Relationship.NONE
        return data['rel']

    def neighbors(self, asn):
        return sorted(self._graph.successors(asn)) if asn in self._graph else []

    def _neighbors_with(self, asn, label):
        if asn not in self._graph:
            return []
        return sorted(n for n, data in self._graph[asn].items() if data['rel'] is label)

    def customers(self, asn):
        return self._neighbors_with(asn, Relationship.PROVIDER_TO_CUSTOMER)

    def providers(self, asn):
        return self._neighbors_with(asn, Relationship.CUSTOMER_TO_PROVIDER)

    def peers(self, asn):
        return self._neighbors_with(asn, Relationship.PEER_TO_PEER)

    def require(self, asn):
        if asn not in self._graph:
            raise UnknownAsError(f"AS{asn} absent du graphe de relations")

    @property
    def vertices(self):
        return sorted(self._graph.nodes)

    @property
    def customer_digraph(self):
        return self._customers

    def number_of_vertices(self):
        return self._graph.number_of_nodes()

    def number_of_pairs(self):
        return self._graph.number_of_edges() // 2

    def labeled_pairs(self):
        """(a, b, Relationship) une fois par paire: p2c orienté, p2p avec a < b."""
        pairs = []
        for first, second, data in self._graph.edges(data=True):
            label = data['rel']
            if label is Relationship.PROVIDER_TO_CUSTOMER:
                pairs.append((first, second, label))
            elif label is Relationship.PEER_TO_PEER and first < second:
                pairs.append((first, second, label))
        return sorted(pairs, key=lambda item: (item[0], item[1]))

    def summary(self):
        p2c = sum(1 for _, _, label in self.labeled_pairs()
                  if label is Relationship.PROVIDER_TO_CUSTOMER)
        return {
            'vertices': self.number_of_vertices(),
            'pairs': self.number_of_pairs(),
            'p2c': p2c,
            'p2p': self.number_of_pairs() - p2c,
            'self_edges_rejected': self.self_edges_rejected,
        }


def build_graph(edges):
    """Construit le RelationshipGraph à partir des arêtes de parse_relationships."""
    graph = RelationshipGraph()
    for edge in edges:
        if edge.first == edge.second:
            graph.self_edges_rejected += 1
            logger.warning("arête réflexive AS%d ignorée (ligne %d)", edge.first, edge.line_no)
            continue
        if edge.code == PEER_CODE:
            graph.add_peering(edge.first, edge.second)
        else:
            graph.add_provider_customer(edge.first, edge.second)
    logger.info("graphe: %d AS, %d paires étiquetées",
                graph.number_of_vertices(), graph.number_of_pairs())
    return graph
