# src/topology/cones.py
"""
CÔNES CLIENTS (CLIENTS, CLIENTS DES CLIENTS, ETC.)
"""

import networkx as nx


def customer_cone(graph, asn):
    """Fermeture transitive des liens fournisseur -> client, sans l'AS lui-même."""
    graph.require(asn)
    return set(nx.descendants(graph.customer_digraph, asn))


def cone_sizes(graph, asns=None):
    """Taille du cône de chaque AS demandé (tous les AS par défaut)."""
    targets = graph.vertices if asns is None else [asn for asn in asns if asn in graph]
    return {asn: len(customer_cone(graph, asn)) for asn in targets}
