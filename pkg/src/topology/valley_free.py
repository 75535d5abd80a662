# src/topology/valley_free.py
"""
PROPRIÉTÉ « VALLEY-FREE » ET ÉNUMÉRATION EXHAUSTIVE (ORACLE DE TEST)
"""

from typing import NamedTuple

from topology.graph import Relationship
from utils.config import config
from utils.exceptions import EnumerationLimitError

# Phases d'un chemin lu de l'origine vers la destination.
UPHILL = 0      # seulement des liens client -> fournisseur jusqu'ici
PLATEAU = 1     # le lien pair-à-pair a été franchi
DOWNHILL = 2    # au moins un lien fournisseur -> client


class ValleyCheck(NamedTuple):
    ok: bool
    reason: str = ''

    def __bool__(self):
        return self.ok


def next_phase(phase, label):
    """Phase après un lien étiqueté `label`, ou None si une vallée apparaît."""
    if label is Relationship.CUSTOMER_TO_PROVIDER:
        return UPHILL if phase == UPHILL else None
    if label is Relationship.PEER_TO_PEER:
        return PLATEAU if phase == UPHILL else None
    if label is Relationship.PROVIDER_TO_CUSTOMER:
        return DOWNHILL
    return None


def check_valley_free(path, graph):
    """c2p*, au plus un p2p, puis p2c*; un lien inconnu rend le chemin invalide."""
    phase = UPHILL
    for position in range(len(path) - 1):
        first, second = path[position], path[position + 1]
        label = graph.relationship(first, second)
        if label is Relationship.NONE:
            return ValleyCheck(False, f"unknown link AS{first}-AS{second}")
        phase = next_phase(phase, label)
        if phase is None:
            return ValleyCheck(False, f"valley at AS{first}-AS{second}")
    return ValleyCheck(True)


def is_valley_free(path, graph):
    return check_valley_free(path, graph).ok


def is_loop_free(path):
    return len(set(path)) == len(path)


def enumerate_valley_free(graph, max_len, min_len=1):
    """Tous les chemins simples valley-free de min_len à max_len AS.

    Exponentiel: réservé aux graphes d'au plus ENUMERATION_MAX_VERTICES AS.
    Un préfixe de chemin valley-free l'est aussi, d'où l'élagage par phase.
    """
    vertices = graph.vertices
    if len(vertices) > config.ENUMERATION_MAX_VERTICES:
        raise EnumerationLimitError(
            f"énumération refusée: {len(vertices)} AS > {config.ENUMERATION_MAX_VERTICES}"
        )
    found = set()

    def extend(path, phase):
        if len(path) >= min_len:
            found.add(tuple(path))
        if len(path) == max_len:
            return
        tail = path[-1]
        for neighbor in graph.neighbors(tail):
            if neighbor in path:
                continue
            following = next_phase(phase, graph.relationship(tail, neighbor))
            if following is None:
                continue
            path.append(neighbor)
            extend(path, following)
            path.pop()

    if max_len >= 1:
        for start in vertices:
            extend([start], UPHILL)
    return found
