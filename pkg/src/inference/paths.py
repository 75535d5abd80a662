# src/inference/paths.py
"""
CHEMINS SÛRS, CHEMINS INFÉRÉS ET RÈGLE DE DÉPARTAGE
"""

import ipaddress
from dataclasses import dataclass

from utils.exceptions import EmptyCandidatesError


@dataclass(frozen=True)
class SurePath:
    """Chemin lu dans une RIB (ou suffixe d'un tel chemin)."""
    prefix: ipaddress.IPv4Network
    hops: tuple                 # origine d'abord, AS d'accueil du préfixe en dernier
    frequency_index: int

    @property
    def uncertainty_count(self):
        return 0

    @property
    def base_suffix_len(self):
        return len(self.hops)

    @property
    def origin(self):
        return self.hops[0]

    @property
    def is_sure(self):
        return True


@dataclass(frozen=True)
class InferredPath:
    """Chemin sûr prolongé d'un ou plusieurs AS côté origine."""
    prefix: ipaddress.IPv4Network
    hops: tuple
    frequency_index: int        # hérité du suffixe sûr
    uncertainty_count: int      # nombre d'AS ajoutés
    base_suffix_len: int

    @property
    def origin(self):
        return self.hops[0]

    @property
    def is_sure(self):
        return False

    def base_suffix(self):
        return self.hops[len(self.hops) - self.base_suffix_len:]


def path_key(path):
    """Ordre total: longueur, incertitude, fréquence décroissante, puis ordre lexical."""
    return (len(path.hops), path.uncertainty_count, -path.frequency_index, path.hops)


def select_best(candidates):
    candidates = list(candidates)
    if not candidates:
        raise EmptyCandidatesError("aucun chemin candidat")
    return min(candidates, key=path_key)


def extend_path(path, asn, sure_index):
    """Ajoute `asn` devant `path`; reprend le chemin sûr s'il existe déjà tel quel."""
    hops = (asn,) + path.hops
    known = sure_index.get(hops)
    if known is not None:
        return known
    return InferredPath(
        prefix=path.prefix,
        hops=hops,
        frequency_index=path.frequency_index,
        uncertainty_count=path.uncertainty_count + 1,
        base_suffix_len=path.base_suffix_len,
    )
