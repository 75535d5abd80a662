# src/ingest/records.py
"""
TYPES DE DONNÉES D'ENTRÉE (AS, PRÉFIXES, ENTRÉES RIB, STATISTIQUES)
"""

import ipaddress
import re
from dataclasses import dataclass, field
from typing import Optional

from utils.config import config

COUNTRY_CODE = re.compile(r'^[A-Z]{2}$')


def parse_asn(text):
    """Convertit un numéro d'AS texte en entier; ValueError si hors bornes."""
    value = int(text)
    if not 1 <= value <= config.ASN_MAX:
        raise ValueError(f"numéro d'AS hors bornes: {text}")
    return value


def parse_prefix(text):
    """Préfixe IPv4 canonique: les bits d'hôte sont mis à zéro."""
    network = ipaddress.IPv4Network(text.strip(), strict=False)
    return network


def prefix_sort_key(prefix):
    return (int(prefix.network_address), prefix.prefixlen)


def parse_ipv4(text):
    return str(ipaddress.IPv4Address(text.strip()))


@dataclass
class ParseStats:
    """Comptabilité d'un passage de parseur.

    accepted + len(rejects) + loops_dropped == lines (hors vides/commentaires).
    """
    lines: int = 0
    accepted: int = 0
    rejects: list = field(default_factory=list)      # (numéro de ligne, raison)
    loops_dropped: int = 0
    duplicates: int = 0
    warnings: int = 0
    as_trans_seen: int = 0

    def reject(self, line_no, reason):
        self.rejects.append((line_no, reason))

    @property
    def rejected(self):
        return len(self.rejects)

    def to_dict(self):
        return {
            'lines': self.lines,
            'accepted': self.accepted,
            'rejected': self.rejected,
            'loops_dropped': self.loops_dropped,
            'duplicates': self.duplicates,
            'warnings': self.warnings,
            'as_trans_seen': self.as_trans_seen,
        }


@dataclass(frozen=True)
class RibEntry:
    prefix: ipaddress.IPv4Network
    as_path: tuple           # voisin d'abord, AS d'origine du préfixe en dernier
    source_vantage: str = ''

    @property
    def home_as(self):
        return self.as_path[-1]


@dataclass(frozen=True)
class RelationshipEdge:
    """Arête CAIDA: code -1 = first fournisseur de second, 0 = pairs."""
    first: int
    second: int
    code: int
    line_no: int = 0

    @property
    def pair(self):
        return tuple(sorted((self.first, self.second)))


GAP = '*'


@dataclass(frozen=True)
class RouterTrace:
    source: str
    destination: str
    hops: tuple              # adresses IPv4 ou GAP

    @property
    def responding_hops(self):
        return [hop for hop in self.hops if hop != GAP]


@dataclass(frozen=True)
class TargetPrefix:
    prefix: ipaddress.IPv4Network
    label: str = ''


@dataclass
class CountryMap:
    mapping: dict = field(default_factory=dict)      # ASN -> code ISO alpha-2
    censor_set: frozenset = frozenset()

    def country_of(self, asn) -> Optional[str]:
        return self.mapping.get(asn)

    def label_of(self, asn):
        return self.mapping.get(asn, config.UNKNOWN_COUNTRY)

    def is_censor(self, asn):
        return self.mapping.get(asn) in self.censor_set

    @property
    def known_codes(self):
        return set(self.mapping.values())
