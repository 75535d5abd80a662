# src/routermap/prefix_map.py
"""
ATTRIBUTION ADRESSE IP -> AS PAR PLUS LONG PRÉFIXE CORRESPONDANT
"""

import radix

from utils.exceptions import PrefixMapConflictError


class PrefixToAsMap:
    """Arbre radix des couples (préfixe, ASN) lus dans un fichier p2a."""

    def __init__(self, pairs=()):
        self.rtree = radix.Radix()
        self._pairs = {}
        for prefix, asn in pairs:
            self.add(prefix, asn)

    def add(self, prefix, asn):
        key = str(prefix)
        known = self._pairs.get(key)
        if known is not None and known != asn:
            raise PrefixMapConflictError(prefix, known, asn)
        node = self.rtree.add(key)
        node.data['asn'] = asn
        self._pairs[key] = asn

    def lookup(self, ip):
        """ASN du plus long préfixe couvrant `ip`, None si aucun."""
        node = self.rtree.search_best(ip)
        if node is None:
            return None
        return node.data['asn']

    def __len__(self):
        return len(self._pairs)

    def __contains__(self, prefix):
        return str(prefix) in self._pairs
