# src/ingest/aliases.py
"""
CARTE D'ALIAS (UNE LIGNE = LES INTERFACES D'UN MÊME ROUTEUR)
"""

from ingest.records import ParseStats, parse_ipv4
from utils.exceptions import AliasConflictError
from utils.helpers import get_logger, iter_data_lines

logger = get_logger("ingest")


class AliasMap:
    """IP -> RouterId; l'identifiant canonique est la plus petite IP (ordre texte).

    Une IP absente de la carte est son propre routeur.
    """

    def __init__(self, groups=()):
        self._router_of = {}
        self._members = {}
        for members in groups:
            canonical = min(members)
            self._members[canonical] = tuple(sorted(members))
            for ip in members:
                self._router_of[ip] = canonical

    def resolve(self, ip):
        return self._router_of.get(ip, ip)

    def __getitem__(self, ip):
        return self.resolve(ip)

    def __contains__(self, ip):
        return ip in self._router_of

    def __len__(self):
        return len(self._router_of)

    def members(self, router_id):
        return self._members.get(router_id, (router_id,))

    @property
    def routers(self):
        return sorted(self._members)


def parse_alias_map(lines):
    """Construit l'AliasMap et ses ParseStats.

    Une ligne contenant une adresse invalide est rejetée en entier.
    Seule une IP présente dans deux lignes est fatale (AliasConflictError).
    """
    groups = []
    first_seen = {}
    stats = ParseStats()
    for line_no, line in iter_data_lines(lines):
        stats.lines += 1
        try:
            members = {parse_ipv4(token) for token in line.split()}
        except ValueError:
            stats.reject(line_no, f"adresse d'alias invalide: {line}")
            continue
        for ip in sorted(members):
            if ip in first_seen:
                raise AliasConflictError(ip, first_seen[ip], line_no)
            first_seen[ip] = line_no
        stats.accepted += 1
        groups.append(members)
    if stats.rejects:
        logger.warning("alias: %d lignes rejetées", stats.rejected)
    return AliasMap(groups), stats


def format_alias_map(alias_map):
    return [' '.join(alias_map.members(router)) for router in alias_map.routers]
