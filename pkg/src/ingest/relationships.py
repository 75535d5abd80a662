# src/ingest/relationships.py
"""
LECTURE DES RELATIONS INTER-AS (FORMAT CAIDA 'AS|AS|CODE')
"""

from ingest.records import ParseStats, RelationshipEdge, parse_asn
from utils.exceptions import RelationshipConflictError
from utils.helpers import get_logger, iter_data_lines

logger = get_logger("ingest")

PROVIDER_CODE = -1
PEER_CODE = 0
VALID_CODES = (PROVIDER_CODE, PEER_CODE)


def _orientation(edge):
    """Forme normalisée d'une arête pour comparer deux déclarations."""
    if edge.code == PEER_CODE:
        return ('peer',) + edge.pair
    return ('p2c', edge.first, edge.second)


def parse_relationships(lines):
    """Parse les relations; renvoie (arêtes, ParseStats).

    Les doublons identiques sont comptés une seule fois; deux étiquettes
    différentes pour la même paire lèvent RelationshipConflictError.
    """
    edges = []
    seen = {}
    stats = ParseStats()
    for line_no, line in iter_data_lines(lines):
        stats.lines += 1
        fields = line.split('|')
        if len(fields) < 3:
            stats.reject(line_no, "nombre de champs invalide")
            continue
        try:
            first, second = parse_asn(fields[0]), parse_asn(fields[1])
            code = int(fields[2])
        except ValueError:
            stats.reject(line_no, "champ non numérique")
            continue
        if code not in VALID_CODES:
            stats.reject(line_no, f"code de relation inconnu: {code}")
            stats.warnings += 1
            continue

        edge = RelationshipEdge(first, second, code, line_no)
        previous = seen.get(edge.pair)
        if previous is not None:
            if _orientation(previous) != _orientation(edge):
                raise RelationshipConflictError(edge.pair, previous.line_no, line_no)
            stats.duplicates += 1
            stats.accepted += 1
            continue
        seen[edge.pair] = edge
        edges.append(edge)
        stats.accepted += 1

    if stats.warnings:
        logger.warning("relations: %d lignes au code inconnu ignorées", stats.warnings)
    return edges, stats


def format_relationship(edge):
    return f"{edge.first}|{edge.second}|{edge.code}"
