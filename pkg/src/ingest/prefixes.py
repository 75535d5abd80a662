# src/ingest/prefixes.py
"""
LISTES DE PRÉFIXES CIBLES ET ATTRIBUTION PRÉFIXE -> AS
"""

from ingest.records import ParseStats, TargetPrefix, parse_asn, parse_prefix, prefix_sort_key
from utils.exceptions import PrefixMapConflictError
from utils.helpers import get_logger, iter_data_lines

logger = get_logger("ingest")


def parse_target_prefixes(lines):
    """'*.prefixes.txt': un préfixe par ligne, éventuellement 'prefixe|site'.

    L'ordre du fichier est conservé (popularité décroissante des sites).
    """
    targets = []
    seen = set()
    stats = ParseStats()
    for line_no, line in iter_data_lines(lines):
        stats.lines += 1
        prefix_text, _, label = line.partition('|')
        try:
            prefix = parse_prefix(prefix_text)
        except ValueError:
            stats.reject(line_no, f"préfixe invalide: {prefix_text}")
            continue
        stats.accepted += 1
        if prefix in seen:
            stats.duplicates += 1
            continue
        seen.add(prefix)
        targets.append(TargetPrefix(prefix=prefix, label=label.strip()))
    if stats.duplicates:
        logger.warning("préfixes cibles: %d doublons ignorés", stats.duplicates)
    return targets, stats


def format_target_prefix(target):
    if target.label:
        return f"{target.prefix}|{target.label}"
    return str(target.prefix)


def parse_prefix_to_as(lines):
    """'*.p2a.txt': 'PREFIXE|ASN'. Un même préfixe vers deux AS est une erreur fatale."""
    pairs = {}
    stats = ParseStats()
    for line_no, line in iter_data_lines(lines):
        stats.lines += 1
        fields = line.split('|')
        if len(fields) != 2:
            stats.reject(line_no, "nombre de champs invalide")
            continue
        try:
            prefix, asn = parse_prefix(fields[0]), parse_asn(fields[1])
        except ValueError:
            stats.reject(line_no, f"ligne invalide: {line}")
            continue
        if prefix in pairs:
            if pairs[prefix] != asn:
                raise PrefixMapConflictError(prefix, pairs[prefix], asn)
            stats.duplicates += 1
        pairs[prefix] = asn
        stats.accepted += 1
    return sorted(pairs.items(), key=lambda item: prefix_sort_key(item[0])), stats


def format_prefix_to_as(pairs):
    return [f"{prefix}|{asn}" for prefix, asn in pairs]
