# src/ingest/rib.py
"""
LECTURE DES TABLES RIB (FORMAT TEXTE 'PREFIXE|AS AS AS[|VANTAGE]')
"""

from itertools import groupby

from ingest.records import ParseStats, RibEntry, parse_asn, parse_prefix
from utils.config import config
from utils.helpers import get_logger, iter_data_lines

logger = get_logger("ingest")


def collapse_prepending(path):
    """Supprime les répétitions consécutives (prepending BGP)."""
    return tuple(asn for asn, _ in groupby(path))


def parse_rib(lines, vantage=''):
    """Parse un dump RIB texte.

    Renvoie (entrées, ParseStats). Une ligne rejetée n'interrompt jamais le
    parsing; un chemin qui contient encore une boucle après suppression du
    prepending est compté dans loops_dropped.
    """
    entries = []
    stats = ParseStats()
    for line_no, line in iter_data_lines(lines):
        stats.lines += 1
        fields = line.split('|')
        if len(fields) not in (2, 3):
            stats.reject(line_no, "nombre de champs invalide")
            continue
        try:
            prefix = parse_prefix(fields[0])
        except ValueError:
            stats.reject(line_no, f"préfixe invalide: {fields[0]}")
            continue
        try:
            raw_path = [parse_asn(token) for token in fields[1].split()]
        except ValueError:
            stats.reject(line_no, f"ASN invalide: {fields[1]}")
            continue
        if not raw_path:
            stats.reject(line_no, "chemin AS vide")
            continue

        path = collapse_prepending(raw_path)
        if len(set(path)) != len(path):
            stats.loops_dropped += 1
            continue
        if config.AS_TRANS in path:
            stats.as_trans_seen += 1

        label = fields[2].strip() if len(fields) == 3 else vantage
        entries.append(RibEntry(prefix=prefix, as_path=path, source_vantage=label))
        stats.accepted += 1

    if stats.rejects or stats.loops_dropped:
        logger.warning(
            "RIB: %d lignes rejetées, %d boucles écartées sur %d",
            stats.rejected, stats.loops_dropped, stats.lines,
        )
    return entries, stats


def format_rib_entry(entry):
    path = ' '.join(str(asn) for asn in entry.as_path)
    line = f"{entry.prefix}|{path}"
    if entry.source_vantage:
        line += f"|{entry.source_vantage}"
    return line


def format_rib(entries):
    return [format_rib_entry(entry) for entry in entries]
