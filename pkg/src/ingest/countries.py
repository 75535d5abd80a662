# src/ingest/countries.py
"""
PAYS DES AS ET LISTE DES PAYS CENSEURS
"""

from ingest.records import COUNTRY_CODE, CountryMap, ParseStats, parse_asn
from utils.helpers import get_logger, iter_data_lines

logger = get_logger("ingest")


def parse_country_codes(lines):
    """Fichier '*.censors.txt': un code ISO alpha-2 par ligne."""
    codes = set()
    stats = ParseStats()
    for line_no, line in iter_data_lines(lines):
        stats.lines += 1
        code = line.upper()
        if not COUNTRY_CODE.match(code):
            stats.reject(line_no, f"code pays invalide: {line}")
            continue
        if code in codes:
            stats.duplicates += 1
        codes.add(code)
        stats.accepted += 1
    return frozenset(codes), stats


def parse_as_countries(lines):
    """Fichier '*.countries.txt': 'ASN|CC'."""
    mapping = {}
    stats = ParseStats()
    for line_no, line in iter_data_lines(lines):
        stats.lines += 1
        fields = line.split('|')
        if len(fields) != 2:
            stats.reject(line_no, "nombre de champs invalide")
            continue
        try:
            asn = parse_asn(fields[0])
        except ValueError:
            stats.reject(line_no, f"ASN invalide: {fields[0]}")
            continue
        code = fields[1].strip().upper()
        if not COUNTRY_CODE.match(code):
            stats.reject(line_no, f"code pays invalide: {fields[1]}")
            continue
        if asn in mapping:
            stats.duplicates += 1
            if mapping[asn] != code:
                logger.warning("AS%d: pays %s remplacé par %s (ligne %d)",
                               asn, mapping[asn], code, line_no)
                stats.warnings += 1
        mapping[asn] = code
        stats.accepted += 1
    return mapping, stats


def load_country_map(country_lines, censor_lines=()):
    mapping, _ = parse_as_countries(country_lines)
    censors, _ = parse_country_codes(censor_lines)
    return CountryMap(mapping=mapping, censor_set=censors)


def format_as_countries(mapping):
    return [f"{asn}|{mapping[asn]}" for asn in sorted(mapping)]
