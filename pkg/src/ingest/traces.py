# src/ingest/traces.py
"""
LECTURE DES TRACES TRACEROUTE ('SOURCE|DESTINATION|saut,saut,*,saut')
"""

from ingest.records import GAP, ParseStats, RouterTrace, parse_ipv4
from utils.helpers import get_logger, iter_data_lines

logger = get_logger("ingest")


def parse_traces(lines):
    """Parse un corpus de traces; les sauts muets '*' sont conservés."""
    traces = []
    stats = ParseStats()
    for line_no, line in iter_data_lines(lines):
        stats.lines += 1
        fields = line.split('|')
        if len(fields) != 3:
            stats.reject(line_no, "nombre de champs invalide")
            continue
        source, destination, hop_field = (part.strip() for part in fields)
        tokens = [token.strip() for token in hop_field.split(',') if token.strip()]
        if not tokens:
            stats.reject(line_no, "liste de sauts vide")
            continue
        try:
            destination = parse_ipv4(destination)
            hops = tuple(GAP if token == GAP else parse_ipv4(token) for token in tokens)
        except ValueError as exc:
            stats.reject(line_no, f"adresse invalide: {exc}")
            continue
        traces.append(RouterTrace(source=source, destination=destination, hops=hops))
        stats.accepted += 1

    if stats.rejects:
        logger.warning("traces: %d rejetées sur %d", stats.rejected, stats.lines)
    return traces, stats


def format_trace(trace):
    return f"{trace.source}|{trace.destination}|{','.join(trace.hops)}"
