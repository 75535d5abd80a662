# src/routermap/trimming.py
"""
DÉCOUPAGE DES TRACES: SEGMENT INTRA-AS ENTRE LE PREMIER ET LE DERNIER SAUT DE L'AS CIBLE
"""

from dataclasses import dataclass

from ingest.records import GAP


@dataclass(frozen=True)
class SpanHop:
    address: str
    asn: object             # None pour un saut muet ou une adresse non attribuée
    in_target: bool

    @property
    def is_gap(self):
        return self.address == GAP

    @property
    def third_party(self):
        return not self.is_gap and not self.in_target


@dataclass(frozen=True)
class TrimmedTrace:
    target: int
    hops: tuple             # SpanHop, ordre de la trace

    @property
    def target_hops(self):
        return [hop.address for hop in self.hops if hop.in_target]

    @property
    def third_party_hops(self):
        return [hop for hop in self.hops if hop.third_party]

    @property
    def gaps(self):
        return sum(1 for hop in self.hops if hop.is_gap)


def trim_trace(trace, p2a, target):
    """Segment [premier saut de target, dernier saut de target], ou None."""
    attributed = [None if hop == GAP else p2a.lookup(hop) for hop in trace.hops]
    positions = [i for i, asn in enumerate(attributed) if asn == target]
    if not positions:
        return None
    first, last = positions[0], positions[-1]
    hops = tuple(
        SpanHop(address=trace.hops[i], asn=attributed[i], in_target=attributed[i] == target)
        for i in range(first, last + 1)
    )
    return TrimmedTrace(target=target, hops=hops)


def trim_corpus(traces, p2a, target):
    trimmed = []
    for trace in traces:
        span = trim_trace(trace, p2a, target)
        if span is not None:
            trimmed.append(span)
    return trimmed
