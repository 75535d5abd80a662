# src/placement/ranking.py
"""
CLASSEMENT DES AS PAR FRÉQUENCE D'APPARITION DANS LES CHEMINS
"""

from dataclasses import dataclass

from placement.incidence import as_incidence


@dataclass(frozen=True)
class AsFrequency:
    asn: int
    paths_containing: int
    rank: int


@dataclass
class AsFrequencyTable:
    entries: list           # AsFrequency, rang croissant
    total_paths: int

    def __post_init__(self):
        self._by_asn = {entry.asn: entry for entry in self.entries}

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, asn):
        return self._by_asn[asn]

    def rank_of(self, asn):
        return self._by_asn[asn].rank

    def paths_of(self, asn):
        entry = self._by_asn.get(asn)
        return entry.paths_containing if entry else 0

    def ordered_asns(self):
        return [entry.asn for entry in self.entries]

    def transit_asns(self):
        """AS traversés par au moins un chemin."""
        return [entry.asn for entry in self.entries if entry.paths_containing > 0]


def rank_ases(corpus):
    """Rangs denses à partir de 1: chemins décroissants, puis ASN croissant."""
    incidence = as_incidence(corpus)
    counts = incidence.paths_containing()
    order = sorted(range(len(incidence.asns)),
                   key=lambda column: (-int(counts[column]), incidence.asns[column]))
    entries = [
        AsFrequency(asn=incidence.asns[column], paths_containing=int(counts[column]), rank=position)
        for position, column in enumerate(order, start=1)
    ]
    return AsFrequencyTable(entries=entries, total_paths=incidence.total_paths)
