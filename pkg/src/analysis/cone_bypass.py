# src/analysis/cone_bypass.py
"""
CONTOURNEMENT DU CÔNE: CHEMINS PAR L'AS OU SEULEMENT PAR SES CLIENTS DIRECTS
"""

from dataclasses import dataclass

import numpy as np

from placement.incidence import as_incidence


@dataclass(frozen=True)
class ConeBypassRow:
    asn: int
    pct_through_self: float
    pct_through_1hop_only: float
    customers: int = 0

    @property
    def pct_neither(self):
        return max(0.0, 1.0 - self.pct_through_self - self.pct_through_1hop_only)

    def to_row(self):
        return [self.asn, self.customers, f"{self.pct_through_self:.6f}",
                f"{self.pct_through_1hop_only:.6f}", f"{self.pct_neither:.6f}"]


def cone_bypass(corpus, graph, asn):
    """Part des chemins qui traversent `asn` et part qui ne traversent que ses clients directs.

    Un chemin qui passe par les deux compte dans pct_through_self; l'origine
    d'un chemin n'est pas traversée.
    """
    graph.require(asn)
    incidence = as_incidence(corpus)
    customers = graph.customers(asn)
    if not incidence.total_paths:
        return ConeBypassRow(asn=asn, pct_through_self=0.0, pct_through_1hop_only=0.0,
                             customers=len(customers))
    through_self = incidence.covered_mask([asn])
    through_customers = incidence.covered_mask(customers)
    only_customers = through_customers & ~through_self
    total = incidence.total_paths
    return ConeBypassRow(
        asn=asn,
        pct_through_self=float(np.count_nonzero(through_self)) / total,
        pct_through_1hop_only=float(np.count_nonzero(only_customers)) / total,
        customers=len(customers),
    )
