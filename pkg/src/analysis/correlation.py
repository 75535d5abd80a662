# src/analysis/correlation.py
"""
CORRÉLATION DE RANGS (SPEARMAN) ET COMPARAISON RANG DE FRÉQUENCE / RANG DE CÔNE
"""

from dataclasses import dataclass

import numpy as np
from scipy.stats import rankdata

from topology.cones import cone_sizes
from utils.config import config
from utils.exceptions import UndefinedCorrelationError
from utils.helpers import get_logger

logger = get_logger("analysis")


def spearman_rank(x_ranks, y_ranks):
    """Pearson sur les rangs moyens (les ex aequo partagent un rang fractionnaire)."""
    x = np.asarray(x_ranks, dtype=np.float64).reshape(-1)
    y = np.asarray(y_ranks, dtype=np.float64).reshape(-1)
    if x.size != y.size:
        raise ValueError("séquences de longueurs différentes")
    if x.size < 2:
        raise UndefinedCorrelationError("corrélation indéfinie: moins de deux éléments")
    rx = rankdata(x, method='average')
    ry = rankdata(y, method='average')
    dx = rx - rx.mean()
    dy = ry - ry.mean()
    var_x = float(np.sum(dx * dx))
    var_y = float(np.sum(dy * dy))
    if var_x == 0 or var_y == 0:
        raise UndefinedCorrelationError("corrélation indéfinie: variance nulle")
    rho = float(np.sum(dx * dy)) / float(np.sqrt(var_x * var_y))
    return float(min(1.0, max(-1.0, rho)))


@dataclass(frozen=True)
class RankComparisonRow:
    asn: int
    paths_containing: int
    frequency_rank: float
    cone_size: int
    cone_rank: float


def rank_comparison(table, graph, top_n=config.RANK_COMPARISON_TOP_N):
    """Les top_n AS de transit: rang par fréquence face au rang par taille de cône.

    Les deux rangs sont recalculés sur ce sous-ensemble (rang 1 = plus grand).
    """
    candidates = [asn for asn in table.transit_asns() if asn in graph][:top_n]
    skipped = len(table.transit_asns()[:top_n]) - len(candidates)
    if skipped:
        logger.warning("comparaison des rangs: %d AS absents du graphe ignorés", skipped)
    if not candidates:
        return []
    sizes = cone_sizes(graph, candidates)
    paths = np.array([table.paths_of(asn) for asn in candidates], dtype=np.float64)
    cones = np.array([sizes[asn] for asn in candidates], dtype=np.float64)
    frequency_ranks = rankdata(-paths, method='average')
    cone_ranks = rankdata(-cones, method='average')
    return [
        RankComparisonRow(asn=asn, paths_containing=int(paths[i]),
                          frequency_rank=float(frequency_ranks[i]),
                          cone_size=int(cones[i]), cone_rank=float(cone_ranks[i]))
        for i, asn in enumerate(candidates)
    ]


def rank_correlation(rows):
    """Spearman entre rang de fréquence et rang de cône; None si indéfini."""
    try:
        return spearman_rank([row.frequency_rank for row in rows],
                             [row.cone_rank for row in rows])
    except UndefinedCorrelationError as exc:
        logger.warning("%s", exc)
        return None
