# src/placement/incidence.py
"""
MATRICE D'INCIDENCE CHEMINS x AS (CREUSE)
"""

import numpy as np
from scipy import sparse


class PathIncidence:
    """Ligne = chemin du corpus, colonne = AS présent sur ce chemin hors origine.

    L'AS d'origine d'un chemin n'est pas crédité: un routeur leurre dans le
    réseau même du client ne peut pas le servir.
    """

    def __init__(self, corpus):
        paths = list(corpus.iter_paths())
        self.total_paths = len(paths)
        self.origins = np.array([path.origin for path in paths], dtype=np.int64)
        self.hops = [path.hops for path in paths]
        self.asns = sorted({asn for hops in self.hops for asn in hops})
        self.index = {asn: column for column, asn in enumerate(self.asns)}

        rows, columns = [], []
        for row, hops in enumerate(self.hops):
            for asn in hops[1:]:
                rows.append(row)
                columns.append(self.index[asn])
        data = np.ones(len(rows), dtype=np.int32)
        self.matrix = sparse.csc_matrix(
            (data, (rows, columns)), shape=(self.total_paths, len(self.asns))
        )

    def paths_containing(self):
        """Nombre de chemins par AS (colonne), aligné sur self.asns."""
        return np.diff(self.matrix.indptr)

    def rows_of(self, asn):
        column = self.index.get(asn)
        if column is None:
            return np.empty(0, dtype=np.int32)
        start, end = self.matrix.indptr[column], self.matrix.indptr[column + 1]
        return self.matrix.indices[start:end]

    def covered_mask(self, asns):
        mask = np.zeros(self.total_paths, dtype=bool)
        for asn in asns:
            mask[self.rows_of(asn)] = True
        return mask


def as_incidence(corpus_or_incidence):
    if isinstance(corpus_or_incidence, PathIncidence):
        return corpus_or_incidence
    return PathIncidence(corpus_or_incidence)
