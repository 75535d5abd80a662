# src/inference/sure_paths.py
"""
EXTRACTION DES CHEMINS SÛRS D'UN PRÉFIXE
"""

from collections import Counter, defaultdict

from inference.paths import SurePath


def count_suffixes(entries, prefix):
    """Nombre d'entrées RIB du préfixe où chaque séquence apparaît comme suffixe."""
    counts = Counter()
    for entry in entries:
        if entry.prefix != prefix:
            continue
        path = entry.as_path
        for start in range(len(path)):
            counts[path[start:]] += 1
    return counts


def extract_sure_paths(entries, prefix):
    """Origine -> liste des SurePath (chaque chemin RIB et tous ses suffixes).

    Correspondance exacte du préfixe; un préfixe absent donne un dict vide.
    """
    sure = defaultdict(list)
    for hops, frequency in count_suffixes(entries, prefix).items():
        sure[hops[0]].append(SurePath(prefix=prefix, hops=hops, frequency_index=frequency))
    return {origin: sorted(paths, key=lambda p: p.hops) for origin, paths in sure.items()}


def index_sure_paths(sure):
    """Séquence de sauts -> SurePath."""
    return {path.hops: path for paths in sure.values() for path in paths}
