# src/inference/corpus.py
"""
CORPUS DE CHEMINS (UN CHEMIN PAR COUPLE ORIGINE / PRÉFIXE) ET FICHIER DE CHEMINS
"""

from collections import defaultdict
from dataclasses import dataclass, field

from ingest.records import ParseStats, TargetPrefix, parse_asn, parse_prefix, prefix_sort_key
from inference.path_inference import InferenceStats, infer_paths
from inference.paths import InferredPath, SurePath
from inference.sure_paths import extract_sure_paths
from topology.valley_free import is_loop_free, is_valley_free
from utils.helpers import get_logger, iter_data_lines

logger = get_logger("inference")


@dataclass
class PrefixSlice:
    prefix: object
    paths: dict = field(default_factory=dict)       # origine -> chemin
    label: str = ''
    stats: InferenceStats = None


class PathCorpus:
    """Ensemble des tranches par préfixe, itérées dans un ordre stable."""

    def __init__(self, slices=()):
        self._slices = {}
        for prefix_slice in slices:
            self.add_slice(prefix_slice)

    def add_slice(self, prefix_slice):
        self._slices[prefix_slice.prefix] = prefix_slice

    @property
    def prefixes(self):
        return sorted(self._slices, key=prefix_sort_key)

    def slice(self, prefix):
        return self._slices[prefix]

    @property
    def slices(self):
        return [self._slices[prefix] for prefix in self.prefixes]

    def iter_paths(self):
        for prefix_slice in self.slices:
            for origin in sorted(prefix_slice.paths):
                yield prefix_slice.paths[origin]

    def __len__(self):
        return sum(len(prefix_slice.paths) for prefix_slice in self._slices.values())

    @property
    def total_paths(self):
        return len(self)

    def is_empty(self):
        return len(self) == 0

    def ases(self):
        """Tous les AS présents sur au moins un chemin."""
        seen = set()
        for path in self.iter_paths():
            seen.update(path.hops)
        return seen

    def subset(self, prefixes):
        wanted = set(prefixes)
        return PathCorpus(s for p, s in self._slices.items() if p in wanted)

    def invalid_paths(self, graph):
        """Chemins qui violent boucle ou valley-free (doit rester vide)."""
        return [path for path in self.iter_paths()
                if not is_loop_free(path.hops) or not is_valley_free(path.hops, graph)]

    def stats(self):
        return [s.stats.to_dict() for s in self.slices if s.stats is not None]


def build_corpus(targets, entries, graph):
    """Inférence indépendante pour chaque préfixe cible."""
    by_prefix = defaultdict(list)
    for entry in entries:
        by_prefix[entry.prefix].append(entry)

    corpus = PathCorpus()
    for target in targets:
        if not isinstance(target, TargetPrefix):
            target = TargetPrefix(prefix=target)
        sure = extract_sure_paths(by_prefix.get(target.prefix, ()), target.prefix)
        if not sure:
            logger.warning("préfixe %s: aucun chemin sûr, tranche vide", target.prefix)
            stats = InferenceStats(prefix=str(target.prefix), label=target.label,
                                   graph_vertices=graph.number_of_vertices())
            corpus.add_slice(PrefixSlice(prefix=target.prefix, label=target.label, stats=stats))
            continue
        paths, stats = infer_paths(target.prefix, sure, graph, label=target.label)
        logger.info("préfixe %s: %d AS couverts en %d tours",
                    target.prefix, stats.covered, stats.rounds)
        corpus.add_slice(PrefixSlice(prefix=target.prefix, paths=paths,
                                     label=target.label, stats=stats))
    return corpus


# ---------- fichier de chemins: PREFIXE|ORIGINE|A B C|incertitude|fréquence ----------

def format_path(path):
    hops = ' '.join(str(asn) for asn in path.hops)
    return f"{path.prefix}|{path.origin}|{hops}|{path.uncertainty_count}|{path.frequency_index}"


def format_corpus(corpus):
    return [format_path(path) for path in corpus.iter_paths()]


def parse_corpus(lines):
    """Relit un fichier de chemins; renvoie (PathCorpus, ParseStats)."""
    grouped = defaultdict(dict)
    stats = ParseStats()
    for line_no, line in iter_data_lines(lines):
        stats.lines += 1
        fields = line.split('|')
        if len(fields) != 5:
            stats.reject(line_no, "nombre de champs invalide")
            continue
        try:
            prefix = parse_prefix(fields[0])
            origin = parse_asn(fields[1])
            hops = tuple(parse_asn(token) for token in fields[2].split())
            uncertainty, frequency = int(fields[3]), int(fields[4])
        except ValueError:
            stats.reject(line_no, "champ invalide")
            continue
        if not hops or hops[0] != origin or not 0 <= uncertainty < len(hops):
            stats.reject(line_no, "chemin incohérent")
            continue
        if uncertainty == 0:
            path = SurePath(prefix=prefix, hops=hops, frequency_index=frequency)
        else:
            path = InferredPath(prefix=prefix, hops=hops, frequency_index=frequency,
                                uncertainty_count=uncertainty,
                                base_suffix_len=len(hops) - uncertainty)
        if origin in grouped[prefix]:
            stats.duplicates += 1
        grouped[prefix][origin] = path
        stats.accepted += 1
    corpus = PathCorpus(PrefixSlice(prefix=prefix, paths=paths) for prefix, paths in grouped.items())
    return corpus, stats
