# tests/fixtures.py
"""
Constructions partagées par les tests: topologie à 7 AS, topologies aléatoires,
oracles par force brute.
"""

import ipaddress
import os
import sys

import numpy as np

sys.path.append(os.path.join(os.path.dirname(__file__), '../src'))

from ingest.countries import load_country_map
from ingest.prefixes import parse_target_prefixes
from ingest.records import RelationshipEdge, RibEntry
from ingest.relationships import PEER_CODE, PROVIDER_CODE
from ingest.rib import parse_rib
from inference.corpus import PathCorpus, PrefixSlice, build_corpus
from inference.paths import SurePath
from inference.sure_paths import extract_sure_paths, index_sure_paths
from topology.graph import build_graph
from topology.valley_free import enumerate_valley_free, is_valley_free
from utils.helpers import read_lines

FIXTURE_DIR = os.path.join(os.path.dirname(__file__), '../data/fixtures')

# A fournisseur de B et C; B de D et E; C de F et G; B et C en peering.
A, B, C, D, E, F, G = 1, 2, 3, 4, 5, 6, 7
NAMES = {A: 'A', B: 'B', C: 'C', D: 'D', E: 'E', F: 'F', G: 'G'}

PREFIX_F = ipaddress.IPv4Network('10.0.6.0/24')
PREFIX_G = ipaddress.IPv4Network('10.0.7.0/24')


def fixture_path(name):
    return os.path.join(FIXTURE_DIR, name)


def toy_edges(with_peering=True):
    edges = [
        RelationshipEdge(A, B, PROVIDER_CODE), RelationshipEdge(A, C, PROVIDER_CODE),
        RelationshipEdge(B, D, PROVIDER_CODE), RelationshipEdge(B, E, PROVIDER_CODE),
        RelationshipEdge(C, F, PROVIDER_CODE), RelationshipEdge(C, G, PROVIDER_CODE),
    ]
    if with_peering:
        edges.append(RelationshipEdge(B, C, PEER_CODE))
    return edges


def toy_graph(with_peering=True):
    return build_graph(toy_edges(with_peering))


def named(path):
    return '-'.join(NAMES[asn] for asn in path)


def random_topology(rng, max_vertices=12, max_edges=30):
    """Graphe aléatoire: paires tirées au hasard, étiquetées p2c ou p2p."""
    n = int(rng.integers(3, max_vertices + 1))
    asns = list(range(1, n + 1))
    pairs = [(a, b) for a in asns for b in asns if a < b]
    n_edges = int(rng.integers(n - 1, min(max_edges, len(pairs)) + 1))
    chosen = rng.choice(len(pairs), size=n_edges, replace=False)
    edges = []
    for index in sorted(chosen):
        first, second = pairs[index]
        if rng.random() < 0.5:
            first, second = second, first
        code = PEER_CODE if rng.random() < 0.25 else PROVIDER_CODE
        edges.append(RelationshipEdge(first, second, code))
    return build_graph(edges), asns


def random_rib(rng, graph, asns, prefix, n_entries=6):
    """Entrées RIB vers un AS d'accueil tiré au hasard.

    La plupart sont des chemins valley-free, quelques-unes des marches simples
    quelconques (rejetées ensuite par l'inférence).
    """
    home = asns[int(rng.integers(0, len(asns)))]
    valid = sorted(path for path in enumerate_valley_free(graph, len(asns))
                   if path[-1] == home and len(path) > 1)
    entries = [RibEntry(prefix=prefix, as_path=(home,))]
    for _ in range(n_entries):
        if valid and rng.random() < 0.8:
            hops = valid[int(rng.integers(0, len(valid)))]
        else:
            hops = _random_walk(rng, graph, home)
        entries.append(RibEntry(prefix=prefix, as_path=hops))
    return entries


def _random_walk(rng, graph, home):
    path = [home]
    for _ in range(int(rng.integers(1, 5))):
        options = [n for n in graph.neighbors(path[-1]) if n not in path]
        if not options:
            break
        path.append(options[int(rng.integers(0, len(options)))])
    return tuple(reversed(path))


def oracle_paths(entries, prefix, graph, max_len):
    """Meilleur chemin par origine, par énumération exhaustive.

    Chaque chemin valley-free vers un AS d'accueil est décomposé selon son plus
    long suffixe sûr valide, puis classé par la règle de départage.
    """
    sure_index = index_sure_paths(extract_sure_paths(entries, prefix))
    valid_sure = {hops: path for hops, path in sure_index.items() if is_valley_free(hops, graph)}
    homes = {entry.home_as for entry in entries if entry.prefix == prefix}
    best = {}
    for hops in enumerate_valley_free(graph, max_len):
        if hops[-1] not in homes:
            continue
        for start in range(len(hops)):
            suffix = valid_sure.get(hops[start:])
            if suffix is not None:
                break
        key = (len(hops), start, -suffix.frequency_index, hops)
        if hops[0] not in best or key < best[hops[0]]:
            best[hops[0]] = key
    for home in homes:
        if home not in graph and (home,) in valid_sure:
            best[home] = (1, 0, -valid_sure[(home,)].frequency_index, (home,))
    return {origin: key[3] for origin, key in best.items()}


def set_cover_oracle(row_sets, order, threshold):
    """k du plus petit préfixe de `order` dont l'union couvre `threshold` des lignes."""
    total = len(row_sets)
    covered = set()
    for k, item in enumerate(order, start=1):
        covered |= {row for row, items in enumerate(row_sets) if item in items}
        if len(covered) / total >= threshold:
            return k
    return None


def seeded(seed):
    return np.random.default_rng(seed)


def corpus_of(paths):
    """Corpus à un chemin par préfixe, sans inférence."""
    slices = []
    for index, hops in enumerate(paths):
        prefix = ipaddress.IPv4Network(f'10.{index // 256}.{index % 256}.0/24')
        path = SurePath(prefix=prefix, hops=tuple(hops), frequency_index=1)
        slices.append(PrefixSlice(prefix=prefix, paths={path.origin: path}))
    return PathCorpus(slices)


def toy_corpus():
    entries, _ = parse_rib(read_lines(fixture_path('toy.rib.txt')))
    targets, _ = parse_target_prefixes(read_lines(fixture_path('toy.prefixes.txt')))
    return build_corpus(targets, entries, toy_graph())


def toy_countries():
    return load_country_map(read_lines(fixture_path('toy.countries.txt')),
                            read_lines(fixture_path('toy.censors.txt')))
