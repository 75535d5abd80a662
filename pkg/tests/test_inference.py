# tests/test_inference.py
import unittest
import sys
import os
import ipaddress

sys.path.append(os.path.join(os.path.dirname(__file__), '../src'))
sys.path.append(os.path.join(os.path.dirname(__file__), '../'))
sys.path.append(os.path.dirname(__file__))

from ingest.prefixes import parse_target_prefixes
from ingest.records import RibEntry
from ingest.rib import parse_rib
from inference.corpus import build_corpus, format_corpus, parse_corpus
from inference.path_inference import infer_paths
from inference.paths import InferredPath, SurePath, extend_path, path_key, select_best
from inference.sure_paths import extract_sure_paths, index_sure_paths
from topology.valley_free import is_valley_free
from utils.exceptions import EmptyCandidatesError
from utils.helpers import read_lines

from fixtures import (A, B, C, D, E, F, G, PREFIX_F, PREFIX_G, toy_graph, fixture_path,
                      named, oracle_paths, random_rib, random_topology, seeded)

PREFIX = ipaddress.IPv4Network('10.9.0.0/24')


def inferred(length, uncertainty, frequency, first=100):
    hops = tuple(range(first, first + length))
    return InferredPath(prefix=PREFIX, hops=hops, frequency_index=frequency,
                        uncertainty_count=uncertainty, base_suffix_len=length - uncertainty)


class TestSurePaths(unittest.TestCase):
    def test_suffix_frequencies(self):
        entries = [RibEntry(PREFIX, (7, 3, 1)), RibEntry(PREFIX, (9, 3, 1))]
        sure = index_sure_paths(extract_sure_paths(entries, PREFIX))
        self.assertEqual({hops: p.frequency_index for hops, p in sure.items()},
                         {(7, 3, 1): 1, (9, 3, 1): 1, (3, 1): 2, (1,): 2})

    def test_duplicate_rows_count_twice(self):
        entries = [RibEntry(PREFIX, (7, 3, 1)), RibEntry(PREFIX, (7, 3, 1))]
        sure = index_sure_paths(extract_sure_paths(entries, PREFIX))
        self.assertEqual(sure[(7, 3, 1)].frequency_index, 2)

    def test_grouped_by_origin(self):
        entries = [RibEntry(PREFIX, (7, 3, 1)), RibEntry(PREFIX, (9, 3, 1))]
        sure = extract_sure_paths(entries, PREFIX)
        self.assertEqual(sorted(sure), [1, 3, 7, 9])
        self.assertEqual([p.hops for p in sure[3]], [(3, 1)])

    def test_other_prefixes_ignored(self):
        entries = [RibEntry(ipaddress.IPv4Network('10.9.0.0/16'), (7, 3, 1))]
        self.assertEqual(extract_sure_paths(entries, PREFIX), {})

    def test_sure_path_has_no_uncertainty(self):
        path = SurePath(PREFIX, (3, 1), 2)
        self.assertEqual(path.uncertainty_count, 0)
        self.assertEqual(path.base_suffix_len, 2)
        self.assertTrue(path.is_sure)


class TestTieBreak(unittest.TestCase):
    def test_shorter_wins(self):
        best = select_best([inferred(4, 1, 3), inferred(5, 0, 9)])
        self.assertEqual(len(best.hops), 4)

    def test_fewer_inferred_hops_wins(self):
        best = select_best([inferred(4, 2, 1), inferred(4, 1, 1, first=200)])
        self.assertEqual(best.uncertainty_count, 1)

    def test_more_frequent_suffix_wins(self):
        best = select_best([inferred(4, 1, 1), inferred(4, 1, 7, first=200)])
        self.assertEqual(best.frequency_index, 7)

    def test_lexical_order_is_last_resort(self):
        first, second = inferred(3, 1, 1, first=10), inferred(3, 1, 1, first=20)
        self.assertIs(select_best([second, first]), first)

    def test_empty_candidates(self):
        with self.assertRaises(EmptyCandidatesError):
            select_best([])

    def test_extension_reuses_known_sure_path(self):
        sure = SurePath(PREFIX, (3, 1), 2)
        index = {(7, 3, 1): SurePath(PREFIX, (7, 3, 1), 1)}
        self.assertIs(extend_path(sure, 7, index), index[(7, 3, 1)])
        longer = extend_path(sure, 8, index)
        self.assertEqual(longer.hops, (8, 3, 1))
        self.assertEqual(longer.uncertainty_count, 1)
        self.assertEqual(longer.frequency_index, 2)
        self.assertEqual(path_key(longer), (3, 1, -2, (8, 3, 1)))


class TestToyInference(unittest.TestCase):
    def setUp(self):
        self.graph = toy_graph()
        entries, _ = parse_rib(read_lines(fixture_path('toy.rib.txt')))
        self.entries = entries
        self.sure = extract_sure_paths(entries, PREFIX_F)

    def test_d_reaches_f_through_peering(self):
        paths, stats = infer_paths(PREFIX_F, self.sure, self.graph)
        self.assertEqual(named(paths[D].hops), 'D-B-C-F')
        self.assertEqual(paths[D].uncertainty_count, 2)
        self.assertEqual(paths[D].frequency_index, 1)
        self.assertEqual(stats.covered, 7)
        self.assertEqual(stats.uncovered, [])

    def test_sure_paths_are_kept(self):
        paths, _ = infer_paths(PREFIX_F, self.sure, self.graph)
        self.assertIsInstance(paths[C], SurePath)
        self.assertEqual(paths[C].hops, (C, F))
        self.assertEqual(paths[F].hops, (F,))

    def test_every_path_is_valley_free(self):
        paths, _ = infer_paths(PREFIX_F, self.sure, self.graph)
        for origin, path in paths.items():
            self.assertEqual(path.origin, origin)
            self.assertTrue(is_valley_free(path.hops, self.graph), named(path.hops))
            self.assertEqual(path.hops[-1], F)

    def test_uncertainty_matches_extension_length(self):
        paths, _ = infer_paths(PREFIX_F, self.sure, self.graph)
        for path in paths.values():
            if not path.is_sure:
                self.assertEqual(path.uncertainty_count, len(path.hops) - path.base_suffix_len)
                self.assertEqual(path.base_suffix(), path.hops[-path.base_suffix_len:])

    def test_without_peering_paths_climb_to_a(self):
        paths, _ = infer_paths(PREFIX_F, self.sure, toy_graph(with_peering=False))
        self.assertEqual(named(paths[D].hops), 'D-B-A-C-F')
        self.assertEqual(named(paths[E].hops), 'E-B-A-C-F')

    def test_invalid_sure_path_is_rejected(self):
        entries = [RibEntry(PREFIX_G, (D, G)), RibEntry(PREFIX_G, (C, G))]
        paths, stats = infer_paths(PREFIX_G, extract_sure_paths(entries, PREFIX_G), self.graph)
        self.assertEqual(stats.sure_rejected, 1)
        self.assertEqual(named(paths[D].hops), 'D-B-C-G')


class TestInferenceOracle(unittest.TestCase):
    def test_matches_exhaustive_search(self):
        rng = seeded(2024)
        for trial in range(500):
            graph, asns = random_topology(rng)
            entries = random_rib(rng, graph, asns, PREFIX)
            sure = extract_sure_paths(entries, PREFIX)
            paths, _ = infer_paths(PREFIX, sure, graph)
            expected = oracle_paths(entries, PREFIX, graph, len(asns))
            got = {origin: path.hops for origin, path in paths.items()}
            self.assertEqual(got, expected, f"essai {trial}")

    def test_more_rib_rows_never_lose_origins(self):
        rng = seeded(31)
        for trial in range(300):
            graph, asns = random_topology(rng)
            entries = random_rib(rng, graph, asns, PREFIX)
            covered = set()
            for size in range(1, len(entries) + 1):
                paths, _ = infer_paths(PREFIX, extract_sure_paths(entries[:size], PREFIX), graph)
                self.assertLessEqual(covered, set(paths), f"essai {trial}, {size} lignes")
                covered = set(paths)


class TestCorpus(unittest.TestCase):
    def setUp(self):
        self.graph = toy_graph()
        self.entries, _ = parse_rib(read_lines(fixture_path('toy.rib.txt')))
        self.targets, _ = parse_target_prefixes(read_lines(fixture_path('toy.prefixes.txt')))

    def test_one_path_per_origin_and_prefix(self):
        corpus = build_corpus(self.targets, self.entries, self.graph)
        self.assertEqual(corpus.prefixes, [PREFIX_F, PREFIX_G])
        self.assertEqual(corpus.total_paths, 14)
        self.assertEqual(corpus.total_paths, sum(s.stats.covered for s in corpus.slices))
        self.assertEqual(corpus.invalid_paths(self.graph), [])
        self.assertEqual(corpus.slice(PREFIX_G).label, 'site-g')

    def test_prefix_without_sure_paths_gives_empty_slice(self):
        targets = list(self.targets) + [PREFIX]
        corpus = build_corpus(targets, self.entries, self.graph)
        self.assertEqual(corpus.slice(PREFIX).paths, {})
        self.assertEqual(corpus.total_paths, 14)

    def test_path_file_reload(self):
        corpus = build_corpus(self.targets, self.entries, self.graph)
        lines = format_corpus(corpus)
        again, stats = parse_corpus(lines)
        self.assertEqual(stats.accepted, 14)
        self.assertEqual(stats.rejected, 0)
        self.assertEqual(format_corpus(again), lines)
        self.assertEqual(again.slice(PREFIX_F).paths[D].hops, (D, B, C, F))

    def test_incoherent_path_lines_rejected(self):
        lines = ["10.0.6.0/24|4|2 3 6|1|1", "10.0.6.0/24|4|4 2 3 6|4|1", "10.0.6.0/24|4|4 2"]
        corpus, stats = parse_corpus(lines)
        self.assertTrue(corpus.is_empty())
        self.assertEqual(stats.rejected, 3)

    def test_subset(self):
        corpus = build_corpus(self.targets, self.entries, self.graph)
        self.assertEqual(corpus.subset([PREFIX_G]).total_paths, 7)
        self.assertEqual(corpus.ases(), {A, B, C, D, E, F, G})


if __name__ == '__main__':
    unittest.main()
