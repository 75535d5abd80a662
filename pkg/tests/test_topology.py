# tests/test_topology.py
import unittest
import sys
import os
import itertools
import time

sys.path.append(os.path.join(os.path.dirname(__file__), '../src'))
sys.path.append(os.path.join(os.path.dirname(__file__), '../'))
sys.path.append(os.path.dirname(__file__))

from ingest.records import RelationshipEdge
from ingest.relationships import PEER_CODE, PROVIDER_CODE
from topology.cones import cone_sizes, customer_cone
from topology.graph import Relationship, build_graph
from topology.valley_free import (check_valley_free, enumerate_valley_free, is_loop_free,
                                  is_valley_free)
from utils.exceptions import EnumerationLimitError, ParseHardError, UnknownAsError

from fixtures import A, B, C, D, E, F, G, toy_graph, named, random_topology, seeded


class TestRelationshipGraph(unittest.TestCase):
    def test_toy_counts(self):
        graph = toy_graph(with_peering=False)
        self.assertEqual(graph.number_of_vertices(), 7)
        self.assertEqual(graph.summary()['p2c'], 6)
        self.assertEqual(graph.summary()['p2p'], 0)

    def test_both_directions_are_labelled(self):
        graph = toy_graph()
        self.assertIs(graph.relationship(A, B), Relationship.PROVIDER_TO_CUSTOMER)
        self.assertIs(graph.relationship(B, A), Relationship.CUSTOMER_TO_PROVIDER)
        self.assertIs(graph.relationship(B, C), Relationship.PEER_TO_PEER)
        self.assertIs(graph.relationship(C, B), Relationship.PEER_TO_PEER)
        self.assertIs(graph.relationship(D, G), Relationship.NONE)

    def test_neighbour_queries(self):
        graph = toy_graph()
        self.assertEqual(graph.customers(B), [D, E])
        self.assertEqual(graph.providers(B), [A])
        self.assertEqual(graph.peers(B), [C])
        self.assertEqual(graph.customers(99), [])

    def test_self_edge_is_skipped(self):
        graph = build_graph([RelationshipEdge(1, 1, PROVIDER_CODE), RelationshipEdge(1, 2, PEER_CODE)])
        self.assertEqual(graph.self_edges_rejected, 1)
        self.assertEqual(graph.number_of_pairs(), 1)

    def test_conflicting_labels_raise(self):
        with self.assertRaises(ParseHardError):
            build_graph([RelationshipEdge(1, 2, PROVIDER_CODE), RelationshipEdge(1, 2, PEER_CODE)])


class TestValleyFree(unittest.TestCase):
    def setUp(self):
        self.graph = toy_graph()

    def test_toy_path_accepted(self):
        self.assertTrue(is_valley_free((D, B, A, C, F), self.graph))
        self.assertTrue(is_valley_free((D, B, C, F), self.graph))

    def test_valley_rejected(self):
        check = check_valley_free((B, D, B), self.graph)
        self.assertFalse(check.ok)
        self.assertFalse(is_valley_free((A, B, A, C), self.graph))
        # descente puis remontée
        self.assertFalse(is_valley_free((B, E, B, A), self.graph))

    def test_two_peer_links_rejected(self):
        graph = build_graph([RelationshipEdge(1, 2, PEER_CODE), RelationshipEdge(2, 3, PEER_CODE)])
        self.assertFalse(is_valley_free((1, 2, 3), graph))

    def test_unknown_link_rejected(self):
        check = check_valley_free((D, G), self.graph)
        self.assertFalse(check.ok)
        self.assertIn('unknown link', check.reason)

    def test_trivial_paths(self):
        self.assertTrue(is_valley_free((D,), self.graph))
        self.assertTrue(is_loop_free((1, 2, 3)))
        self.assertFalse(is_loop_free((1, 2, 1)))

    def test_suffix_closure(self):
        for path in enumerate_valley_free(self.graph, 7):
            for start in range(len(path)):
                self.assertTrue(is_valley_free(path[start:], self.graph))


class TestEnumeration(unittest.TestCase):
    def test_toy_paths(self):
        started = time.perf_counter()
        paths = enumerate_valley_free(toy_graph(), 7)
        selected = {named(p) for p in paths
                    if len(p) >= 3 and p[0] in (D, E) and p[-1] in (E, F, G)}
        self.assertLess(time.perf_counter() - started, 1.0)
        caption = {'D-B-E', 'D-B-C-F', 'D-B-C-G', 'D-B-A-C-F', 'D-B-A-C-G',
                   'E-B-A-C-F', 'E-B-A-C-G'}
        # le lien B-C en peering ouvre aussi les chemins depuis E
        self.assertEqual(selected, caption | {'E-B-C-F', 'E-B-C-G'})

    def test_without_peering_only_summit_paths(self):
        paths = enumerate_valley_free(toy_graph(with_peering=False), 7)
        selected = {named(p) for p in paths
                    if len(p) >= 3 and p[0] in (D, E) and p[-1] in (E, F, G)}
        self.assertEqual(selected, {'D-B-E', 'D-B-A-C-F', 'D-B-A-C-G', 'E-B-A-C-F', 'E-B-A-C-G'})

    def test_single_peer_edge(self):
        graph = build_graph([RelationshipEdge(1, 2, PEER_CODE)])
        self.assertEqual({p for p in enumerate_valley_free(graph, 5) if len(p) == 2}, {(1, 2), (2, 1)})

    def test_matches_permutation_brute_force(self):
        rng = seeded(11)
        for _ in range(30):
            graph, _ = random_topology(rng, max_vertices=7, max_edges=12)
            vertices = graph.vertices
            expected = set()
            for length in range(1, len(vertices) + 1):
                for path in itertools.permutations(vertices, length):
                    if is_valley_free(path, graph):
                        expected.add(path)
            self.assertEqual(enumerate_valley_free(graph, len(vertices)), expected)

    def test_vertex_bound(self):
        edges = [RelationshipEdge(1, n, PROVIDER_CODE) for n in range(2, 19)]
        with self.assertRaises(EnumerationLimitError):
            enumerate_valley_free(build_graph(edges), 3)


class TestCones(unittest.TestCase):
    def test_toy_cones(self):
        graph = toy_graph()
        self.assertEqual(customer_cone(graph, A), {B, C, D, E, F, G})
        self.assertEqual(customer_cone(graph, B), {D, E})
        self.assertEqual(len(customer_cone(graph, C)), 2)
        self.assertEqual(customer_cone(graph, G), set())

    def test_peer_links_do_not_enter_cones(self):
        self.assertNotIn(C, customer_cone(toy_graph(), B))

    def test_unknown_as(self):
        with self.assertRaises(UnknownAsError):
            customer_cone(toy_graph(), 42)

    def test_cone_sizes(self):
        sizes = cone_sizes(toy_graph())
        self.assertEqual(sizes[A], 6)
        self.assertEqual(sizes[B], 2)
        self.assertEqual(sizes[F], 0)


if __name__ == '__main__':
    unittest.main()
