"""Тесты для core функций."""

import unittest

import networkx as nx
import numpy as np

from src.cisgraphs.core import (
    Graph,
    bits_of,
    complement,
    disjoint_union,
    encode_graph6,
    format_set,
    from_networkx,
    induced_subgraph,
    is_isomorphic,
    join,
    mask_of,
    parse_edge_list,
    parse_graph6,
    parse_graph6_stream,
    parse_graph_text,
    popcount,
    projective_points,
    projective_split,
    random_split,
    random_split_cross,
    random_split_properties,
    relabel,
    split_lemma_check,
    to_networkx,
)
from src.cisgraphs.errors import Graph6Error, GraphFormatError, GraphSizeError


def path(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


class TestBitsets(unittest.TestCase):
    """Тесты для битовых множеств вершин."""

    def test_mask_roundtrip(self):
        """Маска и список вершин."""
        mask = mask_of([0, 3, 5])
        self.assertEqual(mask, 0b101001)
        self.assertEqual(list(bits_of(mask)), [0, 3, 5])
        self.assertEqual(format_set(mask, one_based=True), [1, 4, 6])
        self.assertEqual(list(bits_of(0)), [])
        self.assertEqual(popcount(mask), 3)


class TestGraph(unittest.TestCase):
    """Тесты для Graph и операций."""

    def setUp(self):
        self.p4 = path(4)
        self.c4 = cycle(4)

    def test_invalid_sizes(self):
        """Число вершин вне 1..64."""
        with self.assertRaises(GraphSizeError):
            Graph.empty(0)
        with self.assertRaises(GraphSizeError):
            Graph.from_edges(65, [])

    def test_loop_rejected(self):
        with self.assertRaises(ValueError):
            Graph.from_edges(3, [(1, 1)])

    def test_edges_sorted(self):
        g = Graph.from_edges(4, [(3, 2), (1, 0), (2, 0)])
        self.assertEqual(g.edges(), [(0, 1), (0, 2), (2, 3)])
        self.assertEqual(g.edge_count(), 3)
        self.assertEqual(len(g.non_edges()), 3)

    def test_complement_involution(self):
        """Дополнение дополнения - исходный граф; P4 самодополнителен."""
        self.assertEqual(complement(complement(self.c4)), self.c4)
        self.assertTrue(is_isomorphic(complement(self.p4), self.p4))
        self.assertFalse(is_isomorphic(complement(self.c4), self.c4))

    def test_union_and_join(self):
        k2 = Graph.complete(2)
        self.assertEqual(disjoint_union(k2, k2).edges(), [(0, 1), (2, 3)])
        self.assertTrue(is_isomorphic(join(Graph.empty(2), Graph.empty(2)), self.c4))
        with self.assertRaises(GraphSizeError):
            disjoint_union(Graph.empty(40), Graph.empty(40))

    def test_induced_subgraph(self):
        sub = induced_subgraph(self.c4, mask_of([0, 1, 2]))
        self.assertEqual(sub.edges(), [(0, 1), (1, 2)])

    def test_relabel_and_isomorphism(self):
        self.assertTrue(is_isomorphic(self.p4, relabel(self.p4, [2, 0, 3, 1])))
        claw = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
        self.assertFalse(is_isomorphic(self.p4, claw))

    def test_networkx_bridge(self):
        graph = to_networkx(self.p4)
        self.assertEqual(graph.number_of_nodes(), 4)
        self.assertEqual(from_networkx(graph), self.p4)
        self.assertEqual(from_networkx(nx.cycle_graph(4)), self.c4)


class TestCodecs(unittest.TestCase):
    """Тесты для graph6 и списков рёбер."""

    def test_graph6_small(self):
        self.assertEqual(parse_graph6("A_"), Graph.complete(2))
        self.assertEqual(parse_graph6("A?"), Graph.empty(2))
        self.assertEqual(parse_graph6(">>graph6<<A_\n"), Graph.complete(2))
        self.assertEqual(encode_graph6(Graph.complete(2)), "A_")

    def test_graph6_roundtrip(self):
        for g in (path(5), cycle(7), Graph.complete(9), Graph.empty(64)):
            self.assertEqual(parse_graph6(encode_graph6(g)), g)

    def test_graph6_errors(self):
        with self.assertRaises(Graph6Error):
            parse_graph6("   ")
        with self.assertRaises(Graph6Error):
            parse_graph6("A!")
        with self.assertRaises(Graph6Error):
            parse_graph6("Aé")
        with self.assertRaises(GraphSizeError):
            parse_graph6("~?A?")

    def test_edge_list(self):
        g = parse_edge_list("n 5\n0 1\n1 2  # комментарий\n\n")
        self.assertEqual(g.n, 5)
        self.assertEqual(g.edges(), [(0, 1), (1, 2)])
        self.assertEqual(parse_edge_list("0 3\n").n, 4)

    def test_edge_list_errors(self):
        for text in ("0 0\n", "0 x\n", "0 1 2\n", "n 2\n0 5\n", ""):
            with self.assertRaises(GraphFormatError):
                parse_edge_list(text)

    def test_graph_text_autodetect(self):
        self.assertEqual(parse_graph_text("A_\n"), Graph.complete(2))
        self.assertEqual(parse_graph_text("0 1\n"), Graph.complete(2))

    def test_graph6_stream(self):
        graphs = list(parse_graph6_stream("A_\n\nA?\n"))
        self.assertEqual(graphs, [Graph.complete(2), Graph.empty(2)])


class TestSplitConstructions(unittest.TestCase):
    """Тесты для случайных и проективных расщепляемых графов."""

    def test_random_split_deterministic(self):
        g = random_split(5, 6, seed=7)
        self.assertEqual(g, random_split(5, 6, seed=7))
        self.assertTrue(g.is_clique(mask_of(range(5))))
        self.assertTrue(g.is_stable(mask_of(range(5, 11))))

    def test_random_split_trivial(self):
        for seed in range(5):
            g = random_split(1, 1, seed)
            self.assertIn(g.edge_count(), (0, 1))

    def test_random_split_too_big(self):
        with self.assertRaises(GraphSizeError):
            random_split(40, 40, seed=0)

    def test_lemma_properties_large(self):
        """При k = l = 40 свойства выполняются почти всегда."""
        good = sum(split_lemma_check(random_split_cross(40, 40, seed)).all() for seed in range(100))
        self.assertGreaterEqual(good, 95)

    def test_lemma_properties_graph_matches_matrix(self):
        g = random_split(6, 6, seed=3)
        self.assertEqual(random_split_properties(g, 6, 6), split_lemma_check(random_split_cross(6, 6, 3)))

    def test_lemma_fails_on_empty_cross(self):
        check = split_lemma_check(np.zeros((3, 3), dtype=bool))
        self.assertFalse(check.s_maximal_stable)
        self.assertTrue(check.c_maximal_clique)

    def test_projective_plane(self):
        """PG(2,q): q^2+q+1 точек, на каждой прямой q+1 точка."""
        for q in (2, 3):
            m = q * q + q + 1
            self.assertEqual(len(projective_points(q)), m)
            g = projective_split(q)
            self.assertEqual(g.n, 2 * m)
            for line in range(m, 2 * m):
                self.assertEqual(g.degree(line), q + 1)
            self.assertTrue(g.is_clique(mask_of(range(m))))

    def test_projective_rejects(self):
        with self.assertRaises(ValueError):
            projective_split(4)
        with self.assertRaises(GraphSizeError):
            projective_split(7)


if __name__ == '__main__':
    unittest.main()
