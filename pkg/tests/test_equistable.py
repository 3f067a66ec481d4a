"""Тесты для равностабильности."""

import itertools
import unittest
from fractions import Fraction

import numpy as np

from src.cisgraphs.core import Graph, complement, mask_of
from src.cisgraphs.equistable import (
    AFFINE,
    LP,
    EquistableCertificate,
    WeightPolytope,
    affine_hull,
    forced_value,
    is_equistable,
    is_strongly_equistable,
    lp_optimize,
    verify_certificate,
    verify_forced_subset,
    verify_weights,
)
from src.cisgraphs.errors import UnsupportedSizeError
from src.cisgraphs.gallery import GalleryId, gallery
from src.cisgraphs.linegraph import line_graph

P4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
TWO_K2 = Graph.from_edges(4, [(0, 1), (2, 3)])

# Клики Cir9 (метки 1..9) со знаками: сумма даёт множество {3, 4, 9}.
CIR9_CLIQUE_COMBINATION = (
    ((0, 4, 8), 1), ((1, 5, 6), 1), ((2, 3, 7), 1), ((0, 5, 7), -1), ((1, 4, 6), -1),
)


def all_graphs(n):
    pairs = list(itertools.combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        yield Graph.from_edges(n, [p for i, p in enumerate(pairs) if bits >> i & 1])


def random_graphs(n, count, seed=5):
    rng = np.random.default_rng(seed)
    pairs = list(itertools.combinations(range(n), 2))
    for _ in range(count):
        keep = rng.integers(0, 2, size=len(pairs))
        yield Graph.from_edges(n, [p for p, k in zip(pairs, keep) if k])


class TestPolytope(unittest.TestCase):
    """Многогранник весов и его аффинная оболочка."""

    def test_p4_hull(self):
        # φ = (t, t, 1 - t, 1 - t)
        hull = affine_hull(P4)
        self.assertTrue(hull.feasible)
        self.assertEqual(hull.zeros, 0)
        self.assertEqual(hull.dimension, 1)
        self.assertEqual(forced_value(P4, mask_of([1, 2])), 1)
        self.assertIsNone(forced_value(P4, mask_of([0, 1])))

    def test_k3_is_a_point(self):
        hull = affine_hull(Graph.complete(3))
        self.assertEqual(hull.dimension, 0)
        self.assertEqual(hull.point, (Fraction(1),) * 3)

    def test_lp_bounds(self):
        polytope = WeightPolytope.of(P4)
        objective = [1, 1, 0, 0]
        self.assertEqual(lp_optimize(polytope, objective).value, 2)
        self.assertEqual(lp_optimize(polytope, objective, maximize=False).value, 0)

    def test_infeasible_polytope(self):
        g = complement(line_graph(Graph.from_edges(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])))
        self.assertFalse(affine_hull(g).feasible)
        verdict = is_equistable(g)
        self.assertFalse(verdict)
        self.assertEqual(verdict.reason, "infeasible")
        self.assertTrue(verify_certificate(g, verdict))


class TestEquistable(unittest.TestCase):
    """Вердикты и сертификаты."""

    def test_p4_forced_subset(self):
        verdict = is_equistable(P4)
        self.assertFalse(verdict)
        self.assertEqual(verdict.reason, "forced")
        self.assertEqual(verdict.subset, mask_of([1, 2]))
        self.assertEqual(verdict.value, 1)
        self.assertTrue(verify_certificate(P4, verdict))

    def test_k3_and_2k2(self):
        for g in (Graph.complete(3), TWO_K2, gallery(GalleryId.C4)):
            for decide in (is_equistable, is_strongly_equistable):
                verdict = decide(g)
                self.assertTrue(verdict, g)
                self.assertEqual(verdict.reason, "witness")
                self.assertTrue(verify_weights(g, verdict.weights))
                self.assertTrue(verify_certificate(g, verdict))

    def test_cir9(self):
        cir9 = gallery(GalleryId.CIR9)
        self.assertFalse(is_equistable(cir9))
        subset = verify_forced_subset(cir9, CIR9_CLIQUE_COMBINATION, kind="clique")
        self.assertEqual(subset, mask_of([2, 3, 8]))
        self.assertEqual(forced_value(complement(cir9), subset), 1)
        verdict = is_equistable(complement(cir9))
        self.assertFalse(verdict)
        self.assertTrue(verify_certificate(complement(cir9), verdict))

    def test_forced_subset_rejects_non_members(self):
        cir9 = gallery(GalleryId.CIR9)
        with self.assertRaises(ValueError):
            verify_forced_subset(cir9, [((0, 1, 2), 1)], kind="clique")
        with self.assertRaises(ValueError):
            verify_forced_subset(cir9, [((0, 4, 8), 2)], kind="clique")

    def test_tampered_certificates(self):
        verdict = is_equistable(P4)
        wrong_value = EquistableCertificate(False, False, "forced", subset=verdict.subset, value=Fraction(2))
        self.assertFalse(verify_certificate(P4, wrong_value))
        stable_subset = EquistableCertificate(False, False, "forced", subset=mask_of([0, 3]), value=Fraction(1))
        self.assertFalse(verify_certificate(P4, stable_subset))
        bad_weights = EquistableCertificate(True, False, "witness", weights=(Fraction(1),) * 4)
        self.assertFalse(verify_certificate(P4, bad_weights))

    def test_json_fractions(self):
        verdict = is_equistable(P4)
        data = verdict.to_json()
        self.assertEqual(data["kind"], "equistable")
        self.assertEqual(data["value"], "1/1")
        self.assertEqual(data["subset"], [1, 2])
        self.assertEqual(EquistableCertificate.from_json(data), verdict)

    def test_size_limit(self):
        with self.assertRaises(UnsupportedSizeError):
            is_equistable(Graph.empty(17))

    def test_unknown_method(self):
        with self.assertRaises(ValueError):
            is_equistable(P4, method="simplex")


class TestMethodsAgree(unittest.TestCase):
    """Аффинная оболочка и литеральный перебор LP дают одно и то же."""

    def check(self, g):
        for decide in (is_equistable, is_strongly_equistable):
            affine = decide(g, method=AFFINE)
            lp = decide(g, method=LP)
            self.assertEqual(affine.holds, lp.holds)
            self.assertEqual(affine.reason, lp.reason)
            self.assertEqual(affine.subset, lp.subset)
            self.assertEqual(affine.value, lp.value)

    def test_all_graphs_up_to_four(self):
        for n in range(1, 5):
            for g in all_graphs(n):
                self.check(g)

    def test_random_five(self):
        for g in random_graphs(5, 25):
            self.check(g)


if __name__ == '__main__':
    unittest.main()
