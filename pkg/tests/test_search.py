"""Тесты для поиска пересекающихся семейств."""

import unittest

from src.cisgraphs.config import Limits
from src.cisgraphs.core import Graph, mask_of
from src.cisgraphs.errors import UndecidedError
from src.cisgraphs.gallery import G12_COVER_CLIQUES, G12_COVER_STABLE_SETS, GalleryId, gallery
from src.cisgraphs.recognizers import is_cis
from src.cisgraphs.search import (
    NORMAL,
    WEAKLY_CIS,
    CoverCertificate,
    CrossIntersectingInstance,
    certificate_from_json,
    exists_cross_intersecting,
    is_normal,
    is_weakly_cis,
    verify_cover,
)

P4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])


class TestInstance(unittest.TestCase):

    def test_p4_clauses(self):
        instance = CrossIntersectingInstance.build(P4, WEAKLY_CIS)
        self.assertEqual(instance.cliques, (mask_of([0, 1]), mask_of([1, 2]), mask_of([2, 3])))
        clauses = instance.clauses()
        # клика {1,2} (переменная 2) и независимое {0,3} (переменная 5) не пересекаются
        self.assertIn([-2, -5], clauses)
        self.assertIn([2], clauses)
        self.assertIn([5], clauses)

    def test_unknown_mode(self):
        with self.assertRaises(ValueError):
            CrossIntersectingInstance.build(P4, "strong")


class TestWeaklyCis(unittest.TestCase):
    """Слабо CIS графы."""

    def test_p4(self):
        self.assertFalse(is_weakly_cis(P4))
        result = exists_cross_intersecting(CrossIntersectingInstance.build(P4, WEAKLY_CIS))
        self.assertFalse(result.found)
        self.assertIsNone(result.certificate)

    def test_cis_graphs_are_weakly_cis(self):
        for gid in (GalleryId.K1, GalleryId.C4, GalleryId.TWO_K2, GalleryId.LK33):
            g = gallery(gid)
            self.assertTrue(is_cis(g))
            verdict = is_weakly_cis(g)
            self.assertTrue(verdict, gid)
            self.assertEqual(verdict.certificate.payload["mode"], WEAKLY_CIS)

    def test_g12_cover(self):
        g12 = gallery(GalleryId.G12)
        self.assertFalse(is_cis(g12))
        cover = CoverCertificate.from_lists(G12_COVER_CLIQUES, G12_COVER_STABLE_SETS, shift=1)
        self.assertTrue(verify_cover(g12, cover, WEAKLY_CIS))
        verdict = is_weakly_cis(g12)
        self.assertTrue(verdict)
        found = certificate_from_json(verdict.certificate.payload)
        self.assertTrue(verify_cover(g12, found, WEAKLY_CIS))


class TestNormal(unittest.TestCase):

    def test_p4_is_normal(self):
        verdict = is_normal(P4)
        self.assertTrue(verdict)
        cover = certificate_from_json(verdict.certificate.payload)
        self.assertTrue(verify_cover(P4, cover, NORMAL))

    def test_fixed_cover(self):
        cover = CoverCertificate.from_lists([[0, 1], [2, 3]], [[0, 2], [1, 3]])
        self.assertTrue(verify_cover(P4, cover, NORMAL))
        self.assertFalse(verify_cover(P4, cover, WEAKLY_CIS))


class TestVerifyCover(unittest.TestCase):
    """Прямая проверка отвергает испорченные сертификаты."""

    def test_rejects(self):
        not_stable = CoverCertificate.from_lists([[0, 1]], [[0, 1]])
        self.assertFalse(verify_cover(P4, not_stable, NORMAL))
        disjoint = CoverCertificate.from_lists([[1, 2], [0, 1], [2, 3]], [[0, 3], [0, 2], [1, 3]])
        self.assertFalse(verify_cover(P4, disjoint, NORMAL))
        empty = CoverCertificate((0,), (mask_of([0, 2]),))
        self.assertFalse(verify_cover(P4, empty, NORMAL))


class TestBacktrackCap(unittest.TestCase):
    """Исчерпание лимита возвратов даёт отдельную ошибку, а не ответ "нет"."""

    def setUp(self):
        # клики в 0 не пересекают независимые множества в 1 и наоборот
        left, right = mask_of([0]), mask_of([1])
        self.instance = CrossIntersectingInstance(
            Graph.empty(2), (left, left, right, right), (left, left, right, right), NORMAL
        )

    def test_undecided_when_cap_exceeded(self):
        with self.assertRaises(UndecidedError):
            exists_cross_intersecting(self.instance, Limits(search_backtrack_cap=0))

    def test_decided_with_default_cap(self):
        result = exists_cross_intersecting(self.instance)
        self.assertFalse(result.found)
        self.assertIsNone(result.certificate)
        self.assertGreater(result.backtracks, 0)


if __name__ == '__main__':
    unittest.main()
