"""Тесты для идентификаторов свойств, отчёта и перепроверки сертификатов."""

import unittest

from src.cisgraphs.core import Graph, complement
from src.cisgraphs.gallery import GalleryId, gallery
from src.cisgraphs.properties import (
    UNSUPPORTED,
    BaseProperty,
    Evaluator,
    Modifier,
    PropertyId,
    all_properties,
    apply_modifier,
    cap,
    classify,
    cup,
    plain,
    verdict_from_json,
    verify_certificate,
)
from src.cisgraphs.recognizers import Verdict

B = BaseProperty
P4 = gallery(GalleryId.P4)


class TestPropertyId(unittest.TestCase):

    def test_parse_and_key(self):
        self.assertEqual(PropertyId.parse("cap-triangle"), cap(B.TRIANGLE))
        self.assertEqual(PropertyId.parse("cis"), plain(B.CIS))
        self.assertEqual(PropertyId.parse("co-split"), PropertyId(B.SPLIT, Modifier.CO))
        self.assertEqual(cup(B.EDGE_SIMPLICIAL).key, "cup-edge-simplicial")
        self.assertEqual(str(plain(B.WEAKLY_CIS)), "weakly-cis")
        with self.assertRaises(ValueError):
            PropertyId.parse("cap-petersen")

    def test_co(self):
        self.assertEqual(PropertyId.parse("co-split").co(), plain(B.SPLIT))
        self.assertEqual(plain(B.CIS).co().co(), plain(B.CIS))
        self.assertEqual(cap(B.TRIANGLE).co(), cap(B.TRIANGLE))

    def test_all_properties(self):
        self.assertEqual(len(all_properties()), 60)
        without_lp = all_properties(include_lp=False)
        self.assertEqual(len(without_lp), 52)
        self.assertFalse(any(p.needs_lp for p in without_lp))


class TestModifiers(unittest.TestCase):
    """co, ∩ и ∪ через дополнение."""

    def test_sun(self):
        s3 = gallery(GalleryId.S3)
        self.assertTrue(apply_modifier(plain(B.EDGE_SIMPLICIAL), s3))
        self.assertFalse(apply_modifier(PropertyId(B.EDGE_SIMPLICIAL, Modifier.CO), s3))
        self.assertFalse(apply_modifier(cap(B.EDGE_SIMPLICIAL), s3))
        self.assertTrue(apply_modifier(cup(B.EDGE_SIMPLICIAL), s3))

    def test_co_is_base_on_complement(self):
        net = gallery(GalleryId.NET)
        evaluate = Evaluator(net)
        for base in (B.EDGE_SIMPLICIAL, B.TRIANGLE, B.WEAKLY_TRIANGLE):
            co = evaluate(PropertyId(base, Modifier.CO)).holds
            self.assertEqual(co, Evaluator(complement(net))(plain(base)).holds)

    def test_cache(self):
        evaluate = Evaluator(P4)
        first = evaluate.base(B.CIS)
        self.assertIs(evaluate.base(B.CIS), first)
        self.assertEqual(evaluate.complement, complement(P4))


class TestClassify(unittest.TestCase):

    def test_p4_report(self):
        report = classify(P4, label="P4")
        self.assertFalse(report.get(plain(B.CIS)))
        self.assertTrue(report.get(plain(B.SPLIT)))
        self.assertTrue(report.get(plain(B.ALMOST_CIS)))
        self.assertFalse(report.get(plain(B.WEAKLY_TRIANGLE)))
        self.assertTrue(report.get(plain(B.NORMAL)))
        self.assertTrue(report.bad_p4.holds)
        data = report.to_json()
        self.assertEqual(data["graph"], "P4")
        self.assertEqual(data["graph6"], "Ch")
        self.assertEqual(len(data["properties"]), 60)
        self.assertEqual(data["properties"]["cis"]["certificate"]["kind"], "disjoint-pair")

    def test_unsupported_sizes(self):
        g = Graph.empty(17)
        report = classify(g, [plain(B.CIS), plain(B.EQUISTABLE), plain(B.PERFECT)])
        self.assertTrue(report.get(plain(B.CIS)))
        self.assertIsNone(report.get(plain(B.EQUISTABLE)))
        self.assertIsNone(report.get(plain(B.PERFECT)))
        data = report.to_json()
        self.assertEqual(data["properties"]["equistable"]["holds"], UNSUPPORTED)


class TestVerifyCertificate(unittest.TestCase):
    """Каждый вердикт проходит независимую перепроверку."""

    def test_all_properties_small_graphs(self):
        for gid in (GalleryId.P4, GalleryId.C4, GalleryId.BULL, GalleryId.S3, GalleryId.CK):
            g = gallery(gid)
            evaluate = Evaluator(g)
            for pid in all_properties():
                self.assertTrue(verify_certificate(g, pid, evaluate(pid)), f"{gid.value}: {pid.key}")

    def test_json_round_trip(self):
        g = gallery(GalleryId.BULL)
        data = classify(g).to_json()
        for key, entry in data["properties"].items():
            verdict = verdict_from_json(entry)
            self.assertTrue(verify_certificate(g, PropertyId.parse(key), verdict), key)

    def test_rejects_wrong_verdicts(self):
        self.assertFalse(verify_certificate(P4, plain(B.CIS), Verdict(True)))
        wrong = Evaluator(gallery(GalleryId.C4))(plain(B.WEAKLY_CIS))
        self.assertFalse(verify_certificate(P4, plain(B.WEAKLY_CIS), wrong))
        flipped = Evaluator(P4)(cap(B.TRIANGLE))
        self.assertFalse(verify_certificate(P4, cap(B.TRIANGLE), Verdict(not flipped.holds, flipped.certificate)))


if __name__ == '__main__':
    unittest.main()
