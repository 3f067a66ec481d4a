"""Тесты для таблицы включений и перебора малых графов."""

import json
import unittest
from unittest.mock import patch

from src.cisgraphs.core import Graph, encode_graph6, is_isomorphic
from src.cisgraphs.gallery import GalleryId, gallery
from src.cisgraphs.hasse import (
    DECOMPOSED_STATUS,
    EQUAL,
    ERRATUM,
    LABELS,
    PASS,
    SKIP,
    SUBSET,
    TABLE_PROPERTIES,
    UNKNOWN,
    arrow_name,
    dumps,
    find_separators,
    generate_graphs,
    llbar_checks,
    relation_table,
    scan,
    scan_to_csv,
    scan_to_text,
    table_to_csv,
    table_to_json,
    table_to_text,
    verify_table,
)
from src.cisgraphs.errors import UndecidedError
from src.cisgraphs.properties import PREDICATES, BaseProperty, cap, plain

B = BaseProperty


def cell_by_labels(cells, row, column):
    for line in cells:
        for cell in line:
            if LABELS[cell.row] == row and LABELS[cell.column] == column:
                return cell
    raise KeyError((row, column))


class TestRelationTable(unittest.TestCase):
    """Разбор напечатанной таблицы."""

    def test_shape_and_diagonal(self):
        cells = relation_table()
        self.assertEqual(len(cells), 17)
        self.assertTrue(all(len(row) == 17 for row in cells))
        for i, row in enumerate(cells):
            self.assertEqual(row[i].status, EQUAL)
            self.assertEqual(row[i].row, row[i].column)

    def test_statuses(self):
        cells = relation_table()
        statuses = [c.status for row in cells for c in row]
        self.assertEqual(statuses.count(EQUAL), 17)
        self.assertEqual(statuses.count(SKIP), 7)
        self.assertEqual(statuses.count(DECOMPOSED_STATUS), 12)
        self.assertEqual(statuses.count(UNKNOWN), 12)
        self.assertEqual(cell_by_labels(cells, "aCIS", "split").status, SUBSET)
        witness = cell_by_labels(cells, "wCIS", "∩-seq")
        self.assertEqual(witness.status, PASS)
        self.assertEqual(witness.witness, GalleryId.G12)
        self.assertEqual(cell_by_labels(cells, "CIS", "∪-es").witness, GalleryId.CK)

    def test_labels_are_unique(self):
        self.assertEqual(len({label for label, _ in TABLE_PROPERTIES}), 17)
        self.assertEqual(LABELS[cap(B.TRIANGLE)], "∩-△")


class TestVerifyTable(unittest.TestCase):
    """Проверка каждой ячейки со свидетелем из галереи."""

    @classmethod
    def setUpClass(cls):
        cls.report = verify_table()

    def test_all_witnesses_pass(self):
        self.assertTrue(self.report.ok, [c.label for c in self.report.failures])
        counts = self.report.counts()
        self.assertEqual(counts[ERRATUM], 2)
        self.assertEqual(counts[SKIP], 7)
        self.assertEqual(counts[DECOMPOSED_STATUS], 12)

    def test_erratum_cells(self):
        for row in ("∩-seq", "∩-eq"):
            cell = cell_by_labels(self.report.cells, row, "∩-swCIS")
            self.assertEqual(cell.status, ERRATUM)
            self.assertEqual(cell.entry, "G12")
            self.assertFalse(cell.row_holds)

    def test_witness_values(self):
        cell = cell_by_labels(self.report.cells, "aCIS", "∩-es")
        self.assertEqual(cell.status, PASS)
        self.assertTrue(cell.row_holds)
        self.assertFalse(cell.column_holds)
        cell = cell_by_labels(self.report.cells, "∪-△", "∩-△")
        self.assertEqual(cell.entry, "S3")
        self.assertEqual(cell.status, PASS)

    def test_renderers(self):
        data = json.loads(dumps(table_to_json(self.report)))
        self.assertEqual(data["schema"], "cisgraphs/1")
        self.assertEqual(len(data["cells"]), 17 * 17)
        self.assertEqual(len(data["llbar"]), 4)
        self.assertEqual(len(table_to_csv(self.report).strip().splitlines()), 18)
        self.assertIn("LLbar", table_to_text(self.report))

    def test_without_llbar(self):
        report = verify_table(include_llbar=False)
        self.assertEqual(report.llbar, [])
        cell = cell_by_labels(report.cells, "∩-△", "∩-swCIS")
        self.assertEqual(cell.status, DECOMPOSED_STATUS)
        self.assertTrue(cell.reason)


class TestLLbar(unittest.TestCase):

    def test_decomposed_checks(self):
        checks = llbar_checks()
        self.assertEqual(len(checks), 4)
        for check in checks:
            self.assertTrue(check.holds, check.name)


class TestGenerate(unittest.TestCase):
    """Генерация графов с точностью до изоморфизма."""

    def test_counts(self):
        counts = {}
        for g in generate_graphs(6):
            counts[g.n] = counts.get(g.n, 0) + 1
        self.assertEqual(counts, {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156})

    def test_pairwise_non_isomorphic(self):
        graphs = [g for g in generate_graphs(5) if g.n == 5]
        for i, g in enumerate(graphs):
            for other in graphs[i + 1:]:
                if g.edge_count() == other.edge_count():
                    self.assertFalse(is_isomorphic(g, other))

    def test_empty(self):
        self.assertEqual(list(generate_graphs(0)), [])


class TestScan(unittest.TestCase):
    """Перебор с проверкой стрелок."""

    @classmethod
    def setUpClass(cls):
        cls.report = scan(max_n=5)

    def test_ok(self):
        self.assertTrue(self.report.ok)
        self.assertEqual(self.report.counts, {1: 1, 2: 2, 3: 4, 4: 11, 5: 34})
        self.assertEqual(self.report.split_failures, [])
        self.assertEqual(self.report.bad_p4_failures, [])
        self.assertEqual(self.report.complement_failures, [])

    def test_arrows_checked(self):
        name = arrow_name(plain(B.CIS), plain(B.QUASI_CIS))
        result = self.report.arrows[name]
        self.assertGreater(result.checked, 0)
        self.assertEqual(result.failed, 0)
        self.assertIn(arrow_name(plain(B.STRONGLY_EQUISTABLE), plain(B.EQUISTABLE)), self.report.arrows)

    def test_renderers(self):
        data = json.loads(dumps(self.report.to_json()))
        self.assertTrue(data["ok"])
        self.assertEqual(data["counts"]["5"], 34)
        self.assertEqual(len(scan_to_csv(self.report).strip().splitlines()), len(self.report.arrows) + 1)
        self.assertIn("n=5: 34", scan_to_text(self.report))

    def test_without_lp(self):
        report = scan(max_n=4, include_lp=False)
        self.assertTrue(report.ok)
        self.assertNotIn(arrow_name(plain(B.STRONGLY_EQUISTABLE), plain(B.EQUISTABLE)), report.arrows)

    def test_jobs(self):
        single = scan(max_n=4, include_lp=False)
        parallel = scan(max_n=4, include_lp=False, jobs=2)
        self.assertEqual(single.to_json(), parallel.to_json())

    def test_graph_stream(self):
        graphs = [gallery(GalleryId.P4), gallery(GalleryId.C4), Graph.complete(7)]
        report = scan(max_n=4, properties=[plain(B.CIS), plain(B.SPLIT)], graphs=graphs)
        self.assertEqual(report.counts, {4: 2})
        self.assertEqual([r.graph6 for r in report.records], [encode_graph6(g) for g in graphs[:2]])

    def test_generation_limit(self):
        with self.assertRaises(ValueError):
            scan(max_n=8)


class TestScanFull(unittest.TestCase):
    """Перебор всех графов до шести вершин с LP и до семи без LP."""

    def test_six_with_lp(self):
        report = scan(max_n=6, include_lp=True)
        self.assertTrue(report.ok, report.to_json())
        self.assertEqual(report.counts, {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156})
        self.assertEqual(report.undecided, [])
        chain = (B.EDGE_SIMPLICIAL, B.SEMI_WEAKLY_CIS, B.STRONGLY_EQUISTABLE,
                 B.EQUISTABLE, B.TRIANGLE, B.WEAKLY_TRIANGLE)
        for x, y in zip(chain, chain[1:]):
            result = report.arrows[arrow_name(plain(x), plain(y))]
            self.assertGreater(result.checked, 0)
            self.assertEqual(result.failed, 0)
        threshold = report.arrows[arrow_name(plain(B.THRESHOLD), cap(B.EDGE_SIMPLICIAL))]
        self.assertGreater(threshold.checked, 0)
        self.assertEqual(threshold.failed, 0)

    def test_seven_without_lp(self):
        props = [plain(B.WEAKLY_CIS), plain(B.NORMAL)] + [
            pid for _, pid in TABLE_PROPERTIES if not pid.needs_lp and pid.modifier.value == "plain"
        ]
        report = scan(max_n=7, properties=props, include_lp=False)
        self.assertEqual(report.counts[7], 1044)
        self.assertTrue(report.ok)
        self.assertEqual(report.complement_failures, [])
        result = report.arrows[arrow_name(plain(B.WEAKLY_CIS), plain(B.NORMAL))]
        self.assertGreater(result.checked, 0)
        self.assertEqual(result.failed, 0)

    def test_undecided_graphs_do_not_abort(self):
        def undecided(g, limits):
            raise UndecidedError("лимит возвратов")

        props = [plain(B.CIS), plain(B.WEAKLY_CIS), plain(B.NORMAL)]
        with patch.dict(PREDICATES, {B.WEAKLY_CIS: undecided}):
            report = scan(max_n=4, properties=props, include_lp=False)
        self.assertEqual(report.counts, {1: 1, 2: 2, 3: 4, 4: 11})
        self.assertTrue(report.ok)
        self.assertEqual(len(report.undecided), 18)
        self.assertTrue(all(entry.startswith("weakly-cis: ") for entry in report.undecided))
        self.assertEqual(report.arrows[arrow_name(plain(B.CIS), plain(B.WEAKLY_CIS))].checked, 0)
        self.assertIn("не решено", scan_to_text(report))
        self.assertEqual(len(report.to_json()["undecided"]), 18)


class TestSeparators(unittest.TestCase):

    def test_known_separators(self):
        p4, c4 = gallery(GalleryId.P4), gallery(GalleryId.C4)
        found = find_separators(plain(B.SPLIT), plain(B.CIS), 4)
        self.assertTrue(any(is_isomorphic(g, p4) for g in found))
        found = find_separators(plain(B.CIS), plain(B.SPLIT), 4)
        self.assertTrue(any(is_isomorphic(g, c4) for g in found))

    def test_inclusion_has_none(self):
        self.assertEqual(find_separators(plain(B.THRESHOLD), plain(B.CIS), 6), [])


if __name__ == '__main__':
    unittest.main()
