"""
Таблица включений между 17 самодополнительными свойствами, её перепроверка
и полный перебор малых графов с проверкой стрелок диаграммы Хассе.
"""

from __future__ import annotations

import csv
import io
import json
import logging
import multiprocessing as mp
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

import networkx as nx

from .config import Limits
from .core import Graph, encode_graph6, is_isomorphic, parse_graph6, to_networkx
from .enumeration import maximal_cliques_big
from .errors import InternalVerificationError, UndecidedError, UnsupportedSizeError
from .gallery import GalleryId, gallery, l_graph_structure
from .properties import (
    BaseProperty,
    Evaluator,
    Modifier,
    PropertyId,
    all_properties,
    cap,
    cup,
    plain,
)
from .recognizers import check_split_characterization, has_bad_p4, is_co_triangle_big, is_edge_simplicial_big

logger = logging.getLogger(__name__)

SCHEMA = "cisgraphs/1"

B = BaseProperty

# Столбцы (и строки) таблицы в печатном порядке.
TABLE_PROPERTIES: Tuple[Tuple[str, PropertyId], ...] = (
    ("aCIS", plain(B.ALMOST_CIS)),
    ("∩-es", cap(B.EDGE_SIMPLICIAL)),
    ("split", plain(B.SPLIT)),
    ("CIS", plain(B.CIS)),
    ("qCIS", plain(B.QUASI_CIS)),
    ("∩-swCIS", cap(B.SEMI_WEAKLY_CIS)),
    ("wCIS", plain(B.WEAKLY_CIS)),
    ("∩-seq", cap(B.STRONGLY_EQUISTABLE)),
    ("∩-eq", cap(B.EQUISTABLE)),
    ("∩-△", cap(B.TRIANGLE)),
    ("∩-w△", cap(B.WEAKLY_TRIANGLE)),
    ("∪-es", cup(B.EDGE_SIMPLICIAL)),
    ("∪-swCIS", cup(B.SEMI_WEAKLY_CIS)),
    ("∪-seq", cup(B.STRONGLY_EQUISTABLE)),
    ("∪-eq", cup(B.EQUISTABLE)),
    ("∪-△", cup(B.TRIANGLE)),
    ("∪-w△", cup(B.WEAKLY_TRIANGLE)),
)

LABELS: Dict[PropertyId, str] = {pid: label for label, pid in TABLE_PROPERTIES}

# Строки таблицы как есть: "=" диагональ, "⊆" включение, "?" неизвестно, иначе разделяющий граф.
TABLE_TEXT = """
aCIS     = P4 ⊆ P4 ⊆ P4 P4 P4 P4 P4 P4 P4 P4 P4 P4 P4 P4
∩-es     K1 = ⊆ F ⊆ ⊆ ⊆ ⊆ ⊆ ⊆ ⊆ ⊆ ⊆ ⊆ ⊆ ⊆ ⊆
split    K1 P4 = P4 ⊆ P4 P4 P4 P4 P4 P4 P4 P4 P4 P4 P4 P4
CIS      K1 C4 C4 = ⊆ ⊆ ⊆ ⊆ ⊆ ⊆ ⊆ CK ⊆ ⊆ ⊆ ⊆ ⊆
qCIS     K1 C4 C4 P4 = P4 P4 P4 P4 P4 P4 P4 P4 P4 P4 P4 P4
∩-swCIS  K1 C4 C4 F FK = ⊆ ⊆ ⊆ ⊆ ⊆ CK ⊆ ⊆ ⊆ ⊆ ⊆
wCIS     K1 C4 C4 F G12 G12 = G12 G12 G12 ⊆ L(K3,3) G12 G12 G12 G12 ⊆
∩-seq    K1 C4 C4 F FL G12 ? = ⊆ ⊆ ⊆ L(K3,3) ? ⊆ ⊆ ⊆ ⊆
∩-eq     K1 C4 C4 F FL G12 ? ? = ⊆ ⊆ L(K3,3) ? ? ⊆ ⊆ ⊆
∩-△      K1 C4 C4 F FL LLbar ? LLbar LLbar = ⊆ L(K3,3) LLbar LLbar LLbar ⊆ ⊆
∩-w△     K1 C4 C4 F FL LLbar ? LLbar LLbar G12 = L(K3,3) LLbar LLbar LLbar G12 ⊆
∪-es     K1 C4 C4 S3 SK S3 ⊆ S3 S3 S3 ⊆ = ⊆ ⊆ ⊆ ⊆ ⊆
∪-swCIS  K1 C4 C4 S3 SK S3 ⊆ S3 S3 S3 ⊆ L(K3,3) = ⊆ ⊆ ⊆ ⊆
∪-seq    K1 C4 C4 S3 SK S3 ? S3 S3 S3 ? L(K3,3) G22 = ⊆ ⊆ ⊆
∪-eq     K1 C4 C4 S3 SK S3 ? S3 S3 S3 ? L(K3,3) G22 G14 = ⊆ ⊆
∪-△      K1 C4 C4 S3 SK S3 Cir9 S3 S3 S3 Cir9 L(K3,3) Cir9 Cir9 Cir9 = ⊆
∪-w△     K1 C4 C4 S3 SK S3 Cir9 S3 S3 S3 Cir9 L(K3,3) Cir9 Cir9 Cir9 G12 =
"""

WITNESSES: Dict[str, GalleryId] = {
    "K1": GalleryId.K1,
    "P4": GalleryId.P4,
    "C4": GalleryId.C4,
    "F": GalleryId.F,
    "FK": GalleryId.FK,
    "CK": GalleryId.CK,
    "S3": GalleryId.S3,
    "SK": GalleryId.SK,
    "G12": GalleryId.G12,
    "Cir9": GalleryId.CIR9,
    "L(K3,3)": GalleryId.LK33,
}

SKIPPED = {
    "FL": "граф FL не определён в списке разделяющих графов",
    "G14": "построение G14 недоступно (граф G* задан только рисунком)",
    "G22": "22 вершины: вне предела точной LP-проверки",
}

DECOMPOSED = "LLbar"

# Ячейки, где напечатанный свидетель противоречит доказанному: G12 не треугольный,
# значит не ∩-равностабильный; в тексте отношение для этих пар названо открытым.
ERRATA = {("∩-seq", "∩-swCIS"), ("∩-eq", "∩-swCIS")}

EQUAL, SUBSET, UNKNOWN, SKIP, PASS, FAIL, DECOMPOSED_STATUS, ERRATUM = (
    "equal", "subset", "unknown", "skipped", "pass", "fail", "decomposed", "erratum",
)


@dataclass
class Cell:
    row: PropertyId
    column: PropertyId
    entry: str
    status: str
    row_holds: Optional[bool] = None
    column_holds: Optional[bool] = None
    reason: str = ""

    @property
    def label(self) -> str:
        return f"{LABELS[self.row]} / {LABELS[self.column]}"

    @property
    def witness(self) -> Optional[GalleryId]:
        return WITNESSES.get(self.entry)

    def to_json(self) -> Dict:
        data = {
            "row": LABELS[self.row],
            "column": LABELS[self.column],
            "entry": self.entry,
            "status": self.status,
        }
        if self.row_holds is not None:
            data["row_holds"] = self.row_holds
            data["column_holds"] = self.column_holds
        if self.reason:
            data["reason"] = self.reason
        return data


def relation_table() -> List[List[Cell]]:
    """Разбирает TABLE_TEXT в матрицу ячеек 17x17 (статусы до проверки)."""
    labels = [label for label, _ in TABLE_PROPERTIES]
    rows = []
    for line in TABLE_TEXT.strip().splitlines():
        tokens = line.split()
        label, entries = tokens[0], tokens[1:]
        if label not in LABELS.values() or len(entries) != len(labels):
            raise ValueError(f"повреждена строка таблицы: {line}")
        row_pid = TABLE_PROPERTIES[labels.index(label)][1]
        cells = []
        for (col_label, col_pid), entry in zip(TABLE_PROPERTIES, entries):
            if entry == "=":
                status = EQUAL
            elif entry == "⊆":
                status = SUBSET
            elif entry == "?":
                status = UNKNOWN
            elif entry in SKIPPED:
                status = SKIP
            elif entry == DECOMPOSED:
                status = DECOMPOSED_STATUS
            elif entry in WITNESSES:
                status = PASS
            else:
                raise ValueError(f"неизвестная запись таблицы: {entry}")
            cells.append(Cell(row_pid, col_pid, entry, status))
        rows.append(cells)
    return rows


# --- Разложенные проверки для LLbar ---

@dataclass(frozen=True)
class DecomposedCheck:
    name: str
    holds: bool


def llbar_checks() -> List[DecomposedCheck]:
    """
    L рёберно симплициальный и ко-треугольный (отсюда LLbar ∩-треугольный);
    в L есть 6 непересекающихся максимальных 5-клик и 5 непересекающихся
    максимальных 6-клик, каждая пачка покрывает образ L(K5,6) (отсюда LLbar не ∪-равностабильный).
    """
    structure = l_graph_structure()
    graph = structure.graph
    maximal = set(maximal_cliques_big(graph))
    core = frozenset(structure.core)

    def partitions(family: Sequence[frozenset], size: int, count: int) -> bool:
        union = frozenset().union(*family)
        return (len(family) == count and all(len(c) == size and c in maximal for c in family)
                and sum(len(c) for c in family) == len(union) and union == core)

    return [
        DecomposedCheck("L рёберно симплициальный", is_edge_simplicial_big(graph)),
        DecomposedCheck("L ко-треугольный", is_co_triangle_big(graph)),
        DecomposedCheck("6 непересекающихся максимальных 5-клик покрывают ядро",
                        partitions(structure.five_cliques, 5, 6)),
        DecomposedCheck("5 непересекающихся максимальных 6-клик покрывают ядро",
                        partitions(structure.six_cliques, 6, 5)),
    ]


@dataclass
class TableReport:
    cells: List[List[Cell]]
    llbar: List[DecomposedCheck] = field(default_factory=list)

    def flat(self) -> Iterator[Cell]:
        for row in self.cells:
            yield from row

    @property
    def failures(self) -> List[Cell]:
        return [c for c in self.flat() if c.status == FAIL]

    @property
    def ok(self) -> bool:
        return not self.failures

    def counts(self) -> Dict[str, int]:
        result: Dict[str, int] = defaultdict(int)
        for cell in self.flat():
            result[cell.status] += 1
        return dict(result)


def verify_table(limits: Optional[Limits] = None, include_llbar: bool = True) -> TableReport:
    """Для каждой ячейки со свидетелем из галереи проверяет X(w) и не Y(w)."""
    cells = relation_table()
    evaluators: Dict[GalleryId, Evaluator] = {}
    llbar = llbar_checks() if include_llbar else []
    llbar_ok = bool(llbar) and all(check.holds for check in llbar)
    for cell in (c for row in cells for c in row):
        if cell.status == SKIP:
            cell.reason = SKIPPED[cell.entry]
            logger.warning("%s: пропущено (%s)", cell.label, cell.reason)
        elif cell.status == DECOMPOSED_STATUS:
            if not include_llbar:
                cell.reason = "разложенные проверки LLbar отключены"
            elif not llbar_ok:
                cell.status = FAIL
                cell.reason = "разложенные проверки LLbar не прошли"
        elif cell.status == PASS:
            gid = cell.witness
            if gid not in evaluators:
                evaluators[gid] = Evaluator(gallery(gid), limits)
            evaluate = evaluators[gid]
            cell.row_holds = evaluate(cell.row).holds
            cell.column_holds = evaluate(cell.column).holds
            passed = cell.row_holds and not cell.column_holds
            if (LABELS[cell.row], LABELS[cell.column]) in ERRATA:
                cell.status = ERRATUM
                cell.reason = "напечатанный свидетель противоречит доказанному; отношение открыто"
            elif not passed:
                cell.status = FAIL
            logger.debug("%s: %s (%s, %s)", cell.label, cell.status, cell.row_holds, cell.column_holds)
    return TableReport(cells, llbar)


def subset_cells() -> List[Tuple[PropertyId, PropertyId]]:
    return [(c.row, c.column) for row in relation_table() for c in row if c.status == SUBSET]


def unknown_cells() -> List[Tuple[PropertyId, PropertyId]]:
    return [(c.row, c.column) for row in relation_table() for c in row if c.status == UNKNOWN]


# --- Стрелки диаграммы Хассе ---

ARROWS: Tuple[Tuple[PropertyId, PropertyId], ...] = (
    (plain(B.THRESHOLD), plain(B.COGRAPH)),
    (plain(B.THRESHOLD), plain(B.SPLIT)),
    (plain(B.THRESHOLD), cap(B.EDGE_SIMPLICIAL)),
    (plain(B.COGRAPH), plain(B.CIS)),
    (plain(B.ALMOST_CIS), plain(B.SPLIT)),
    (plain(B.SPLIT), plain(B.QUASI_CIS)),
    (plain(B.CIS), plain(B.QUASI_CIS)),
    (plain(B.EDGE_SIMPLICIAL), plain(B.SEMI_WEAKLY_CIS)),
    (plain(B.CIS), plain(B.SEMI_WEAKLY_CIS)),
    (plain(B.SEMI_WEAKLY_CIS), plain(B.STRONGLY_EQUISTABLE)),
    (plain(B.STRONGLY_EQUISTABLE), plain(B.EQUISTABLE)),
    (plain(B.EQUISTABLE), plain(B.TRIANGLE)),
    (plain(B.TRIANGLE), plain(B.WEAKLY_TRIANGLE)),
    (plain(B.CIS), plain(B.WEAKLY_CIS)),
    (plain(B.WEAKLY_CIS), plain(B.NORMAL)),
    (plain(B.WEAKLY_CIS), cap(B.WEAKLY_TRIANGLE)),
    (plain(B.PERFECT), plain(B.NORMAL)),
)


def arrow_name(x: PropertyId, y: PropertyId) -> str:
    return f"{x.key} => {y.key}"


@dataclass
class ArrowResult:
    checked: int = 0
    passed: int = 0
    counterexamples: List[str] = field(default_factory=list)

    @property
    def failed(self) -> int:
        return self.checked - self.passed


@dataclass
class GraphRecord:
    graph6: str
    n: int
    verdicts: Dict[str, Optional[bool]]
    bad_p4: bool
    split_ok: bool
    complement_failures: List[str]
    undecided: List[str] = field(default_factory=list)


@dataclass
class ScanReport:
    max_n: int
    counts: Dict[int, int] = field(default_factory=dict)
    arrows: Dict[str, ArrowResult] = field(default_factory=dict)
    split_failures: List[str] = field(default_factory=list)
    bad_p4_failures: List[str] = field(default_factory=list)
    complement_failures: List[str] = field(default_factory=list)
    open_candidates: Dict[str, List[str]] = field(default_factory=dict)
    undecided: List[str] = field(default_factory=list)
    records: List[GraphRecord] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (all(a.failed == 0 for a in self.arrows.values()) and not self.split_failures
                and not self.bad_p4_failures and not self.complement_failures)

    def to_json(self) -> Dict:
        return {
            "schema": SCHEMA,
            "command": "scan",
            "max_n": self.max_n,
            "counts": {str(n): c for n, c in sorted(self.counts.items())},
            "ok": self.ok,
            "arrows": {
                name: {"checked": a.checked, "passed": a.passed, "counterexamples": a.counterexamples}
                for name, a in self.arrows.items()
            },
            "split_failures": self.split_failures,
            "bad_p4_failures": self.bad_p4_failures,
            "complement_failures": self.complement_failures,
            "open_candidates": self.open_candidates,
            "undecided": self.undecided,
        }


# --- Генерация графов ---

def _bucket_key(g: Graph) -> Tuple:
    return g.n, g.edge_count(), tuple(g.degree_sequence()), nx.weisfeiler_lehman_graph_hash(to_networkx(g))


def _extensions(g: Graph) -> Iterator[Graph]:
    edges = g.edges()
    for neighbours in range(1 << g.n):
        new = [(v, g.n) for v in range(g.n) if neighbours >> v & 1]
        yield Graph.from_edges(g.n + 1, edges + new)


def generate_graphs(max_n: int) -> Iterator[Graph]:
    """
    Все графы на 1..max_n вершинах с точностью до изоморфизма: каждый граф на
    n+1 вершинах получается добавлением вершины к графу на n вершинах.
    """
    if max_n < 1:
        return
    level = [Graph.empty(1)]
    yield from level
    for _ in range(max_n - 1):
        buckets: Dict[Tuple, List[Graph]] = defaultdict(list)
        following: List[Graph] = []
        for g in level:
            for candidate in _extensions(g):
                bucket = buckets[_bucket_key(candidate)]
                if any(is_isomorphic(candidate, other) for other in bucket):
                    continue
                bucket.append(candidate)
                following.append(candidate)
        logger.info("n=%d: %d графов", following[0].n, len(following))
        yield from following
        level = following


def _scan_properties(properties: Optional[Iterable[PropertyId]], include_lp: bool) -> List[PropertyId]:
    if properties is not None:
        selected = list(properties)
    else:
        selected = [p for p in all_properties(include_lp) if p.modifier == Modifier.PLAIN]
        selected += [pid for _, pid in TABLE_PROPERTIES]
        selected += [y for _, y in ARROWS]
    if not include_lp:
        selected = [p for p in selected if not p.needs_lp]
    return list(dict.fromkeys(selected))


def _holds(evaluate: Evaluator, pid: PropertyId) -> Optional[bool]:
    """Вердикт свойства или None, если поиск не уложился в лимиты."""
    try:
        return evaluate(pid).holds
    except (UndecidedError, UnsupportedSizeError) as exc:
        logger.warning("%s: %s не решено: %s", encode_graph6(evaluate.graph), pid.key, exc)
        return None


def _scan_graph(args: Tuple[Graph, Tuple[PropertyId, ...], Optional[Limits]]) -> GraphRecord:
    g, props, limits = args
    evaluate = Evaluator(g, limits)
    verdicts = {pid.key: _holds(evaluate, pid) for pid in props}
    try:
        check_split_characterization(g, limits)
        split_ok = True
    except InternalVerificationError as exc:
        logger.error("%s: %s", encode_graph6(g), exc)
        split_ok = False
    complement_failures = []
    for label, pid in TABLE_PROPERTIES:
        if pid.modifier == Modifier.PLAIN and pid in props:
            own = verdicts[pid.key]
            other = _holds(evaluate, pid.co())
            if own is not None and other is not None and own != other:
                complement_failures.append(label)
    undecided = [key for key, value in verdicts.items() if value is None]
    return GraphRecord(encode_graph6(g), g.n, verdicts, has_bad_p4(g, limits).holds,
                       split_ok, complement_failures, undecided)


def scan(
    max_n: int = 6,
    properties: Optional[Iterable[PropertyId]] = None,
    include_lp: Optional[bool] = None,
    graphs: Optional[Iterable[Graph]] = None,
    jobs: int = 1,
    limits: Optional[Limits] = None,
) -> ScanReport:
    """
    Перебирает все графы до max_n вершин (или поток graphs), вычисляет свойства
    и проверяет стрелки, включения таблицы, характеризацию расщеплённых графов,
    отсутствие плохого P4 у равностабильных и самодополнительность.

    Args:
        max_n: наибольшее число вершин (не больше 7 для встроенной генерации)
        properties: подмножество свойств; по умолчанию все нужные для проверок
        include_lp: вычислять LP-свойства; по умолчанию только при max_n <= 6
        graphs: готовый поток графов (например, из файла graph6) вместо генерации
        jobs: число процессов
    """
    if include_lp is None:
        include_lp = max_n <= 6
    if graphs is None and max_n > 7:
        raise ValueError("встроенная генерация ограничена n <= 7; передайте поток graph6")
    props = tuple(_scan_properties(properties, include_lp))
    source = graphs if graphs is not None else generate_graphs(max_n)
    tasks = ((g, props, limits) for g in source if g.n <= max_n)
    if jobs > 1:
        with mp.Pool(jobs) as pool:
            records = list(pool.imap(_scan_graph, tasks, chunksize=8))
    else:
        records = [_scan_graph(task) for task in tasks]

    report = ScanReport(max_n, records=records)
    keys = {pid.key for pid in props}
    checks = [(x, y) for x, y in ARROWS + tuple(subset_cells()) if x.key in keys and y.key in keys]
    for x, y in checks:
        report.arrows.setdefault(arrow_name(x, y), ArrowResult())
    equistable_key = plain(B.EQUISTABLE).key
    for record in records:
        report.counts[record.n] = report.counts.get(record.n, 0) + 1
        for x, y in checks:
            result = report.arrows[arrow_name(x, y)]
            if not record.verdicts[x.key] or record.verdicts[y.key] is None:
                continue
            result.checked += 1
            if record.verdicts[y.key]:
                result.passed += 1
            else:
                result.counterexamples.append(record.graph6)
                logger.error("стрелка %s нарушена на %s", arrow_name(x, y), record.graph6)
        if not record.split_ok:
            report.split_failures.append(record.graph6)
        if record.verdicts.get(equistable_key) and record.bad_p4:
            report.bad_p4_failures.append(record.graph6)
        for label in record.complement_failures:
            report.complement_failures.append(f"{label}: {record.graph6}")
        for key in record.undecided:
            report.undecided.append(f"{key}: {record.graph6}")
    for x, y in unknown_cells():
        if x.key in keys and y.key in keys:
            found = [r.graph6 for r in records if r.verdicts[x.key] and r.verdicts[y.key] is False]
            if found:
                name = f"{LABELS[x]} / {LABELS[y]}"
                logger.info("кандидат в разделяющие графы для открытого вопроса %s: %s", name, found[:5])
                report.open_candidates[name] = found
    return report


def find_separators(
    x: PropertyId,
    y: PropertyId,
    max_n: int,
    report: Optional[ScanReport] = None,
    limits: Optional[Limits] = None,
) -> List[Graph]:
    """Все просмотренные графы из X без Y; пустой список не доказательство включения."""
    if report is None:
        report = scan(max_n, properties=[x, y], include_lp=x.needs_lp or y.needs_lp, limits=limits)
    return [parse_graph6(r.graph6) for r in report.records
            if r.n <= max_n and r.verdicts.get(x.key) and r.verdicts.get(y.key) is False]


# --- Вывод ---

def _cell_text(cell: Cell) -> str:
    if cell.status in (EQUAL, SUBSET, UNKNOWN):
        return cell.entry
    return f"{cell.entry}:{cell.status}"


def table_to_json(report: TableReport) -> Dict:
    return {
        "schema": SCHEMA,
        "command": "table",
        "ok": report.ok,
        "columns": [label for label, _ in TABLE_PROPERTIES],
        "counts": report.counts(),
        "cells": [cell.to_json() for cell in report.flat()],
        "llbar": [{"check": c.name, "holds": c.holds} for c in report.llbar],
    }


def table_to_csv(report: TableReport) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["X \\ Y"] + [label for label, _ in TABLE_PROPERTIES])
    for row in report.cells:
        writer.writerow([LABELS[row[0].row]] + [_cell_text(c) for c in row])
    return buffer.getvalue()


def table_to_text(report: TableReport) -> str:
    header = ["X \\ Y"] + [label for label, _ in TABLE_PROPERTIES]
    body = [[LABELS[row[0].row]] + [_cell_text(c) for c in row] for row in report.cells]
    widths = [max(len(r[i]) for r in [header] + body) for i in range(len(header))]
    lines = ["  ".join(v.ljust(w) for v, w in zip(r, widths)).rstrip() for r in [header] + body]
    lines.append("")
    lines.append(", ".join(f"{k}: {v}" for k, v in sorted(report.counts().items())))
    for check in report.llbar:
        lines.append(f"LLbar: {check.name}: {'да' if check.holds else 'НЕТ'}")
    for cell in report.flat():
        if cell.status in (FAIL, ERRATUM):
            lines.append(f"{cell.label}: {cell.status} ({cell.entry}: X={cell.row_holds}, Y={cell.column_holds})")
    return "\n".join(lines)


def scan_to_csv(report: ScanReport) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["arrow", "checked", "passed", "counterexamples"])
    for name, result in report.arrows.items():
        writer.writerow([name, result.checked, result.passed, " ".join(result.counterexamples)])
    return buffer.getvalue()


def scan_to_text(report: ScanReport) -> str:
    lines = ["графов: " + ", ".join(f"n={n}: {c}" for n, c in sorted(report.counts.items()))]
    for name, result in report.arrows.items():
        mark = "ok" if result.failed == 0 else f"НАРУШЕНО {result.failed}"
        lines.append(f"{name}: {result.passed}/{result.checked} {mark}")
    lines.append(f"характеризация split: {'ok' if not report.split_failures else report.split_failures}")
    lines.append(f"равностабильный => нет плохого P4: {'ok' if not report.bad_p4_failures else report.bad_p4_failures}")
    lines.append(f"самодополнительность: {'ok' if not report.complement_failures else report.complement_failures}")
    if report.undecided:
        lines.append(f"не решено в пределах лимитов: {len(report.undecided)}, например {report.undecided[0]}")
    for name, found in report.open_candidates.items():
        lines.append(f"открытый вопрос {name}: {len(found)} кандидатов, например {found[0]}")
    return "\n".join(lines)


def dumps(data: Dict) -> str:
    return json.dumps(data, ensure_ascii=False, indent=2, sort_keys=False)
