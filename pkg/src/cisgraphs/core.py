"""Core структуры: граф на битовых масках, кодеки и базовые операции."""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import Iterable, Iterator, List, NamedTuple, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from .errors import Graph6Error, GraphFormatError, GraphSizeError

logger = logging.getLogger(__name__)

MAX_VERTICES = 64
GRAPH6_HEADER = ">>graph6<<"


def bits_of(mask: int) -> Iterator[int]:
    """Перебирает вершины множества (битовой маски) по возрастанию."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    """Собирает битовую маску из номеров вершин."""
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def popcount(mask: int) -> int:
    return mask.bit_count()


def format_set(mask: int, one_based: bool = False) -> List[int]:
    """Маска -> отсортированный список вершин (для отчётов и JSON)."""
    shift = 1 if one_based else 0
    return [v + shift for v in bits_of(mask)]


@dataclass(frozen=True)
class Graph:
    """
    Простой неориентированный граф на 1..64 вершинах.

    Строка adj[i] - битовая маска соседей вершины i. Экземпляры неизменяемы
    и хешируемы, поэтому их можно использовать как ключи кэшей.
    """

    n: int
    adj: Tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_VERTICES:
            raise GraphSizeError(f"число вершин {self.n} вне диапазона 1..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise ValueError("длина adj не совпадает с числом вершин")
        for i, row in enumerate(self.adj):
            if row < 0 or row >> self.n:
                raise ValueError(f"строка {i} содержит вершины вне графа")
            if row >> i & 1:
                raise ValueError(f"петля в вершине {i}")
            for j in bits_of(row):
                if not self.adj[j] >> i & 1:
                    raise ValueError(f"несимметричная смежность {i}-{j}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        if not 1 <= n <= MAX_VERTICES:
            raise GraphSizeError(f"число вершин {n} вне диапазона 1..{MAX_VERTICES}")
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"петля в вершине {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"ребро {u}-{v} выходит за пределы графа")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, tuple(full & ~(1 << i) for i in range(n)))

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def closed_neighborhood(self, v: int) -> int:
        return self.adj[v] | (1 << v)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self) -> List[Tuple[int, int]]:
        """Рёбра (u, v), u < v, в лексикографическом порядке."""
        return [(u, v) for u in range(self.n) for v in bits_of(self.adj[u] >> (u + 1) << (u + 1))]

    def non_edges(self) -> List[Tuple[int, int]]:
        return [(u, v) for u, v in itertools.combinations(range(self.n), 2) if not self.has_edge(u, v)]

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def is_clique(self, mask: int) -> bool:
        return all(not (mask & ~self.adj[v] & ~(1 << v)) for v in bits_of(mask))

    def is_stable(self, mask: int) -> bool:
        return all(not (self.adj[v] & mask) for v in bits_of(mask))

    def degree_sequence(self) -> Tuple[int, ...]:
        return tuple(sorted((row.bit_count() for row in self.adj), reverse=True))


def complement(g: Graph) -> Graph:
    full = g.full
    return Graph(g.n, tuple(full & ~row & ~(1 << i) for i, row in enumerate(g.adj)))


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """Дизъюнктное объединение: вершины g2 нумеруются после вершин g1."""
    if g1.n + g2.n > MAX_VERTICES:
        raise GraphSizeError(f"объединение на {g1.n + g2.n} вершинах не помещается в 64 бита")
    return Graph(g1.n + g2.n, g1.adj + tuple(row << g1.n for row in g2.adj))


def join(g1: Graph, g2: Graph) -> Graph:
    """Соединение: объединение плюс все рёбра между частями."""
    if g1.n + g2.n > MAX_VERTICES:
        raise GraphSizeError(f"соединение на {g1.n + g2.n} вершинах не помещается в 64 бита")
    left = g1.full
    right = g2.full << g1.n
    rows = tuple(row | right for row in g1.adj) + tuple((row << g1.n) | left for row in g2.adj)
    return Graph(g1.n + g2.n, rows)


def induced_subgraph(g: Graph, mask: int) -> Graph:
    """Индуцированный подграф; вершины перенумеровываются по возрастанию."""
    keep = list(bits_of(mask))
    index = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        rows.append(mask_of(index[u] for u in bits_of(g.adj[v] & mask)))
    return Graph(len(keep), tuple(rows))


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Переименование: вершина i становится perm[i]."""
    return Graph.from_edges(g.n, ((perm[u], perm[v]) for u, v in g.edges()))


# --- Мост к networkx ---

def to_networkx(g: Graph) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(range(g.n))
    graph.add_edges_from(g.edges())
    return graph


def from_networkx(graph: nx.Graph, nodes: Optional[Sequence] = None) -> Graph:
    """networkx-граф -> Graph; порядок вершин задаётся nodes (по умолчанию порядок графа)."""
    order = list(graph.nodes()) if nodes is None else list(nodes)
    index = {v: i for i, v in enumerate(order)}
    return Graph.from_edges(len(order), ((index[u], index[v]) for u, v in graph.edges()))


# --- Кодеки ---

def parse_graph6(text: str) -> Graph:
    """
    Разбирает строку graph6 (стандартная раскладка бит).

    Args:
        text: строка graph6, допускается заголовок >>graph6<< и пробелы по краям

    Returns:
        Graph с закодированной смежностью
    """
    data = text.strip()
    if data.startswith(GRAPH6_HEADER):
        data = data[len(GRAPH6_HEADER):]
    if not data:
        raise Graph6Error("пустая строка graph6")
    try:
        raw = data.encode("ascii")
    except UnicodeEncodeError as exc:
        raise Graph6Error("graph6 допускает только ASCII") from exc
    if any(c < 63 or c > 126 for c in raw):
        raise Graph6Error("символы graph6 должны лежать в диапазоне 63..126")
    n = _graph6_order(raw)
    if n > MAX_VERTICES:
        raise GraphSizeError(f"graph6 описывает {n} вершин, поддерживается не более {MAX_VERTICES}")
    try:
        graph = nx.from_graph6_bytes(raw)
    except (nx.NetworkXError, ValueError, IndexError) as exc:
        raise Graph6Error(f"некорректная строка graph6: {exc}") from exc
    return from_networkx(graph, nodes=range(graph.number_of_nodes()))


def _graph6_order(raw: bytes) -> int:
    # N(n): один байт для n <= 62, иначе 126 + 3 байта (или 126 126 + 6 байт)
    if raw[0] != 126:
        return raw[0] - 63
    if len(raw) < 4:
        raise Graph6Error("обрезанный заголовок graph6")
    if raw[1] != 126:
        digits = raw[1:4]
    else:
        if len(raw) < 8:
            raise Graph6Error("обрезанный заголовок graph6")
        digits = raw[2:8]
    n = 0
    for c in digits:
        n = (n << 6) | (c - 63)
    return n


def encode_graph6(g: Graph) -> str:
    """Graph -> graph6 без заголовка и перевода строки."""
    return nx.to_graph6_bytes(to_networkx(g), nodes=range(g.n), header=False).decode("ascii").strip()


def parse_edge_list(text: str) -> Graph:
    """
    Разбирает список рёбер: строки "u v" (0-based), комментарии после #.

    Необязательная первая строка "n N" задаёт число вершин, иначе n = max + 1.
    """
    declared: Optional[int] = None
    edges: List[Tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "n" and len(parts) == 2 and declared is None and not edges:
            declared = _parse_int(parts[1], lineno)
            continue
        if len(parts) != 2:
            raise GraphFormatError(f"строка {lineno}: ожидалась пара 'u v'")
        u, v = _parse_int(parts[0], lineno), _parse_int(parts[1], lineno)
        if u < 0 or v < 0:
            raise GraphFormatError(f"строка {lineno}: отрицательный номер вершины")
        if u == v:
            raise GraphFormatError(f"строка {lineno}: петля {u}-{v}")
        edges.append((u, v))
    top = max((max(u, v) for u, v in edges), default=-1) + 1
    n = declared if declared is not None else top
    if n < top:
        raise GraphFormatError(f"объявлено {n} вершин, но встречается вершина {top - 1}")
    if n == 0:
        raise GraphFormatError("список рёбер пуст и число вершин не задано")
    return Graph.from_edges(n, edges)


def _parse_int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError as exc:
        raise GraphFormatError(f"строка {lineno}: '{token}' не является числом") from exc


def parse_graph_text(text: str) -> Graph:
    """Одна строка без пробелов - graph6, всё остальное - список рёбер."""
    lines = [line.strip() for line in text.splitlines() if line.strip() and not line.strip().startswith("#")]
    if len(lines) == 1 and len(lines[0].split()) == 1:
        return parse_graph6(lines[0])
    return parse_edge_list(text)


def parse_graph6_stream(text: str) -> Iterator[Graph]:
    """Поток graph6: по графу на строку (формат списков geng/showg)."""
    for line in text.splitlines():
        line = line.strip()
        if line:
            yield parse_graph6(line)


# --- Изоморфизм ---

def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    """Проверка изоморфизма: дешёвые инварианты, затем VF2 из networkx."""
    if g1.n != g2.n or g1.edge_count() != g2.edge_count():
        return False
    if g1.degree_sequence() != g2.degree_sequence():
        return False
    return nx.is_isomorphic(to_networkx(g1), to_networkx(g2))


# --- Конструкции расщепляемых графов ---

def random_split_cross(k: int, l: int, seed: int) -> np.ndarray:
    """Матрица k x l рёбер между C и S графа G_{k,l}: каждая ячейка 1 с вероятностью 1/2."""
    if k < 1 or l < 1:
        raise ValueError("k и l должны быть положительными")
    rng = np.random.default_rng(seed)
    return rng.integers(0, 2, size=(k, l), dtype=np.int64).astype(bool)


def random_split(k: int, l: int, seed: int) -> Graph:
    """
    Случайный расщепляемый граф G_{k,l}.

    Вершины 0..k-1 образуют клику C, вершины k..k+l-1 - независимое множество S,
    каждая пара (c, s) - ребро с вероятностью 1/2. Генератор - numpy PCG64,
    инициализированный seed; одинаковый seed даёт одинаковый граф.
    """
    if k + l > MAX_VERTICES:
        raise GraphSizeError(f"k + l = {k + l} больше {MAX_VERTICES}")
    cross = random_split_cross(k, l, seed)
    edges = list(itertools.combinations(range(k), 2))
    edges.extend((int(c), k + int(s)) for c, s in zip(*np.nonzero(cross)))
    return Graph.from_edges(k + l, edges)


class SplitLemmaCheck(NamedTuple):
    s_maximal_stable: bool
    c_maximal_clique: bool
    clique_pairs_have_common_neighbor: bool
    stable_pairs_have_common_non_neighbor: bool

    def all(self) -> bool:
        return all(self)


def split_lemma_check(cross: np.ndarray) -> SplitLemmaCheck:
    """
    Четыре свойства G_{k,l} по матрице cross (строки - C, столбцы - S); из них
    следует: ∩-рёберно симплициальный, но не CIS. Размер графа не ограничен.
    """
    a = cross.astype(np.int64)
    common = a @ a.T
    common_non = (1 - a).T @ (1 - a)
    off_c = ~np.eye(a.shape[0], dtype=bool)
    off_s = ~np.eye(a.shape[1], dtype=bool)
    return SplitLemmaCheck(
        s_maximal_stable=bool(cross.any(axis=1).all()),
        c_maximal_clique=bool((~cross).any(axis=0).all()),
        clique_pairs_have_common_neighbor=bool((common[off_c] > 0).all()),
        stable_pairs_have_common_non_neighbor=bool((common_non[off_s] > 0).all()),
    )


def random_split_properties(g: Graph, k: int, l: int) -> SplitLemmaCheck:
    cross = np.array([[g.has_edge(c, k + s) for s in range(l)] for c in range(k)], dtype=bool)
    return split_lemma_check(cross)


def _is_prime(q: int) -> bool:
    return q >= 2 and all(q % d for d in range(2, int(q ** 0.5) + 1))


def projective_points(q: int) -> np.ndarray:
    """Нормированные ненулевые векторы GF(q)^3: первая ненулевая координата равна 1."""
    points = [
        vec for vec in itertools.product(range(q), repeat=3)
        if any(vec) and next(c for c in vec if c) == 1
    ]
    return np.array(points, dtype=np.int64)


def projective_split(q: int) -> Graph:
    """
    Расщепляемый граф инцидентности проективной плоскости PG(2, q).

    Точки 0..m-1 образуют клику, прямые m..2m-1 - независимое множество
    (m = q^2 + q + 1); точка смежна прямой, если инцидентна ей.
    """
    if not _is_prime(q):
        raise ValueError(f"порядок {q} не простое число")
    m = q * q + q + 1
    if 2 * m > MAX_VERTICES:
        raise GraphSizeError(f"PG(2,{q}) даёт {2 * m} вершин, больше {MAX_VERTICES}")
    points = projective_points(q)
    incidence = (points @ points.T) % q == 0
    edges = list(itertools.combinations(range(m), 2))
    edges.extend((int(p), m + int(line)) for p, line in zip(*np.nonzero(incidence)))
    logger.debug("PG(2,%d): %d точек, %d инцидентностей", q, m, int(incidence.sum()))
    return Graph.from_edges(2 * m, edges)
