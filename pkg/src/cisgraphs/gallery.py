"""Галерея именованных разделяющих графов с фиксированной нумерацией вершин."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Sequence, Tuple

import networkx as nx

from .core import (
    Graph,
    complement,
    disjoint_union,
    from_networkx,
    to_networkx,
)
from .errors import GraphSizeError
from .linegraph import line_graph


class GalleryId(str, Enum):
    K1 = "K1"
    P4 = "P4"
    C4 = "C4"
    TWO_K2 = "TwoK2"
    BULL = "Bull"
    NET = "Net"
    S3 = "S3"
    SK = "SK"
    CK = "CK"
    C5_STAR = "C5Star"
    C9 = "C9"
    CIR9 = "Cir9"
    F = "F"
    FK = "FK"
    G12 = "G12"
    LK33 = "LK33"
    L = "L"
    LLBAR = "LLbar"

    @classmethod
    def parse(cls, name: str) -> "GalleryId":
        for member in cls:
            if member.value.lower() == name.lower():
                return member
        known = ", ".join(m.value for m in cls)
        raise KeyError(f"неизвестный граф галереи '{name}' (есть: {known})")


DESCRIPTIONS: Dict[GalleryId, str] = {
    GalleryId.K1: "одна вершина",
    GalleryId.P4: "путь a-b-c-d (0-1-2-3)",
    GalleryId.C4: "цикл 0-1-2-3-0",
    GalleryId.TWO_K2: "2K2: рёбра 01 и 23",
    GalleryId.BULL: "бык: a..e = 0..4, рёбра ab, bc, cd, be, ce",
    GalleryId.NET: "сеть: клика x1..x3 = 0..2, висячие y_i = 3+i при x_i",
    GalleryId.S3: "3-солнце: клика v1..v3 = 0..2, v12, v13, v23 = 3, 4, 5",
    GalleryId.SK: "S3 + K2 (K2 на вершинах 6, 7)",
    GalleryId.CK: "C4 + K2 (K2 на вершинах 4, 5)",
    GalleryId.C5_STAR: "C5 на 0..4, вершина 5+i смежна i и i+1",
    GalleryId.C9: "цикл на 9 вершинах",
    GalleryId.CIR9: "9-вершинный круговой граф, задан максимальными независимыми множествами",
    GalleryId.F: "граф инцидентности плоскости Фано: точки 0..6 (клика), прямые 7..13",
    GalleryId.FK: "F + K2 (K2 на вершинах 14, 15)",
    GalleryId.G12: "12-вершинный граф, задан списком максимальных клик (метки 1..12 -> 0..11)",
    GalleryId.LK33: "рёберный граф K3,3",
    GalleryId.L: "L(K5,6) с треугольником, приклеенным к каждому ребру (165 вершин)",
    GalleryId.LLBAR: "L + дополнение L (330 вершин)",
}

# Прямые плоскости Фано, точки 0..6.
FANO_LINES: Tuple[Tuple[int, ...], ...] = (
    (0, 1, 2),
    (0, 3, 4),
    (0, 5, 6),
    (1, 3, 5),
    (1, 4, 6),
    (2, 3, 6),
    (2, 4, 5),
)

# Максимальные клики и независимые множества G12, метки 1..12.
G12_CLIQUES: Tuple[Tuple[int, ...], ...] = (
    (1, 4, 7), (2, 4, 5, 6), (2, 4, 6, 7), (2, 4, 6, 9), (2, 4, 9, 12), (2, 5, 8),
    (2, 6, 7, 11), (2, 11, 12), (3, 6, 9), (4, 5, 6, 10), (4, 10, 12), (6, 10, 11),
    (10, 11, 12),
)
G12_STABLE_SETS: Tuple[Tuple[int, ...], ...] = (
    (1, 2, 3, 10), (1, 3, 5, 11), (1, 3, 5, 12), (1, 3, 8, 10), (1, 3, 8, 11),
    (1, 3, 8, 12), (1, 5, 9, 11), (1, 6, 8, 12), (1, 8, 9, 10), (1, 8, 9, 11),
    (3, 4, 8, 11), (3, 5, 7, 12), (3, 7, 8, 10), (3, 7, 8, 12), (5, 7, 9), (7, 8, 9, 10),
)
# Покрывающие подсемейства, на которых держится слабое CIS-свойство G12.
G12_COVER_CLIQUES: Tuple[Tuple[int, ...], ...] = (
    (1, 4, 7), (2, 4, 9, 12), (2, 5, 8), (2, 6, 7, 11), (3, 6, 9), (4, 5, 6, 10), (10, 11, 12),
)
G12_COVER_STABLE_SETS: Tuple[Tuple[int, ...], ...] = (
    (1, 2, 3, 10), (1, 5, 9, 11), (1, 6, 8, 12), (3, 4, 8, 11), (3, 5, 7, 12), (7, 8, 9, 10),
)

# Максимальные независимые множества Cir9, метки 1..9.
CIR9_STABLE_SETS: Tuple[Tuple[int, ...], ...] = (
    (1, 2, 3), (4, 5, 6), (7, 8, 9), (1, 4, 7), (3, 6, 9),
)


def _graph_from_cliques(n: int, cliques: Sequence[Sequence[int]], shift: int = 1) -> Graph:
    edges = set()
    for clique in cliques:
        for u, v in itertools.combinations(clique, 2):
            edges.add((min(u, v) - shift, max(u, v) - shift))
    return Graph.from_edges(n, sorted(edges))


def _graph_from_stable_sets(n: int, stable_sets: Sequence[Sequence[int]], shift: int = 1) -> Graph:
    return complement(_graph_from_cliques(n, stable_sets, shift))


def _path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def _cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def _s3() -> Graph:
    return Graph.from_edges(6, [(0, 1), (0, 2), (1, 2), (3, 0), (3, 1), (4, 0), (4, 2), (5, 1), (5, 2)])


def _net() -> Graph:
    return Graph.from_edges(6, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 5)])


def _fano() -> Graph:
    edges = list(itertools.combinations(range(7), 2))
    for index, line in enumerate(FANO_LINES):
        edges.extend((p, 7 + index) for p in line)
    return Graph.from_edges(14, edges)


def _c5_star() -> Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    for i in range(5):
        edges.extend([(5 + i, i), (5 + i, (i + 1) % 5)])
    return Graph.from_edges(10, edges)


def _k33_line_graph() -> Graph:
    return line_graph(from_networkx(nx.complete_bipartite_graph(3, 3)))


def gallery(gid) -> Graph:
    """
    Возвращает именованный граф галереи.

    Args:
        gid: GalleryId или его строковое имя

    Returns:
        Graph; для L и LLbar (больше 64 вершин) используйте gallery_big
    """
    gid = gid if isinstance(gid, GalleryId) else GalleryId.parse(gid)
    if gid in (GalleryId.L, GalleryId.LLBAR):
        raise GraphSizeError(f"{gid.value} больше 64 вершин, используйте gallery_big")
    k2 = Graph.complete(2)
    builders = {
        GalleryId.K1: lambda: Graph.empty(1),
        GalleryId.P4: lambda: _path(4),
        GalleryId.C4: lambda: _cycle(4),
        GalleryId.TWO_K2: lambda: Graph.from_edges(4, [(0, 1), (2, 3)]),
        GalleryId.BULL: lambda: Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (1, 4), (2, 4)]),
        GalleryId.NET: _net,
        GalleryId.S3: _s3,
        GalleryId.SK: lambda: disjoint_union(_s3(), k2),
        GalleryId.CK: lambda: disjoint_union(_cycle(4), k2),
        GalleryId.C5_STAR: _c5_star,
        GalleryId.C9: lambda: _cycle(9),
        GalleryId.CIR9: lambda: _graph_from_stable_sets(9, CIR9_STABLE_SETS),
        GalleryId.F: _fano,
        GalleryId.FK: lambda: disjoint_union(_fano(), k2),
        GalleryId.G12: lambda: _graph_from_cliques(12, G12_CLIQUES),
        GalleryId.LK33: _k33_line_graph,
    }
    return builders[gid]()


@dataclass(frozen=True)
class LStructure:
    """Граф L и разметка его частей."""

    graph: nx.Graph
    core: Tuple[int, ...]
    apexes: Tuple[int, ...]
    six_cliques: Tuple[frozenset, ...]
    five_cliques: Tuple[frozenset, ...]


def l_graph_structure() -> LStructure:
    """
    Строит L: рёберный граф K5,6 (вершины 0..29) и по новой вершине треугольника
    30..164 на каждое его ребро.
    """
    root = nx.complete_bipartite_graph(5, 6)
    root_edges = sorted(tuple(sorted(e)) for e in root.edges())
    index = {e: i for i, e in enumerate(root_edges)}
    graph = nx.Graph()
    graph.add_nodes_from(range(len(root_edges)))
    core_edges = []
    for e, f in itertools.combinations(root_edges, 2):
        if set(e) & set(f):
            core_edges.append((index[e], index[f]))
    graph.add_edges_from(core_edges)
    apexes = []
    for offset, (u, v) in enumerate(sorted(core_edges)):
        apex = len(root_edges) + offset
        graph.add_edge(apex, u)
        graph.add_edge(apex, v)
        apexes.append(apex)
    six = tuple(frozenset(index[e] for e in root_edges if a in e) for a in range(5))
    five = tuple(frozenset(index[e] for e in root_edges if b in e) for b in range(5, 11))
    return LStructure(graph, tuple(range(len(root_edges))), tuple(apexes), six, five)


def gallery_big(gid) -> nx.Graph:
    """Любой граф галереи в виде networkx.Graph (единственный путь к L и LLbar)."""
    gid = gid if isinstance(gid, GalleryId) else GalleryId.parse(gid)
    if gid == GalleryId.L:
        return l_graph_structure().graph
    if gid == GalleryId.LLBAR:
        graph = l_graph_structure().graph
        return nx.disjoint_union(graph, nx.complement(graph))
    return to_networkx(gallery(gid))


def gallery_ids(include_big: bool = True) -> List[GalleryId]:
    return [g for g in GalleryId if include_big or g not in (GalleryId.L, GalleryId.LLBAR)]
