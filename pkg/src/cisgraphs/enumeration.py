"""Перечисление максимальных клик и независимых множеств, сильные и симплициальные клики."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, List, Optional, Tuple

import networkx as nx

from .config import DEFAULT_LIMITS, Limits
from .core import Graph, bits_of, complement
from .errors import FamilyCapExceeded, NotACliqueError

logger = logging.getLogger(__name__)

CLIQUE = "clique"
STABLE = "stable"


@dataclass(frozen=True)
class SetFamily:
    """
    Упорядоченное семейство множеств вершин (битовых масок) графа.

    sets отсортированы по возрастанию маски; kind - "clique" или "stable".
    """

    sets: Tuple[int, ...]
    kind: str
    graph: Graph

    def __iter__(self) -> Iterator[int]:
        return iter(self.sets)

    def __len__(self) -> int:
        return len(self.sets)

    def __contains__(self, mask: object) -> bool:
        return mask in self.sets

    def as_lists(self, one_based: bool = False) -> List[List[int]]:
        shift = 1 if one_based else 0
        return [[v + shift for v in bits_of(s)] for s in self.sets]


def _bron_kerbosch(g: Graph, cap: int) -> List[int]:
    found: List[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            found.append(r)
            if len(found) > cap:
                raise FamilyCapExceeded(cap)
            return
        # опорная вершина: больше всего соседей в P, при равенстве - меньший номер
        pivot = max(bits_of(p | x), key=lambda u: ((g.adj[u] & p).bit_count(), -u))
        for v in bits_of(p & ~g.adj[pivot]):
            bit = 1 << v
            expand(r | bit, p & g.adj[v], x & g.adj[v])
            p &= ~bit
            x |= bit

    expand(0, g.full, 0)
    return found


@lru_cache(maxsize=4096)
def _cliques_cached(g: Graph, cap: int) -> Tuple[int, ...]:
    family = tuple(sorted(_bron_kerbosch(g, cap)))
    logger.debug("n=%d: %d максимальных клик", g.n, len(family))
    return family


def maximal_cliques(g: Graph, limits: Optional[Limits] = None) -> SetFamily:
    """
    Все максимальные клики (Брон-Кербош с опорной вершиной).

    Raises:
        FamilyCapExceeded: клик больше limits.family_cap
    """
    limits = limits or DEFAULT_LIMITS
    return SetFamily(_cliques_cached(g, limits.family_cap), CLIQUE, g)


def maximal_stable_sets(g: Graph, limits: Optional[Limits] = None) -> SetFamily:
    """Все максимальные независимые множества = максимальные клики дополнения."""
    limits = limits or DEFAULT_LIMITS
    return SetFamily(_cliques_cached(complement(g), limits.family_cap), STABLE, g)


def is_strong_clique(g: Graph, clique: int, limits: Optional[Limits] = None) -> bool:
    """Клика сильная, если пересекает каждое максимальное независимое множество."""
    if not clique or not g.is_clique(clique):
        raise NotACliqueError(f"множество {list(bits_of(clique))} не является кликой")
    return all(clique & s for s in maximal_stable_sets(g, limits))


def is_strong_stable_set(g: Graph, stable: int, limits: Optional[Limits] = None) -> bool:
    return is_strong_clique(complement(g), stable, limits)


def strong_cliques(g: Graph, limits: Optional[Limits] = None) -> SetFamily:
    """Максимальные клики, пересекающие все максимальные независимые множества."""
    stables = maximal_stable_sets(g, limits).sets
    strong = tuple(c for c in maximal_cliques(g, limits) if all(c & s for s in stables))
    return SetFamily(strong, CLIQUE, g)


def strong_stable_sets(g: Graph, limits: Optional[Limits] = None) -> SetFamily:
    family = strong_cliques(complement(g), limits)
    return SetFamily(family.sets, STABLE, g)


def simplicial_cliques(g: Graph) -> SetFamily:
    """Различные замкнутые окрестности N[v], являющиеся кликами."""
    found = {g.closed_neighborhood(v) for v in range(g.n) if g.is_clique(g.closed_neighborhood(v))}
    return SetFamily(tuple(sorted(found)), CLIQUE, g)


def disjoint_pairs(g: Graph, limits: Optional[Limits] = None) -> List[Tuple[int, int]]:
    """Пары (максимальная клика, максимальное независимое множество) без общих вершин."""
    stables = maximal_stable_sets(g, limits).sets
    return [(c, s) for c in maximal_cliques(g, limits) for s in stables if not c & s]


# --- Покрытия ---

def covers_edges(g: Graph, family: Iterable[int]) -> bool:
    members = list(family)
    return all(any(m >> u & 1 and m >> v & 1 for m in members) for u, v in g.edges())


def covers_nonedges(g: Graph, family: Iterable[int]) -> bool:
    members = list(family)
    return all(any(m >> u & 1 and m >> v & 1 for m in members) for u, v in g.non_edges())


def covers_vertices(g: Graph, family: Iterable[int]) -> bool:
    union = 0
    for m in family:
        union |= m
    return union & g.full == g.full


# --- Большие графы (networkx) ---

def maximal_cliques_big(graph: nx.Graph) -> List[frozenset]:
    """Максимальные клики графа networkx любого размера, в каноническом порядке."""
    cliques = [frozenset(c) for c in nx.find_cliques(graph)]
    return sorted(cliques, key=lambda c: sorted(c))
