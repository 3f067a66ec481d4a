"""Идентификаторы свойств, модификаторы co/∩/∪, отчёт о классах и перепроверка сертификатов."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Dict, Iterable, List, NamedTuple, Optional, Tuple

from . import equistable, recognizers, search
from .config import Limits
from .core import Graph, complement, encode_graph6, mask_of
from .enumeration import (
    disjoint_pairs,
    maximal_cliques,
    maximal_stable_sets,
    simplicial_cliques,
    strong_cliques,
)
from .errors import UndecidedError, UnsupportedSizeError
from .recognizers import Certificate, Verdict

logger = logging.getLogger(__name__)


class BaseProperty(str, Enum):
    THRESHOLD = "threshold"
    COGRAPH = "cograph"
    SPLIT = "split"
    EDGE_SIMPLICIAL = "edge-simplicial"
    CIS = "cis"
    ALMOST_CIS = "almost-cis"
    QUASI_CIS = "quasi-cis"
    SEMI_WEAKLY_CIS = "semi-weakly-cis"
    WEAKLY_CIS = "weakly-cis"
    TRIANGLE = "triangle"
    WEAKLY_TRIANGLE = "weakly-triangle"
    NORMAL = "normal"
    PERFECT = "perfect"
    EQUISTABLE = "equistable"
    STRONGLY_EQUISTABLE = "strongly-equistable"


class Modifier(str, Enum):
    PLAIN = "plain"
    CO = "co"
    CAP = "cap"
    CUP = "cup"


# Свойства, требующие LP (n <= 16).
LP_PROPERTIES = frozenset({BaseProperty.EQUISTABLE, BaseProperty.STRONGLY_EQUISTABLE})


class PropertyId(NamedTuple):
    base: BaseProperty
    modifier: Modifier = Modifier.PLAIN

    @property
    def key(self) -> str:
        if self.modifier == Modifier.PLAIN:
            return self.base.value
        return f"{self.modifier.value}-{self.base.value}"

    @property
    def needs_lp(self) -> bool:
        return self.base in LP_PROPERTIES

    def co(self) -> "PropertyId":
        """co от co - исходное свойство; ∩ и ∪ сами дополнительны."""
        swap = {Modifier.PLAIN: Modifier.CO, Modifier.CO: Modifier.PLAIN}
        return PropertyId(self.base, swap.get(self.modifier, self.modifier))

    @classmethod
    def parse(cls, text: str) -> "PropertyId":
        for modifier in (Modifier.CO, Modifier.CAP, Modifier.CUP):
            prefix = f"{modifier.value}-"
            if text.startswith(prefix):
                return cls(BaseProperty(text[len(prefix):]), modifier)
        return cls(BaseProperty(text))

    def __str__(self) -> str:
        return self.key


def plain(base: BaseProperty) -> PropertyId:
    return PropertyId(base, Modifier.PLAIN)


def cap(base: BaseProperty) -> PropertyId:
    return PropertyId(base, Modifier.CAP)


def cup(base: BaseProperty) -> PropertyId:
    return PropertyId(base, Modifier.CUP)


Predicate = Callable[[Graph, Optional[Limits]], Verdict]


def _equistable_verdict(strong: bool) -> Predicate:
    def predicate(g: Graph, limits: Optional[Limits]) -> Verdict:
        decide = equistable.is_strongly_equistable if strong else equistable.is_equistable
        cert = decide(g, limits=limits)
        data = cert.to_json()
        kind = data.pop("kind")
        return Verdict(cert.holds, Certificate(kind, data))
    return predicate


PREDICATES: Dict[BaseProperty, Predicate] = {
    BaseProperty.THRESHOLD: lambda g, limits: recognizers.is_threshold(g),
    BaseProperty.COGRAPH: lambda g, limits: recognizers.is_cograph(g),
    BaseProperty.SPLIT: recognizers.is_split,
    BaseProperty.EDGE_SIMPLICIAL: lambda g, limits: recognizers.is_edge_simplicial(g),
    BaseProperty.CIS: recognizers.is_cis,
    BaseProperty.ALMOST_CIS: recognizers.is_almost_cis,
    BaseProperty.QUASI_CIS: recognizers.is_quasi_cis,
    BaseProperty.SEMI_WEAKLY_CIS: recognizers.is_semi_weakly_cis,
    BaseProperty.WEAKLY_CIS: search.is_weakly_cis,
    BaseProperty.TRIANGLE: recognizers.is_triangle,
    BaseProperty.WEAKLY_TRIANGLE: recognizers.is_weakly_triangle,
    BaseProperty.NORMAL: search.is_normal,
    BaseProperty.PERFECT: recognizers.is_perfect,
    BaseProperty.EQUISTABLE: _equistable_verdict(strong=False),
    BaseProperty.STRONGLY_EQUISTABLE: _equistable_verdict(strong=True),
}


class Evaluator:
    """
    Вычисляет свойства одного графа с кэшем базовых вердиктов для g и его
    дополнения; модификаторы всегда сводятся к базовому предикату на complement(g).
    """

    def __init__(self, g: Graph, limits: Optional[Limits] = None):
        self.graph = g
        self.limits = limits
        self._complement: Optional[Graph] = None
        self._cache: Dict[Tuple[BaseProperty, bool], Verdict] = {}

    @property
    def complement(self) -> Graph:
        if self._complement is None:
            self._complement = complement(self.graph)
        return self._complement

    def base(self, prop: BaseProperty, on_complement: bool = False) -> Verdict:
        key = (prop, on_complement)
        if key not in self._cache:
            graph = self.complement if on_complement else self.graph
            self._cache[key] = PREDICATES[prop](graph, self.limits)
        return self._cache[key]

    def __call__(self, pid: PropertyId) -> Verdict:
        if pid.modifier == Modifier.PLAIN:
            return self.base(pid.base)
        if pid.modifier == Modifier.CO:
            return self.base(pid.base, on_complement=True)
        own = self.base(pid.base)
        other = self.base(pid.base, on_complement=True)
        holds = own.holds and other.holds if pid.modifier == Modifier.CAP else own.holds or other.holds
        parts = [
            {"side": "graph", "holds": own.holds,
             "certificate": own.certificate.to_json() if own.certificate else None},
            {"side": "complement", "holds": other.holds,
             "certificate": other.certificate.to_json() if other.certificate else None},
        ]
        return Verdict(holds, Certificate("modifier", {"modifier": pid.modifier.value, "parts": parts}))


def apply_modifier(pid: PropertyId, g: Graph, limits: Optional[Limits] = None) -> bool:
    """co = base(complement(g)); cap = base(g) и co; cup = base(g) или co."""
    return Evaluator(g, limits)(pid).holds


def all_properties(include_lp: bool = True) -> List[PropertyId]:
    result = []
    for base in BaseProperty:
        if base in LP_PROPERTIES and not include_lp:
            continue
        result.extend(PropertyId(base, m) for m in Modifier)
    return result


# --- Отчёт ---

UNSUPPORTED = "unsupported"


@dataclass
class ClassReport:
    """Вердикты по свойствам одного графа; None означает "не поддерживается для этого размера"."""

    graph: Graph
    label: str
    verdicts: Dict[PropertyId, Optional[Verdict]] = field(default_factory=dict)
    notes: Dict[PropertyId, str] = field(default_factory=dict)
    bad_p4: Optional[Verdict] = None

    def get(self, pid: PropertyId) -> Optional[bool]:
        verdict = self.verdicts.get(pid)
        return None if verdict is None else verdict.holds

    def to_json(self) -> Dict:
        properties = {}
        for pid, verdict in self.verdicts.items():
            if verdict is None:
                properties[pid.key] = {"holds": UNSUPPORTED, "reason": self.notes.get(pid, "")}
                continue
            entry = {"holds": verdict.holds}
            if verdict.certificate is not None:
                entry["certificate"] = verdict.certificate.to_json()
            properties[pid.key] = entry
        data = {
            "graph": self.label,
            "n": self.graph.n,
            "graph6": encode_graph6(self.graph),
            "properties": properties,
        }
        if self.bad_p4 is not None:
            data["bad_p4"] = {
                "holds": self.bad_p4.holds,
                "certificate": self.bad_p4.certificate.to_json() if self.bad_p4.certificate else None,
            }
        return data


def classify(
    g: Graph,
    properties: Optional[Iterable[PropertyId]] = None,
    include_lp: bool = True,
    limits: Optional[Limits] = None,
    label: str = "",
) -> ClassReport:
    """Полный вектор принадлежности; слишком большие для LP/поиска дыр графы помечаются unsupported."""
    evaluator = Evaluator(g, limits)
    selected = list(properties) if properties is not None else all_properties(include_lp)
    report = ClassReport(g, label or encode_graph6(g))
    for pid in selected:
        try:
            report.verdicts[pid] = evaluator(pid)
        except (UnsupportedSizeError, UndecidedError) as exc:
            logger.info("%s: %s", pid.key, exc)
            report.verdicts[pid] = None
            report.notes[pid] = str(exc)
    report.bad_p4 = recognizers.has_bad_p4(g, limits)
    return report


# --- Перепроверка сертификатов ---

def _is_induced_p4(g: Graph, path: List[int]) -> bool:
    a, b, c, d = path
    return (len(set(path)) == 4 and g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(c, d)
            and not g.has_edge(a, c) and not g.has_edge(b, d) and not g.has_edge(a, d))


def _is_induced_cycle(g: Graph, cycle: List[int]) -> bool:
    k = len(cycle)
    if k < 3 or len(set(cycle)) != k:
        return False
    for i in range(k):
        for j in range(i + 1, k):
            adjacent = j == i + 1 or (i == 0 and j == k - 1)
            if g.has_edge(cycle[i], cycle[j]) != adjacent:
                return False
    return True


def _verify_base(g: Graph, base: BaseProperty, verdict: Verdict, limits: Optional[Limits]) -> bool:
    cert = verdict.certificate
    if cert is None:
        # без сертификата остаётся только повторное вычисление
        return PREDICATES[base](g, limits).holds == verdict.holds
    data = cert.payload
    kind = cert.kind
    if kind == "disjoint-pair":
        clique, stable = mask_of(data["clique"]), mask_of(data["stable"])
        valid = (clique in maximal_cliques(g, limits) and stable in maximal_stable_sets(g, limits)
                 and not clique & stable)
        if base == BaseProperty.ALMOST_CIS:
            return valid and verdict.holds and len(disjoint_pairs(g, limits)) == 1
        return valid and not verdict.holds
    if kind == "disjoint-pair-count":
        return not verdict.holds and data["count"] == len(disjoint_pairs(g, limits)) != 1
    if kind == "disjoint-pairs":
        pairs = {(mask_of(c), mask_of(s)) for c, s in data["pairs"]}
        actual = set(disjoint_pairs(g, limits))
        return not verdict.holds and len(pairs) >= 2 and pairs <= actual
    if kind == "split-partition":
        clique, stable = mask_of(data["clique"]), mask_of(data["stable"])
        return (verdict.holds and not clique & stable and clique | stable == g.full
                and g.is_clique(clique) and g.is_stable(stable))
    if kind == "induced-subgraph":
        vertices = data["vertices"]
        if data["pattern"] == "P4" and not _is_induced_p4(g, vertices):
            return False
        return not verdict.holds and recognizers._four_vertex_pattern(g, tuple(sorted(vertices))) == data["pattern"]
    if kind in ("uncovered-edge", "edge-cover"):
        if base == BaseProperty.EDGE_SIMPLICIAL:
            allowed = set(simplicial_cliques(g).sets)
        else:
            allowed = set(strong_cliques(g, limits).sets)
        if kind == "uncovered-edge":
            u, v = data["edge"]
            return (not verdict.holds and g.has_edge(u, v)
                    and not any(m >> u & 1 and m >> v & 1 for m in allowed))
        sets = [mask_of(s) for s in data["sets"]]
        return verdict.holds and all(m in allowed for m in sets) and all(
            any(m >> u & 1 and m >> v & 1 for m in sets) for u, v in g.edges()
        )
    if kind == "triangle-failure":
        stable = mask_of(data["stable"])
        u, v = data["edge"]
        return (not verdict.holds and stable in maximal_stable_sets(g, limits) and g.has_edge(u, v)
                and not stable >> u & 1 and not stable >> v & 1 and not g.adj[u] & g.adj[v] & stable)
    if kind == "uncovered-nonedge":
        u, v = data["nonedge"]
        admissible = [s for s in maximal_stable_sets(g, limits)
                      if recognizers.triangle_failure(g, s) is None]
        return (not verdict.holds and u != v and not g.has_edge(u, v)
                and not any(s >> u & 1 and s >> v & 1 for s in admissible))
    if kind == "nonedge-cover":
        sets = [mask_of(s) for s in data["sets"]]
        stables = maximal_stable_sets(g, limits)
        return verdict.holds and all(
            s in stables and recognizers.triangle_failure(g, s) is None for s in sets
        ) and all(any(s >> u & 1 and s >> v & 1 for s in sets) for u, v in g.non_edges())
    if kind == "odd-hole":
        graph = complement(g) if data["in_complement"] else g
        cycle = data["cycle"]
        return not verdict.holds and len(cycle) >= 5 and len(cycle) % 2 == 1 and _is_induced_cycle(graph, cycle)
    if kind == "cross-intersecting":
        cover = search.certificate_from_json(data)
        return verdict.holds and search.verify_cover(g, cover, data["mode"])
    if kind in ("equistable", "strongly-equistable"):
        parsed = equistable.EquistableCertificate.from_json(cert.to_json())
        return (parsed.holds == verdict.holds and parsed.strong == (base == BaseProperty.STRONGLY_EQUISTABLE)
                and equistable.verify_certificate(g, parsed))
    logger.warning("неизвестный вид сертификата: %s", kind)
    return False


def verify_certificate(g: Graph, pid: PropertyId, verdict: Verdict, limits: Optional[Limits] = None) -> bool:
    """Независимо перепроверяет вердикт свойства pid на графе g по его сертификату."""
    if pid.modifier == Modifier.PLAIN:
        return _verify_base(g, pid.base, verdict, limits)
    if pid.modifier == Modifier.CO:
        return _verify_base(complement(g), pid.base, verdict, limits)
    cert = verdict.certificate
    if cert is None or cert.kind != "modifier":
        return False
    own, other = cert.payload["parts"]
    if pid.modifier == Modifier.CAP:
        expected = own["holds"] and other["holds"]
    else:
        expected = own["holds"] or other["holds"]
    if expected != verdict.holds:
        return False
    for part, graph in ((own, g), (other, complement(g))):
        inner = part["certificate"]
        sub = Verdict(part["holds"], _certificate_from_json(inner) if inner else None)
        if not _verify_base(graph, pid.base, sub, limits):
            return False
    return True


def _certificate_from_json(data: Dict) -> Certificate:
    payload = {k: v for k, v in data.items() if k != "kind"}
    return Certificate(data["kind"], payload)


def verdict_from_json(data: Dict) -> Optional[Verdict]:
    """Запись свойства из JSON-отчёта обратно в Verdict (None для unsupported)."""
    if data.get("holds") == UNSUPPORTED:
        return None
    cert = data.get("certificate")
    return Verdict(bool(data["holds"]), _certificate_from_json(cert) if cert else None)
