"""AL-cycle census: closed walks in the one-period transfer graph.

The transfer graph has the index-1 loci as vertices.  Each edge is one
monomial of ``theta1 = C1 . E_m ... E_1``: starting at a locus, every slide
event whose mover is the current locus offers a choice between staying and
sliding onto the lower locus; the closure permutation then routes the
endpoint.  Edge labels read ``source>target:bits`` where ``bits`` has one
character per event, ``1`` for a slide taken and ``0`` otherwise.

Index-1 AL-cycles are closed edge words up to rotation; index-0 and index-2
cycles come from the cycles of the closure permutations.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterator, Sequence

from .errors import AdjacencyMismatch, EnumerationBudgetExceeded
from .linalg import MatrixQ
from .presentation import MorsePresentation, Slide, homology_action, transfer_matrices
from .ring import TruncatedSeries, format_rational, rf_to_series, series_exp
from .zeta import zeta_function, zeta_log_derivative

__all__ = [
    "Edge",
    "TransferGraph",
    "AlCycle",
    "CycleCensus",
    "CoefficientCheck",
    "GammaZetaReport",
    "build_transfer_graph",
    "enumerate_cycles",
    "based_trace_oracle",
    "verify_gamma_zeta",
    "canonical_rotation",
    "DEFAULT_MAX_PERIOD_CAP",
    "DEFAULT_WALK_BUDGET",
]

DEFAULT_MAX_PERIOD_CAP = 12
DEFAULT_WALK_BUDGET = 5_000_000


@dataclass(frozen=True)
class Edge:
    source: str
    target: str
    sign: int
    itinerary: tuple[str, ...]  # "stay" or "slide", one entry per event

    @property
    def label(self) -> str:
        bits = "".join("1" if c == "slide" else "0" for c in self.itinerary)
        return f"{self.source}>{self.target}:{bits}"


@dataclass(frozen=True)
class TransferGraph:
    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]  # sorted by label

    def adjacency(self) -> MatrixQ:
        """Signed adjacency in column convention: entry ``[target, source]``."""
        n = len(self.vertices)
        where = {v: i for i, v in enumerate(self.vertices)}
        rows = [[0] * n for _ in range(n)]
        for e in self.edges:
            rows[where[e.target]][where[e.source]] += e.sign
        return MatrixQ(rows, rows=n, cols=n)

    def out_edges(self) -> dict[str, list[int]]:
        out: dict[str, list[int]] = {v: [] for v in self.vertices}
        for i, e in enumerate(self.edges):
            out[e.source].append(i)
        return out


def build_transfer_graph(p: MorsePresentation) -> TransferGraph:
    closure = p.closure(1)
    edges: list[Edge] = []
    for start in p.loci1:
        paths = [(start, 1, ())]
        for e in p.events:
            nxt = []
            for cur, sign, choices in paths:
                nxt.append((cur, sign, choices + ("stay",)))
                if isinstance(e, Slide) and cur == e.mover:
                    nxt.append((e.over, sign * e.sign, choices + ("slide",)))
            paths = nxt
        edges.extend(Edge(start, closure[cur], sign, choices) for cur, sign, choices in paths)
    edges.sort(key=lambda e: e.label)
    g = TransferGraph(tuple(p.loci1), tuple(edges))
    theta1 = transfer_matrices(p).theta1
    if g.adjacency() != theta1:
        raise AdjacencyMismatch(f"signed adjacency {g.adjacency()!r} != theta1 {theta1!r}")
    return g


def canonical_rotation(word: Sequence) -> tuple:
    """Lexicographically least rotation of a cyclic word."""
    word = tuple(word)
    if not word:
        return word
    return min(word[i:] + word[:i] for i in range(len(word)))


def _primitive_period(word: Sequence) -> int:
    n = len(word)
    for d in range(1, n + 1):
        if n % d == 0 and tuple(word[d:]) + tuple(word[:d]) == tuple(word):
            return d
    return n  # pragma: no cover


@dataclass(frozen=True)
class AlCycle:
    index: int
    period: int
    primitive_period: int
    sign: int
    itinerary: tuple[str, ...]

    def sort_key(self) -> tuple:
        return (self.period, self.index, self.itinerary)

    @property
    def weight(self) -> int:
        """Contribution ``(-1)^index * sign * primitive_period`` to the census series."""
        return (-1) ** self.index * self.sign * self.primitive_period

    def to_json(self) -> dict[str, Any]:
        return {
            "index": self.index,
            "period": self.period,
            "primitive_period": self.primitive_period,
            "sign": self.sign,
            "itinerary": list(self.itinerary),
        }


@dataclass(frozen=True)
class CycleCensus:
    max_period: int
    cycles: tuple[AlCycle, ...]
    series: TruncatedSeries

    def of_index(self, index: int) -> list[AlCycle]:
        return [c for c in self.cycles if c.index == index]

    def of_period(self, period: int) -> list[AlCycle]:
        return [c for c in self.cycles if c.period == period]

    def exponential_series(self) -> TruncatedSeries:
        """``exp(sum (-1)^ind eps p_irr / p t^p)``, which should be zeta."""
        coeffs = [Fraction(0)] * (self.max_period + 1)
        for c in self.cycles:
            coeffs[c.period] += Fraction(c.weight, c.period)
        return series_exp(TruncatedSeries(coeffs, order=self.max_period))

    def iterates_consistent(self) -> bool:
        """Every cycle's primitive root is itself in the census, and each
        primitive cycle of period d has exactly one iterate at every multiple
        of d up to the bound."""
        keys = {(c.index, c.itinerary) for c in self.cycles}
        primitive: dict[int, list[AlCycle]] = {}
        for c in self.cycles:
            d = c.primitive_period
            if c.period == d:
                primitive.setdefault(c.index, []).append(c)
                continue
            root = canonical_rotation(c.itinerary[:d])
            if (c.index, root) not in keys:
                return False
            if c.itinerary != canonical_rotation(root * (c.period // d)):
                return False
        for index in (0, 1, 2):
            for k in range(1, self.max_period + 1):
                expected = sum(1 for c in primitive.get(index, []) if k % c.period == 0)
                actual = sum(1 for c in self.cycles if c.index == index and c.period == k)
                if expected != actual:
                    return False
        return True

    def to_json(self) -> dict[str, Any]:
        return {
            "max_period": self.max_period,
            "cycles": [c.to_json() for c in self.cycles],
            "series": [format_rational(a) for a in self.series.coefficients],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)


def _necklaces(
    g: TransferGraph, k: int, budget: list[int]
) -> Iterator[tuple[int, ...]]:
    """Canonical closed edge words of length ``k``."""
    out = g.out_edges()
    edges = g.edges
    word: list[int] = []

    def extend(vertex: str) -> Iterator[tuple[int, ...]]:
        if len(word) == k:
            if vertex == edges[word[0]].source:
                w = tuple(word)
                if canonical_rotation(w) == w:
                    yield w
            return
        for i in out[vertex]:
            if i < word[0]:
                continue
            budget[0] -= 1
            if budget[0] < 0:
                raise EnumerationBudgetExceeded(
                    "walk budget exhausted while enumerating AL-cycles; lower the period bound"
                )
            word.append(i)
            yield from extend(edges[i].target)
            word.pop()

    for first in range(len(edges)):
        budget[0] -= 1
        word.append(first)
        yield from extend(edges[first].target)
        word.pop()


def _permutation_cycles(names: Sequence[str], images: Sequence[str]) -> list[tuple[str, ...]]:
    mapping = dict(zip(names, images))
    seen: set[str] = set()
    cycles = []
    for n in names:
        if n in seen:
            continue
        cyc = []
        x = n
        while x not in seen:
            seen.add(x)
            cyc.append(x)
            x = mapping[x]
        cycles.append(canonical_rotation(cyc))
    return cycles


def enumerate_cycles(
    g: TransferGraph,
    pres: MorsePresentation,
    max_period: int,
    *,
    max_period_cap: int = DEFAULT_MAX_PERIOD_CAP,
    walk_budget: int = DEFAULT_WALK_BUDGET,
) -> CycleCensus:
    """All AL-cycles of period ``<= max_period``, canonically ordered by
    ``(period, index, itinerary)``."""
    if max_period < 1:
        raise ValueError("max_period must be at least 1")
    if max_period > max_period_cap:
        raise EnumerationBudgetExceeded(
            f"period bound {max_period} exceeds the cap {max_period_cap}; raise max_period_cap explicitly"
        )
    cycles: list[AlCycle] = []
    labels = [e.label for e in g.edges]
    budget = [walk_budget]
    for k in range(1, max_period + 1):
        for word in _necklaces(g, k, budget):
            sign = 1
            for i in word:
                sign *= g.edges[i].sign
            cycles.append(
                AlCycle(1, k, _primitive_period(word), sign, tuple(labels[i] for i in word))
            )
    for index in (0, 2):
        names = pres.loci(index)
        images = (pres.closure0, pres.closure1, pres.closure2)[index]
        for cyc in _permutation_cycles(names, images):
            d = len(cyc)
            for m in range(1, max_period // d + 1):
                cycles.append(AlCycle(index, m * d, d, 1, cyc * m))
    cycles.sort(key=AlCycle.sort_key)

    coeffs = [Fraction(0)] * (max_period + 1)
    for c in cycles:
        coeffs[c.period] += c.weight
    return CycleCensus(max_period, tuple(cycles), TruncatedSeries(coeffs, order=max_period))


def based_trace_oracle(g: TransferGraph, k: int) -> int:
    """Signed count of based closed walks of length ``k`` (no rotation quotient)."""
    if k < 1:
        raise ValueError("k must be at least 1")
    out = g.out_edges()
    total = 0

    def walk(start: str, vertex: str, depth: int, sign: int) -> None:
        nonlocal total
        if depth == k:
            if vertex == start:
                total += sign
            return
        for i in out[vertex]:
            e = g.edges[i]
            walk(start, e.target, depth + 1, sign * e.sign)

    for v in g.vertices:
        walk(v, v, 0, 1)
    return total


@dataclass(frozen=True)
class CoefficientCheck:
    power: int
    census: Fraction
    expected: Fraction

    @property
    def ok(self) -> bool:
        return self.census == self.expected


@dataclass(frozen=True)
class GammaZetaReport:
    max_period: int
    log_derivative: list[CoefficientCheck]  # census vs t zeta'/zeta
    exponential: list[CoefficientCheck]  # exp form vs zeta
    iterates_ok: bool
    census: CycleCensus = field(repr=False)

    @property
    def ok(self) -> bool:
        return (
            self.iterates_ok
            and all(c.ok for c in self.log_derivative)
            and all(c.ok for c in self.exponential)
        )

    def failures(self) -> list[str]:
        out = []
        for name, checks in (("t zeta'/zeta", self.log_derivative), ("zeta", self.exponential)):
            for c in checks:
                if not c.ok:
                    out.append(
                        f"{name} t^{c.power}: census {format_rational(c.census)} "
                        f"!= expected {format_rational(c.expected)}"
                    )
        if not self.iterates_ok:
            out.append("iterate/primitive bookkeeping is inconsistent")
        return out


def verify_gamma_zeta(pres: MorsePresentation, max_period: int, **limits) -> GammaZetaReport:
    """Compare the AL-cycle census with the expansions of ``t zeta'/zeta`` and ``zeta``."""
    census = enumerate_cycles(build_transfer_graph(pres), pres, max_period, **limits)
    action = homology_action(pres).action
    expected = rf_to_series(zeta_log_derivative(action), max_period)
    zeta_series = rf_to_series(zeta_function(action), max_period)
    exp_series = census.exponential_series()
    return GammaZetaReport(
        max_period=max_period,
        log_derivative=[
            CoefficientCheck(k, census.series[k], expected[k]) for k in range(1, max_period + 1)
        ],
        exponential=[
            CoefficientCheck(k, exp_series[k], zeta_series[k]) for k in range(0, max_period + 1)
        ],
        iterates_ok=census.iterates_consistent(),
        census=census,
    )
