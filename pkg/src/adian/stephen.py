"""Stephen's procedure: P-expansions, closure, and the word problem.

A segment labelled by one side of a relation is *unsaturated* when the
other side cannot be read between the same two vertices. An elementary
expansion sews the missing side across such a segment and folds; a full
expansion does this for every unsaturated segment present before the
step starts, then folds once. Iterating full expansions from the folded
linear graph of ``w`` until nothing is unsaturated yields the
Schützenberger automaton of ``w``, whose language decides equality.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from typing import MutableMapping

from .adian_analysis import is_guaranteed
from .presentation import Presentation, Word, WordLike, as_word
from .word_graph import BirootedGraph, Segment, linear_graph

SIDES = ("lhs", "rhs")


class StaleSegmentError(ValueError):
    """The segment is no longer unsaturated in the graph it was applied to."""


class NotClosedError(ValueError):
    pass


@dataclass(frozen=True)
class UnsaturatedSegment:
    segment: Segment
    relation_index: int
    side: str

    @property
    def missing_side(self) -> str:
        return "rhs" if self.side == "lhs" else "lhs"

    def missing(self, p: Presentation) -> Word:
        return p.relations[self.relation_index].other(self.side)


@dataclass(frozen=True)
class Budget:
    max_full_expansions: int = 64
    max_vertices: int = 100_000

    def __post_init__(self):
        if self.max_full_expansions <= 0 or self.max_vertices <= 0:
            raise ValueError("budget limits must be positive")


@dataclass
class TraceStep:
    index: int
    expansions: list[UnsaturatedSegment]
    vertices_after: int
    edges_after: int
    merges: int = 0
    sewn: list[Segment] = field(default_factory=list, repr=False)

    def line(self) -> str:
        return (f"step {self.index} expanded {len(self.expansions)} "
                f"vertices {self.vertices_after} edges {self.edges_after}")


@dataclass
class ExpansionTrace:
    steps: list[TraceStep] = field(default_factory=list)
    closed: bool = False

    def lines(self) -> list[str]:
        return [s.line() for s in self.steps] + ["closed" if self.closed else "budget-exceeded"]

    def __str__(self) -> str:
        return "\n".join(self.lines()) + "\n"


class BudgetExceeded(RuntimeError):
    """Carries the partial graph and its trace."""

    def __init__(self, graph: BirootedGraph, trace: ExpansionTrace, reason: str):
        super().__init__(reason)
        self.graph = graph
        self.trace = trace


def find_unsaturated(g: BirootedGraph, p: Presentation) -> list[UnsaturatedSegment]:
    """All unsaturated segments of ``g``, ordered by (vertex, relation, side)."""
    found = []
    seen = set()
    for v in g.vertices:
        for i, rel in enumerate(p.relations):
            for side in SIDES:
                seg = g.read_path(v, rel.side(side))
                if seg is None:
                    continue
                missing = rel.other(side)
                if g.read(v, missing) == seg.end:
                    continue
                key = (v, seg.end, missing)
                if key in seen:
                    continue
                seen.add(key)
                found.append(UnsaturatedSegment(seg, i, side))
    return found


def is_closed(g: BirootedGraph, p: Presentation) -> bool:
    return g.is_deterministic() and not find_unsaturated(g, p)


def _check_unsaturated(g: BirootedGraph, u: UnsaturatedSegment, p: Presentation) -> Segment:
    seg = g.read_path(u.segment.start, u.segment.label)
    if seg is None or seg.end != g.find(u.segment.end):
        raise StaleSegmentError(f"{u.segment.label} no longer reads from {u.segment.start}")
    if g.read(seg.start, u.missing(p)) == seg.end:
        raise StaleSegmentError(f"segment {u.segment.label} at {seg.start} is already saturated")
    return seg


def elementary_expansion(g: BirootedGraph, u: UnsaturatedSegment, p: Presentation,
                         rng: random.Random | None = None) -> BirootedGraph:
    h = g.copy()
    seg = _check_unsaturated(h, u, p)
    h.sew(seg.start, seg.end, u.missing(p))
    h.fold(rng)
    return h


def _expand(g: BirootedGraph, todo: list[UnsaturatedSegment], p: Presentation,
            rng: random.Random | None = None) -> tuple[list[Segment], int]:
    """Sew every segment in ``todo`` then fold once, in place."""
    order = list(todo)
    if rng is not None:
        rng.shuffle(order)
    sewn = [g.sew(u.segment.start, u.segment.end, u.missing(p)) for u in order]
    merges = g.fold(rng)
    return sewn, merges


def full_expansion(g: BirootedGraph, p: Presentation) -> BirootedGraph:
    h = g.copy()
    _expand(h, find_unsaturated(h, p), p)
    return h


def schutzenberger(w: WordLike, p: Presentation, budget: Budget = Budget(), *,
                   history: list[BirootedGraph] | None = None,
                   rng: random.Random | None = None) -> tuple[BirootedGraph, ExpansionTrace]:
    """Iterate full expansions from the folded linear graph of ``w`` to closure.

    Raises :class:`BudgetExceeded` if the graph is still open after
    ``budget.max_full_expansions`` steps or grows past
    ``budget.max_vertices``. When ``history`` is given, a copy of the
    folded linear graph and of every intermediate graph is appended to it.
    """
    g = linear_graph(as_word(w))
    g.fold(rng)
    trace = ExpansionTrace()
    if history is not None:
        history.append(g.copy())
    while True:
        todo = find_unsaturated(g, p)
        if not todo:
            trace.closed = True
            g.closed = True
            return g, trace
        if len(trace.steps) >= budget.max_full_expansions:
            raise BudgetExceeded(g, trace, f"not closed after {len(trace.steps)} full expansions")
        sewn, merges = _expand(g, todo, p, rng)
        trace.steps.append(TraceStep(len(trace.steps) + 1, todo, g.num_vertices(),
                                     g.num_edges(), merges, sewn))
        if history is not None:
            history.append(g.copy())
        if g.num_vertices() > budget.max_vertices:
            raise BudgetExceeded(g, trace, f"graph exceeded {budget.max_vertices} vertices")


def membership(w: WordLike, g: BirootedGraph) -> bool:
    """Whether ``w`` labels a start-to-end path of a closed automaton."""
    if not g.closed:
        raise NotClosedError("membership needs a closed Schützenberger automaton")
    return g.read(g.start, as_word(w)) == g.end


def approx_membership(w: WordLike, g: BirootedGraph) -> str:
    """On an approximate graph of ``u``: ``"yes_geq"`` certifies ``w >= u``."""
    return "yes_geq" if g.read(g.start, as_word(w)) == g.end else "unknown"


class Verdict(str, enum.Enum):
    EQUAL = "equal"
    NOT_EQUAL = "not-equal"
    BUDGET_EXCEEDED = "budget-exceeded"


@dataclass
class DecisionOutcome:
    verdict: Verdict
    trace_u: ExpansionTrace
    trace_v: ExpansionTrace
    guaranteed: bool

    def line(self) -> str:
        return f"{self.verdict.value} guaranteed={str(self.guaranteed).lower()}"

    @property
    def exit_code(self) -> int:
        return {Verdict.EQUAL: 0, Verdict.NOT_EQUAL: 1, Verdict.BUDGET_EXCEEDED: 2}[self.verdict]


AutomatonCache = MutableMapping[Word, tuple[BirootedGraph, ExpansionTrace]]


def _automaton(w: Word, p: Presentation, budget: Budget, cache: AutomatonCache | None):
    if cache is not None and w in cache:
        return cache[w]
    result = schutzenberger(w, p, budget)
    if cache is not None:
        cache[w] = result
    return result


def decide_equal(u: WordLike, v: WordLike, p: Presentation, budget: Budget = Budget(), *,
                 cache: AutomatonCache | None = None) -> DecisionOutcome:
    """Decide ``u = v`` via ``u ∈ L(v)`` and ``v ∈ L(u)``.

    ``cache`` lets a caller deciding many pairs over one presentation
    reuse automata; it must only ever be used with the same ``p`` and
    ``budget``.
    """
    u, v = as_word(u), as_word(v)
    guaranteed = is_guaranteed(p)
    built = {}
    traces = {}
    for key, word in (("u", u), ("v", v)):
        try:
            built[key], traces[key] = _automaton(word, p, budget, cache)
        except BudgetExceeded as exc:
            traces[key] = exc.trace
    if len(built) < 2:
        return DecisionOutcome(Verdict.BUDGET_EXCEEDED, traces["u"], traces["v"], guaranteed)
    equal = membership(u, built["v"]) and membership(v, built["u"])
    return DecisionOutcome(Verdict.EQUAL if equal else Verdict.NOT_EQUAL,
                           traces["u"], traces["v"], guaranteed)


def is_idempotent(w: WordLike, p: Presentation, budget: Budget = Budget(), *,
                  cache: AutomatonCache | None = None) -> DecisionOutcome:
    w = as_word(w)
    return decide_equal(w, w + w, p, budget, cache=cache)
