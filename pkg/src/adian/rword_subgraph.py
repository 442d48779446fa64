"""Subgraphs of SΓ(w) generated by one occurrence of an R-word.

Starting from the linear graph of ``w``, step 1 expands only the chosen
occurrence. Step ``n+1`` expands only those unsaturated segments that
start or end at an interior vertex of a segment sewn at step ``n``. Each
step's regions form one generation.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .presentation import Presentation, Word, WordLike, as_word
from .stephen import Budget, BudgetExceeded, ExpansionTrace, TraceStep, _expand, find_unsaturated
from .word_graph import BirootedGraph, Edge, Segment, linear_graph, positive_form


class OccurrenceMismatch(ValueError):
    pass


@dataclass(frozen=True)
class Occurrence:
    rword: Word
    index: int
    start_pos: int


def occurrences(r: WordLike, w: WordLike) -> list[Occurrence]:
    """All occurrences of ``r`` in ``w``, overlapping ones included, 1-based."""
    r, w = as_word(r), as_word(w)
    out = []
    pos = w.text.find(r.text)
    while pos >= 0:
        out.append(Occurrence(r, len(out) + 1, pos))
        pos = w.text.find(r.text, pos + 1)
    return out


@dataclass(frozen=True)
class GenRegion:
    generation: int
    boundary_existing: Segment
    boundary_new: Segment
    relation_index: int
    side: str


@dataclass
class DeltaGraph:
    graph: BirootedGraph
    regions: list[GenRegion]
    linear_edges: set[Edge]
    closed: bool
    steps_used: int
    occurrence: Occurrence | None = None
    trace: ExpansionTrace = field(default_factory=ExpansionTrace)
    history: list[BirootedGraph] = field(default_factory=list, repr=False)

    def generations(self) -> list[int]:
        """Number of regions created at each step."""
        counts = [0] * self.steps_used
        for reg in self.regions:
            counts[reg.generation - 1] += 1
        return counts

    def report_line(self) -> str:
        occ = self.occurrence
        return (f"{occ.rword} occ={occ.index} pos={occ.start_pos} "
                f"closed={str(self.closed).lower()} steps={self.steps_used} "
                f"regions={len(self.regions)} vertices={self.graph.num_vertices()}")

    def region_edges(self, region: GenRegion) -> set[Edge]:
        g = self.graph
        return {positive_form((g.find(a), c, g.find(b)))
                for seg in (region.boundary_existing, region.boundary_new)
                for a, c, b in seg.edges()}


def _resolve(g: BirootedGraph, seg: Segment) -> Segment:
    return Segment(tuple(g.find(v) for v in seg.vertices), seg.label)


def _region_key(g: BirootedGraph, seg: Segment, index: int, side: str):
    return (g.find(seg.start), g.find(seg.end), index, side)


def delta(w: WordLike, occ: Occurrence, p: Presentation, budget: Budget = Budget(), *,
          record_history: bool = False) -> DeltaGraph:
    """Build the subgraph generated by ``occ``.

    Raises :class:`BudgetExceeded` whose ``delta`` attribute holds the
    partial :class:`DeltaGraph`.
    """
    w = as_word(w)
    r = occ.rword
    if w.text[occ.start_pos:occ.start_pos + len(r)] != r.text:
        raise OccurrenceMismatch(f"{r} does not occur at position {occ.start_pos} of {w}")
    if r not in p.rwords():
        raise OccurrenceMismatch(f"{r} is not a side of any relation")
    matches = occurrences(r, w)
    if not (1 <= occ.index <= len(matches)) or matches[occ.index - 1].start_pos != occ.start_pos:
        raise OccurrenceMismatch(f"occurrence index {occ.index} does not match position {occ.start_pos}")

    g = linear_graph(w)
    g.fold()
    linear_edges = set(g.edges())
    d = DeltaGraph(g, [], linear_edges, False, 0, occ)
    if record_history:
        d.history.append(g.copy())

    todo = [u for u in find_unsaturated(g, p)
            if u.segment.start == occ.start_pos and u.segment.label == r]
    while todo:
        if d.steps_used >= budget.max_full_expansions:
            exc = BudgetExceeded(g, d.trace, f"subgraph not closed after {d.steps_used} steps")
            exc.delta = d
            raise exc
        d.steps_used += 1
        sewn, merges = _expand(g, todo, p)
        seen = {_region_key(g, reg.boundary_existing, reg.relation_index, reg.side)
                for reg in d.regions}
        for u, s in zip(todo, sewn):
            existing = _resolve(g, u.segment)
            key = _region_key(g, existing, u.relation_index, u.side)
            if key in seen:
                continue
            seen.add(key)
            d.regions.append(GenRegion(d.steps_used, existing, s, u.relation_index, u.side))
        d.trace.steps.append(TraceStep(d.steps_used, todo, g.num_vertices(), g.num_edges(),
                                       merges, sewn))
        if record_history:
            d.history.append(g.copy())
        if g.num_vertices() > budget.max_vertices:
            exc = BudgetExceeded(g, d.trace, f"subgraph exceeded {budget.max_vertices} vertices")
            exc.delta = d
            raise exc
        fresh = {g.find(v) for s in sewn for v in s.interior}
        todo = [u for u in find_unsaturated(g, p)
                if u.segment.start in fresh or u.segment.end in fresh]
    d.closed = True
    d.trace.closed = True
    return d


def special_vertices(d: DeltaGraph, p: Presentation) -> list[int]:
    """Vertices that end one path labelled by an R-word and start another with the same label."""
    g = d.graph
    out = []
    for v in g.vertices:
        for r in p.rwords():
            if g.read(v, r) is not None and g.read(v, r.inverse()) is not None:
                out.append(v)
                break
    return out


def special_regions(d: DeltaGraph) -> list[GenRegion]:
    """Third-generation regions that use no edge of the linear graph of ``w``."""
    linear = {positive_form((d.graph.find(a), c, d.graph.find(b))) for a, c, b in d.linear_edges}
    return [reg for reg in d.regions
            if reg.generation == 3 and not (d.region_edges(reg) & linear)]


@dataclass
class DeltaReport:
    entries: list[DeltaGraph]

    @property
    def all_closed(self) -> bool:
        return all(e.closed for e in self.entries)

    def lines(self) -> list[str]:
        return [e.report_line() for e in self.entries]

    def __str__(self) -> str:
        return "".join(line + "\n" for line in self.lines())


def all_deltas_finite(w: WordLike, p: Presentation, budget: Budget = Budget()) -> DeltaReport:
    """Run :func:`delta` for every occurrence of every R-word in ``w``.

    Budget failures are recorded as open entries, never raised.
    """
    w = as_word(w)
    entries = []
    for r in p.rwords():
        for occ in occurrences(r, w):
            try:
                entries.append(delta(w, occ, p, budget))
            except BudgetExceeded as exc:
                entries.append(exc.delta)
    return DeltaReport(entries)

