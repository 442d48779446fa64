"""Birooted inverse word graphs.

Only positively labelled edges are stored. The inverse edge
``(v, x⁻¹, u)`` of a stored edge ``(u, x, v)`` is implied, so involution
closure holds by construction. Reading an uppercase letter ``X`` at a
vertex follows a stored ``x`` edge backwards.

Vertices are integers. Folding merges vertices with a union-find whose
representative is always the smaller id; merged ids are never reused and
can still be resolved with :meth:`BirootedGraph.find`.
"""

from __future__ import annotations

import random
from collections import defaultdict, deque
from dataclasses import dataclass
from typing import Iterable, Iterator

from .presentation import Word, WordLike, as_word

Edge = tuple[int, str, int]


class NotDeterministicError(ValueError):
    pass


@dataclass(frozen=True)
class Segment:
    """A path through a graph; ``vertices`` has ``len(label) + 1`` entries."""

    vertices: tuple[int, ...]
    label: Word

    @property
    def start(self) -> int:
        return self.vertices[0]

    @property
    def end(self) -> int:
        return self.vertices[-1]

    @property
    def interior(self) -> tuple[int, ...]:
        return self.vertices[1:-1]

    def edges(self) -> list[Edge]:
        """The path as signed edges ``(src, letter, dst)``."""
        return [(self.vertices[i], c, self.vertices[i + 1]) for i, c in enumerate(self.label.text)]

    def positive_edges(self) -> list[Edge]:
        """The stored (positive) form of every edge on the path."""
        return [positive_form(e) for e in self.edges()]


def positive_form(e: Edge) -> Edge:
    u, c, v = e
    return (u, c, v) if c.islower() else (v, c.lower(), u)


class BirootedGraph:
    def __init__(self):
        self._fwd: dict[int, dict[str, set[int]]] = {}
        self._bwd: dict[int, dict[str, set[int]]] = {}
        self._parent: dict[int, int] = {}
        self._next_id = 0
        self.start = -1
        self.end = -1
        self.closed = False
        self.merges = 0

    # -- construction -------------------------------------------------
    def add_vertex(self) -> int:
        v = self._next_id
        self._next_id += 1
        self._fwd[v] = defaultdict(set)
        self._bwd[v] = defaultdict(set)
        self.closed = False
        return v

    def add_edge(self, u: int, c: str, v: int) -> None:
        """Add ``(u, c, v)``; an uppercase ``c`` stores ``(v, c.lower(), u)``."""
        u, c, v = positive_form((self.find(u), c, self.find(v)))
        self._fwd[u][c].add(v)
        self._bwd[v][c].add(u)
        self.closed = False

    def copy(self) -> "BirootedGraph":
        g = BirootedGraph()
        g._fwd = {v: defaultdict(set, {c: set(t) for c, t in d.items()}) for v, d in self._fwd.items()}
        g._bwd = {v: defaultdict(set, {c: set(t) for c, t in d.items()}) for v, d in self._bwd.items()}
        g._parent = dict(self._parent)
        g._next_id = self._next_id
        g.start, g.end = self.start, self.end
        g.closed = self.closed
        g.merges = self.merges
        return g

    # -- queries ------------------------------------------------------
    def find(self, v: int) -> int:
        root = v
        while root in self._parent:
            root = self._parent[root]
        while v != root:
            nxt = self._parent[v]
            self._parent[v] = root
            v = nxt
        return root

    @property
    def vertices(self) -> list[int]:
        return sorted(self._fwd)

    def __contains__(self, v: int) -> bool:
        return v in self._fwd

    def num_vertices(self) -> int:
        return len(self._fwd)

    def edges(self) -> Iterator[Edge]:
        """Stored positive edges, sorted by (source, label, target)."""
        for u in sorted(self._fwd):
            for c in sorted(self._fwd[u]):
                for v in sorted(self._fwd[u][c]):
                    yield (u, c, v)

    def num_edges(self) -> int:
        return sum(len(t) for d in self._fwd.values() for t in d.values())

    def has_edge(self, u: int, c: str, v: int) -> bool:
        u, c, v = positive_form((u, c, v))
        return v in self._fwd.get(u, {}).get(c, ())

    def out_labels(self, v: int) -> dict[str, set[int]]:
        """All signed labels readable at ``v`` with their targets."""
        out = {c: set(t) for c, t in self._fwd[v].items() if t}
        for c, t in self._bwd[v].items():
            if t:
                out[c.upper()] = set(t)
        return out

    def step(self, v: int, c: str) -> set[int]:
        table = self._fwd if c.islower() else self._bwd
        return table[v].get(c.lower(), set())

    def is_deterministic(self) -> bool:
        return all(len(t) <= 1 for table in (self._fwd, self._bwd)
                   for d in table.values() for t in d.values())

    def is_connected(self) -> bool:
        if not self._fwd:
            return False
        seen = {self.start}
        todo = [self.start]
        while todo:
            v = todo.pop()
            for table in (self._fwd, self._bwd):
                for t in table[v].values():
                    for w in t:
                        if w not in seen:
                            seen.add(w)
                            todo.append(w)
        return len(seen) == len(self._fwd)

    def read(self, v: int, w: WordLike) -> int | None:
        """Endpoint of the path labelled ``w`` from ``v``, or ``None``.

        The graph must be deterministic along the path.
        """
        v = self.find(v)
        for c in str(w):
            targets = self.step(v, c)
            if not targets:
                return None
            if len(targets) > 1:
                raise NotDeterministicError(f"two {c!r} edges leave vertex {v}")
            (v,) = targets
        return v

    def read_path(self, v: int, w: WordLike) -> Segment | None:
        w = as_word(w)
        path = [self.find(v)]
        for c in w.text:
            targets = self.step(path[-1], c)
            if not targets:
                return None
            if len(targets) > 1:
                raise NotDeterministicError(f"two {c!r} edges leave vertex {path[-1]}")
            path.extend(targets)
        return Segment(tuple(path), w)

    # -- mutation -----------------------------------------------------
    def sew(self, frm: int, to: int, w: WordLike) -> Segment:
        """Attach a fresh path labelled ``w`` from ``frm`` to ``to`` (no folding)."""
        w = as_word(w)
        frm, to = self.find(frm), self.find(to)
        path = [frm] + [self.add_vertex() for _ in range(len(w) - 1)] + [to]
        for i, c in enumerate(w.text):
            self.add_edge(path[i], c, path[i + 1])
        return Segment(tuple(path), w)

    def fold(self, rng: random.Random | None = None) -> int:
        """Fold in place until deterministic; return the number of merges.

        With ``rng`` the pending identifications are processed in random
        order (used to exercise confluence).
        """
        pending: list[tuple[int, int]] = []
        for table in (self._fwd, self._bwd):
            for d in table.values():
                for t in d.values():
                    if len(t) > 1:
                        first, *rest = sorted(t)
                        pending.extend((first, x) for x in rest)
        merges = 0
        while pending:
            if rng is not None:
                i = rng.randrange(len(pending))
                pending[i], pending[-1] = pending[-1], pending[i]
            a, b = pending.pop()
            a, b = self.find(a), self.find(b)
            if a == b:
                continue
            keep, gone = min(a, b), max(a, b)
            self._merge(keep, gone)
            merges += 1
            for table in (self._fwd, self._bwd):
                for t in table[keep].values():
                    if len(t) > 1:
                        first, *rest = sorted(t)
                        pending.extend((first, x) for x in rest)
        self.merges += merges
        return merges

    def _merge(self, keep: int, gone: int) -> None:
        out = [(c, t) for c, ts in self._fwd[gone].items() for t in ts]
        inc = [(s, c) for c, ss in self._bwd[gone].items() for s in ss]
        for c, t in out:
            self._bwd[t][c].discard(gone)
        for s, c in inc:
            self._fwd[s][c].discard(gone)
        del self._fwd[gone]
        del self._bwd[gone]
        self._parent[gone] = keep
        for c, t in out:
            t = keep if t == gone else t
            self._fwd[keep][c].add(t)
            self._bwd[t][c].add(keep)
        for s, c in inc:
            s = keep if s == gone else s
            self._fwd[s][c].add(keep)
            self._bwd[keep][c].add(s)
        self.start = self.find(self.start)
        self.end = self.find(self.end)
        self.closed = False

    # -- output -------------------------------------------------------
    def dump(self) -> str:
        """Line-based dump, sorted by id."""
        lines = [f"v {v}" for v in self.vertices]
        lines += [f"e {u} {c} {v}" for u, c, v in self.edges()]
        lines.append(f"roots {self.start} {self.end}")
        return "\n".join(lines) + "\n"

    def __repr__(self) -> str:
        return (f"<BirootedGraph V={self.num_vertices()} E={self.num_edges()} "
                f"roots=({self.start},{self.end})>")


def linear_graph(w: WordLike) -> BirootedGraph:
    w = as_word(w)
    g = BirootedGraph()
    verts = [g.add_vertex() for _ in range(len(w) + 1)]
    for i, c in enumerate(w.text):
        g.add_edge(verts[i], c, verts[i + 1])
    g.start, g.end = verts[0], verts[-1]
    return g


def fold_to_deterministic(g: BirootedGraph) -> BirootedGraph:
    h = g.copy()
    h.fold()
    return h


def read_word(g: BirootedGraph, frm: int, w: WordLike) -> int | None:
    if not g.is_deterministic():
        raise NotDeterministicError("read_word needs a deterministic graph")
    return g.read(frm, w)


def sew_segment(g: BirootedGraph, frm: int, to: int, w: WordLike) -> tuple[BirootedGraph, Segment]:
    h = g.copy()
    seg = h.sew(frm, to, w)
    return h, seg


def find_embedding(g1: BirootedGraph, g2: BirootedGraph, *, bijective: bool = False) -> dict[int, int] | None:
    """Root-preserving, label-preserving injective morphism ``g1 -> g2``.

    ``g1`` must be connected and ``g2`` deterministic, so the morphism is
    forced once ``g1.start`` is sent to ``g2.start``; a single traversal
    either builds it or proves there is none.
    """
    if not g1.is_deterministic() or not g2.is_deterministic():
        raise NotDeterministicError("embedding check needs deterministic graphs")
    if bijective and (g1.num_vertices() != g2.num_vertices()
                      or g1.num_edges() != g2.num_edges()):
        return None
    phi = {g1.start: g2.start}
    used = {g2.start}
    todo = deque([g1.start])
    while todo:
        v = todo.popleft()
        labels = g1.out_labels(v)
        image = g2.out_labels(phi[v])
        if bijective and set(labels) != set(image):
            return None
        for c, (t,) in labels.items():
            if c not in image:
                return None
            (t2,) = image[c]
            if t in phi:
                if phi[t] != t2:
                    return None
            else:
                if t2 in used:
                    return None
                phi[t] = t2
                used.add(t2)
                todo.append(t)
    if len(phi) != g1.num_vertices():
        raise ValueError("source graph is not connected")
    if phi[g1.end] != g2.end:
        return None
    return phi


def iso_birooted(g1: BirootedGraph, g2: BirootedGraph) -> bool:
    return find_embedding(g1, g2, bijective=True) is not None


def embeds(g1: BirootedGraph, g2: BirootedGraph) -> bool:
    return find_embedding(g1, g2) is not None


def sources_and_sinks(g: BirootedGraph) -> tuple[set[int], set[int]]:
    sources = {v for v in g.vertices if not any(g._bwd[v].values())}
    sinks = {v for v in g.vertices if not any(g._fwd[v].values())}
    return sources, sinks


def has_positive_cycle(g: BirootedGraph) -> bool:
    WHITE, GREY, BLACK = 0, 1, 2
    color = dict.fromkeys(g.vertices, WHITE)
    for root in g.vertices:
        if color[root] != WHITE:
            continue
        color[root] = GREY
        stack = [(root, iter(sorted(t for ts in g._fwd[root].values() for t in ts)))]
        while stack:
            v, it = stack[-1]
            nxt = next(it, None)
            if nxt is None:
                color[v] = BLACK
                stack.pop()
            elif color[nxt] == GREY:
                return True
            elif color[nxt] == WHITE:
                color[nxt] = GREY
                stack.append((nxt, iter(sorted(t for ts in g._fwd[nxt].values() for t in ts))))
    return False


def positive_reach(g: BirootedGraph, v: int, *, backwards: bool = False) -> set[int]:
    """Vertices reachable from ``v`` along positive edges (or against them)."""
    table = g._bwd if backwards else g._fwd
    seen = {v}
    todo = [v]
    while todo:
        u = todo.pop()
        for ts in table[u].values():
            for t in ts:
                if t not in seen:
                    seen.add(t)
                    todo.append(t)
    return seen


def to_dot(g: BirootedGraph, name: str = "G") -> str:
    lines = [f"digraph {name} {{", "  rankdir=LR;"]
    for v in g.vertices:
        attrs = []
        if v == g.start and v == g.end:
            attrs.append('shape=doublecircle, peripheries=3')
        elif v == g.start:
            attrs.append("shape=doublecircle")
        elif v == g.end:
            attrs.append("shape=doubleoctagon")
        else:
            attrs.append("shape=circle")
        lines.append(f'  v{v} [label="{v}", {", ".join(attrs)}];')
    for u, c, v in g.edges():
        lines.append(f'  v{u} -> v{v} [label="{c}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_from_edges(edges: Iterable[Edge], start: int, end: int) -> BirootedGraph:
    """Build a graph on vertices ``0..max`` from explicit edges (test helper)."""
    edges = list(edges)
    top = max([start, end] + [max(u, v) for u, _, v in edges])
    g = BirootedGraph()
    for _ in range(top + 1):
        g.add_vertex()
    for u, c, v in edges:
        g.add_edge(u, c, v)
    g.start, g.end = start, end
    return g
