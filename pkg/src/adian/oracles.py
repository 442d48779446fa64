"""Brute-force ground truth, independent of Stephen's procedure.

* Positive words: breadth-first search over single-factor rewrites.
  Two positive words are equal in the semigroup iff some finite chain of
  rewrites joins them, so finding ``v`` proves equality; failing to find
  it within a radius proves nothing unless the ball saturated.
* Free inverse monoid (no relations): fold the linear graphs (Munn trees)
  and compare them as birooted graphs.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .presentation import Presentation, Word, WordLike, as_word
from .word_graph import iso_birooted, linear_graph


def rewrite_neighbors(w: WordLike, p: Presentation) -> set[Word]:
    """Words reachable from ``w`` by replacing one relation side by the other."""
    t = as_word(w).text
    out = set()
    for rel in p.relations:
        for a, b in ((rel.lhs.text, rel.rhs.text), (rel.rhs.text, rel.lhs.text)):
            i = t.find(a)
            while i >= 0:
                out.add(Word(t[:i] + b + t[i + len(a):]))
                i = t.find(a, i + 1)
    return out


@dataclass(frozen=True)
class RewriteBall:
    center: Word
    radius: int
    members: frozenset[Word]
    saturated: bool  # BFS frontier emptied before the radius ran out


def rewrite_ball(center: WordLike, p: Presentation, radius: int) -> RewriteBall:
    center = as_word(center)
    seen = {center}
    frontier = [center]
    for _ in range(radius):
        nxt = []
        for w in frontier:
            for n in rewrite_neighbors(w, p):
                if n not in seen:
                    seen.add(n)
                    nxt.append(n)
        frontier = nxt
        if not frontier:
            break
    return RewriteBall(center, radius, frozenset(seen), not frontier)


class OracleResult(str, enum.Enum):
    EQUAL = "equal"
    NOT_EQUAL_WITHIN_RADIUS = "not_equal_within_radius"


def default_radius(u: WordLike, v: WordLike) -> int:
    return 2 * (len(as_word(u)) + len(as_word(v)))


def positive_equal_bfs(u: WordLike, v: WordLike, p: Presentation,
                       radius: int | None = None) -> OracleResult:
    u, v = as_word(u), as_word(v)
    if not (u.is_positive and v.is_positive):
        raise ValueError("the rewriting oracle only handles positive words")
    if radius is None:
        radius = default_radius(u, v)
    if v in rewrite_ball(u, p, radius).members:
        return OracleResult.EQUAL
    return OracleResult.NOT_EQUAL_WITHIN_RADIUS


def munn_equal(u: WordLike, v: WordLike) -> bool:
    """Equality in the free inverse monoid."""
    gu, gv = linear_graph(u), linear_graph(v)
    gu.fold()
    gv.fold()
    return iso_birooted(gu, gv)


def free_reduce(t: str) -> str:
    out: list[str] = []
    for c in t:
        if out and out[-1] == c.swapcase():
            out.pop()
        else:
            out.append(c)
    return "".join(out)


def munn_tree(w: WordLike) -> tuple[frozenset[str], str]:
    """Munn's representation: the free reductions of all prefixes of ``w``
    (a prefix-closed subtree of the free group's Cayley tree) and the free
    reduction of ``w`` itself. Pure string computation, no graph folding.
    """
    t = as_word(w).text
    return frozenset(free_reduce(t[:i]) for i in range(len(t) + 1)), free_reduce(t)
