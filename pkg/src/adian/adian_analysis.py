"""Left/right graphs, the Adian (cycle-free) test, and overlap
classification of one-relation presentations."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

from .presentation import Presentation, WordLike


class MultipleRelationsError(ValueError):
    pass


@dataclass(frozen=True)
class SideGraph:
    """Undirected multigraph on the generators, one edge per relation."""

    nodes: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]

    def is_forest(self) -> bool:
        """No self-loops, no parallel edges, no cycles."""
        parent = {x: x for x in self.nodes}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in self.edges:
            ra, rb = find(a), find(b)
            if ra == rb:
                return False
            parent[max(ra, rb)] = min(ra, rb)
        return True


def _side_graph(p: Presentation, pick) -> SideGraph:
    edges = []
    for rel in p.relations:
        a, b = sorted((pick(rel.lhs.text), pick(rel.rhs.text)))
        edges.append((a, b))
    return SideGraph(tuple(p.alphabet), tuple(edges))


def build_left_graph(p: Presentation) -> SideGraph:
    return _side_graph(p, lambda s: s[0])


def build_right_graph(p: Presentation) -> SideGraph:
    return _side_graph(p, lambda s: s[-1])


def is_adian(p: Presentation) -> bool:
    return build_left_graph(p).is_forest() and build_right_graph(p).is_forest()


def border_array(t: str) -> list[int]:
    """KMP failure function: ``b[i]`` is the longest proper border of ``t[:i+1]``."""
    b = [0] * len(t)
    k = 0
    for i in range(1, len(t)):
        while k and t[i] != t[k]:
            k = b[k - 1]
        if t[i] == t[k]:
            k += 1
        b[i] = k
    return b


def longest_border(t: str) -> int:
    return border_array(t)[-1] if t else 0


def primitive_root(t: str) -> tuple[str, int]:
    """Return ``(x, n)`` with ``t == x * n`` and ``x`` primitive."""
    p = len(t) - longest_border(t)
    if len(t) % p == 0:
        return t[:p], len(t) // p
    return t, 1


class OverlapKind(str, enum.Enum):
    NONE = "none"
    POWER = "power"
    XSX = "xsx"
    XSXSX = "xsxsx"
    # (xs)^n x with n >= 3; the three-way case split above does not cover it
    PERIODIC = "periodic"


@dataclass(frozen=True)
class SelfOverlapForm:
    kind: OverlapKind
    x: str | None = None
    s: str | None = None
    n: int | None = None

    def expand(self) -> str:
        if self.kind is OverlapKind.POWER:
            return self.x * self.n
        if self.kind is OverlapKind.XSX:
            return self.x + self.s + self.x
        if self.kind is OverlapKind.XSXSX:
            return self.x + self.s + self.x + self.s + self.x
        if self.kind is OverlapKind.PERIODIC:
            return (self.x + self.s) * self.n + self.x
        raise ValueError("a word with no self-overlap has no decomposition")


def self_overlap_form(t: WordLike) -> SelfOverlapForm:
    """Decompose a self-overlapping positive word.

    Based on the longest proper border ``B`` and the smallest period
    ``p = |t| - |B|``:

    * ``p`` divides ``|t|``: ``t = x^n`` with ``x`` primitive;
    * ``|B| < |t|/2``: ``t = x s x`` with ``x = B``;
    * otherwise ``t = (xs)^q x`` with ``q = |t| // p``. ``q == 2`` is the
      ``xsxsx`` form (``xsx = B``), ``q >= 3`` is reported as ``periodic``.
    """
    t = str(t)
    b = longest_border(t)
    if b == 0:
        return SelfOverlapForm(OverlapKind.NONE)
    n = len(t)
    p = n - b
    if n % p == 0:
        return SelfOverlapForm(OverlapKind.POWER, x=t[:p], n=n // p)
    if 2 * b < n:
        return SelfOverlapForm(OverlapKind.XSX, x=t[:b], s=t[b:n - b])
    q, r = divmod(n, p)
    x, s = t[:r], t[r:p]
    if q == 2:
        return SelfOverlapForm(OverlapKind.XSXSX, x=x, s=s)
    return SelfOverlapForm(OverlapKind.PERIODIC, x=x, s=s, n=q)


def self_overlaps(t: WordLike) -> bool:
    return longest_border(str(t)) > 0


def is_proper_power(t: WordLike) -> bool:
    return primitive_root(str(t))[1] >= 2


class CrossOverlap(str, enum.Enum):
    NONE = "none"
    ONE_WAY_UV = "one_way_uv"
    ONE_WAY_VU = "one_way_vu"
    TWO_WAY = "two_way"


def _suffix_is_prefix(u: str, v: str) -> bool:
    """Some non-empty proper suffix of ``u`` is a prefix of ``v``."""
    return any(u[-k:] == v[:k] for k in range(1, min(len(u) - 1, len(v)) + 1))


def cross_overlap(u: WordLike, v: WordLike) -> CrossOverlap:
    u, v = str(u), str(v)
    uv = _suffix_is_prefix(u, v)
    vu = _suffix_is_prefix(v, u)
    if uv and vu:
        return CrossOverlap.TWO_WAY
    if uv:
        return CrossOverlap.ONE_WAY_UV
    if vu:
        return CrossOverlap.ONE_WAY_VU
    return CrossOverlap.NONE


class OverlapType(str, enum.Enum):
    NO_OVERLAP = "none"
    TYPE1 = "1"
    TYPE2A = "2a"
    TYPE2B = "2b"
    TYPE3 = "3"
    TYPE4 = "4"


class DecidableClass(str, enum.Enum):
    CLASS1 = "1"
    CLASS2 = "2"
    CLASS3 = "3"
    CLASS4 = "4"
    UNKNOWN = "unknown"


def _factors(t: str, max_len: int) -> set[str]:
    return {t[i:j] for i in range(len(t)) for j in range(i + 1, min(len(t), i + max_len) + 1)}


def share_proper_subword(u: str, v: str) -> bool:
    """Some non-empty proper subword of ``u`` is a proper subword of ``v``."""
    k = min(len(u), len(v)) - 1
    if k < 1:
        return False
    return bool(_factors(u, k) & _factors(v, k))


def overlap_type(u: WordLike, v: WordLike) -> OverlapType:
    """Overlap type of a relation whose sides are not subwords of each other."""
    u, v = str(u), str(v)
    cross = cross_overlap(u, v)
    if cross is CrossOverlap.TWO_WAY:
        return OverlapType.TYPE4
    if cross is not CrossOverlap.NONE:
        return OverlapType.TYPE3
    su, sv = self_overlaps(u), self_overlaps(v)
    if su and sv:
        return OverlapType.TYPE2B if share_proper_subword(u, v) else OverlapType.TYPE2A
    if su or sv:
        return OverlapType.TYPE1
    return OverlapType.NO_OVERLAP


@dataclass(frozen=True)
class Classification:
    is_adian: bool
    lhs_subword_of_rhs: bool
    rhs_subword_of_lhs: bool
    overlap_type: OverlapType | None
    decidable_class: DecidableClass

    @property
    def subword(self) -> str:
        if self.lhs_subword_of_rhs:
            return "lhs-in-rhs"
        if self.rhs_subword_of_lhs:
            return "rhs-in-lhs"
        return "none"

    def record(self) -> str:
        """Single-line ``key=value`` form used by the CLI."""
        ot = self.overlap_type.value if self.overlap_type is not None else "n/a"
        return (f"adian={str(self.is_adian).lower()} subword={self.subword} "
                f"overlap_type={ot} class={self.decidable_class.value}")


def classify(p: Presentation) -> Classification:
    if len(p.relations) != 1:
        raise MultipleRelationsError(
            f"classification needs exactly one relation, got {len(p.relations)}")
    rel = p.relations[0]
    u, v = rel.lhs.text, rel.rhs.text
    adian = is_adian(p)
    u_in_v, v_in_u = u in v, v in u
    if u_in_v or v_in_u:
        return Classification(adian, u_in_v, v_in_u, None, DecidableClass.UNKNOWN)
    ot = overlap_type(u, v)
    return Classification(adian, False, False, ot, _decidable_class(adian, u, v, ot))


def _decidable_class(adian: bool, u: str, v: str, ot: OverlapType) -> DecidableClass:
    if not adian:
        return DecidableClass.UNKNOWN
    if ot is OverlapType.NO_OVERLAP:
        return DecidableClass.CLASS1
    if ot is OverlapType.TYPE1:
        return DecidableClass.CLASS2
    if ot in (OverlapType.TYPE2A, OverlapType.TYPE2B):
        if not (is_proper_power(u) and is_proper_power(v)):
            return DecidableClass.CLASS3
        return DecidableClass.UNKNOWN
    if ot is OverlapType.TYPE3 and not self_overlaps(u) and not self_overlaps(v):
        return DecidableClass.CLASS4
    return DecidableClass.UNKNOWN


@lru_cache(maxsize=256)
def is_guaranteed(p: Presentation) -> bool:
    """Whether closure of every Schützenberger automaton is known to be finite."""
    if not p.relations:
        return True
    if len(p.relations) != 1:
        return False
    return classify(p).decidable_class is not DecidableClass.UNKNOWN


__all__ = [
    "Classification", "CrossOverlap", "DecidableClass", "MultipleRelationsError",
    "OverlapKind", "OverlapType", "SelfOverlapForm", "SideGraph", "border_array",
    "build_left_graph", "build_right_graph", "classify", "cross_overlap",
    "is_adian", "is_guaranteed", "is_proper_power", "overlap_type",
    "primitive_root", "self_overlap_form", "self_overlaps", "share_proper_subword",
]
