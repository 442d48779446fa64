"""Shared test utilities: a minimal DOT reader, random graphs, and
structural checks on birooted graphs."""

import itertools
import random
import re

from adian.word_graph import BirootedGraph, graph_from_edges, positive_reach, sources_and_sinks

_NODE = re.compile(r'^\s*(\w+)\s*\[(.*)\]\s*;\s*$')
_EDGE = re.compile(r'^\s*(\w+)\s*->\s*(\w+)\s*\[(.*)\]\s*;\s*$')
_ATTR = re.compile(r'(\w+)\s*=\s*("[^"]*"|[\w.]+)')


def parse_dot(text):
    """Parse the subset of DOT emitted by ``to_dot``; raise on anything else."""
    lines = [ln for ln in text.strip().splitlines() if ln.strip()]
    head = re.match(r'^digraph\s+\w+\s*\{$', lines[0])
    if not head or lines[-1].strip() != "}":
        raise ValueError("not a digraph block")
    nodes, edges = {}, []
    for ln in lines[1:-1]:
        if re.match(r'^\s*\w+\s*=\s*\w+\s*;\s*$', ln):
            continue
        m = _EDGE.match(ln)
        if m:
            attrs = dict((k, v.strip('"')) for k, v in _ATTR.findall(m.group(3)))
            edges.append((m.group(1), attrs["label"], m.group(2)))
            continue
        m = _NODE.match(ln)
        if m:
            nodes[m.group(1)] = dict((k, v.strip('"')) for k, v in _ATTR.findall(m.group(2)))
            continue
        raise ValueError(f"unparseable DOT line: {ln!r}")
    for u, _, v in edges:
        if u not in nodes or v not in nodes:
            raise ValueError("edge to undeclared node")
    return nodes, edges


def random_graph(rng: random.Random, n_vertices: int, n_extra: int, letters="ab") -> BirootedGraph:
    """Connected random graph: a random spanning tree plus extra edges."""
    edges = []
    for v in range(1, n_vertices):
        u = rng.randrange(v)
        c = rng.choice(letters)
        edges.append((u, c, v) if rng.random() < 0.5 else (v, c, u))
    for _ in range(n_extra):
        edges.append((rng.randrange(n_vertices), rng.choice(letters), rng.randrange(n_vertices)))
    return graph_from_edges(edges, rng.randrange(n_vertices), rng.randrange(n_vertices))


def all_words(alphabet, max_len, min_len=1):
    for n in range(min_len, max_len + 1):
        for t in itertools.product(alphabet, repeat=n):
            yield "".join(t)


def check_involution(g: BirootedGraph):
    for u, c, v in g.edges():
        assert v in g.step(u, c)
        assert u in g.step(v, c.upper())
    for v in g.vertices:
        for c, targets in g.out_labels(v).items():
            for t in targets:
                assert v in g.step(t, c.swapcase())


def check_adian_positive_structure(g: BirootedGraph):
    """Deterministic, one source (start), one sink (end), every vertex on a
    positive transversal."""
    from adian.word_graph import has_positive_cycle

    assert g.is_deterministic()
    check_involution(g)
    sources, sinks = sources_and_sinks(g)
    assert sources == {g.start}
    assert sinks == {g.end}
    assert not has_positive_cycle(g)
    assert positive_reach(g, g.start) == set(g.vertices)
    assert positive_reach(g, g.end, backwards=True) == set(g.vertices)
