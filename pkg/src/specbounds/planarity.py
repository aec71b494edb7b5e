"""Desk-scale planarity: search for a K5 or K3,3 minor.

Planarity is invariant under deleting vertices of degree <= 1 and
suppressing vertices of degree 2, so the search reduces first and then
recurses over single-edge deletions and contractions, memoised on the
labelled edge set.
"""
from __future__ import annotations

from .graph import Graph
from .invariants import check_size

Edges = frozenset[tuple[int, int]]


def _relabel(edges: set[tuple[int, int]]) -> Edges:
    verts = sorted({v for e in edges for v in e})
    index = {v: i for i, v in enumerate(verts)}
    return frozenset((min(index[a], index[b]), max(index[a], index[b])) for a, b in edges)


def _adjacency(edges) -> dict[int, set[int]]:
    adj: dict[int, set[int]] = {}
    for a, b in edges:
        adj.setdefault(a, set()).add(b)
        adj.setdefault(b, set()).add(a)
    return adj


def _reduce(edges: Edges) -> Edges:
    es = set(edges)
    changed = True
    while changed:
        changed = False
        adj = _adjacency(es)
        for v, nb in adj.items():
            if len(nb) == 1:
                (w,) = nb
                es.discard((min(v, w), max(v, w)))
                changed = True
                break
            if len(nb) == 2:
                a, b = sorted(nb)
                es.discard((min(v, a), max(v, a)))
                es.discard((min(v, b), max(v, b)))
                es.add((a, b))
                changed = True
                break
    return _relabel(es)


def _is_kuratowski(edges: Edges) -> bool:
    adj = _adjacency(edges)
    n, m = len(adj), len(edges)
    if n == 5 and m == 10:
        return True
    if n == 6 and m == 9 and all(len(nb) == 3 for nb in adj.values()):
        # cubic on 6 vertices: K3,3 iff bipartite (the other one is the prism)
        colour = {0: 0}
        stack = [0]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in colour:
                    colour[w] = 1 - colour[v]
                    stack.append(w)
                elif colour[w] == colour[v]:
                    return False
        return True
    return False


def _contract(edges: Edges, a: int, b: int) -> Edges:
    out = set()
    for u, v in edges:
        u = a if u == b else u
        v = a if v == b else v
        if u != v:
            out.add((min(u, v), max(u, v)))
    return frozenset(out)


def _has_minor(edges: Edges, memo: dict[Edges, bool]) -> bool:
    edges = _reduce(edges)
    if edges in memo:
        return memo[edges]
    n = len({v for e in edges for v in e})
    m = len(edges)
    if n < 5 or m < 9:
        result = False
    elif m > 3 * n - 6:
        # Euler bound: too dense to be planar
        result = True
    elif _is_kuratowski(edges):
        result = True
    else:
        result = any(
            _has_minor(edges - {e}, memo) or _has_minor(_contract(edges, *e), memo) for e in sorted(edges)
        )
    memo[edges] = result
    return result


def has_kuratowski_minor(g: Graph) -> bool:
    check_size(g, "planar")
    return _has_minor(frozenset(g.edges()), {})


def is_planar_small(g: Graph) -> bool:
    return not has_kuratowski_minor(g)
