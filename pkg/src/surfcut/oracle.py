"""Ground-truth engines: brute-force cuts and exhaustive separating subgraphs."""

from __future__ import annotations

import itertools

from .embed import EmbeddedGraph, dual
from .cuttree import max_flow_min_cut
from .errors import NoPathError
from .homology import homology_basis, subgraph_signature


def all_pairs_min_cut(n, edges, limit=64):
    """Exact min-cut value and source side for every vertex pair."""
    if n > limit:
        raise ValueError(f"n={n} above the oracle limit {limit}")
    table = {}
    for x in range(n):
        for y in range(x + 1, n):
            table[(x, y)] = max_flow_min_cut(n, edges, x, y)
    return table


def brute_force_min_cut(n, edges, s, t):
    """Minimum st-cut by enumerating all bipartitions (n <= ~16)."""
    best = None
    rest = [v for v in range(n) if v not in (s, t)]
    for k in range(len(rest) + 1):
        for extra in itertools.combinations(rest, k):
            side = {s, *extra}
            w = sum(wt for u, v, wt in edges if (u in side) != (v in side))
            if best is None or w < best[0]:
                best = (w, frozenset(side))
    return best


def even_subgraphs(g: EmbeddedGraph):
    """All even edge subsets, enumerated as the cycle space (tree + chords)."""
    adj = [[] for _ in range(g.vertex_count)]
    for e, (u, v, _) in enumerate(g.edges):
        adj[u].append((v, e))
        adj[v].append((u, e))
    parent = {0: None}
    order = [0]
    for u in order:
        for v, e in adj[u]:
            if v not in parent:
                parent[v] = (u, e)
                order.append(v)
    tree = {p[1] for p in parent.values() if p}
    chords = [e for e in range(g.edge_count) if e not in tree]

    def tree_path(v):
        out = set()
        while parent[v] is not None:
            u, e = parent[v]
            out.add(e)
            v = u
        return out

    fundamental = []
    for e in chords:
        u, v, _ = g.edges[e]
        fundamental.append(frozenset({e} ^ (tree_path(u) ^ tree_path(v))))
    for mask in range(1 << len(chords)):
        x = frozenset()
        for i, cyc in enumerate(fundamental):
            if mask >> i & 1:
                x = x ^ cyc
        yield x


def min_separating_subgraph_exhaustive(g: EmbeddedGraph, a: int, b: int):
    """Minimum even null-homologous edge set separating faces a and b.

    Exhaustive over the cycle space; returns (edge set, weight).
    """
    basis = homology_basis(g)
    best = None
    for x in even_subgraphs(g):
        bits, ext = subgraph_signature(x, basis, ab=(a, b))
        if bits != 0 or ext != 1:
            continue
        w = sum(g.weight(e) for e in x)
        if best is None or w < best[1]:
            best = (x, w)
    if best is None:
        raise NoPathError(f"no separating subgraph for faces {a}, {b}")
    return best


def min_face_cut(g: EmbeddedGraph, a: int, b: int):
    """Min cut between two faces of g, computed as max-flow in the dual."""
    d = dual(g)
    return max_flow_min_cut(d.vertex_count,
                            [(u, v, w) for u, v, w in d.edges], a, b)


def is_simple_cycle(x, g: EmbeddedGraph) -> bool:
    x = frozenset(x)
    if not x:
        return False
    deg = {}
    for e in x:
        u, v, _ = g.edges[e]
        if u == v:
            return len(x) == 1
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    if any(d != 2 for d in deg.values()):
        return False
    # connectivity over x only
    verts = sorted(deg)
    seen = {verts[0]}
    stack = [verts[0]]
    adj = {}
    for e in x:
        u, v, _ = g.edges[e]
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    while stack:
        u = stack.pop()
        for v in adj[u]:
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return len(seen) == len(verts)


def separates_faces(x, g: EmbeddedGraph, a: int, b: int) -> bool:
    """True if removing the duals of x disconnects face a from face b."""
    d = dual(g)
    x = frozenset(x)
    adj = [[] for _ in range(d.vertex_count)]
    for e, (u, v, _) in enumerate(d.edges):
        if e not in x:
            adj[u].append(v)
            adj[v].append(u)
    seen = {a}
    stack = [a]
    while stack:
        u = stack.pop()
        for v in adj[u]:
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return b not in seen
