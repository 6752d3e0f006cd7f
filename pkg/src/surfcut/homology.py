"""Z2 homology over embedded graphs: bases, signatures, covers, tight cycles.

Signatures are int bitmasks of length 2g.  The basis is built from a
tree-cotree split: a spanning tree T of the graph, a spanning tree L of the
dual avoiding T's edges, and the 2g leftover edges.  Each leftover edge closes
one primal basis cycle (through T) and one dual basis cycle (through L); an
edge's signature bit i records membership of its dual edge in dual basis
cycle i.  Primal and dual cycle i share exactly the leftover edge i, so the
primal basis cycles carry the unit signatures.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field

from .embed import EmbeddedGraph, ClosedCurve, dual, edge_of, twin, uncross_walk
from .errors import NoPathError


@dataclass(frozen=True)
class HomologyBasis:
    graph: EmbeddedGraph
    tree_edges: frozenset
    cotree_edges: frozenset
    leftover: tuple
    primal_cycles: tuple
    dual_cycles: tuple
    edge_signature: tuple = field(compare=False)

    @property
    def genus(self) -> int:
        return len(self.leftover) // 2

    def signature(self, x) -> int:
        s = 0
        for e in x:
            s ^= self.edge_signature[e]
        return s

    def dual_path(self, a: int, b: int) -> frozenset:
        """Fixed a-to-b path between faces, through the dual spanning tree."""
        parent = _tree_parents(_adjacency(dual(self.graph), self.cotree_edges), a)
        return frozenset(_tree_path(parent, a, b))


def format_signature(bits: int, length: int, extended=None) -> str:
    s = "".join("1" if bits >> i & 1 else "0" for i in range(length))
    if extended is not None:
        s += f"+{extended}"
    return s


def _adjacency(g, allowed):
    adj = [[] for _ in range(g.vertex_count)]
    for e in sorted(allowed):
        u, v, _ = g.edges[e]
        adj[u].append((v, e))
        adj[v].append((u, e))
    return adj


def _tree_parents(adj, root):
    """BFS parents: vertex -> (parent vertex, connecting edge)."""
    parent = {root: None}
    queue = [root]
    for u in queue:
        for v, e in adj[u]:
            if v not in parent:
                parent[v] = (u, e)
                queue.append(v)
    return parent


def _tree_path(parent, root, v):
    edges = []
    while v != root:
        v, e = parent[v]
        edges.append(e)
    return edges


def homology_basis(g: EmbeddedGraph) -> HomologyBasis:
    d = dual(g)
    adj = _adjacency(g, range(g.edge_count))
    parent = _tree_parents(adj, 0)
    tree = frozenset(e for p in parent.values() if p for _, e in [p])
    dual_parent = _tree_parents(
        _adjacency(d, (e for e in range(g.edge_count) if e not in tree)), 0)
    cotree = frozenset(e for p in dual_parent.values() if p for _, e in [p])
    leftover = tuple(e for e in range(g.edge_count)
                     if e not in tree and e not in cotree)
    primal_cycles = []
    dual_cycles = []
    for x in leftover:
        u, v, _ = g.edges[x]
        pu = set(_tree_path(parent, 0, u))
        pv = set(_tree_path(parent, 0, v))
        primal_cycles.append(frozenset({x} | (pu ^ pv)))
        fu, fv, _ = d.edges[x]
        qu = set(_tree_path(dual_parent, 0, fu))
        qv = set(_tree_path(dual_parent, 0, fv))
        dual_cycles.append(frozenset({x} | (qu ^ qv)))
    sig = [0] * g.edge_count
    for i, cyc in enumerate(dual_cycles):
        for e in cyc:
            sig[e] |= 1 << i
    return HomologyBasis(g, tree, cotree, leftover,
                         tuple(primal_cycles), tuple(dual_cycles), tuple(sig))


def subgraph_signature(x, basis: HomologyBasis, ab=None):
    """Signature of an edge set; with ``ab = (face_a, face_b)`` also returns
    the extended path-crossing bit."""
    bits = basis.signature(x)
    if ab is None:
        return bits
    a, b = ab
    path = basis.dual_path(a, b)
    return bits, len(frozenset(x) & path) % 2


def is_null_homologous(x, basis: HomologyBasis) -> bool:
    x = frozenset(x)
    g = basis.graph
    deg = [0] * g.vertex_count
    for e in x:
        u, v, _ = g.edges[e]
        deg[u] += 1
        deg[v] += 1
    if any(d % 2 for d in deg):
        raise ValueError("edge set is not even")
    return basis.signature(x) == 0


@dataclass(frozen=True)
class CoverGraph:
    """Explicit 2^{2g}-sheet homology cover of the basis's host graph."""

    base: EmbeddedGraph
    basis: HomologyBasis
    vertices: tuple       # (base vertex, sheet)
    edges: tuple          # ((u, s), (v, s ^ sig(e)), weight, base edge)


def cover_graph(g: EmbeddedGraph, basis: HomologyBasis) -> CoverGraph:
    sheets = 1 << (2 * basis.genus)
    vertices = tuple((v, s) for v in range(g.vertex_count)
                     for s in range(sheets))
    edges = []
    for e, (u, v, w) in enumerate(g.edges):
        se = basis.edge_signature[e]
        for s in range(sheets):
            edges.append(((u, s), (v, s ^ se), w, e))
    return CoverGraph(g, basis, vertices, tuple(edges))


def _dart_steps(g):
    """For each dart d, the darts leaving head(d), with edge and weight."""
    out = {}
    for v, rot in enumerate(g.rotations):
        moves = []
        for d in rot:
            e = edge_of(d)
            moves.append((d, e, g.edges[e][2]))
        out[v] = moves
    return out


def tight_cycle(g: EmbeddedGraph, basis: HomologyBasis, h: int) -> frozenset:
    """Minimum-weight weakly simple cycle with signature ``h``.

    Dart-level non-backtracking Dijkstra in the homology cover; the winning
    closed walk is uncrossed so cut_along can consume it.
    """
    walk = tight_cycle_walk(g, basis, h)
    return walk.edge_set()


def tight_cycle_walk(g: EmbeddedGraph, basis: HomologyBasis, h: int) -> ClosedCurve:
    moves = _dart_steps(g)
    sig = basis.edge_signature
    best = None     # (weight, dart sequence)
    for e0 in range(g.edge_count):
        u0, v0, w0 = g.edges[e0]
        if u0 == v0 and sig[e0] == h:
            if best is None or w0 < best[0]:
                best = (w0, [2 * e0])
            continue
        res = _closed_walk_from(g, moves, sig, 2 * e0, h,
                                best[0] if best else None)
        if res is not None and (best is None or res[0] < best[0]):
            best = res
    if best is None:
        raise NoPathError(f"no cycle with signature {h}")
    edges = [edge_of(d) for d in best[1]]
    if len(set(edges)) != len(edges):
        raise NoPathError(f"minimum closed walk in class {h} repeats an edge")
    return uncross_walk(g, best[1])


def _closed_walk_from(g, moves, sig, d0, h, cap):
    """Cheapest non-backtracking closed walk starting with dart d0 in class h."""
    e0 = edge_of(d0)
    start_v = g.dart_vertex(d0)
    w0 = g.edges[e0][2]
    start = (d0, sig[e0])
    dist = {start: w0}
    back = {start: None}
    heap = [(w0, d0, sig[e0])]
    while heap:
        w, d, s = heapq.heappop(heap)
        if w > dist.get((d, s), -1):
            continue
        if cap is not None and w >= cap:
            return None
        e = edge_of(d)
        head = g.dart_vertex(twin(d))
        if head == start_v and s == h and e != e0:
            walk = []
            state = (d, s)
            while state is not None:
                walk.append(state[0])
                state = back[state]
            walk.reverse()
            return (w, walk)
        for d2, e2, w2 in moves[head]:
            if e2 == e:
                continue
            s2 = s ^ sig[e2]
            nw = w + w2
            if nw < dist.get((d2, s2), float("inf")):
                dist[(d2, s2)] = nw
                back[(d2, s2)] = (d, s)
                heapq.heappush(heap, (nw, d2, s2))
    return None


def min_even_subgraph(g: EmbeddedGraph, basis: HomologyBasis, h: int):
    """Minimum-weight even edge set with signature ``h``, as (edge set, weight).

    Built by composing tight cycles: shortest path over the signature group
    with tight cycle weights as step costs.  The symmetric difference of the
    chosen cycles achieves the same weight as the best sum.
    """
    sheets = 1 << (2 * basis.genus)
    if h == 0:
        return frozenset(), 0
    cycles = {}
    for c in range(1, sheets):
        try:
            x = tight_cycle(g, basis, c)
        except NoPathError:
            continue
        cycles[c] = (sum(g.weight(e) for e in x), x)
    dist = {0: (0, frozenset())}
    heap = [(0, 0)]
    while heap:
        w, s = heapq.heappop(heap)
        if w > dist[s][0]:
            continue
        for c, (wc, xc) in cycles.items():
            s2 = s ^ c
            nw = w + wc
            if s2 not in dist or nw < dist[s2][0]:
                dist[s2] = (nw, dist[s][1] ^ xc)
                heapq.heappush(heap, (nw, s2))
    if h not in dist:
        raise NoPathError(f"no even subgraph with signature {h}")
    witness = dist[h][1]
    return witness, sum(g.weight(e) for e in witness)


def min_even_subgraph_oracle(g: EmbeddedGraph, basis: HomologyBasis, h: int):
    """Exhaustive reference: best even subset with signature h (small graphs)."""
    m = g.edge_count
    if m > 20:
        raise ValueError("oracle limited to small graphs")
    best = None
    for mask in range(1 << m):
        x = [e for e in range(m) if mask >> e & 1]
        deg = [0] * g.vertex_count
        ok = True
        for e in x:
            u, v, _ = g.edges[e]
            deg[u] += 1
            deg[v] += 1
        if any(dg % 2 for dg in deg):
            continue
        if basis.signature(x) != h:
            continue
        w = sum(g.weight(e) for e in x)
        if best is None or w < best[1]:
            best = (frozenset(x), w)
    if best is None:
        raise NoPathError(f"no even subgraph with signature {h}")
    return best


def boundary_vertices(g: EmbeddedGraph, face: int):
    return sorted({g.dart_vertex(d) for d in g.faces()[face]})


def tight_path(h_graph: EmbeddedGraph, f_start: int, f_end: int,
               signatures, target: int):
    """Minimum-weight nonempty path between two boundary faces with the given
    edge-signature sum, as a dart sequence.

    ``signatures[e]`` labels each edge of ``h_graph``; classes are whatever
    group those labels generate (typically inherited from the parent graph
    through the surgery's edge map).  Raises NoPathError if the class is
    unreachable or the winner is not edge-simple.
    """
    starts = set(boundary_vertices(h_graph, f_start))
    ends = set(boundary_vertices(h_graph, f_end))
    moves = _dart_steps(h_graph)
    dist = {}
    back = {}
    heap = []
    for v in sorted(starts):
        for d, e, w in moves[v]:
            state = (d, signatures[e])
            if w < dist.get(state, float("inf")):
                dist[state] = w
                back[state] = None
                heapq.heappush(heap, (w, d, signatures[e]))
    best = None
    while heap:
        w, d, s = heapq.heappop(heap)
        if w > dist.get((d, s), -1):
            continue
        e = edge_of(d)
        head = h_graph.dart_vertex(twin(d))
        if head in ends and s == target:
            best = (w, d, s)
            break
        for d2, e2, w2 in moves[head]:
            if e2 == e:
                continue
            s2 = s ^ signatures[e2]
            nw = w + w2
            if nw < dist.get((d2, s2), float("inf")):
                dist[(d2, s2)] = nw
                back[(d2, s2)] = (d, s)
                heapq.heappush(heap, (nw, d2, s2))
    if best is None:
        raise NoPathError(f"no boundary-to-boundary path with signature {target}")
    darts = []
    state = (best[1], best[2])
    while state is not None:
        darts.append(state[0])
        state = back[state]
    darts.reverse()
    edges = [edge_of(d) for d in darts]
    if len(set(edges)) != len(edges):
        raise NoPathError(f"minimum walk in class {target} repeats an edge")
    return tuple(darts), best[0]
