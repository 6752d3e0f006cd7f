"""Hierarchical paths with midpoint pointers and split-point search.

A path over unit edges is stored as a tree: atoms are single edges and
composites hold a child sequence, the total edge count, and a pointer to the
child containing the path's midpoint vertex.  A split point — a vertex with
at least a 1/8 fraction of the path (minus one) strictly on each side — is
found by descending one composite level per step, looking only at lengths
and midpoint pointers, so the work is bounded by the nesting depth.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class HPath:
    """Atomic edge (no children) or composite path of sub-paths."""

    children: tuple = ()
    length: int = 1              # edge count
    mid_child: int = 0           # index of the child whose span holds the
                                 # midpoint vertex (composites only)
    offsets: tuple = ()          # child start offsets, in edges

    @property
    def is_atom(self) -> bool:
        return not self.children

    @property
    def depth(self) -> int:
        if self.is_atom:
            return 0
        return 1 + max(c.depth for c in self.children)


def build_hpath(shape) -> HPath:
    """Build an HPath from a nesting shape: an int is a run of that many
    atomic edges; a list nests sub-shapes.  Lengths, offsets and midpoint
    pointers are computed bottom-up."""
    if isinstance(shape, int):
        if shape < 1:
            raise ValueError("runs must have at least one edge")
        if shape == 1:
            return HPath()
        return _composite(tuple(HPath() for _ in range(shape)))
    children = tuple(build_hpath(s) for s in shape)
    if not children:
        raise ValueError("composite needs at least one child")
    if len(children) == 1:
        return children[0]
    return _composite(children)


def _composite(children) -> HPath:
    offsets = []
    total = 0
    for c in children:
        offsets.append(total)
        total += c.length
    mid = total // 2             # midpoint vertex index
    mid_child = 0
    for i, c in enumerate(children):
        if offsets[i] <= mid <= offsets[i] + c.length:
            mid_child = i
            break
    return HPath(children, total, mid_child, tuple(offsets))


def expand(q: HPath):
    """Flat vertex index list 0..length, walking every atom so stored
    lengths are verified against the actual structure."""
    atoms = 0
    stack = [q]
    while stack:
        node = stack.pop()
        if node.is_atom:
            atoms += 1
        else:
            if node.length != sum(c.length for c in node.children):
                raise ValueError("stored length disagrees with children")
            stack.extend(node.children)
    if atoms != q.length:
        raise ValueError("stored length disagrees with atom count")
    return list(range(atoms + 1))


@dataclass
class SplitStats:
    """Counters filled in by find_split_point."""

    cases: dict = field(default_factory=lambda: {1: 0, 2: 0, 3: 0})
    descents: int = 0


def _check_mid(node: HPath, start: int):
    """Midpoint child of a composite with its global span; errors if the
    stored pointer does not cover the midpoint vertex."""
    child = node.children[node.mid_child]
    e = start + node.offsets[node.mid_child]
    f = e + child.length
    mid = start + node.length // 2
    if not e <= mid <= f:
        raise ValueError("midpoint pointer does not cover the midpoint")
    return child, e, f


def find_split_point(q: HPath, stats: SplitStats = None) -> int:
    """A split point of the path, as a global vertex index.

    The returned vertex keeps at least floor(length/8) - 1 vertices strictly
    on each side.  Short paths (< 8 edges) return the exact midpoint.  Each
    descent consumes one composite level, so descents never exceed the depth.
    """
    total = q.length
    m = total // 2
    if total < 8 or q.is_atom:
        return m
    # segment [c, d] starts as the whole path; uv is its midpoint child
    node, c, d = q, 0, total
    uv, e, f = _check_mid(q, 0)
    while True:
        if m <= e:                       # midpoint before the middle child
            if stats:
                stats.cases[1] += 1
            return e
        if m >= f:                       # midpoint after the middle child
            if stats:
                stats.cases[2] += 1
            return f
        if (f - e) * 4 <= total:         # middle child is short enough
            if stats:
                stats.cases[3] += 1
            return e
        if uv.is_atom:
            raise ValueError("atom longer than a quarter of the path")
        if stats:
            stats.descents += 1
        node, c, d = uv, e, f
        uv, e, f = _check_mid(node, c)
