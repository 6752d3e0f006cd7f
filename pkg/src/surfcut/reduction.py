"""Reduce a positive-genus instance to a collection of annotated planar ones.

Each member is produced by a sequence of surgeries: cutting along a tight
cycle (which drops the genus and records the cycle as an annotation), or
cutting along a tight cycle together with a tight path between the two fresh
boundary faces (which also drops the genus but leaves the annotation alone).
Queries are then answered as a minimum over the members' dual cut trees, with
each member's annotation weight added as a uniform offset.
"""

from __future__ import annotations

from dataclasses import dataclass

from .embed import (
    EmbeddedGraph,
    OpenCurve,
    boundary_of_faces,
    cut_along_curves,
    format_graph,
)
from .errors import (
    CurveShapeError,
    GenusLimitError,
    NoPathError,
    SeparatingCutError,
)
from .homology import homology_basis, tight_cycle_walk, tight_path


@dataclass(frozen=True)
class AnnotatedPlanar:
    """A genus-0 member of the collection.

    ``annotation`` holds the cycles cut away on the path down to this member,
    as edge sets of the original graph; ``annotation_weight`` is their total
    weight.  ``face_map`` sends each ordinary face of ``graph`` to the
    original face it came from, and ``edge_map`` sends each edge likewise.
    """

    graph: EmbeddedGraph
    annotation: tuple
    annotation_weight: int
    face_map: dict
    edge_map: tuple
    provenance: tuple
    cuts: tuple = ()        # per level: ("cycle", C) or ("pair", C, P), original ids

    def face_preimage(self):
        return {orig: f for f, orig in self.face_map.items()}


@dataclass(frozen=True)
class Collection:
    members: tuple
    attempted: int          # member slots before pruning
    skipped: tuple          # human-readable reasons for pruned slots

    def __len__(self):
        return len(self.members)


def expected_size(genus: int) -> int:
    """Member slots the recursion opens for a given genus."""
    n = 1
    for g in range(1, genus + 1):
        n *= (1 << (2 * g)) + (1 << (4 * g))
    return n


def tight_cycles_all(g: EmbeddedGraph):
    """One tight cycle per homology class, as edge sets (empty for genus 0)."""
    if g.genus == 0:
        return []
    walks, _ = _tight_cycle_walks(g, homology_basis(g))
    return [walks[h].edge_set() for h in sorted(walks)]


def _tight_cycle_walks(g, basis):
    walks = {}
    skipped = []
    for h in range(1 << (2 * g.genus)):
        try:
            walks[h] = tight_cycle_walk(g, basis, h)
        except NoPathError as exc:
            skipped.append(f"cycle class {h}: {exc}")
    return walks, skipped


def _inherited_signatures(child, basis):
    """Pull the parent's edge signatures through the surgery's edge map."""
    return [basis.edge_signature[child.origin_edge_map.get(e, e)]
            for e in range(child.edge_count)]


def _cut_cycle(g, walk):
    """Cut along one tight cycle; returns the cut graph and its two fresh
    boundary faces."""
    h = cut_along_curves(g, [walk])
    fresh = sorted(h.new_boundary_faces)
    if len(fresh) != 2:
        raise CurveShapeError(f"cycle cut opened {len(fresh)} boundary faces")
    return h, fresh[0], fresh[1]


def cycle_path_pairs(g: EmbeddedGraph):
    """Tight cycle-path pairs, as pairs of edge sets of ``g``.

    For each non-separating tight cycle C and each signature class, the
    minimum path between the two boundary faces of the cut graph; classes
    without a valid path are skipped.
    """
    basis = homology_basis(g)
    walks, _ = _tight_cycle_walks(g, basis)
    pairs = []
    for h in sorted(walks):
        try:
            cut, b1, b2 = _cut_cycle(g, walks[h])
        except (SeparatingCutError, CurveShapeError):
            continue
        sigs = _inherited_signatures(cut, basis)
        for target in range(1 << (2 * g.genus)):
            try:
                darts, _ = tight_path(cut, b1, b2, sigs, target)
            except NoPathError:
                continue
            path = frozenset(cut.origin_edge_map.get(e, e)
                             for e in (d // 2 for d in darts))
            pairs.append((walks[h].edge_set(), path))
    return pairs


def planar_collection(g: EmbeddedGraph, genus_max: int = 2,
                      dedup: bool = False) -> Collection:
    """Recursively cut ``g`` down to a collection of annotated planar members.

    Every member keeps composed face and edge maps back to ``g``.  Raises
    GenusLimitError above ``genus_max``.
    """
    if g.genus > genus_max:
        raise GenusLimitError(
            f"genus {g.genus} exceeds the configured maximum {genus_max}")
    members = []
    skipped = []
    attempted = [0]
    ordinary = frozenset(g.ordinary_faces())

    def finish(h, edge_map, face_map, annotation, prov, cuts):
        if frozenset(face_map.values()) != ordinary:
            raise AssertionError("member lost an original face")
        weight = sum(g.weight(e) for cyc in annotation for e in cyc)
        members.append(AnnotatedPlanar(h, tuple(annotation), weight,
                                       dict(face_map), tuple(edge_map),
                                       tuple(prov), tuple(cuts)))

    def compose(parent_edge_map, parent_face_map, child):
        edge_map = tuple(parent_edge_map[child.origin_edge_map.get(e, e)]
                         for e in range(child.edge_count))
        face_map = {f: parent_face_map[p]
                    for f, p in child.origin_face_map.items()
                    if p in parent_face_map}
        return edge_map, face_map

    def recurse(h, edge_map, face_map, annotation, prov, cuts):
        if h.genus == 0:
            attempted[0] += 1
            finish(h, edge_map, face_map, annotation, prov, cuts)
            return
        slot = expected_size(h.genus - 1)
        basis = homology_basis(h)
        walks, missing = _tight_cycle_walks(h, basis)
        classes = 1 << (2 * h.genus)
        for reason in missing:
            attempted[0] += slot * (1 + classes)
            skipped.append(f"{'/'.join(prov) or 'root'}: {reason}")
        for c in sorted(walks):
            walk = walks[c]
            try:
                cut, b1, b2 = _cut_cycle(h, walk)
            except (SeparatingCutError, CurveShapeError) as exc:
                attempted[0] += slot * (1 + classes)
                skipped.append(
                    f"{'/'.join(prov) or 'root'}: cycle class {c} cut: {exc}")
                continue
            cyc_orig = frozenset(edge_map[e] for e in walk.edge_set())
            em, fm = compose(edge_map, face_map, cut)
            recurse(cut, em, fm, annotation + [cyc_orig],
                    prov + [f"cycle h={c}"], cuts + [("cycle", cyc_orig)])
            sigs = _inherited_signatures(cut, basis)
            for target in range(classes):
                try:
                    darts, _ = tight_path(cut, b1, b2, sigs, target)
                    both = cut_along_curves(
                        cut, [OpenCurve(darts, b1, b2)])
                except (NoPathError, SeparatingCutError,
                        CurveShapeError) as exc:
                    attempted[0] += slot
                    skipped.append(f"{'/'.join(prov) or 'root'}: "
                                   f"pair h={c} p={target}: {exc}")
                    continue
                path_orig = frozenset(em[d // 2] for d in darts)
                em2, fm2 = compose(em, fm, both)
                recurse(both, em2, fm2, annotation,
                        prov + [f"pair h={c} p={target}"],
                        cuts + [("pair", cyc_orig, path_orig)])

    identity = tuple(range(g.edge_count))
    recurse(g, identity, {f: f for f in ordinary}, [], [], [])
    if dedup:
        members = _dedup(members)
    return Collection(tuple(members), attempted[0], tuple(skipped))


def _dedup(members):
    seen = set()
    out = []
    for m in members:
        key = (format_graph(m.graph),
               tuple(sorted(m.graph.boundary_faces)),
               tuple(sorted(m.face_map.items())),
               tuple(sorted(tuple(sorted(c)) for c in m.annotation)))
        if key not in seen:
            seen.add(key)
            out.append(m)
    return out


def member_trees(collection: Collection, checksum: str = ""):
    """One dual cut tree per member, annotation offset already applied."""
    from .cuttree import dual_cut_tree
    return [dual_cut_tree(m.graph, m.annotation_weight, checksum)
            for m in collection.members]


def collection_min_cut(collection: Collection, trees, a: int, b: int):
    """Minimum separating-subgraph weight between two original faces.

    Returns ``(weight, member index)``; ties go to the lowest member index.
    """
    if a == b:
        raise ValueError("the two faces must differ")
    best = None
    for i, (m, t) in enumerate(zip(collection.members, trees)):
        inv = m.face_preimage()
        if a not in inv or b not in inv:
            raise KeyError(f"face {a if a not in inv else b} is not an "
                           f"ordinary face of the original graph")
        w = t.path_min(inv[a], inv[b])
        if best is None or w < best[0]:
            best = (w, i)
    if best is None:
        raise ValueError("empty collection")
    return best


def lifted_witness(member: AnnotatedPlanar, tree, a: int, b: int):
    """The member's minimum separating subgraph for original faces (a, b),
    lifted back to an edge set of the original graph (member cut edges plus
    all annotation cycles)."""
    inv = member.face_preimage()
    edge = tree.path_min_edge(inv[a], inv[b])
    side = tree.bipartition(edge)
    cut = boundary_of_faces(side, member.graph)
    lifted = {member.edge_map[e] for e in cut}
    for cyc in member.annotation:
        lifted |= cyc
    return frozenset(lifted)
