"""Merge cut trees over a common vertex set into one minimum cut tree.

Inputs whose minimum cuts pairwise nest are merged by a divide-and-conquer
over region trees: pick two unseparated vertices, take the best minimum cut
any input offers, record it, restrict every input to each side, and recurse.
Cuts lost during restriction cross the chosen minimum cut and therefore
cannot themselves be minimum.

Region trees here are rooted trees whose leaves are the host vertices;
each internal edge carries the weight of the cut given by the leaves below
it.  They may be partial (fewer cuts than a full tree), which is how trees
over a member's face set are projected onto the original face set.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .cuttree import CutTree
from .errors import CrossingCutsError, DisconnectedGraphError

_ids = itertools.count()


def _fresh():
    return ("n", next(_ids))


def _nkey(v):
    """Sort key tolerating host vertices mixed with placeholder labels."""
    return (0, v, "") if isinstance(v, int) else (1, 0, repr(v))


@dataclass(frozen=True)
class LeafTree:
    """Rooted region tree: leaves are host vertices, internal edges carry cut
    weights (leaf edges carry None)."""

    root: object
    parent: dict        # node -> (parent, weight); root -> None

    def children_map(self):
        ch = {}
        for node, p in self.parent.items():
            if p is not None:
                ch.setdefault(p[0], []).append(node)
        return ch

    def leaves(self):
        ch = self.children_map()
        return frozenset(n for n in self.parent if n not in ch)

    def leaves_under(self, node):
        ch = self.children_map()
        out = set()
        stack = [node]
        while stack:
            x = stack.pop()
            kids = ch.get(x)
            if kids:
                stack.extend(kids)
            else:
                out.add(x)
        return frozenset(out)

    def _root_path(self, v):
        path = [v]
        while self.parent[path[-1]] is not None:
            path.append(self.parent[path[-1]][0])
        return path

    def min_cut(self, a, b):
        """Minimum internal edge weight on the leaf-to-leaf path, with the
        child node of the witnessing edge; None if no weighted edge lies on
        the path or a leaf is absent."""
        if a not in self.parent or b not in self.parent:
            return None
        up_a = self._root_path(a)
        in_a = set(up_a)
        up_b = []
        x = b
        while x not in in_a:
            up_b.append(x)
            x = self.parent[x][0]
        meet = x
        best = None
        for side in (up_a[:up_a.index(meet)], up_b):
            for node in side:
                w = self.parent[node][1]
                if w is not None and (best is None or w < best[0]):
                    best = (w, node)
        return best

    def split_at(self, node, down_label, up_label):
        """Split at an internal edge: the subtree below ``node`` (plus a new
        leaf ``down_label``) and the remainder (plus a new leaf ``up_label``),
        in that order."""
        below = {}
        ch = self.children_map()
        stack = [node]
        keep = {node}
        while stack:
            x = stack.pop()
            for y in ch.get(x, ()):
                keep.add(y)
                stack.append(y)
        for x in keep:
            if x != node:
                below[x] = self.parent[x]
        below[node] = None
        below[down_label] = (node, None)
        above = {x: p for x, p in self.parent.items() if x not in keep}
        above[up_label] = (self.parent[node][0], None)
        return (LeafTree(node, below),
                LeafTree(self.root, above))

    def restrict(self, keep, other_label):
        """The region tree over ``keep`` plus one contracted leaf for the
        rest, keeping every cut that does not cross the (keep, rest) split.

        A cut survives whether its region or its co-region nests in ``keep``;
        only genuinely crossing cuts are dropped, and those cannot be minimum
        when the split itself is a minimum cut.
        """
        leaves = self.leaves()
        keep = frozenset(keep) & leaves
        if not keep or keep == leaves:
            raise ValueError("restriction side must be a proper nonempty "
                             "subset of the leaves")
        rest = leaves - keep
        full = keep | {other_label}
        r0 = min(full, key=_nkey)
        cuts = {}
        for node, p in self.parent.items():
            if p is None or p[1] is None:
                continue
            side = self.leaves_under(node)
            comp = leaves - side
            if side & keep and side & rest and comp & keep and comp & rest:
                continue
            if not side & keep or keep <= side:
                continue        # separates nothing within the kept side
            s = frozenset(side & keep)
            if side & rest:
                s |= {other_label}
            if r0 in s:
                s = full - s
            if s not in cuts or p[1] < cuts[s]:
                cuts[s] = p[1]
        return leaf_tree_from_cuts(full, cuts)


def restrict_A(tree: LeafTree, a_set) -> LeafTree:
    """Region tree of the cuts nested inside ``a_set``; the complement is
    contracted to one leaf named ``"beta"``."""
    return tree.restrict(a_set, "beta")


def restrict_B(tree: LeafTree, b_set) -> LeafTree:
    """Mirror of restrict_A; complement leaf named ``"alpha"``."""
    return tree.restrict(b_set, "alpha")


def from_cut_tree(t: CutTree) -> LeafTree:
    """Complete region tree of a cut tree: one internal node and one leaf per
    cut-tree node."""
    internal = {v: _fresh() for v in t.nodes}
    root = internal[min(t.nodes)]
    parent = {root: None}
    adj = t.adjacency()
    stack = [min(t.nodes)]
    seen = {min(t.nodes)}
    while stack:
        u = stack.pop()
        parent[u] = (internal[u], None)
        for v, w, _ in sorted(adj[u]):
            if v not in seen:
                seen.add(v)
                parent[internal[v]] = (internal[u], w)
                stack.append(v)
    return LeafTree(root, parent)


def leaf_tree_from_cuts(nodes, cuts) -> LeafTree:
    """Region tree of a laminar family ``{side: weight}`` over ``nodes``;
    no side may contain ``min(nodes)``."""
    nodes = sorted(nodes, key=_nkey)
    sets = sorted(cuts, key=lambda s: (len(s), sorted(map(_nkey, s))))
    root = _fresh()
    parent = {root: None}
    node_of = {s: _fresh() for s in sets}
    for i, s in enumerate(sets):
        up = root
        for s2 in sets[i + 1:]:     # size order: first superset is smallest
            if s < s2:
                up = node_of[s2]
                break
        parent[node_of[s]] = (up, cuts[s])
    for v in nodes:
        host = root
        for s in sets:
            if v in s:
                host = node_of[s]
                break
        parent[v] = (host, None)
    return LeafTree(root, parent)


def project_member_tree(t: CutTree, face_map) -> LeafTree:
    """Project a cut tree over a member's faces onto the original face set.

    Each tree edge's bipartition is restricted to the faces ``face_map``
    knows about (boundary faces drop out); trivial sides vanish and duplicate
    sides keep their lightest weight.
    """
    nodes = sorted(set(face_map.values()))
    full = frozenset(nodes)
    r0 = nodes[0]
    cuts = {}
    for i in range(len(t.edges)):
        w = t.edges[i][2]
        side = frozenset(face_map[f] for f in t.bipartition(i) if f in face_map)
        if not side or side == full:
            continue
        if r0 in side:
            side = full - side
        if side not in cuts or w < cuts[side]:
            cuts[side] = w
    return leaf_tree_from_cuts(nodes, cuts)


def _all_pairs_query(trees, nodes):
    table = {}
    for x, y in itertools.combinations(nodes, 2):
        best = None
        for t in trees:
            res = t.min_cut(x, y)
            if res is not None and (best is None or res[0] < best):
                best = res[0]
        table[(x, y)] = best
    return table


def _cross(p, q, universe):
    return bool(p & q) and bool(p - q) and bool(q - p) and \
        bool(universe - (p | q))


def detect_crossing_minimum_cuts(leaf_trees, nodes):
    """Raise CrossingCutsError if two inputs hold crossing minimum cuts.

    A cut of an input is minimum when its weight equals the best answer over
    all inputs for some pair it separates.
    """
    universe = frozenset(nodes)
    table = _all_pairs_query(leaf_trees, nodes)
    candidates = []
    for i, t in enumerate(leaf_trees):
        ch = t.children_map()
        for node in ch:
            p = t.parent[node]
            if p is None or p[1] is None:
                continue
            side = t.leaves_under(node) & universe
            rest = universe - side
            w = p[1]
            if any(table[(x, y) if x < y else (y, x)] == w
                   for x in side for y in rest):
                candidates.append((i, side))
    for (i, p), (j, q) in itertools.combinations(candidates, 2):
        if i != j and _cross(p, q, universe):
            raise CrossingCutsError(
                f"minimum cuts of input trees {i} and {j} cross")


def merge_leaf_trees(leaf_trees, nodes, checksum: str = "") -> CutTree:
    """Core divide-and-conquer merge over region trees."""
    nodes = sorted(nodes)
    if len(nodes) == 1:
        return CutTree((nodes[0],), (), checksum)
    groups = [list(nodes)]
    gtrees = [list(leaf_trees)]
    tree_edges = []
    while True:
        gi = next((i for i, g in enumerate(groups) if len(g) > 1), None)
        if gi is None:
            break
        members = groups[gi]
        rtrees = gtrees[gi]
        a, b = members[0], members[1]
        best = None
        for idx, rt in enumerate(rtrees):
            res = rt.min_cut(a, b)
            if res is not None and (best is None or res[0] < best[0]):
                best = (res[0], idx, res[1])
        if best is None:
            raise DisconnectedGraphError(
                f"no input separates {a} from {b}")
        w, widx, wnode = best
        side_a = rtrees[widx].leaves_under(wnode)
        all_leaves = rtrees[widx].leaves()
        k = len(tree_edges)
        down, up = ("cut", k, "down"), ("cut", k, "up")
        new_a, new_b = [], []
        for idx, rt in enumerate(rtrees):
            if idx == widx:
                ra, rb = rt.split_at(wnode, down, up)
            else:
                ra = rt.restrict(side_a, down)
                rb = rt.restrict(all_leaves - side_a, up)
            new_a.append(ra)
            new_b.append(rb)
        nb = len(groups)
        groups[gi] = [v for v in members if v in side_a]
        gtrees[gi] = new_a
        groups.append([v for v in members if v not in side_a])
        gtrees.append(new_b)
        for j, (x, y, wj) in enumerate(tree_edges):
            if gi not in (x, y):
                continue
            ph_down, ph_up = ("cut", j, "down"), ("cut", j, "up")
            ph = ph_down if ph_down in all_leaves else ph_up
            if ph not in side_a:
                tree_edges[j] = (nb if x == gi else x,
                                 nb if y == gi else y, wj)
        tree_edges.append((gi, nb, w))
    label = {i: grp[0] for i, grp in enumerate(groups)}
    out = tuple(sorted((min(label[x], label[y]), max(label[x], label[y]), w)
                       for x, y, w in tree_edges))
    return CutTree(tuple(nodes), out, checksum)


def merge_cut_trees(trees, checksum: str = "") -> CutTree:
    """Merge cut trees sharing a node set; queries on the result equal the
    minimum over the inputs' queries.  Raises CrossingCutsError when two
    inputs carry crossing minimum cuts."""
    if not trees:
        raise ValueError("nothing to merge")
    nodes = sorted(trees[0].nodes)
    for t in trees[1:]:
        if sorted(t.nodes) != nodes:
            raise ValueError("input trees disagree on the node set")
    lts = [from_cut_tree(t) for t in trees]
    detect_crossing_minimum_cuts(lts, nodes)
    return merge_leaf_trees(lts, nodes, checksum)


def merged_collection_tree(collection, trees, checksum: str = "") -> CutTree:
    """Project each member's cut tree onto the original faces and merge."""
    lts = []
    nodes = None
    for m, t in zip(collection.members, trees):
        lts.append(project_member_tree(t, m.face_map))
        nodes = sorted(set(m.face_map.values()))
    detect_crossing_minimum_cuts(lts, nodes)
    return merge_leaf_trees(lts, nodes, checksum)
