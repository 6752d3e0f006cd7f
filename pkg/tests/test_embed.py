import pytest

from surfcut import gen
from surfcut.embed import (
    EmbeddedGraph,
    boundary_of_faces,
    crosses,
    crosses_component_based,
    curves_from_edge_set,
    cut_along,
    cycle_decomposition,
    dual,
    format_graph,
    parse_graph,
)
from surfcut.errors import CurveShapeError, GraphFormatError, SeparatingCutError

ROW0 = frozenset({0, 1, 2})        # wraparound row cycle in the 3x3 torus grid
COL0 = frozenset({9, 12, 15})      # wraparound column cycle through vertex 0


def euler_ok(g):
    return g.vertex_count - g.edge_count + g.face_count == 2 - 2 * g.genus


class TestFacesAndGenus:
    def test_triangle(self):
        g = gen.triangle()
        assert g.face_count == 2
        assert g.genus == 0

    def test_k4(self):
        g = gen.k4()
        assert g.vertex_count == 4
        assert g.edge_count == 6
        assert g.face_count == 4
        assert g.genus == 0
        assert all(len(f) == 3 for f in g.faces())

    def test_self_loop_sphere(self):
        g = EmbeddedGraph(1, ((0, 0, 1),), ((0, 1),))
        assert g.face_count == 2
        assert g.genus == 0

    def test_torus_grid(self):
        g = gen.torus_grid(3)
        assert g.vertex_count == 9
        assert g.edge_count == 18
        assert g.face_count == 9
        assert g.genus == 1
        assert all(len(f) == 4 for f in g.faces())

    @pytest.mark.parametrize("k", [3, 4, 5])
    def test_torus_grid_sizes(self, k):
        g = gen.torus_grid(k, seed=7)
        assert g.genus == 1
        assert euler_ok(g)

    def test_double_torus(self):
        g = gen.double_torus_one_vertex()
        assert g.face_count == 1
        assert g.genus == 2

    def test_added_handle(self):
        g = gen.torus_grid(3)
        g2 = gen.add_edge_between_faces(g, 0, 4)
        assert g2.genus == 2
        assert euler_ok(g2)

    @pytest.mark.parametrize("n,seed", [(5, 1), (6, 2), (7, 3)])
    def test_triangulations(self, n, seed):
        g = gen.planar_triangulation(n, seed)
        assert g.vertex_count == n
        assert g.edge_count == 3 * n - 6
        assert g.genus == 0
        assert euler_ok(g)


class TestDual:
    def test_k4_dual(self):
        d = dual(gen.k4())
        assert d.vertex_count == 4
        assert d.edge_count == 6
        assert all(len(r) == 3 for r in d.rotations)
        assert d.genus == 0

    def test_torus_grid_self_dual(self):
        g = gen.torus_grid(3)
        d = dual(g)
        assert (d.vertex_count, d.edge_count, d.face_count) == (9, 18, 9)
        assert d.genus == 1
        assert all(len(r) == 4 for r in d.rotations)

    @pytest.mark.parametrize("make", [
        lambda: gen.torus_grid(3, seed=5),
        lambda: gen.planar_triangulation(7, 9),
        gen.k4,
        gen.double_torus_one_vertex,
    ])
    def test_genus_and_weights_preserved(self, make):
        g = make()
        d = dual(g)
        assert d.genus == g.genus
        assert sorted(w for _, _, w in d.edges) == sorted(w for _, _, w in g.edges)
        dd = dual(d)
        assert dd.vertex_count == g.vertex_count
        assert dd.genus == g.genus
        assert [e[2] for e in dd.edges] == [e[2] for e in g.edges]


class TestBoundaryOfFaces:
    def test_single_face(self):
        g = gen.k4()
        b = boundary_of_faces({0}, g)
        assert b == frozenset(edge for edge in range(6)
                              if g.face_of(2 * edge) == 0
                              or g.face_of(2 * edge + 1) == 0)
        assert len(b) == 3

    def test_complement_symmetry(self):
        g = gen.torus_grid(3)
        fs = {0, 1, 4}
        comp = set(range(g.face_count)) - fs
        assert boundary_of_faces(fs, g) == boundary_of_faces(comp, g)

    def test_all_but_one(self):
        g = gen.k4()
        fs = set(range(g.face_count)) - {2}
        assert boundary_of_faces(fs, g) == boundary_of_faces({2}, g)

    def test_empty_rejected(self):
        g = gen.k4()
        with pytest.raises(ValueError):
            boundary_of_faces(set(), g)
        with pytest.raises(ValueError):
            boundary_of_faces(set(range(g.face_count)), g)


class TestCutAlong:
    def test_torus_row_cut(self):
        g = gen.torus_grid(3)
        h = cut_along(g, ROW0)
        assert h.genus == 0
        assert len(h.boundary_faces) == 2
        assert h.edge_count == 21
        assert h.vertex_count == 12
        assert euler_ok(h)
        ordinary = h.ordinary_faces()
        assert len(ordinary) == 9
        mapped = [h.origin_face_map[f] for f in ordinary]
        assert sorted(mapped) == list(range(9))

    def test_torus_column_cut(self):
        g = gen.torus_grid(3)
        h = cut_along(g, COL0)
        assert h.genus == 0
        assert len(h.boundary_faces) == 2
        assert h.edge_count == 21

    def test_face_boundary_cut_separates(self):
        g = gen.k4()
        with pytest.raises(SeparatingCutError):
            cut_along(g, boundary_of_faces({0}, g))

    def test_origin_edge_map(self):
        g = gen.torus_grid(3)
        h = cut_along(g, ROW0)
        for e in range(18):
            assert h.origin_edge_map[e] == e
        copies = sorted(h.origin_edge_map[e] for e in range(18, 21))
        assert copies == sorted(ROW0)
        for e, (u, v, w) in enumerate(h.edges):
            assert w == g.weight(h.origin_edge_map[e])

    def test_cut_then_path_gives_disk(self):
        from surfcut.embed import OpenCurve
        g = gen.torus_grid(3)
        h = cut_along(g, ROW0)
        # column through vertex 0 becomes a boundary-to-boundary path in h
        darts = (18, 24, 30)
        starts = {h.dart_vertex(18)}
        ends = {h.dart_head(30)}
        f0 = next(f for f in h.boundary_faces
                  if any(h.dart_vertex(d) in starts for d in h.faces()[f]))
        f1 = next(f for f in h.boundary_faces
                  if any(h.dart_vertex(d) in ends for d in h.faces()[f]))
        assert f0 != f1
        disk = cut_along(h, frozenset({9, 12, 15}),
                         curves=[OpenCurve(darts, f0, f1)])
        assert disk.genus == 0
        assert len(disk.boundary_faces) == 1
        assert disk.edge_count == 24
        assert len(disk.ordinary_faces()) == 9
        assert euler_ok(disk)

    def test_genus2_two_cuts(self):
        g = gen.add_edge_between_faces(gen.torus_grid(3), 0, 4)
        assert g.genus == 2
        h = cut_along(g, ROW0)
        assert h.genus == 1
        assert len(h.boundary_faces) == 2
        assert euler_ok(h)


class TestCrosses:
    def test_disjoint_face_boundaries(self):
        g = gen.planar_triangulation(7, seed=4)
        faces = g.faces()
        b1 = boundary_of_faces({0}, g)
        for f in range(1, g.face_count):
            b2 = boundary_of_faces({f}, g)
            if b1 & b2:
                continue
            assert not crosses(b1, b2, g)

    def test_torus_row_vs_column(self):
        g = gen.torus_grid(3)
        assert crosses(ROW0, COL0, g)
        assert crosses(COL0, ROW0, g)

    def test_self(self):
        g = gen.torus_grid(3)
        assert not crosses(ROW0, ROW0, g)

    def test_parallel_rows(self):
        g = gen.torus_grid(3)
        row1 = frozenset({3, 4, 5})
        assert not crosses(ROW0, row1, g)

    def test_component_agreement(self):
        g = gen.torus_grid(3)
        sep = boundary_of_faces({0, 1, 2}, g)   # separating even subgraph
        for h1 in (ROW0, COL0, frozenset({3, 4, 5})):
            assert crosses(h1, sep, g) == crosses_component_based(h1, sep, g)


class TestCycleDecomposition:
    def test_single_face_boundary(self):
        g = gen.k4()
        b = boundary_of_faces({0}, g)
        assert cycle_decomposition(b, g) == [b]

    def test_two_disjoint_boundaries(self):
        g = gen.planar_triangulation(8, seed=11)
        for f1 in range(g.face_count):
            for f2 in range(f1 + 1, g.face_count):
                b1 = boundary_of_faces({f1}, g)
                b2 = boundary_of_faces({f2}, g)
                if b1 & b2:
                    continue
                verts1 = {v for e in b1 for v in g.endpoints(e)}
                verts2 = {v for e in b2 for v in g.endpoints(e)}
                if verts1 & verts2:
                    continue
                got = cycle_decomposition(b1 | b2, g)
                assert sorted(got, key=sorted) == sorted([b1, b2], key=sorted)
                return
        pytest.skip("no disjoint face pair in this instance")

    def test_figure_eight(self):
        # two triangles sharing one vertex, embedded in the sphere
        edges = ((0, 1, 1), (1, 2, 1), (2, 0, 1),
                 (0, 3, 1), (3, 4, 1), (4, 0, 1))
        rotations = ((0, 5, 11, 6), (1, 2), (3, 4), (7, 8), (9, 10))
        g = EmbeddedGraph(5, edges, rotations)
        assert g.genus == 0
        h = frozenset(range(6))
        parts = cycle_decomposition(h, g)
        assert len(parts) == 2
        assert frozenset().union(*parts) == h
        assert all(len(p) == 3 for p in parts)
        assert not crosses(parts[0], parts[1], g)

    def test_odd_rejected(self):
        g = gen.k4()
        with pytest.raises(ValueError):
            cycle_decomposition({0, 1}, g)

    def test_curves_partition(self):
        g = gen.torus_grid(4)
        x = frozenset({0, 1, 2, 3})
        walks = curves_from_edge_set(g, x)
        assert len(walks) == 1
        assert walks[0].edge_set() == x


class TestTextFormat:
    def test_roundtrip(self):
        g = gen.torus_grid(3, seed=2)
        assert parse_graph(format_graph(g)) == g

    def test_comments_and_decimals(self):
        text = """# tiny triangle
V 3
E 3
0 0 1 0.5
1 1 2 1
2 2 0 2.25
R 0 0 5
R 1 1 2
R 2 3 4
"""
        g = parse_graph(text)
        assert [w for _, _, w in g.edges] == [2, 4, 9]
        assert g.genus == 0

    @pytest.mark.parametrize("bad", [
        "V 1\nE 0\n",          # missing rotation line
        "V 2\nE 1\n0 0 1 1\nR 0 0\nR 1 0\n",     # dart twice
        "V 1\nE 1\n0 0 0 -3\nR 0 0 1\n",         # negative weight
        "V x\nE 0\n",
    ])
    def test_rejects_malformed(self, bad):
        with pytest.raises(GraphFormatError):
            parse_graph(bad)


class TestCurveShapeErrors:
    def test_weakly_simple_diagonal_cut(self):
        # row + column through one vertex re-pairs into a single weakly
        # simple non-crossing closed curve; cutting along it is legal
        g = gen.torus_grid(3)
        h = cut_along(g, ROW0 | COL0)
        assert h.genus == 0
        assert h.edge_count == 24
        assert len(h.boundary_faces) == 2
        assert euler_ok(h)

    def test_two_disjoint_cycles_rejected(self):
        g = gen.torus_grid(3)
        with pytest.raises(CurveShapeError):
            cut_along(g, ROW0 | frozenset({3, 4, 5}))
