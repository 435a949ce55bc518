import pytest

from conftest import DIAGRAMS, FIXTURES, family, load_generator, move_pairs, shipped_mgrs, valid_diagram_files
from oracles import brute_flows, brute_mgr_colorings
from mgrkit.algebra import cyclic_group, symmetric_group
from mgrkit.diagram import (
    Crossing,
    SurfaceDiagram,
    Vertex,
    count_colorings_mgr,
    count_per_flow,
    enumerate_flows,
    format_diagram,
    parse_diagram,
    per_flow_colorings,
    reverse_circle,
    strands,
    surface_stats,
)
from mgrkit.diagram.coloring import _MgrTables, _mgr_problem
from mgrkit.errors import DiagramError, InvalidOperation, ParseError, YOrientationError


def load(name):
    return parse_diagram((DIAGRAMS / name).read_text())


DIAGRAM_IDS = [p.relative_to(DIAGRAMS).as_posix() for p in valid_diagram_files()]
SMALL = [n for n in DIAGRAM_IDS if len(load(n).arcs) <= 5]


class TestParsing:
    def test_sink_rejected(self):
        with pytest.raises(YOrientationError, match="sink"):
            load("theta_sink.d")

    def test_source_rejected(self):
        with pytest.raises(YOrientationError, match="source"):
            parse_diagram("arc a b c\nvertex cyclic a:out b:out c:out\nvertex cyclic a:in c:in b:in\n")

    def test_undeclared_arc(self):
        with pytest.raises(DiagramError, match="z"):
            load("undeclared_arc.d")

    def test_dangling_end(self):
        with pytest.raises(DiagramError):
            load("dangling.d")

    def test_error_carries_line(self):
        with pytest.raises(ParseError) as info:
            parse_diagram("arc a\n\n# note\nbogus a b\n")
        assert info.value.line == 4

    def test_bad_sign(self):
        with pytest.raises(ParseError):
            parse_diagram("arc a b\ncrossing a b b x\n")

    def test_circle_mismatch(self):
        text = (DIAGRAMS / "clasp.d").read_text().replace("circle a4", "circle a2")
        with pytest.raises(DiagramError):
            parse_diagram(text)

    def test_merge_and_split_syntax_agree_with_cyclic(self):
        a = parse_diagram("arc p q r\nvertex merge p q r\nvertex split r p q\n")
        b = parse_diagram("arc p q r\nvertex cyclic p:in r:out q:in\nvertex cyclic r:in p:out q:out\n")
        assert [v.roles for v in a.vertices] == [v.roles for v in b.vertices]
        assert [v.is_merge for v in b.vertices] == [True, False]

    @pytest.mark.parametrize("name", DIAGRAM_IDS)
    def test_format_roundtrip(self, name):
        D = load(name)
        E = parse_diagram(format_diagram(D))
        assert format_diagram(E) == format_diagram(D)
        assert E.arcs == D.arcs and E.crossings == D.crossings


def test_fixture_files_match_generator():
    gen = load_generator()
    for rel, text in gen.render().items():
        assert (FIXTURES / rel).read_text() == text, rel


def test_builder_rejects_bad_closure():
    with pytest.raises(ValueError):
        strands("dd").join(0).close()
    with pytest.raises(ValueError):
        strands("du").join(0)


class TestStats:
    @pytest.mark.parametrize(
        "name, expect",
        [
            ("circle.d", (0, 1, 0, 2, 0)),
            ("two_circles.d", (0, 2, 0, 4, 0)),
            ("hopf.d", (0, 2, 0, 4, 0)),
            ("theta.d", (2, 3, -1, 3, 0)),
            ("clasp.d", (2, 4, -1, 5, 0)),
            ("theta_crossed.d", (2, 3, -1, 1, 1)),
        ],
    )
    def test_values(self, name, expect):
        st = surface_stats(load(name))
        got = (st.graph_vertices, st.graph_edges, st.euler_characteristic, st.boundary_components, st.genus)
        assert got == expect

    @pytest.mark.parametrize("name", DIAGRAM_IDS)
    def test_euler_relation(self, name):
        st = surface_stats(load(name))
        assert st.euler_characteristic == 2 * st.connected_components - 2 * st.genus - st.boundary_components
        assert st.genus >= 0 and st.boundary_components >= 1

    def test_twists_do_not_change_boundary_count(self):
        for p in sorted(DIAGRAMS.glob("theta_twist_*.d")):
            assert surface_stats(load(p.name)).boundary_components == 3

    def test_str(self):
        assert str(surface_stats(load("theta.d"))) == "V=2 E=3 chi=-1 boundary=3 genus=0"


class TestFlows:
    @pytest.mark.parametrize("name", DIAGRAM_IDS)
    @pytest.mark.parametrize("n", [2, 3])
    def test_abelian_flow_count(self, name, n):
        D = load(name)
        st = surface_stats(D)
        # abelian flows are H^1 of the graph, whose rank is conn - chi
        expected = n ** (st.connected_components - st.euler_characteristic)
        assert len(enumerate_flows(D, cyclic_group(n))) == expected

    @pytest.mark.parametrize("name", SMALL)
    def test_nonabelian_flows_match_brute_force(self, name):
        D = load(name)
        G = symmetric_group(3)
        assert len(enumerate_flows(D, G)) == brute_flows(D, G)

    def test_hopf_flows_over_s3(self):
        # a flow on two linked circles is a commuting pair
        G = symmetric_group(3)
        commuting = sum(G.product(a, b) == G.product(b, a) for a in range(6) for b in range(6))
        assert len(enumerate_flows(load("hopf.d"), G)) == commuting == 18


class TestColorings:
    @pytest.mark.parametrize("name", SMALL)
    @pytest.mark.parametrize("mgr", ["zfamily dihedral 3", "zfamily cyclic 3", "conj group sym3", "S3 action"])
    def test_matches_brute_force(self, name, mgr):
        D = load(name)
        M = shipped_mgrs()[mgr]
        if M.size ** len(D.arcs) > 60_000:
            pytest.skip("too many assignments for the brute-force oracle")
        assert count_colorings_mgr(D, M) == brute_mgr_colorings(D, M)

    @pytest.mark.parametrize("name", [n for n in DIAGRAM_IDS[::3] if len(load(n).arcs) <= 7])
    def test_component_product_equals_flat_search(self, name):
        M = shipped_mgrs()["S3 action"]
        P = _mgr_problem(load(name), _MgrTables(M))
        assert P.count() == P.count_flat() == sum(1 for _ in P.solutions())

    def test_circle_counts(self):
        D = load("circle.d")
        F = family("zfamily dihedral 3")
        assert str(count_per_flow(D, F)) == "3^2"
        assert str(count_per_flow(load("clasp.d"), F)) == "3^6 9^2"

    @pytest.mark.parametrize("name", ["clasp.d", "theta_twist_2_m1_1.d", "hopf.d"])
    def test_per_flow_sums_to_mgr_count(self, name):
        D = load(name)
        F = family("zfamily conj sym3")
        from mgrkit.family import associated_mgr

        assert sum(c for _, c in per_flow_colorings(D, F)) == count_colorings_mgr(D, associated_mgr(F))

    def test_workers_do_not_change_result(self):
        D = load("clasp.d")
        F = family("zfamily conj sym3")
        assert per_flow_colorings(D, F, workers=3) == per_flow_colorings(D, F, workers=1)


class TestReverseCircle:
    def test_twice_is_identity(self):
        D = load("clasp.d")
        R = reverse_circle(D, 0)
        assert R.crossings != D.crossings
        assert format_diagram(reverse_circle(R, 0)) == format_diagram(D)

    def test_by_arc_name(self):
        D = load("hopf.d")
        assert format_diagram(reverse_circle(D, D.circles[1][0])) == format_diagram(reverse_circle(D, 1))

    def test_non_circle_rejected(self):
        D = load("clasp.d")
        with pytest.raises(InvalidOperation):
            reverse_circle(D, "a1")
        with pytest.raises(InvalidOperation):
            reverse_circle(D, 5)

    @pytest.mark.parametrize("name", [n for n in DIAGRAM_IDS if load(n).circles])
    @pytest.mark.parametrize("mgr", ["S3 action", "zfamily conj sym3", "zfamily cyclic 3"])
    def test_counts_preserved(self, name, mgr):
        D = load(name)
        M = shipped_mgrs()[mgr]
        for k in range(len(D.circles)):
            assert count_colorings_mgr(reverse_circle(D, k), M) == count_colorings_mgr(D, M)


@pytest.mark.parametrize("name, before, after", move_pairs(), ids=[m[0] for m in move_pairs()])
def test_move_pair_counts_agree(name, before, after):
    A, B = parse_diagram(before.read_text()), parse_diagram(after.read_text())
    for key, M in shipped_mgrs().items():
        assert count_colorings_mgr(A, M) == count_colorings_mgr(B, M), key


def test_crossing_sign_is_checked():
    with pytest.raises(DiagramError):
        Crossing("a", "b", "c", 0)


def test_direct_build():
    D = SurfaceDiagram.build(["a", "b", "c"], [], [Vertex.split("a", "b", "c"), Vertex.merge("b", "c", "a")])
    assert surface_stats(D).boundary_components == 3
    assert len(D.edges) == 3 and not D.circles
