import random

import pytest

from wlplab import (FamilySpec, Graph, GraphSpecError, delete_closed_neighborhood,
                    delete_vertex, disjoint_union, make_family, parse_edge_list,
                    parse_family_spec, parse_spec)

from conftest import random_graph


def edges_of(g):
    return sorted(g.edges())


def test_path3():
    g = parse_spec("path:3")
    assert g.n == 3
    assert edges_of(g) == [(1, 2), (2, 3)]


def test_ce6_is_cycle_plus_chord():
    g = parse_spec("ce:6")
    assert g.n == 6
    assert g.edge_count == 7
    assert g.has_edge(4, 6)
    assert edges_of(delete_vertex(g, 6)) == edges_of(parse_spec("path:5"))


def test_bk_1_2_is_p3():
    g = parse_spec("bk:1,2")
    assert g.n == 3
    assert edges_of(g) == [(1, 2), (2, 3)]


@pytest.mark.parametrize("spec,n,edge_count", [
    ("path:7", 7, 6),
    ("cycle:7", 7, 7),
    ("pan:7", 8, 8),
    ("ce:7", 7, 8),
    ("tadpole:3,7", 10, 10),
    ("complete:7", 7, 21),
    ("empty:7", 7, 0),
    ("bk:3,7", 10, 15),
])
def test_family_sizes(spec, n, edge_count):
    g = parse_spec(spec)
    assert g.n == n
    assert g.edge_count == edge_count


@pytest.mark.parametrize("spec", [
    "path:0", "cycle:2", "pan:2", "ce:3", "tadpole:3,0", "complete:0",
    "empty:0", "bk:0,2", "bk:3,3", "bk:4,2",
])
def test_out_of_range_parameters(spec):
    with pytest.raises(GraphSpecError):
        parse_spec(spec)


def test_disjoint_union_examples():
    k2 = parse_spec("complete:2")
    g = disjoint_union(k2, k2)
    assert g.n == 4
    assert edges_of(g) == [(1, 2), (3, 4)]
    e2 = disjoint_union(parse_spec("empty:1"), parse_spec("empty:1"))
    assert e2 == parse_spec("empty:2")
    g = disjoint_union(parse_spec("path:2"), parse_spec("path:3"))
    assert g.n == 5 and g.edge_count == 3


def test_union_associative_up_to_relabeling():
    rng = random.Random(5)
    for _ in range(20):
        a, b, c = (random_graph(rng, rng.randint(1, 6)) for _ in range(3))
        left = disjoint_union(disjoint_union(a, b), c)
        right = disjoint_union(a, disjoint_union(b, c))
        assert left.n == right.n
        assert left.degree_multiset() == right.degree_multiset()


def test_parse_examples():
    assert parse_spec("path:5") == make_family(FamilySpec("path", (5,)))
    g = parse_spec("union(complete:3,empty:2)")
    assert g.n == 5 and g.edge_count == 3
    t = parse_spec("tadpole:3,5")
    assert t.n == 8 and t.edge_count == 8
    assert t.has_edge(3, 4) and t.has_edge(1, 2) and t.has_edge(1, 3)


def test_parse_errors_carry_offsets():
    with pytest.raises(GraphSpecError) as err:
        parse_spec("path:")
    assert err.value.offset == 5
    with pytest.raises(GraphSpecError) as err:
        parse_spec("union(path:3 ,path:4)")
    assert err.value.offset == 12
    with pytest.raises(GraphSpecError) as err:
        parse_spec("path:3junk")
    assert err.value.offset is not None
    with pytest.raises(GraphSpecError):
        parse_spec("tadpole:4,5")
    with pytest.raises(GraphSpecError):
        parse_spec("widget:5")


def test_canonical_round_trip():
    specs = [
        FamilySpec("path", (9,)),
        FamilySpec("cycle", (5,)),
        FamilySpec("tadpole3", (6,)),
        FamilySpec("bk", (2, 5)),
        FamilySpec("union", (FamilySpec("complete", (3,)),
                             FamilySpec("union", (FamilySpec("empty", (2,)),
                                                  FamilySpec("pan", (4,)))))),
    ]
    for spec in specs:
        text = spec.canonical()
        assert parse_family_spec(text) == spec
        assert parse_spec(text) == make_family(spec)


def test_edge_list_parsing(tmp_path):
    text = "# comment\n5\n1 2\n\n2 3\n# more\n4 5\n"
    g = parse_edge_list(text)
    assert g.n == 5 and edges_of(g) == [(1, 2), (2, 3), (4, 5)]
    path = tmp_path / "g.edges"
    path.write_text(text)
    assert parse_spec(f"file:{path}") == g
    with pytest.raises(GraphSpecError):
        parse_edge_list("3\n1 2\n1 2\n")  # duplicate
    with pytest.raises(GraphSpecError):
        parse_edge_list("3\n2 1\n")  # requires u < v
    with pytest.raises(GraphSpecError):
        parse_edge_list("3\n1 4\n")  # out of range
    with pytest.raises(GraphSpecError):
        parse_edge_list("nonsense\n")


def test_delete_operations():
    assert delete_closed_neighborhood(parse_spec("path:3"), 2).n == 0
    assert delete_closed_neighborhood(parse_spec("cycle:5"), 1) == parse_spec("path:2")
    assert delete_vertex(parse_spec("cycle:4"), 1) == parse_spec("path:3")
    with pytest.raises(GraphSpecError):
        delete_vertex(parse_spec("path:3"), 4)


@pytest.mark.parametrize("n", range(2, 31))
def test_delete_last_vertex_of_path(n):
    assert delete_vertex(parse_spec(f"path:{n}"), n) == parse_spec(f"path:{n - 1}")


@pytest.mark.parametrize("n", range(5, 31))
def test_ce_deletions_recover_paths(n):
    g = parse_spec(f"ce:{n}")
    assert delete_vertex(g, n) == parse_spec(f"path:{n - 1}")
    assert delete_closed_neighborhood(g, n) == parse_spec(f"path:{n - 4}")


def test_relabeling_preserves_order():
    g = parse_spec("path:6")
    h = delete_vertex(g, 3)  # survivors 1,2,4,5,6 -> labels 1..5
    assert h.n == 5
    assert edges_of(h) == [(1, 2), (3, 4), (4, 5)]


def test_graph_validation():
    with pytest.raises(GraphSpecError):
        Graph(2, (1, 0))  # asymmetric
    with pytest.raises(GraphSpecError):
        Graph(1, (1,))  # self-loop
    with pytest.raises(GraphSpecError):
        Graph(1, (2,))  # out of range
    with pytest.raises(GraphSpecError):
        Graph.from_edges(2, [(1, 1)])


def test_empty_graph_on_zero_vertices():
    g = Graph(0, ())
    assert g.n == 0 and g.edge_count == 0 and g.full_mask == 0
