import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from specbounds import families
from specbounds.families import FamilySpec, generate
from specbounds.graph import (
    Graph,
    GraphError,
    cartesian_product,
    disjoint_union,
    empty_graph,
    from_edges,
    induced_subgraph,
    is_bipartite,
    join,
)


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    pairs = [(v, w) for v in range(n) for w in range(v + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return from_edges(n, chosen)


def test_from_edges_single_edge():
    g = from_edges(2, [(0, 1)])
    assert g.m == 1 and g.has_edge(1, 0)


def test_from_edges_cycle():
    g = from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert g.m == 4
    assert g == families.cycle(4)


def test_from_edges_dedup():
    g = from_edges(3, [(0, 1), (0, 1)])
    assert g.m == 1 and g.degree(2) == 0


@pytest.mark.parametrize("edges", [[(0, 3)], [(-1, 0)], [(1, 1)]])
def test_from_edges_rejects(edges):
    with pytest.raises(GraphError):
        from_edges(3, edges)


def test_graph_rejects_asymmetric():
    with pytest.raises(GraphError):
        Graph(2, (0b10, 0))


def test_induced_path_in_cycle():
    sub, labels = induced_subgraph(families.cycle(5), {0, 1, 2, 3})
    assert sub == families.path(4) and labels == [0, 1, 2, 3]
    assert sub.m == 3


def test_induced_empty_set():
    sub, labels = induced_subgraph(families.complete(4), set())
    assert sub.n == 0 and labels == []


def test_induced_independent_in_petersen():
    g = families.petersen()
    # frozen: a 4-set found independent by the brute-force alpha oracle (alpha = 4)
    assert oracles.alpha(g.n, oracles.edge_list(g)) == 4
    sub, _ = induced_subgraph(g, {0, 2, 8, 9})
    assert sub.n == 4 and sub.m == 0


def test_induced_out_of_range():
    with pytest.raises(GraphError):
        induced_subgraph(families.cycle(4), {7})


def test_is_bipartite_examples():
    part = is_bipartite(families.cycle(4))
    assert (part.left, part.right) == ({0, 2}, {1, 3})
    assert is_bipartite(families.cycle(5)) is None
    part = is_bipartite(empty_graph(3))
    assert part.left == {0, 1, 2} and not part.right


def test_is_bipartite_matches_odd_cycle_oracle(corpus):
    for line, g in corpus:
        assert (is_bipartite(g) is None) == oracles.has_odd_cycle(g.n, oracles.edge_list(g)), line


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=8))
def test_is_bipartite_random(g):
    part = is_bipartite(g)
    assert (part is None) == oracles.has_odd_cycle(g.n, oracles.edge_list(g))
    if part is not None:
        assert part.left | part.right == set(range(g.n))
        assert all((v in part.left) != (w in part.left) for v, w in g.edges())


def test_cartesian_small_cases():
    k2 = families.complete(2)
    sq = cartesian_product(k2, k2)
    assert sq.n == 4 and sq.m == 4 and all(d == 2 for d in sq.degrees())
    cube = cartesian_product(families.cycle(4), k2)
    assert cube.n == 8 and cube.m == 12
    assert all(d == 3 for d in cube.degrees()) and is_bipartite(cube) is not None


def test_cartesian_counts_all_pairs_up_to_5(corpus):
    small = [g for _, g in corpus if 1 <= g.n <= 5]
    for g1 in small:
        for g2 in small:
            p = cartesian_product(g1, g2)
            assert p.n == g1.n * g2.n
            assert p.m == g1.m * g2.n + g2.m * g1.n


def test_cartesian_rejects_empty():
    with pytest.raises(GraphError):
        cartesian_product(empty_graph(0), families.complete(2))


def test_join_and_union():
    assert join(families.complete(1), families.complete(1)) == families.complete(2)
    two_k2 = disjoint_union(families.complete(2), families.complete(2))
    h2 = join(two_k2, two_k2)
    assert h2.n == 8 and h2.m == 20
    u = disjoint_union(families.complete(3), families.complete(3))
    assert u.n == 6 and u.m == 6


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=6), graphs(max_n=6))
def test_join_edge_count(g1, g2):
    assert join(g1, g2).m == g1.m + g2.m + g1.n * g2.n
    assert disjoint_union(g1, g2).m == g1.m + g2.m


def test_complement_involution(corpus):
    for _, g in corpus[:200]:
        c = g.complement()
        assert c.m == g.n * (g.n - 1) // 2 - g.m
        assert c.complement() == g


# ---------------------------------------------------------------- families


def test_multipartite_octahedron():
    g = generate("multipartite:3,2")
    assert g.n == 6 and g.m == 12
    assert all(d == 4 for d in g.degrees())


@pytest.mark.parametrize("k,t", [(k, t) for k in range(2, 6) for t in range(1, 5)])
def test_multipartite_edge_formula(k, t):
    g = families.complete_multipartite(k, t)
    assert g.n == k * t and g.m == math.comb(k, 2) * t * t


def test_regular_bipartite_full_circulant_is_k33():
    g = generate(FamilySpec("regbip", (3, 3)))
    assert g == families.complete_bipartite(3, 3)


@pytest.mark.parametrize("d,t", [(d, t) for t in range(1, 6) for d in range(1, t + 1)])
def test_regular_bipartite_structure(d, t):
    g = families.regular_bipartite(d, t)
    assert g.n == 2 * t and g.m == d * t
    assert all(x == d for x in g.degrees())
    part = is_bipartite(g)
    assert part is not None


def test_join_family_h2():
    g = generate("joinH:2")
    assert g.n == 8 and g.m == 20
    assert all(d == 5 for d in g.degrees())


def test_grid():
    g = generate("grid:3,3")
    assert g.n == 9 and g.m == 12 and is_bipartite(g) is not None


@pytest.mark.parametrize("text", ["regbip:4,3", "multipartite:1,3", "cycle:2", "nope:1", "grid:2", "path:0"])
def test_family_spec_rejects(text):
    with pytest.raises(GraphError):
        FamilySpec.parse(text)


def test_family_spec_roundtrip():
    spec = FamilySpec.parse("regbip:2,5")
    assert str(spec) == "regbip:2,5" and spec.params == (2, 5)


def test_petersen():
    g = families.petersen()
    assert g.n == 10 and g.m == 15 and all(d == 3 for d in g.degrees())
