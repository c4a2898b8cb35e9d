import pytest

from helpers import naive_contains, naive_cycle_count, random_graph, seeded_rng

from turan_reg.graphs import (
    Graph,
    GraphError,
    complement,
    complete_bipartite,
    complete_graph,
    contains_subgraph,
    count_cliques,
    count_complete_bipartite,
    count_cycles,
    count_stars,
    common_neighbors,
    cycle_graph,
    disjoint_union,
    empty_graph,
    format_edge_list,
    from_edges,
    graph6_decode,
    graph6_encode,
    is_triangle_free,
    odd_girth,
    parse_edge_list,
    path_graph,
    petersen_graph,
    star_graph,
    total_cliques,
    triangle_count,
    two_coloring,
)


# frozen extremal graphs at (order, size, max degree) = (8, 18, 5)
def extremal_k3_8_18():
    edges = [(0, 2), (2, 3), (3, 1), (1, 0)]
    edges += [(a, v) for a in (4, 5, 6) for v in (0, 1, 2, 3)]
    edges += [(4, 5), (6, 7)]
    return from_edges(8, edges)


def extremal_ktotal_8_18():
    edges = [(i, j) for i in range(5) for j in range(i + 1, 5)]
    edges += [(5, 6), (6, 7), (5, 7)]
    edges += [(5, 0), (5, 2), (5, 3), (6, 1), (6, 4)]
    return from_edges(8, edges)


def test_from_edges_examples():
    k3 = from_edges(3, [(0, 1), (1, 2), (0, 2)])
    assert k3.edge_count == 3
    c5 = from_edges(5, [(i, (i + 1) % 5) for i in range(5)])
    assert c5.is_regular(2)
    assert from_edges(4, []).degree_sequence() == (0, 0, 0, 0)
    # duplicates are idempotent
    g = from_edges(3, [(0, 1), (1, 0), (0, 1)])
    assert g.edge_count == 1


def test_from_edges_errors():
    with pytest.raises(GraphError):
        from_edges(3, [(0, 3)])
    with pytest.raises(GraphError):
        from_edges(3, [(1, 1)])
    with pytest.raises(GraphError):
        from_edges(3, [(-1, 0)])


def test_complement_examples():
    assert complement(complete_graph(4)).edge_count == 0
    c5 = cycle_graph(5)
    from turan_reg.canon import canonical_label

    assert canonical_label(complement(c5)) == canonical_label(c5)
    star = complement(disjoint_union(complete_graph(8), empty_graph(1)))
    assert star.degree(8) == 8
    assert all(star.degree(v) == 1 for v in range(8))


def test_complement_involution():
    rng = seeded_rng()
    for _ in range(50):
        g = random_graph(rng, rng.randint(1, 12))
        assert complement(complement(g)) == g


def test_count_cliques_examples():
    assert count_cliques(complete_graph(5), 3) == 10
    assert count_cliques(cycle_graph(5), 3) == 0
    g = extremal_ktotal_8_18()
    assert g.edge_count == 18
    assert max(g.degree(v) for v in range(8)) == 5
    assert count_cliques(g, 3) == 15
    assert count_cliques(g, 4) == 6
    assert count_cliques(g, 5) == 1


def test_extremal_k3_census():
    g = extremal_k3_8_18()
    assert g.edge_count == 18
    assert max(g.degree(v) for v in range(8)) == 5
    assert count_cliques(g, 3) == 16
    assert count_cliques(g, 4) == 4
    assert count_cliques(g, 5) == 0


def test_total_cliques():
    k3 = complete_graph(3)
    assert total_cliques(k3) == 4  # 3 edges + 1 triangle
    gb = extremal_ktotal_8_18()
    assert total_cliques(gb) - count_cliques(gb, 2) == 22
    ga = extremal_k3_8_18()
    assert total_cliques(ga) - count_cliques(ga, 2) == 20


def test_total_cliques_matches_sum():
    rng = seeded_rng()
    for _ in range(30):
        g = random_graph(rng, rng.randint(2, 9))
        assert total_cliques(g) == sum(count_cliques(g, t) for t in range(2, g.n + 1))


def test_count_cliques_edges():
    rng = seeded_rng()
    for _ in range(30):
        g = random_graph(rng, rng.randint(2, 10))
        assert count_cliques(g, 2) == g.edge_count
        assert triangle_count(g) == count_cliques(g, 3)


def test_common_neighbors():
    assert len(common_neighbors(complete_graph(4), 0, 1)) == 2
    assert common_neighbors(cycle_graph(5), 0, 1) == ()
    assert len(common_neighbors(complete_bipartite(3, 3), 0, 1)) == 3
    with pytest.raises(GraphError):
        common_neighbors(complete_graph(3), 1, 1)


def test_odd_girth_examples():
    assert odd_girth(cycle_graph(7)) == 7
    assert odd_girth(complete_bipartite(3, 3)) is None
    pet = petersen_graph()
    assert odd_girth(pet) == 5
    # exhaustive cycle-scan oracle for the Petersen value
    assert naive_cycle_count(pet, 3) == 0
    assert naive_cycle_count(pet, 5) == 12


def test_odd_girth_vs_two_coloring():
    rng = seeded_rng()
    for _ in range(120):
        g = random_graph(rng, rng.randint(1, 9))
        og = odd_girth(g)
        coloring = two_coloring(g)
        assert (og is None) == (coloring is not None)
        if coloring is not None:
            for u, v in g.edges():
                assert coloring[u] != coloring[v]
        else:
            lengths = [m for m in range(3, g.n + 1, 2) if naive_cycle_count(g, m) > 0]
            assert og == min(lengths)


def test_triangle_free_matches_count():
    rng = seeded_rng()
    for _ in range(60):
        g = random_graph(rng, rng.randint(1, 10), rng.random() * 0.5)
        assert is_triangle_free(g) == (triangle_count(g) == 0)


def test_contains_subgraph_examples():
    assert not contains_subgraph(cycle_graph(5), complete_graph(3))
    assert contains_subgraph(complete_graph(4), cycle_graph(4))
    from turan_reg.constructions import pentagon_blowup

    g = pentagon_blowup(23).graph
    assert not contains_subgraph(g, complete_graph(3))
    # per-edge common-neighbor cross-check
    assert all(not common_neighbors(g, u, v) for u, v in g.edges())


def test_contains_subgraph_vs_injections():
    rng = seeded_rng()
    patterns = [
        path_graph(4),
        cycle_graph(4),
        cycle_graph(5),
        complete_graph(3),
        star_graph(3),
        from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]),
    ]
    for _ in range(40):
        g = random_graph(rng, rng.randint(4, 8))
        h = patterns[rng.randrange(len(patterns))]
        assert contains_subgraph(g, h) == naive_contains(g, h)


def test_contains_subgraph_anchor():
    g = disjoint_union(complete_graph(3), empty_graph(2))
    k3 = complete_graph(3)
    assert contains_subgraph(g, k3, anchor=0)
    assert not contains_subgraph(g, k3, anchor=4)


def test_count_cycles_examples():
    assert count_cycles(complete_graph(5), 5) == 12
    assert count_cycles(cycle_graph(6), 5) == 0
    assert count_cycles(complete_bipartite(3, 3), 4) == 9


def test_count_cycles_vs_naive():
    rng = seeded_rng()
    for _ in range(40):
        g = random_graph(rng, rng.randint(3, 8))
        for m in range(3, min(8, g.n) + 1):
            assert count_cycles(g, m) == naive_cycle_count(g, m), (g.rows, m)
    # the 5-cycle identity specifically, at full supported order
    for _ in range(15):
        g = random_graph(rng, rng.randint(9, 10))
        assert count_cycles(g, 5) == naive_cycle_count(g, 5)


def test_count_cycles_range_errors():
    with pytest.raises(GraphError):
        count_cycles(complete_graph(5), 2)
    with pytest.raises(GraphError):
        count_cycles(complete_graph(5), 9)


def test_count_stars():
    assert count_stars(cycle_graph(5), 2) == 5
    assert count_stars(complete_graph(4), 2) == 12
    assert count_stars(star_graph(4), 3) == 4
    with pytest.raises(GraphError):
        count_stars(cycle_graph(5), 0)


def test_count_complete_bipartite():
    assert count_complete_bipartite(complete_bipartite(2, 2), 2, 2) == 1
    assert count_complete_bipartite(complete_graph(4), 1, 1) == 6
    k33 = complete_bipartite(3, 3)
    assert count_complete_bipartite(k33, 2, 2) == 9
    assert count_complete_bipartite(k33, 2, 2) == count_cycles(k33, 4)


def test_graph6_decode_example():
    g = graph6_decode("D?{")
    assert g.n == 5
    assert sorted(g.edges()) == [(0, 4), (1, 4), (2, 4), (3, 4)]
    assert graph6_encode(g) == "D?{"


def test_graph6_empty_and_header():
    assert graph6_encode(Graph(1, (0,))) == "@"
    assert graph6_decode(">>graph6<<@").n == 1


def test_graph6_roundtrip():
    rng = seeded_rng()
    for _ in range(60):
        g = random_graph(rng, rng.randint(1, 20))
        assert graph6_decode(graph6_encode(g)) == g
    # long-form order encoding
    g = random_graph(rng, 70, 0.1)
    assert graph6_decode(graph6_encode(g)) == g


def test_graph6_malformed():
    for bad in ("", "D?", "D?{{", "D?\x1f", "~"):
        with pytest.raises(GraphError):
            graph6_decode(bad)
    # nonzero padding bits (order 3 leaves three pad bits)
    with pytest.raises(GraphError):
        graph6_decode("B" + chr(63 + 1))


def test_edge_list_roundtrip():
    g = from_edges(5, [(0, 1), (2, 4)])
    assert parse_edge_list(format_edge_list(g)) == g


def test_handshaking_invariant():
    rng = seeded_rng()
    for _ in range(40):
        g = random_graph(rng, rng.randint(1, 15))
        g.check_invariants()
        assert sum(g.degree(v) for v in range(g.n)) == 2 * g.edge_count
