import json

import pytest

from turan_reg.canon import canonical_label
from turan_reg.constructions import (
    BUILDERS,
    ConstructionError,
    _certify,
    apex_construction,
    build,
    circulant_small_odd,
    split_apex_equality,
    kbe_graph,
    multipartite_regular,
    odd_girth_blowup,
    odd_half_construction,
    pentagon_blowup,
    triangle_min_extremal,
    star_forest_complement,
)
from turan_reg.formulas import conjectured_triangle_min
from turan_reg.graphs import (
    complete_graph,
    contains_subgraph,
    count_cycles,
    cycle_graph,
    is_triangle_free,
    odd_girth,
    triangle_count,
)


def test_pentagon_blowup():
    r = pentagon_blowup(25)
    assert r.graph.is_regular(10)
    assert is_triangle_free(r.graph)
    r = pentagon_blowup(23)
    assert r.params["part_sizes"] == [7, 4, 1, 4, 7]
    assert r.graph.is_regular(8)
    assert is_triangle_free(r.graph)
    with pytest.raises(ConstructionError):
        pentagon_blowup(13)
    with pytest.raises(ConstructionError):
        pentagon_blowup(24)


def test_pentagon_matches_closed_form():
    for n in (5, 11, 15, 17, 21, 35, 101):
        g = pentagon_blowup(n).graph
        assert g.is_regular(2 * (n // 5))


def test_circulant_small_odd():
    r = circulant_small_odd(7)
    assert canonical_label(r.graph) == canonical_label(cycle_graph(7))
    r = circulant_small_odd(11)
    assert r.graph.is_regular(4)
    assert is_triangle_free(r.graph)
    for bad in (15, 21, 4):
        with pytest.raises(ConstructionError):
            circulant_small_odd(bad)
    # every in-range order: the odd-difference bound keeps triangles out
    for n in (5, 7, 9, 11, 13, 17, 19):
        assert 3 * (2 * (n // 5) - 1) < n
        circulant_small_odd(n)


def test_odd_girth_blowup():
    r = odd_girth_blowup(37, 3)
    assert r.params["part_sizes"] == [5, 7, 5, 3, 5, 7, 5]
    assert r.graph.is_regular(10)
    assert odd_girth(r.graph) == 7
    assert not contains_subgraph(r.graph, cycle_graph(5))
    r = odd_girth_blowup(9, 4)
    assert canonical_label(r.graph) == canonical_label(cycle_graph(9))
    with pytest.raises(ConstructionError):
        odd_girth_blowup(9, 3)  # x = y = 1


def test_odd_girth_blowup_matches_pentagon():
    a = odd_girth_blowup(27, 2).graph
    b = pentagon_blowup(27).graph
    assert a.is_regular(10) and b.is_regular(10)
    assert odd_girth(a) == odd_girth(b) == 5


def test_apex_construction():
    r = apex_construction(13, 6)
    g = r.graph
    assert g.is_regular(6)
    apex = g.n - 1
    # every triangle uses the apex: count equals edges inside its neighborhood
    nb = g.rows[apex]
    inside = sum((g.rows[v] & nb).bit_count() for v in range(g.n) if (nb >> v) & 1) // 2
    assert triangle_count(g) == inside
    with pytest.raises(ConstructionError):
        apex_construction(11, 6)
    with pytest.raises(ConstructionError):
        apex_construction(13, 5)


def test_apex_window_small():
    n = 101
    k = 2 * (n // 5) + 2
    t = triangle_count(apex_construction(n, k).graph)
    assert n * n / 75 <= t <= n * n / 40


def test_multipartite_regular():
    r = multipartite_regular(14, 4)
    assert r.graph.is_regular(8)
    assert r.graph.n == 14
    assert r.params["parts"] == [4, 4, 6]
    r = multipartite_regular(25, 5)
    assert r.graph.is_regular(18)
    with pytest.raises(ConstructionError):
        multipartite_regular(9, 4)


def test_kbe_graph():
    r = kbe_graph(1, 1)
    assert canonical_label(r.graph) == canonical_label(complete_graph(3))
    assert kbe_graph(2, 2).graph.edge_count == 10
    for t in (1, 2, 3):
        assert contains_subgraph(kbe_graph(t, t).graph, complete_graph(3))
    with pytest.raises(ConstructionError):
        kbe_graph(2, 5)


def test_odd_half_construction():
    r = odd_half_construction(9)
    assert r.graph.is_regular(4)
    r = odd_half_construction(7)
    assert r.graph.is_regular(4)
    # x odd gives exactly the bipartite-plus-matching graph
    assert canonical_label(r.graph) == canonical_label(kbe_graph(2, 3).graph)
    for n in range(5, 40, 2):
        res = odd_half_construction(n)
        x = (n - 1) // 2
        assert res.graph.is_regular(x + 1 if x % 2 else x)


def test_triangle_min_extremal():
    r = triangle_min_extremal(4)
    assert r.graph.n == 9 and triangle_count(r.graph) == 2
    r = triangle_min_extremal(6)
    assert r.graph.n == 13 and triangle_count(r.graph) == 6
    with pytest.raises(ConstructionError):
        triangle_min_extremal(3)
    for k in range(4, 24, 2):
        g = triangle_min_extremal(k).graph
        assert triangle_count(g) == conjectured_triangle_min(2 * k + 1, k)


def test_split_apex_equality():
    r = split_apex_equality(9, 4)
    assert canonical_label(r.graph) == canonical_label(triangle_min_extremal(4).graph)
    r = split_apex_equality(13, 6)
    assert triangle_count(r.graph) == conjectured_triangle_min(13, 6) == 6
    with pytest.raises(ConstructionError):
        split_apex_equality(11, 4)


def test_star_forest_complement():
    r = star_forest_complement(9, [8])
    assert count_cycles(r.graph, 5) == 672
    r = star_forest_complement(10, [1] * 5)
    assert r.graph.is_regular(8)
    with pytest.raises(ConstructionError):
        star_forest_complement(9, [5])
    with pytest.raises(ConstructionError):
        star_forest_complement(6, [0, 4])


def test_certify_names_property():
    from turan_reg.graphs import empty_graph

    with pytest.raises(ConstructionError) as err:
        _certify("demo", {}, empty_graph(2), [("order", 3, 2)])
    assert err.value.prop == "order"
    assert "order" in str(err.value)


def test_certificates_are_json():
    for name, params in [
        ("pentagon-blowup", {"n": 25}),
        ("apex", {"n": 13, "k": 6}),
        ("multipartite-regular", {"n": 14, "r": 4}),
        ("odd-half", {"n": 9}),
        ("star-forest-complement", {"n": 9, "parts": [8]}),
    ]:
        res = build(name, **params)
        text = json.dumps(res.certificate)
        assert json.loads(text)["name"] == name
        assert all(c["ok"] for c in res.certificate["checks"])


def test_build_registry():
    assert set(BUILDERS) >= {
        "pentagon-blowup",
        "circulant-small-odd",
        "odd-girth-blowup",
        "apex",
        "multipartite-regular",
        "kbe",
        "odd-half",
        "triangle-min-extremal",
        "split-apex-equality",
        "star-forest-complement",
    }
    with pytest.raises(ConstructionError):
        build("unknown-thing")
    with pytest.raises(ConstructionError):
        build("apex", n=13)
