from helpers import (
    all_labeled_graphs,
    brute_cert,
    brute_orbit_partition,
    random_graph,
    seeded_rng,
)

from turan_reg.canon import (
    automorphism_generators,
    automorphism_group_order,
    canon_core,
    canonical_form,
    canonical_label,
    orbits_from_generators,
    are_isomorphic,
)
from turan_reg.graphs import (
    complete_bipartite,
    complete_graph,
    cycle_graph,
    from_edges,
    path_graph,
    petersen_graph,
    relabel,
)


def test_label_examples():
    c5 = cycle_graph(5)
    shuffled = from_edges(5, [(2, 4), (4, 1), (1, 3), (3, 0), (0, 2)])
    assert canonical_label(c5) == canonical_label(shuffled)
    assert canonical_label(c5) != canonical_label(path_graph(5))


def test_eleven_classes_on_four_vertices():
    labels = {canon_core(g.rows, g.n)[1] for g in all_labeled_graphs(4)}
    assert len(labels) == 11


def test_partition_matches_brute_force():
    # exhaustive through n=5: identical class partition as the n! oracle
    for n in range(1, 6):
        by_brute = {}
        for g in all_labeled_graphs(n):
            by_brute.setdefault(brute_cert(g), set()).add(canon_core(g.rows, g.n)[1])
        fast = [next(iter(v)) for v in by_brute.values()]
        assert all(len(v) == 1 for v in by_brute.values())
        assert len(set(fast)) == len(by_brute)


def test_partition_matches_brute_force_sampled():
    rng = seeded_rng()
    for _ in range(80):
        n = rng.randint(6, 7)
        g = random_graph(rng, n)
        perm = list(range(n))
        rng.shuffle(perm)
        h = relabel(g, perm)
        assert canonical_label(g) == canonical_label(h)
        assert brute_cert(g) == brute_cert(h)


def test_distinct_for_nonisomorphic_sampled():
    rng = seeded_rng()
    for _ in range(40):
        n = rng.randint(5, 7)
        g, h = random_graph(rng, n), random_graph(rng, n)
        same_fast = canon_core(g.rows, n)[1] == canon_core(h.rows, n)[1]
        assert same_fast == (brute_cert(g) == brute_cert(h))


def test_orbits_complete():
    rng = seeded_rng()
    for _ in range(120):
        n = rng.randint(2, 7)
        g = random_graph(rng, n)
        _, _, autos = canon_core(g.rows, g.n)
        assert tuple(orbits_from_generators(n, autos)) == brute_orbit_partition(g)


def test_desc_variant_same_partition():
    rng = seeded_rng()
    for _ in range(60):
        n = rng.randint(3, 7)
        g = random_graph(rng, n)
        perm = list(range(n))
        rng.shuffle(perm)
        h = relabel(g, perm)
        assert canon_core(g.rows, n, desc=True)[1] == canon_core(h.rows, n, desc=True)[1]


def test_canonical_form_is_isomorphic():
    rng = seeded_rng()
    for _ in range(30):
        g = random_graph(rng, rng.randint(1, 8))
        cf = canonical_form(g)
        assert cf.degree_sequence() == g.degree_sequence()
        assert canonical_label(cf) == canonical_label(g)


def test_group_orders():
    assert automorphism_group_order(cycle_graph(5)) == 10
    assert automorphism_group_order(complete_graph(4)) == 24
    assert automorphism_group_order(complete_bipartite(3, 3)) == 72
    assert automorphism_group_order(petersen_graph()) == 120
    assert automorphism_group_order(path_graph(4)) == 2


def test_generators_are_automorphisms():
    rng = seeded_rng()
    for _ in range(40):
        g = random_graph(rng, rng.randint(2, 8))
        for a in automorphism_generators(g):
            for u in range(g.n):
                for v in range(u + 1, g.n):
                    assert g.has_edge(u, v) == g.has_edge(a[u], a[v])


def test_are_isomorphic():
    assert are_isomorphic(cycle_graph(6), relabel(cycle_graph(6), [3, 1, 5, 0, 4, 2]))
    assert not are_isomorphic(cycle_graph(6), path_graph(6))
