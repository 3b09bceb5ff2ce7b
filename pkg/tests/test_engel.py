"""Engel-core: verdicts, left Engel sets, co-Engel and directed graphs."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import engel_lab as el
from engel_lab.engel import validate_left_engel_baer

import oracles


def _verdict(spec, xname, yname):
    g = el.build_group(spec)
    return el.engel_verdict(g, g.name_index(xname), g.name_index(yname))


# --- engel_verdict


def test_verdict_self_terminates_at_one():
    g = el.build_group("D:24")
    for x in (0, 5, 13, 20):
        v = el.engel_verdict(g, x, x)
        assert v.terminates and v.first_k == 1


def test_verdict_d24_congruent_reflections():
    # x*y^i vs x*y^j with i = j mod 3 terminate (oracle-frozen minimal k)
    assert _verdict("D:24", "x", "x*y^3") == el.EngelVerdict(True, first_k=2)
    assert _verdict("D:24", "x", "x*y^6") == el.EngelVerdict(True, first_k=1)
    assert _verdict("D:24", "x", "x*y^9") == el.EngelVerdict(True, first_k=2)
    assert _verdict("D:24", "x*y^3", "x*y^6") == el.EngelVerdict(True, first_k=2)


def test_verdict_d24_incongruent_reflections_cycle():
    # i != j mod 3: never terminates; the tail is a fixed point (oracle-frozen)
    assert _verdict("D:24", "x", "x*y") == el.EngelVerdict(False, cycle_length=1)
    assert _verdict("D:24", "x", "x*y^2") == el.EngelVerdict(False, cycle_length=1)
    assert _verdict("D:24", "x*y", "x*y^5") == el.EngelVerdict(False, cycle_length=1)


def test_verdict_matches_oracle_exhaustive_d24():
    g = el.build_group("D:24")
    model = oracles.model_dihedral(24)
    for a in range(24):
        for b in range(24):
            pa = (a // 12, a % 12)
            pb = (b // 12, b % 12)
            want = model.engel_terminates(pa, pb)
            got = el.engel_verdict(g, a, b)
            assert got.terminates == (want is not None)
            if want is not None:
                assert got.first_k == want


def test_verdict_non_terminating_truly_never_hits_identity():
    # assert over one full cycle past the tail
    g = el.build_group("D:24")
    x, y = g.name_index("x"), g.name_index("x*y")
    v = el.engel_verdict(g, x, y)
    assert not v.terminates
    a = g.commutator(x, y)
    for _ in range(g.order + v.cycle_length):
        assert a != g.identity
        a = g.commutator(a, y)


def test_verdict_monotone_once_terminated():
    # Once [x,_n y] = 1, every later iterate stays 1
    g = el.build_group("Q:24")
    for x in range(0, g.order, 5):
        for y in range(0, g.order, 7):
            v = el.engel_verdict(g, x, y)
            if v.terminates:
                a = g.commutator(x, y)
                for _ in range(v.first_k - 1):
                    a = g.commutator(a, y)
                assert a == g.identity
                for _ in range(g.order):
                    a = g.commutator(a, y)
                    assert a == g.identity


def test_verdict_requires_exactly_one_field():
    with pytest.raises(ValueError):
        el.EngelVerdict(True, first_k=1, cycle_length=2)
    with pytest.raises(ValueError):
        el.EngelVerdict(False)


# --- left Engel sets


def test_left_engel_dihedral_quaternion_is_rotation_subgroup():
    for spec, half in (("D:24", 12), ("Q:24", 12), ("D:12", 6), ("Q:12", 6)):
        g = el.build_group(spec)
        lset = el.left_engel_set(g)
        rotations = set(el.subgroup_generated(g, [g.generator_index("y")]).members)
        assert set(lset) == rotations and len(lset) == half


def test_left_engel_s4_fitting():
    g = el.build_group("S:4")
    names = {g.element_names[i] for i in el.left_engel_set(g)}
    assert names == {"e", "(1,2)(3,4)", "(1,3)(2,4)", "(1,4)(2,3)"}


def test_left_engel_of_engel_group_is_everything():
    for spec in ("Q:8", "C:12", "D:8"):
        g = el.build_group(spec)
        assert len(el.left_engel_set(g)) == g.order


def test_left_engel_frobenius_is_cyclic_part():
    for spec, q in (("F:2:3", 3), ("F:3:7", 7), ("F:5:11", 11)):
        g = el.build_group(spec)
        lset = el.left_engel_set(g)
        b_subgroup = set(el.subgroup_generated(g, [g.generator_index("b")]).members)
        assert set(lset) == b_subgroup and len(lset) == q


BAER_SWEEP = [
    "D:6", "D:12", "D:24", "D:48", "D:72",
    "Q:12", "Q:24", "Q:48",
    "F:2:3", "F:2:5", "F:2:7", "F:3:7", "F:3:13", "F:5:11",
    "S:3", "S:4", "A:4",
    "P:(C:3)x(D:6)", "P:(C:2)x(D:6)", "P:(C:2)x(D:12)",
    "P:(C:4)x(Q:12)", "P:(Q:8)x(F:3:7)", "P:(C:4)x(F:3:7)",
]


@pytest.mark.parametrize("spec", BAER_SWEEP)
def test_left_engel_baer_validation(spec):
    g = el.build_group(spec)
    assert el.is_soluble(g) and g.order <= 300
    sub = validate_left_engel_baer(g)
    assert set(sub.members) == set(el.left_engel_set(g))


def test_left_engel_product_law():
    # L(H x G) = H x L(G) for Engel H
    for h_spec in ("C:2", "C:3", "C:4", "P:(C:2)x(C:2)", "Q:8"):
        for g_spec in ("D:6", "D:12", "Q:12", "F:3:7"):
            h = el.build_group(h_spec)
            g = el.build_group(g_spec)
            prod = el.build_group(f"P:({h_spec})x({g_spec})")
            lg = el.left_engel_set(g)
            expect = {u * g.order + x for u in range(h.order) for x in lg}
            assert set(el.left_engel_set(prod)) == expect


# --- co-Engel graphs


def test_reduced_d6_is_k3():
    graph = el.reduced_co_engel_graph(el.build_group("D:6"))
    assert graph.n == 3 and graph.n_edges() == 3
    assert el.recognize_complete_multipartite(graph).parts == (1, 1, 1)


def test_reduced_d12_is_k_3_2():
    graph = el.reduced_co_engel_graph(el.build_group("D:12"))
    assert el.recognize_complete_multipartite(graph).parts == (2, 2, 2)


def test_reduced_f37_is_k_7_2():
    graph = el.reduced_co_engel_graph(el.build_group("F:3:7"))
    assert graph.n == 14
    assert el.recognize_complete_multipartite(graph).parts == (2,) * 7


def test_reduced_graph_of_engel_group_raises():
    with pytest.raises(ValueError, match="empty vertex set"):
        el.reduced_co_engel_graph(el.build_group("Q:8"))


def test_full_graph_left_engel_elements_isolated():
    for spec in ("D:12", "F:3:7", "S:4"):
        g = el.build_group(spec)
        full = el.co_engel_graph(g)
        for x in el.left_engel_set(g):
            assert full.degree(x) == 0


def test_reduced_vertex_order_and_labels():
    g = el.build_group("D:12")
    graph = el.reduced_co_engel_graph(g)
    kept = el.non_engel_elements(g)
    assert list(kept) == sorted(kept)
    assert graph.labels == tuple(g.element_names[e] for e in kept)


def test_full_graph_matches_reduced_on_non_engel_part():
    g = el.build_group("Q:12")
    full = el.co_engel_graph(g)
    reduced = el.reduced_co_engel_graph(g)
    kept = el.non_engel_elements(g)
    for i, x in enumerate(kept):
        for j, y in enumerate(kept):
            if i != j:
                assert full.has_edge(x, y) == reduced.has_edge(i, j)


def test_reduced_adjacency_matches_oracle_c2xd12():
    prod = el.build_group("P:(C:2)x(D:12)")
    model = oracles.model_product(oracles.model_cyclic(2), oracles.model_dihedral(12))
    kept = el.non_engel_elements(prod)
    graph = el.reduced_co_engel_graph(prod)
    # the product packs (u, x) at index u*|D_12| + x; D_12 has 6 rotations
    for i, a in enumerate(kept):
        for j, b in enumerate(kept):
            if i >= j:
                continue
            u, x = divmod(a, 12)
            v, y = divmod(b, 12)
            pa = (u, (x // 6, x % 6))
            pb = (v, (y // 6, y % 6))
            assert graph.has_edge(i, j) == model.coengel_adjacent(pa, pb)


# --- directed graphs


def test_directed_nilpotent_complete():
    for spec in ("Q:8", "C:6", "D:8"):
        d = el.directed_engel_graph(el.build_group(spec))
        assert d.is_complete()


def test_directed_isolated_co_engel_vertices_dominate():
    # isolated co-Engel vertices = vertices dominating all others = L(G)
    for spec in ("S:4", "D:24", "F:3:7"):
        g = el.build_group(spec)
        d = el.directed_engel_graph(g)
        full = el.co_engel_graph(g)
        full_mask = (1 << g.order) - 1
        dominating = {
            x for x in range(g.order) if d.out_rows[x] == full_mask ^ (1 << x)
        }
        isolated = {x for x in range(g.order) if full.degree(x) == 0}
        assert dominating == isolated == set(el.left_engel_set(g))


def test_complement_relation_co_engel_vs_directed():
    for spec in ("D:12", "Q:12", "F:3:7", "S:4"):
        g = el.build_group(spec)
        full = el.co_engel_graph(g)
        d = el.directed_engel_graph(g)
        for x in range(g.order):
            for y in range(x + 1, g.order):
                edge = full.has_edge(x, y)
                no_arcs = not d.has_arc(x, y) and not d.has_arc(y, x)
                assert edge == no_arcs


def test_single_arc_pairs_nilpotent_empty():
    assert el.single_arc_pairs(el.directed_engel_graph(el.build_group("Q:8"))) == []


def test_single_arc_pairs_soluble_nonnilpotent_nonempty():
    for spec in ("S:3", "S:4", "D:12", "Q:12", "F:3:7"):
        d = el.directed_engel_graph(el.build_group(spec))
        assert el.single_arc_pairs(d)


def test_single_arc_pairs_sorted_lexicographically():
    arcs = el.single_arc_pairs(el.directed_engel_graph(el.build_group("S:4")))
    assert arcs == sorted(arcs)
    assert len(arcs) == 48  # oracle-frozen


def test_single_arcs_outside_L_dihedral_empty():
    for spec in ("D:12", "D:24", "D:48"):
        assert el.single_arcs_outside_left_engel(el.build_group(spec)) == []


def test_single_arcs_outside_L_s4():
    g = el.build_group("S:4")
    arcs = el.single_arcs_outside_left_engel(g)
    assert len(arcs) == 24  # oracle-frozen
    for x, y in arcs:
        assert g.element_order(x) == 3 and g.element_order(y) == 2


def test_dihedral_direction_bullet():
    # x in C, y outside: always x -> y; y -> x iff |[y,x]| is a power of 2
    g = el.build_group("D:24")
    d = el.directed_engel_graph(g)
    n = 12
    for x in range(n):
        for y in range(n, 24):
            assert d.has_arc(x, y)
            order = g.element_order(g.commutator(y, x))
            assert d.has_arc(y, x) == (order & (order - 1) == 0)


def test_dihedral_double_arc_depths_unbounded():
    # On a double arc with x in C, y outside: [y,_2 x] = 1 but the least k
    # with [x,_k y] = 1 is m when |[y,x]| = 2^(m-1): one direction's Engel
    # depth is unbounded in terms of the other's.
    for two_n in (16, 32, 48, 96):
        g = el.build_group(f"D:{two_n}")
        n = two_n // 2
        for x in range(n):
            for y in range(n, two_n):
                order = g.element_order(g.commutator(y, x))
                if order == 1 or order & (order - 1):
                    continue
                back = el.engel_verdict(g, y, x)
                assert back.terminates and back.first_k <= 2
                fwd = el.engel_verdict(g, x, y)
                assert fwd.terminates and fwd.first_k == order.bit_length()


def test_non_terminating_pairs_never_reach_identity_exhaustive():
    # terminates=False implies [x,_k y] != 1 for every k: walk one full
    # cycle past the tail for every non-terminating pair
    for spec in ("D:24", "Q:12", "F:3:7"):
        g = el.build_group(spec)
        for x in range(g.order):
            for y in range(g.order):
                v = el.engel_verdict(g, x, y)
                if v.terminates:
                    continue
                a = g.commutator(x, y)
                for _ in range(g.order + v.cycle_length + 1):
                    assert a != g.identity, (spec, x, y)
                    a = g.commutator(a, y)


# --- Lemma "ad" adjacency invariance under hypercenter translation


@pytest.mark.parametrize("spec", ["P:(C:3)x(D:6)", "D:12"])
def test_hypercenter_translation_preserves_adjacency(spec):
    g = el.build_group(spec)
    z_members = el.hypercenter(g).members
    graph = el.reduced_co_engel_graph(g)
    kept = el.non_engel_elements(g)
    pos = {e: i for i, e in enumerate(kept)}
    for i, j in graph.edges():
        x, y = kept[i], kept[j]
        for z1 in z_members:
            for z2 in z_members:
                xz, yz = g.mul(x, z1), g.mul(y, z2)
                assert xz in pos and yz in pos
                assert xz != yz
                assert graph.has_edge(pos[xz], pos[yz])


# --- determinism / property checks


@given(data=st.data())
@settings(max_examples=30, deadline=None)
def test_verdict_deterministic_and_consistent(data):
    spec = data.draw(st.sampled_from(["D:12", "Q:12", "F:3:7", "S:4"]))
    g = el.build_group(spec)
    x = data.draw(st.integers(min_value=0, max_value=g.order - 1))
    y = data.draw(st.integers(min_value=0, max_value=g.order - 1))
    v1 = el.engel_verdict(g, x, y)
    v2 = el.engel_verdict(g, x, y)
    assert v1 == v2
    # cross-check the terminating side by direct iteration
    a = g.commutator(x, y)
    seen = set()
    k = 1
    while a not in seen and a != g.identity:
        seen.add(a)
        a = g.commutator(a, y)
        k += 1
    assert (a == g.identity) == v1.terminates
    if v1.terminates:
        assert k == v1.first_k
