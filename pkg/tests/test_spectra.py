"""Exact-spectra: characteristic polynomials, integer roots, energy reports."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import engel_lab as el
from engel_lab.analysis import MultipartiteShape
from engel_lab.graphs import complete_multipartite_graph
from engel_lab.spectra import IntegerSpectrum, IntPolynomial

import oracles


# --- IntPolynomial basics


def test_poly_mul_and_pow():
    x_minus_1 = IntPolynomial((-1, 1))
    sq = x_minus_1 * x_minus_1
    assert sq.coeffs == (1, -2, 1)
    assert (x_minus_1**3).coeffs == (-1, 3, -3, 1)


def test_poly_from_roots_reconstructs():
    p = IntPolynomial.from_roots([(2, 1), (-1, 2)])
    assert p.coeffs == (-2, -3, 0, 1)  # (x-2)(x+1)^2 = x^3 - 3x - 2
    # direct evaluation is the ground truth
    for x in range(-5, 6):
        assert p.evaluate(x) == (x - 2) * (x + 1) ** 2


def test_poly_rejects_zero_leading():
    with pytest.raises(ValueError):
        IntPolynomial((1, 0))


# --- char_poly_exact


def test_charpoly_1x1_zero_is_x():
    assert el.char_poly_exact([[0]]).coeffs == (0, 1)


def test_charpoly_small_fixed():
    assert el.char_poly_exact([[2]]).coeffs == (-2, 1)
    # [[0,1],[1,0]] -> x^2 - 1
    assert el.char_poly_exact([[0, 1], [1, 0]]).coeffs == (-1, 0, 1)


def test_charpoly_kn_matches_paper_form():
    # P(K_n, x) = (x+1)^(n-1) (x - (n-1))
    for n in (2, 3, 5, 8, 13):
        graph = complete_multipartite_graph([1] * n)
        adj = [[1 if graph.has_edge(i, j) else 0 for j in range(n)] for i in range(n)]
        want = IntPolynomial((1, 1)) ** (n - 1) * IntPolynomial((-(n - 1), 1))
        assert el.char_poly_exact(adj) == want


def test_charpoly_kab_matches_paper_forms():
    # A: x^(a(b-1)) (x+b)^(a-1) (x - b(a-1)); L and Q likewise
    for a, b in [(3, 2), (3, 4), (5, 2), (7, 2), (4, 3)]:
        graph = complete_multipartite_graph([b] * a)
        n = graph.n
        adj = [[1 if graph.has_edge(i, j) else 0 for j in range(n)] for i in range(n)]
        deg = graph.degrees()
        lap = [
            [(deg[i] if i == j else 0) - adj[i][j] for j in range(n)] for i in range(n)
        ]
        sig = [
            [(deg[i] if i == j else 0) + adj[i][j] for j in range(n)] for i in range(n)
        ]
        want_a = (
            IntPolynomial((0, 1)) ** (a * (b - 1))
            * IntPolynomial((b, 1)) ** (a - 1)
            * IntPolynomial((-b * (a - 1), 1))
        )
        want_l = (
            IntPolynomial((0, 1))
            * IntPolynomial((-b * (a - 1), 1)) ** (a * (b - 1))
            * IntPolynomial((-a * b, 1)) ** (a - 1)
        )
        want_q = (
            IntPolynomial((-b * (a - 1), 1)) ** (a * (b - 1))
            * IntPolynomial((-b * (a - 2), 1)) ** (a - 1)
            * IntPolynomial((-2 * b * (a - 1), 1))
        )
        assert el.char_poly_exact(adj) == want_a
        assert el.char_poly_exact(lap) == want_l
        assert el.char_poly_exact(sig) == want_q


@given(data=st.data())
@settings(max_examples=40, deadline=None)
def test_charpoly_matches_permutation_expansion(data):
    n = data.draw(st.integers(min_value=1, max_value=5))
    matrix = [
        [data.draw(st.integers(min_value=-9, max_value=9)) for _ in range(n)]
        for _ in range(n)
    ]
    got = el.char_poly_exact(matrix)
    assert list(got.coeffs) == oracles.brute_charpoly(matrix)


def test_charpoly_large_entries_crt_path():
    # entries big enough to need several primes
    m = [[10**6, -(10**6)], [123456, 654321]]
    got = el.char_poly_exact(m)
    assert list(got.coeffs) == oracles.brute_charpoly(m)


def test_charpoly_rejects_ragged():
    with pytest.raises(ValueError):
        el.char_poly_exact([[1, 2], [3]])


# --- integer_roots


def test_integer_roots_laplacian_kab_form():
    # P_L(K_{a.b}) = x (x - b(a-1))^(a(b-1)) (x - ab)^(a-1)
    for a, b in [(3, 2), (7, 2), (3, 4)]:
        p = (
            IntPolynomial((0, 1))
            * IntPolynomial((-b * (a - 1), 1)) ** (a * (b - 1))
            * IntPolynomial((-a * b, 1)) ** (a - 1)
        )
        spec = el.integer_roots(p)
        assert spec is not None
        assert dict(spec.roots) == {0: 1, b * (a - 1): a * (b - 1), a * b: a - 1}


def test_integer_roots_irreducible_none():
    assert el.integer_roots(IntPolynomial((1, 0, 1))) is None  # x^2 + 1
    assert el.integer_roots(IntPolynomial((-2, 0, 1))) is None  # x^2 - 2


def test_integer_roots_qn_form():
    # P_Q(K_n) roots {(n-2)^(n-1), (2n-2)^1}
    n = 6
    p = IntPolynomial((-(n - 2), 1)) ** (n - 1) * IntPolynomial((-(2 * n - 2), 1))
    spec = el.integer_roots(p)
    assert dict(spec.roots) == {n - 2: n - 1, 2 * n - 2: 1}


def test_integer_roots_with_bound():
    p = IntPolynomial.from_roots([(3, 2), (-5, 1), (0, 3)])
    spec = el.integer_roots(p, root_bound=5)
    assert dict(spec.roots) == {3: 2, -5: 1, 0: 3}
    # a too-small bound must miss the split and return None, never lie
    assert el.integer_roots(p, root_bound=4) is None


def test_integer_roots_requires_monic():
    with pytest.raises(ValueError):
        el.integer_roots(IntPolynomial((1, 2)))


@given(
    roots=st.lists(
        st.tuples(
            st.integers(min_value=-30, max_value=30),
            st.integers(min_value=1, max_value=3),
        ),
        min_size=0,
        max_size=4,
    )
)
@settings(max_examples=50, deadline=None)
def test_integer_roots_round_trip(roots):
    merged = {}
    for v, m in roots:
        merged[v] = merged.get(v, 0) + m
    p = IntPolynomial.from_roots(sorted(merged.items()))
    spec = el.integer_roots(p)
    assert spec is not None
    assert dict(spec.roots) == merged
    assert spec.to_poly() == p


def test_spectrum_reconstructs_polynomial():
    spec = IntegerSpectrum(((-4, 2), (0, 9), (8, 1)))
    assert spec.degree == 12
    p = spec.to_poly()
    assert p.degree == 12 and p.is_monic


# --- spectrum_report


def test_report_reduced_d24():
    graph = el.reduced_co_engel_graph(el.build_group("D:24"))
    rep = el.spectrum_report(graph)
    assert dict(rep.adjacency_spectrum.roots) == {0: 9, -4: 2, 8: 1}
    assert rep.energy == 16
    assert rep.laplacian_energy == 16
    assert rep.signless_energy == 16
    assert rep.super_integral
    assert rep.hyperenergetic is False and rep.hypoenergetic is False
    assert rep.e_le_holds is True


def test_report_reduced_f37():
    graph = el.reduced_co_engel_graph(el.build_group("F:3:7"))
    rep = el.spectrum_report(graph)
    assert dict(rep.adjacency_spectrum.roots) == {0: 7, -2: 6, 12: 1}
    assert rep.energy == 24  # 2(p-1)(q-1)


def test_report_k1():
    graph = complete_multipartite_graph([1])
    rep = el.spectrum_report(graph)
    assert dict(rep.adjacency_spectrum.roots) == {0: 1}
    assert rep.energy == 0 and rep.hypoenergetic is True


def test_report_non_integral_spectrum_refuses_energy():
    # P_4 has irrational adjacency eigenvalues
    from engel_lab.graphs import SimpleGraph

    p4 = SimpleGraph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    rep = el.spectrum_report(p4)
    assert not rep.super_integral
    assert rep.adjacency_spectrum is None
    assert rep.energy is None and rep.e_le_holds is None


def test_report_json_shape():
    graph = el.reduced_co_engel_graph(el.build_group("D:12"))
    obj = el.spectrum_report(graph).to_json_obj()
    assert obj["energies"]["E"] == "8/1"
    assert obj["adjacency"]["spectrum"] == [[-2, 2], [0, 3], [4, 1]]
    assert all(isinstance(c, str) for c in obj["adjacency"]["poly"])
    assert obj["super_integral"] is True


# --- closed_form_spectra


def test_closed_form_k7():
    rep = el.closed_form_spectra(MultipartiteShape.uniform(7, 1))
    assert dict(rep.adjacency_spectrum.roots) == {-1: 6, 6: 1}
    assert rep.energy == 12  # 2(m-1)


def test_closed_form_k11():
    rep = el.closed_form_spectra(MultipartiteShape.uniform(1, 1))
    assert rep.energy == 0


def test_closed_form_rejects_non_uniform():
    with pytest.raises(ValueError, match="non-uniform"):
        el.closed_form_spectra(MultipartiteShape((3, 2)))


ORACLE_SWEEP = (
    [f"D:{2 * m}" for m in (3, 5, 7, 9, 11)]
    + [f"{fam}:{2 ** (t + 1) * m}" for t in (1, 2, 3) for m in (3, 5, 7) for fam in ("D", "Q")]
    + [f"F:{p}:{q}" for p, q in ((2, 3), (2, 5), (2, 7), (3, 7), (3, 13), (5, 11))]
    + ["P:(C:3)x(D:6)", "P:(C:2)x(D:6)"]
)


@pytest.mark.parametrize("spec", ORACLE_SWEEP)
def test_oracle_equivalence_matrix_vs_closed_form(spec):
    graph = el.reduced_co_engel_graph(el.build_group(spec))
    shape = el.recognize_complete_multipartite(graph)
    computed = el.spectrum_report(graph)
    closed = el.closed_form_spectra(shape)
    assert computed.adjacency_poly == closed.adjacency_poly
    assert computed.laplacian_poly == closed.laplacian_poly
    assert computed.signless_poly == closed.signless_poly
    assert computed.adjacency_spectrum == closed.adjacency_spectrum
    assert computed.laplacian_spectrum == closed.laplacian_spectrum
    assert computed.signless_spectrum == closed.signless_spectrum
    assert (computed.energy, computed.laplacian_energy, computed.signless_energy) == (
        closed.energy,
        closed.laplacian_energy,
        closed.signless_energy,
    )
    assert computed.super_integral and closed.super_integral


@pytest.mark.parametrize("spec", ORACLE_SWEEP)
def test_trace_identities(spec):
    graph = el.reduced_co_engel_graph(el.build_group(spec))
    rep = el.spectrum_report(graph)
    # sum of adjacency eigenvalues = 0; sum of Laplacian eigenvalues = 2e
    assert sum(v * m for v, m in rep.adjacency_spectrum.roots) == 0
    assert sum(v * m for v, m in rep.laplacian_spectrum.roots) == 2 * graph.n_edges()
    # Laplacian kernel dimension = number of connected components
    zero_mult = dict(rep.laplacian_spectrum.roots).get(0, 0)
    assert zero_mult == graph.n_components()


def test_trace_identity_via_coefficients():
    # c_{n-1} of the char poly is -trace
    graph = el.reduced_co_engel_graph(el.build_group("Q:24"))
    rep = el.spectrum_report(graph)
    assert rep.adjacency_poly.coeffs[-2] == 0
    assert rep.laplacian_poly.coeffs[-2] == -2 * graph.n_edges()


def test_energy_flags_match_paper_corollaries():
    # E - 2(n-1) = -2(2^t - 1) <= 0 and E - n = 2^t (m - 2) > 0
    for t in (1, 2, 3):
        for m in (3, 5, 7, 9):
            rep = el.closed_form_spectra(MultipartiteShape.uniform(m, 2**t))
            n = m * 2**t
            assert rep.energy - 2 * (n - 1) == -2 * (2**t - 1)
            assert rep.energy - n == 2**t * (m - 2)
            assert rep.hyperenergetic is False and rep.hypoenergetic is False
    for p, q in ((2, 3), (2, 5), (3, 7), (5, 11)):
        rep = el.closed_form_spectra(MultipartiteShape.uniform(q, p - 1))
        n = q * (p - 1)
        assert rep.energy - 2 * (n - 1) == -2 * (p - 2)
        assert rep.energy - n == (p - 1) * (q - 2)


def test_energies_match_oracle_summation():
    graph = el.reduced_co_engel_graph(el.build_group("Q:24"))
    rep = el.spectrum_report(graph)
    e, le, leq = oracles.brute_energies(
        rep.adjacency_spectrum.roots,
        rep.laplacian_spectrum.roots,
        rep.signless_spectrum.roots,
        graph.n_edges(),
        graph.n,
    )
    assert (rep.energy, rep.laplacian_energy, rep.signless_energy) == (e, le, leq)


def test_mean_degree_exact_rational():
    graph = el.reduced_co_engel_graph(el.build_group("D:24"))
    rep = el.spectrum_report(graph)
    assert rep.mean_degree == Fraction(2 * graph.n_edges(), graph.n) == 8
