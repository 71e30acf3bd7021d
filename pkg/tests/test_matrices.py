"""Realizing matrices, characteristic polynomials, and digraph queries.

Characteristic polynomials are cross-checked against the eigenvalue route
(numpy.poly of numpy.linalg.eigvals), an independent path through LAPACK.
"""

import math

import numpy as np
import pytest

from karpelevic import (
    Digraph,
    Fraction,
    Weight,
    arc_from_endpoints,
    characteristic_polynomial,
    digraph_of,
    enumerate_arcs,
    evaluate,
    is_irreducible,
    is_primitive,
    matrix_power,
    rank_one_update_det,
    realizing_matrix,
    reduced_ito_polynomial,
)
from karpelevic.errors import KarpelevicError
from karpelevic.matrices import digraph_of_symbolic


def arc(n, a, b):
    return arc_from_endpoints(n, Fraction.parse(a), Fraction.parse(b))


def basic_circulant(n):
    c = np.zeros((n, n))
    for i in range(n):
        c[i, (i + 1) % n] = 1.0
    return c


class TestRealizingMatrixStructure:
    def test_shift_register_form(self):
        mat = realizing_matrix(arc(9, "1/9", "1/8"))
        assert mat.order == 9
        expected = {(i, i + 1): Weight.ONE for i in range(8)}
        expected[(8, 0)] = Weight.ALPHA
        expected[(8, 1)] = Weight.BETA
        assert mat.entries == expected

    def test_cycle_plus_identity_form(self):
        mat = realizing_matrix(arc(5, "0/1", "1/5"))
        assert mat.order == 5
        expected = {}
        for i in range(5):
            expected[(i, i)] = Weight.BETA
            expected[(i, (i + 1) % 5)] = Weight.ALPHA
        assert mat.entries == expected

    def test_every_row_is_one_or_alpha_beta(self):
        for n in range(2, 13):
            for desc in enumerate_arcs(n):
                mat = realizing_matrix(desc)
                rows = {}
                for (i, _), w in mat.entries.items():
                    rows.setdefault(i, []).append(w)
                assert set(rows) == set(range(mat.order))
                for weights in rows.values():
                    kinds = sorted(w.value for w in weights)
                    assert kinds in (["ONE"], ["ALPHA", "BETA"])

    def test_json_dump_is_one_based(self):
        payload = realizing_matrix(arc(9, "1/9", "1/8")).to_json_dict()
        assert payload["order"] == 9
        assert {"row": 9, "col": 1, "weight": "ALPHA"} in payload["entries"]
        assert {"row": 1, "col": 2, "weight": "ONE"} in payload["entries"]


class TestEvaluate:
    def test_identity_at_alpha_zero(self):
        mat = realizing_matrix(arc(5, "0/1", "1/5"))
        assert np.array_equal(evaluate(mat, 0.0), np.eye(5))

    def test_circulant_at_alpha_one(self):
        mat = realizing_matrix(arc(5, "0/1", "1/5"))
        assert np.array_equal(evaluate(mat, 1.0), basic_circulant(5))

    def test_companion_at_alpha_one(self):
        mat = realizing_matrix(arc(9, "1/9", "1/8"))
        assert np.array_equal(evaluate(mat, 1.0), basic_circulant(9))

    @pytest.mark.parametrize("n", range(2, 13))
    def test_row_stochastic_everywhere(self, n):
        for desc in enumerate_arcs(n):
            mat = realizing_matrix(desc)
            for alpha in np.linspace(0.0, 1.0, 11):
                a = evaluate(mat, alpha)
                assert (a >= 0).all()
                assert np.abs(a.sum(axis=1) - 1.0).max() <= 1e-15

    def test_alpha_out_of_range(self):
        mat = realizing_matrix(arc(5, "0/1", "1/5"))
        with pytest.raises(KarpelevicError):
            evaluate(mat, 1.2)


class TestCharacteristicPolynomial:
    def test_basic_circulant(self):
        got = characteristic_polynomial(basic_circulant(3)).as_array()
        assert np.allclose(got, [-1, 0, 0, 1], atol=1e-14)

    def test_identity(self):
        got = characteristic_polynomial(np.eye(3)).as_array()
        assert np.allclose(got, [-1, 3, -3, 1], atol=1e-14)

    def test_trinomial_family_member(self):
        a = evaluate(realizing_matrix(arc(9, "1/9", "1/8")), 0.3)
        got = characteristic_polynomial(a).as_array()
        want = np.zeros(10)
        want[9], want[1], want[0] = 1.0, -0.7, -0.3
        assert np.abs(got - want).max() <= 1e-12

    def test_against_eigenvalue_route(self):
        rng = np.random.default_rng(7)
        for _ in range(100):
            n = int(rng.integers(1, 13))
            a = rng.standard_normal((n, n))
            got = characteristic_polynomial(a).as_array()
            want = np.poly(np.linalg.eigvals(a))[::-1].real
            scale = max(1.0, np.abs(want).max())
            assert np.abs(got - want).max() <= 1e-8 * scale

    def test_rejects_nonsquare_and_oversize(self):
        with pytest.raises(KarpelevicError):
            characteristic_polynomial(np.zeros((2, 3)))
        with pytest.raises(KarpelevicError):
            characteristic_polynomial(np.eye(65))

    @pytest.mark.parametrize("n", range(2, 9))
    def test_matches_reduced_polynomial(self, n):
        for desc in enumerate_arcs(n):
            mat = realizing_matrix(desc)
            for alpha in np.linspace(0.0, 1.0, 7):
                got = characteristic_polynomial(evaluate(mat, alpha)).as_array()
                want = reduced_ito_polynomial(desc, alpha).as_array()
                assert np.abs(got - want).max() <= 1e-9, (desc.label, alpha)


class TestRankOneUpdateDet:
    def test_upper_triangular_update(self):
        assert rank_one_update_det(np.eye(2), 1, 2, 5.0) == pytest.approx(1.0)

    def test_diagonal_update(self):
        assert rank_one_update_det(np.eye(2), 1, 1, 5.0) == pytest.approx(6.0)

    def test_against_direct_determinant(self):
        rng = np.random.default_rng(11)
        for _ in range(200):
            n = int(rng.integers(1, 8))
            a = rng.standard_normal((n, n))
            k = int(rng.integers(1, n + 1))
            l = int(rng.integers(1, n + 1))
            alpha = float(rng.normal())
            b = a.copy()
            b[k - 1, l - 1] += alpha
            want = np.linalg.det(b)
            got = rank_one_update_det(a, k, l, alpha)
            assert abs(got - want) <= 1e-9 * max(1.0, abs(want))

    def test_index_validation(self):
        with pytest.raises(KarpelevicError):
            rank_one_update_det(np.eye(2), 0, 1, 1.0)
        with pytest.raises(KarpelevicError):
            rank_one_update_det(np.eye(2), 1, 3, 1.0)


class TestDigraphs:
    def test_cycle_digraph(self):
        g = digraph_of(basic_circulant(4))
        assert g.edges == frozenset({(0, 1), (1, 2), (2, 3), (3, 0)})

    def test_identity_digraph(self):
        g = digraph_of(np.eye(3))
        assert g.edges == frozenset({(0, 0), (1, 1), (2, 2)})

    def test_type0_digraph_is_cycle_plus_loops(self):
        a = evaluate(realizing_matrix(arc(5, "0/1", "1/5")), 0.5)
        g = digraph_of(a)
        loops = {(i, i) for i in range(5)}
        cycle = {(i, (i + 1) % 5) for i in range(5)}
        assert g.edges == frozenset(loops | cycle)

    def test_edge_validation(self):
        with pytest.raises(KarpelevicError):
            Digraph(2, frozenset({(0, 5)}))

    def test_cycle_is_irreducible_not_primitive(self):
        g = digraph_of(basic_circulant(4))
        assert is_irreducible(g)
        assert not is_primitive(g)

    def test_loops_only_not_irreducible(self):
        g = digraph_of(np.eye(2))
        assert not is_irreducible(g)

    def test_single_vertex_is_strongly_connected(self):
        assert is_irreducible(Digraph(1, frozenset()))

    def test_primitivity_requires_strong_connectivity(self):
        with pytest.raises(KarpelevicError):
            is_primitive(digraph_of(np.eye(2)))

    @pytest.mark.parametrize("label", ["0/1:1/9", "1/9:1/8", "2/7:1/3", "2/9:1/4"])
    def test_reference_arcs_primitive_inside_parameter_range(self, label):
        a, b = label.split(":")
        mat = realizing_matrix(arc(9, a, b))
        for alpha in (0.1, 0.5, 0.9):
            g = digraph_of(evaluate(mat, alpha))
            assert is_irreducible(g)
            assert is_primitive(g)

    def test_symbolic_digraph_matches_numeric(self):
        for desc in enumerate_arcs(7):
            mat = realizing_matrix(desc)
            assert digraph_of_symbolic(mat).edges == digraph_of(evaluate(mat, 0.5)).edges


class TestMatrixPower:
    def test_circulant_square_shifts_by_two(self):
        c9 = basic_circulant(9)
        want = np.zeros((9, 9))
        for i in range(9):
            want[i, (i + 2) % 9] = 1.0
        assert np.array_equal(matrix_power(c9, 2), want)

    def test_first_power_is_identity_map(self):
        a = np.arange(9.0).reshape(3, 3)
        assert np.array_equal(matrix_power(a, 1), a)

    def test_power_of_shift_register_charpoly(self):
        # squaring the alpha=0.4 member gives t (t^4 - 0.6)^2 - 0.16
        a = evaluate(realizing_matrix(arc(9, "1/9", "1/8")), 0.4)
        got = characteristic_polynomial(matrix_power(a, 2)).as_array()
        want = np.zeros(10)
        want[9] = 1.0
        want[5] = -1.2
        want[1] = 0.36
        want[0] = -0.16
        assert np.abs(got - want).max() <= 1e-10

    def test_stochasticity_preserved(self):
        a = evaluate(realizing_matrix(arc(9, "2/7", "1/3")), 0.3)
        p = matrix_power(a, 5)
        assert np.abs(p.sum(axis=1) - 1.0).max() <= 1e-12

    def test_rejects_zero_power(self):
        with pytest.raises(KarpelevicError):
            matrix_power(np.eye(2), 0)


class TestTracePattern:
    @pytest.mark.parametrize("n", range(2, 13))
    def test_trace_zero_except_type0(self, n):
        for desc in enumerate_arcs(n):
            mat = realizing_matrix(desc)
            diag = mat.trace_weights()
            if desc.arc_type.value == "0":
                assert len(diag) == mat.order
                assert all(w is Weight.BETA for w in diag)
                for alpha in (0.0, 0.3, 1.0):
                    # exact summation: the diagonal is n identical copies of beta
                    trace = math.fsum(np.diag(evaluate(mat, alpha)))
                    assert abs(trace - desc.n * (1 - alpha)) <= 1e-15
            else:
                assert diag == []
                assert float(np.trace(evaluate(mat, 0.37))) == 0.0
