"""Parity between the compiled kernels and the numpy fallback.

Both backends must meet the same contracts; when the extension is built,
their outputs are compared directly on random and structured inputs.
"""

import numpy as np
import pytest

from karpelevic import BACKEND, Fraction, arc_from_endpoints, reduced_ito_polynomial
from karpelevic._kernels import _fallback, charpoly_coeffs, poly_roots
from karpelevic.errors import KarpelevicError

try:
    from karpelevic._kernels import _core
except ImportError:
    _core = None

needs_core = pytest.mark.skipif(_core is None, reason="compiled kernels not built")

BACKENDS = [_fallback] + ([_core] if _core is not None else [])


def reference_polynomials():
    out = []
    for n, a, b in [(9, "1/9", "1/8"), (9, "2/7", "1/3"), (9, "2/9", "1/4"), (12, "1/12", "1/11")]:
        desc = arc_from_endpoints(n, Fraction.parse(a), Fraction.parse(b))
        for alpha in (0.05, 0.3, 0.72, 1.0):
            out.append(reduced_ito_polynomial(desc, alpha).as_array())
    return out


def test_backend_is_reported():
    assert BACKEND in ("compiled", "python")


@pytest.mark.parametrize("impl", BACKENDS, ids=lambda m: m.name)
def test_charpoly_against_eigenvalue_route(impl):
    rng = np.random.default_rng(42)
    for _ in range(60):
        n = int(rng.integers(1, 14))
        a = rng.standard_normal((n, n))
        got = np.asarray(impl.charpoly(a))
        want = np.poly(np.linalg.eigvals(a))[::-1].real
        assert np.abs(got - want).max() <= 1e-8 * max(1.0, np.abs(want).max())


@pytest.mark.parametrize("impl", BACKENDS, ids=lambda m: m.name)
def test_roots_residuals(impl):
    for c in reference_polynomials():
        lead = np.trim_zeros(c, "f")
        rs = np.asarray(impl.roots(lead))
        residual = np.abs(np.polyval(lead[::-1], rs)).max()
        assert residual <= 1e-10 * (1.0 + np.abs(c).max())
        assert rs.size == lead.size - 1


@needs_core
def test_charpoly_backend_parity():
    rng = np.random.default_rng(5)
    mats = [rng.standard_normal((n, n)) for n in range(1, 14)]
    mats.append(np.eye(9))
    for a in mats:
        got = np.asarray(_core.charpoly(a))
        want = np.asarray(_fallback.charpoly(a))
        assert np.abs(got - want).max() <= 1e-9 * max(1.0, np.abs(want).max())


@needs_core
def test_roots_backend_parity_as_multisets():
    from scipy.optimize import linear_sum_assignment

    for c in reference_polynomials():
        lead = np.trim_zeros(c, "f")
        a = np.asarray(_core.roots(lead))
        b = np.asarray(_fallback.roots(lead))
        cost = np.abs(a[:, None] - b[None, :])
        rows, cols = linear_sum_assignment(cost)
        assert cost[rows, cols].max() <= 1e-7


class TestPolyRootsWrapper:
    def test_zero_deflation(self):
        # t^3 + t^2 = t^2 (t + 1)
        rs = poly_roots(np.array([0.0, 0.0, 1.0, 1.0]))
        assert rs.size == 3
        assert sorted(abs(z) for z in rs)[:2] == [0.0, 0.0]
        assert min(abs(z + 1) for z in rs) < 1e-12

    def test_linear_and_quadratic_closed_forms(self):
        assert poly_roots(np.array([-2.0, 1.0]))[0] == pytest.approx(2.0)
        rs = sorted(poly_roots(np.array([1.0, 0.0, 1.0])), key=lambda z: z.imag)
        assert rs[0] == pytest.approx(-1j)
        assert rs[1] == pytest.approx(1j)

    def test_rejects_degenerate(self):
        with pytest.raises(KarpelevicError):
            poly_roots(np.array([1.0, 2.0, 0.0]))
        with pytest.raises(KarpelevicError):
            poly_roots(np.array([3.0]))

    def test_charpoly_wrapper_validation(self):
        with pytest.raises(KarpelevicError):
            charpoly_coeffs(np.zeros((2, 3)))
