"""Root finding and the analytic toolkit for the trinomial family
f_alpha(t) = t^n - beta*t - alpha, beta = 1 - alpha.

For odd n the resultant of f_alpha with its derivative has the closed form

    pi(alpha) = n^n alpha^(n-1) + (n-1)^(n-1) (alpha - 1)^n,

strictly increasing on (0, inf) with a single zero alpha* in (0, 1); at
alpha* the family acquires one real double root -alpha*n/(beta*(n-1)).
Arc tangents come from implicit differentiation of the reduced polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._kernels import poly_roots
from .arcs import (
    ArcDescriptor,
    RealPolynomial,
    reduced_ito_alpha_derivative,
    reduced_ito_polynomial,
)
from .errors import KarpelevicError, MultipleRootError

_DERIVATIVE_FLOOR = 1e-10  # below this |F'(lambda)| the tangent is undefined


@dataclass(frozen=True)
class RootSet:
    """All roots of one polynomial plus the attained residual bound."""

    roots: tuple[complex, ...]
    residual_bound: float


def roots(p: RealPolynomial) -> RootSet:
    """All complex roots of p; the residual bound is max |p(root)|."""
    if p.degree == 0:
        raise KarpelevicError("roots of a constant polynomial are undefined")
    rts = poly_roots(p.as_array())
    residual = float(np.max(np.abs(p(rts)))) if rts.size else 0.0
    return RootSet(roots=tuple(rts.tolist()), residual_bound=residual)


def trinomial(n: int, alpha: float) -> RealPolynomial:
    """t^n - (1-alpha) t - alpha."""
    c = np.zeros(n + 1)
    c[n] = 1.0
    c[1] = -(1.0 - alpha)
    c[0] = -alpha
    return RealPolynomial(tuple(c))


def resultant_pi(n: int, alpha: float) -> float:
    """Closed-form resultant of the trinomial and its derivative, odd n >= 5."""
    if n < 5 or n % 2 == 0:
        raise KarpelevicError(f"closed form requires odd n >= 5, got {n}")
    return float(n**n * alpha ** (n - 1) + (n - 1) ** (n - 1) * (alpha - 1.0) ** n)


def find_pi_root(n: int) -> float:
    """The unique alpha* in (0, 1) where resultant_pi vanishes, by bisection."""
    scale = float(max(n**n, (n - 1) ** (n - 1)))
    lo, hi = 0.0, 1.0
    flo = resultant_pi(n, lo)
    if flo >= 0:  # pi(0) = -(n-1)^(n-1) < 0 for odd n
        raise KarpelevicError(f"unexpected sign of resultant at 0 for n={n}")
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        fmid = resultant_pi(n, mid)
        if abs(fmid) <= 1e-12 * scale and hi - lo <= 1e-15:
            return mid
        if (fmid < 0) == (flo < 0):
            lo, flo = mid, fmid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def multiple_root_witness(n: int, alpha: float):
    """A verified double root of the trinomial at this alpha, if one exists.

    Returns (lambda, 2) or None.  Even n never has one; odd n requires
    alpha < beta and a vanishing resultant, and then the double root is
    lambda = -alpha*n/(beta*(n-1)) with multiplicity exactly two.
    """
    if n < 4:
        raise KarpelevicError(f"witness analysis requires n >= 4, got {n}")
    if not 0.0 <= alpha <= 1.0:
        raise KarpelevicError(f"alpha must lie in [0, 1], got {alpha}")
    if n % 2 == 0:
        return None
    beta = 1.0 - alpha
    if alpha >= beta:
        return None
    pi_val = n**n * alpha ** (n - 1) + (n - 1) ** (n - 1) * (alpha - 1.0) ** n
    scale = n**n * alpha ** (n - 1) + (n - 1) ** (n - 1) * beta**n
    if abs(pi_val) > 1e-10 * max(scale, 1.0):
        return None
    lam = -alpha * n / (beta * (n - 1))
    f = trinomial(n, alpha)
    df = f.derivative()
    if abs(f(lam)) > 1e-9 or abs(df(lam)) > 1e-9:
        return None
    if df.derivative()(lam) == 0.0:
        return None
    return lam, 2


def arc_tangent(desc: ArcDescriptor, alpha: float, lam: complex) -> complex:
    """d(lambda)/d(alpha) of the traced root, by implicit differentiation.

    lam must be a (simple) root of the reduced polynomial at this alpha.
    For Type I arcs the reduced family is the affine pencil
    alpha*(t^s - 1) + (1-alpha)*(t^s - t^(s-q)), and this formula agrees
    with the pencil derivative (g - f)/c'.
    """
    if not 0.0 < alpha < 1.0:
        raise KarpelevicError(f"tangent requires alpha in (0, 1), got {alpha}")
    f = reduced_ito_polynomial(desc, alpha)
    if abs(f(lam)) > 1e-8:
        raise KarpelevicError(
            f"lambda={lam} is not a root of the arc polynomial at alpha={alpha}"
        )
    dt = f.derivative()(lam)
    if abs(dt) < _DERIVATIVE_FLOOR:
        raise MultipleRootError(
            f"multiple root at alpha={alpha}: |dF/dt|={abs(dt):.3e}"
        )
    da = reduced_ito_alpha_derivative(desc, alpha)(lam)
    return -da / dt
