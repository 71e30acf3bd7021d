"""Boundary arcs of the Karpelevic region and their defining polynomials.

Each arc joins two consecutive points e^(2*pi*i*p/q), e^(2*pi*i*r/s) of the
unit circle (p/q, r/s Farey neighbors of order n, with q < s by convention)
and is swept by a root of the boundary equation

    t^s (t^q - beta)^floor(n/q) = alpha^floor(n/q) t^(q*floor(n/q)),

with beta = 1 - alpha, as alpha runs from 0 to 1.  Dividing out the common
power of t leaves the type-specific reduced polynomial whose degree matches
the realizing matrix of the arc.
"""

from __future__ import annotations

import cmath
import enum
from dataclasses import dataclass
from math import comb

import numpy as np

from .errors import InvalidOrderError, KarpelevicError
from .farey import Fraction, farey_sequence, is_farey_pair


class ArcType(enum.Enum):
    TYPE_0 = "0"
    TYPE_I = "I"
    TYPE_II = "II"
    TYPE_III = "III"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class RealPolynomial:
    """Dense real univariate polynomial, coefficients in ascending degree.

    Exact trailing zeros are trimmed on construction; the zero polynomial
    is represented by the single coefficient 0.0.
    """

    coeffs: tuple[float, ...]

    def __post_init__(self):
        c = list(self.coeffs)
        while len(c) > 1 and c[-1] == 0.0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(float(x) for x in c))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def as_array(self) -> np.ndarray:
        return np.asarray(self.coeffs, dtype=float)

    def __call__(self, z):
        # Horner, complex-safe
        acc = 0j if isinstance(z, complex) or np.iscomplexobj(z) else 0.0
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def derivative(self) -> "RealPolynomial":
        if self.degree == 0:
            return RealPolynomial((0.0,))
        return RealPolynomial(
            tuple(k * c for k, c in enumerate(self.coeffs) if k > 0)
        )

    def shifted(self, k: int) -> "RealPolynomial":
        """Multiply by t^k."""
        return RealPolynomial((0.0,) * k + self.coeffs)


@dataclass(frozen=True)
class ArcDescriptor:
    """One boundary arc of order n.

    lo < hi are the endpoints in increasing circular order; pq is the
    endpoint with the smaller denominator (the alpha=0 end of the traced
    root), rs the other.  Arcs lying in the lower half of the circle carry
    conjugate=True and are computed as conjugates of their mirror arc.
    """

    n: int
    lo: Fraction
    hi: Fraction
    pq: Fraction
    rs: Fraction
    floor_nq: int
    arc_type: ArcType
    conjugate: bool

    @property
    def label(self) -> str:
        return f"{self.lo}:{self.hi}"

    @property
    def order(self) -> int:
        """Degree of the reduced polynomial = order of the realizing matrix."""
        if self.arc_type is ArcType.TYPE_0:
            return self.n
        if self.arc_type is ArcType.TYPE_II:
            return self.pq.q * self.floor_nq
        return self.rs.q

    def mirror(self) -> "ArcDescriptor":
        """The arc reflected across the real axis (endpoints x -> 1-x)."""
        return arc_from_endpoints(self.n, self.hi.mirrored(), self.lo.mirrored())


def _classify(q: int, s: int, floor_nq: int) -> ArcType:
    # q == 1 must be tested first: it gives floor_nq = n and s = q*floor_nq,
    # which the Type II/III split cannot represent.
    if q == 1:
        return ArcType.TYPE_0
    if floor_nq == 1:
        return ArcType.TYPE_I
    if s == q * floor_nq:
        raise KarpelevicError(f"impossible arc geometry: s = q*floor(n/q) = {s}")
    return ArcType.TYPE_II if s < q * floor_nq else ArcType.TYPE_III


def arc_from_endpoints(n: int, a: Fraction, b: Fraction) -> ArcDescriptor:
    """Build the descriptor for the arc with endpoints {a, b} at order n."""
    lo, hi = (a, b) if a < b else (b, a)
    if not is_farey_pair(lo, hi, n):
        raise KarpelevicError(f"({lo}, {hi}) is not a Farey pair of order {n}")
    pq, rs = (lo, hi) if lo.q < hi.q else (hi, lo)
    floor_nq = n // pq.q
    arc_type = _classify(pq.q, rs.q, floor_nq)
    return ArcDescriptor(
        n=n,
        lo=lo,
        hi=hi,
        pq=pq,
        rs=rs,
        floor_nq=floor_nq,
        arc_type=arc_type,
        conjugate=2 * lo.p >= lo.q,  # lo >= 1/2: mirror image of an upper-half arc
    )


def enumerate_arcs(n: int) -> list[ArcDescriptor]:
    """Descriptors for all adjacent pairs of the order-n Farey sequence."""
    if n < 2:
        raise InvalidOrderError(f"arc enumeration needs order >= 2, got {n}")
    seq = farey_sequence(n)
    return [arc_from_endpoints(n, a, b) for a, b in zip(seq, seq[1:])]


def classify_arc(desc: ArcDescriptor) -> ArcType:
    return _classify(desc.pq.q, desc.rs.q, desc.floor_nq)


def _check_alpha(alpha: float) -> float:
    if not 0.0 <= alpha <= 1.0:
        raise KarpelevicError(f"alpha must lie in [0, 1], got {alpha}")
    return float(alpha)


def _binomial_pow(q: int, m: int, beta: float, size: int, offset: int) -> np.ndarray:
    """Coefficients of t^offset * (t^q - beta)^m in an array of length size.

    Binomial coefficients are exact integers; only powers of beta are
    floating point, which keeps the expansion cancellation-free.
    """
    c = np.zeros(size)
    for k in range(m + 1):
        c[offset + q * k] = comb(m, k) * (-beta) ** (m - k)
    return c


def ito_polynomial(desc: ArcDescriptor, alpha: float) -> RealPolynomial:
    """Left side minus right side of the boundary equation, expanded."""
    alpha = _check_alpha(alpha)
    beta = 1.0 - alpha
    q, s, m = desc.pq.q, desc.rs.q, desc.floor_nq
    c = _binomial_pow(q, m, beta, s + q * m + 1, s)
    c[q * m] -= alpha**m
    return RealPolynomial(tuple(c))


def reduced_ito_polynomial(desc: ArcDescriptor, alpha: float) -> RealPolynomial:
    """The reduced polynomial of the arc at parameter alpha.

    Type 0:   (t - beta)^n - alpha^n                                 degree n
    Type I:   t^s - beta t^(s-q) - alpha                             degree s
    Type II:  (t^q - beta)^m - alpha^m t^(qm - s)                    degree qm
    Type III: t^(s - qm) (t^q - beta)^m - alpha^m                    degree s

    where m = floor(n/q).  Multiplying by the appropriate power of t
    recovers ito_polynomial.
    """
    alpha = _check_alpha(alpha)
    beta = 1.0 - alpha
    q, s, m = desc.pq.q, desc.rs.q, desc.floor_nq
    kind = desc.arc_type
    if kind is ArcType.TYPE_0:
        c = _binomial_pow(1, desc.n, beta, desc.n + 1, 0)
        c[0] -= alpha**desc.n
    elif kind is ArcType.TYPE_I:
        c = np.zeros(s + 1)
        c[s] = 1.0
        c[s - q] -= beta
        c[0] -= alpha
    elif kind is ArcType.TYPE_II:
        c = _binomial_pow(q, m, beta, q * m + 1, 0)
        c[q * m - s] -= alpha**m
    else:
        c = _binomial_pow(q, m, beta, s + 1, s - q * m)
        c[0] -= alpha**m
    return RealPolynomial(tuple(c))


def reduced_ito_alpha_derivative(desc: ArcDescriptor, alpha: float) -> RealPolynomial:
    """Partial derivative in alpha of the reduced polynomial (beta = 1 - alpha)."""
    alpha = _check_alpha(alpha)
    beta = 1.0 - alpha
    q, s, m = desc.pq.q, desc.rs.q, desc.floor_nq
    kind = desc.arc_type
    n = desc.n
    if kind is ArcType.TYPE_0:
        # n (t - beta)^(n-1) - n alpha^(n-1)
        c = n * _binomial_pow(1, n - 1, beta, n, 0)
        c[0] -= n * alpha ** (n - 1)
    elif kind is ArcType.TYPE_I:
        c = np.zeros(s + 1)
        c[s - q] = 1.0
        c[0] = -1.0
    elif kind is ArcType.TYPE_II:
        # m (t^q - beta)^(m-1) - m alpha^(m-1) t^(qm - s)
        c = m * _binomial_pow(q, m - 1, beta, q * m + 1, 0)
        c[q * m - s] -= m * alpha ** (m - 1)
    else:
        c = m * _binomial_pow(q, m - 1, beta, s + 1, s - q * m)
        c[0] -= m * alpha ** (m - 1)
    return RealPolynomial(tuple(c))


def arc_endpoints(desc: ArcDescriptor) -> tuple[complex, complex]:
    """Unit-circle endpoints (alpha=0 limit, alpha=1 limit) of the traced root."""
    start = cmath.exp(2j * cmath.pi * desc.pq.p / desc.pq.q)
    end = cmath.exp(2j * cmath.pi * desc.rs.p / desc.rs.q)
    return start, end
