"""Farey fractions of bounded order and the neighbor (consecutivity) criterion.

Everything here is exact integer arithmetic; no floating point.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import total_ordering

from .errors import InvalidOrderError, KarpelevicError

_FRACTION_RE = re.compile(r"^\s*(\d+)\s*/\s*(\d+)\s*$")


@total_ordering
@dataclass(frozen=True)
class Fraction:
    """Reduced fraction p/q with 0 <= p/q <= 1, ordered by rational value.

    Inputs are reduced on construction, so structural equality coincides
    with equality of values.
    """

    p: int
    q: int

    def __post_init__(self):
        if self.q <= 0:
            raise KarpelevicError(f"denominator must be positive, got {self.q}")
        if not 0 <= self.p <= self.q:
            raise KarpelevicError(f"fraction {self.p}/{self.q} lies outside [0, 1]")
        g = math.gcd(self.p, self.q)
        if g > 1:
            object.__setattr__(self, "p", self.p // g)
            object.__setattr__(self, "q", self.q // g)

    @classmethod
    def parse(cls, text: str) -> "Fraction":
        m = _FRACTION_RE.match(text)
        if not m:
            raise KarpelevicError(f"cannot parse fraction {text!r} (expected p/q)")
        return cls(int(m.group(1)), int(m.group(2)))

    def __lt__(self, other: "Fraction") -> bool:
        return self.p * other.q < other.p * self.q

    def __float__(self) -> float:
        return self.p / self.q

    def __str__(self) -> str:
        return f"{self.p}/{self.q}"

    def mirrored(self) -> "Fraction":
        """The reflection 1 - p/q (same denominator)."""
        return Fraction(self.q - self.p, self.q)


def farey_sequence(n: int) -> list[Fraction]:
    """All reduced p/q with 0 <= p < q <= n in increasing order, plus 1/1.

    The closing 1/1 makes adjacent-pair iteration wrap the full circle of
    arc endpoints.  The list has 1 + sum(phi(k), k=1..n) elements.
    """
    if n < 1:
        raise InvalidOrderError(f"order must be >= 1, got {n}")
    seq = [Fraction(0, 1)]
    a, b, c, d = 0, 1, 1, n
    while c <= n:
        seq.append(Fraction(c, d))
        k = (n + b) // d
        a, b, c, d = c, d, k * c - a, k * d - b
    return seq


def is_farey_pair(a: Fraction, b: Fraction, n: int) -> bool:
    """True iff a < b are consecutive in the order-n Farey sequence.

    Uses the arithmetic criterion: for a = p/q and b = r/s the pair is
    consecutive exactly when q*r - p*s = 1 and q + s > n.
    """
    if n < 1:
        raise InvalidOrderError(f"order must be >= 1, got {n}")
    if not a < b:
        raise KarpelevicError(f"fractions out of order: {a} >= {b}")
    if a.q > n or b.q > n:
        raise KarpelevicError(f"denominators of {a}, {b} must not exceed {n}")
    return a.q * b.p - a.p * b.q == 1 and a.q + b.q > n


def divisor_pair_check(d: int, n: int) -> bool:
    """Whether (d/n, d/(n-1)) is a Farey pair of order n.

    Equivalent to d dividing n or n-1; the equivalence with the
    arithmetic criterion is exercised by the test suite.
    """
    if not 1 < d < n:
        raise KarpelevicError(f"need 1 < d < n, got d={d}, n={n}")
    return n % d == 0 or (n - 1) % d == 0
