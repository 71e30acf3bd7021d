"""Backend selection for the numeric hot kernels.

The compiled Cython extension is preferred when present; otherwise the
numpy/scipy fallback is used.  KARP_BACKEND=py forces the fallback,
KARP_BACKEND=c requires the extension (ImportError if missing).

Public surface:

  BACKEND          -- "compiled" or "python"
  charpoly_coeffs  -- ascending monic characteristic polynomial of a matrix
  poly_roots       -- all complex roots of an ascending-coefficient polynomial
"""

from __future__ import annotations

import os

import numpy as np

from ..errors import KarpelevicError

_requested = os.environ.get("KARP_BACKEND", "").strip().lower()
if _requested not in ("", "c", "py"):
    raise KarpelevicError(f"KARP_BACKEND must be 'c' or 'py', got {_requested!r}")

if _requested == "py":
    from . import _fallback as _impl
else:
    try:
        from . import _core as _impl  # type: ignore[attr-defined]
    except ImportError:
        if _requested == "c":
            raise
        from . import _fallback as _impl

BACKEND: str = _impl.name


def charpoly_coeffs(a: np.ndarray) -> np.ndarray:
    """Ascending monic coefficients of det(tI - a); order capped at 64."""
    a = np.asarray(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise KarpelevicError(f"matrix must be square, got shape {a.shape}")
    if a.shape[0] > 64:
        raise KarpelevicError(f"order {a.shape[0]} exceeds the supported cap of 64")
    return np.asarray(_impl.charpoly(a), dtype=float)


def poly_roots(coeffs: np.ndarray) -> np.ndarray:
    """All complex roots of the polynomial with ascending coefficients.

    Exact zero roots (vanishing low-order coefficients) are deflated before
    dispatching to the backend and re-appended, so clustered zeros do not
    degrade the iteration.
    """
    c = np.asarray(coeffs, dtype=float)
    if c.size == 0 or c[-1] == 0.0:
        raise KarpelevicError("leading coefficient must be nonzero")
    deg = c.size - 1
    if deg == 0:
        raise KarpelevicError("cannot take roots of a constant polynomial")
    nz = 0
    while c[nz] == 0.0:
        nz += 1
    zero_part = np.zeros(nz, dtype=complex)
    c = c[nz:]
    if c.size == 1:
        return zero_part
    if c.size == 2:
        return np.concatenate([zero_part, [-c[0] / c[1] + 0j]])
    if c.size == 3:
        a2, a1, a0 = c[2], c[1], c[0]
        disc = (a1 * a1 - 4.0 * a2 * a0) + 0j
        sq = np.sqrt(disc)
        return np.concatenate([zero_part, [(-a1 + sq) / (2 * a2), (-a1 - sq) / (2 * a2)]])
    return np.concatenate([zero_part, np.asarray(_impl.roots(c), dtype=complex)])
