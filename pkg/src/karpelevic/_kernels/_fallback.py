"""Pure numpy/scipy implementations of the hot kernels.

Used whenever the compiled extension is unavailable (or explicitly
disabled via KARP_BACKEND=py).  Same contracts as _core:

  charpoly(a)  -> ascending monic coefficients of det(tI - a)
  roots(c)     -> all complex roots of the ascending-coefficient
                  polynomial c (c[0] != 0 and c[-1] != 0)
"""

from __future__ import annotations

import numpy as np
import scipy.linalg

name = "python"


def charpoly(a: np.ndarray) -> np.ndarray:
    """Characteristic polynomial via Hessenberg reduction + determinant recurrence.

    Avoids the eigenvalue round trip: coefficients come from the exact
    leading-principal-minor recurrence of the Hessenberg form.
    """
    n = a.shape[0]
    if n == 0:
        return np.array([1.0])
    h = scipy.linalg.hessenberg(np.asarray(a, dtype=float))
    polys = [np.array([1.0])]
    for j in range(1, n + 1):
        prev = polys[j - 1]
        p = np.zeros(j + 1)
        p[1:] = prev
        p[:j] -= h[j - 1, j - 1] * prev
        prod = 1.0
        for i in range(j - 1, 0, -1):
            prod *= h[i, i - 1]
            p[:i] -= h[i - 1, j - 1] * prod * polys[i - 1]
        polys.append(p)
    return polys[n]


def roots(c: np.ndarray) -> np.ndarray:
    """All complex roots, via companion-matrix eigenvalues (LAPACK)."""
    return np.roots(np.asarray(c, dtype=float)[::-1])
