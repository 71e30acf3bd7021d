"""Parametric stochastic matrices realizing the boundary arcs.

Every arc owns a one-parameter family M(alpha) of row-stochastic matrices
whose characteristic polynomial equals the arc's reduced polynomial, so the
traced boundary root is an eigenvalue of M(alpha) for every alpha in [0,1].
Entries are stored symbolically (ONE, ALPHA, BETA with beta = 1 - alpha),
which makes row-sum and trace bookkeeping exact; dense numeric matrices
appear only at the linear-algebra boundary.
"""

from __future__ import annotations

import enum
import math
from collections import deque
from dataclasses import dataclass

import numpy as np

from ._kernels import charpoly_coeffs
from .arcs import ArcDescriptor, ArcType, RealPolynomial
from .errors import KarpelevicError


class Weight(enum.Enum):
    ONE = "ONE"
    ALPHA = "ALPHA"
    BETA = "BETA"


def _weight_value(w: Weight, alpha: float) -> float:
    if w is Weight.ONE:
        return 1.0
    return alpha if w is Weight.ALPHA else 1.0 - alpha


@dataclass(frozen=True)
class ParametricStochasticMatrix:
    """Sparse symbolic matrix; keys are 0-based (row, col) positions.

    Each row holds either a single ONE or one ALPHA plus one BETA, so the
    evaluated matrix is row stochastic for every alpha in [0, 1].
    """

    order: int
    entries: dict[tuple[int, int], Weight]
    provenance: ArcDescriptor

    def trace_weights(self) -> list[Weight]:
        return [w for (i, j), w in self.entries.items() if i == j]

    def to_json_dict(self) -> dict:
        """JSON form with 1-based indices, rows then columns."""
        items = sorted(self.entries.items())
        return {
            "order": self.order,
            "entries": [
                {"row": i + 1, "col": j + 1, "weight": w.value} for (i, j), w in items
            ],
        }


@dataclass(frozen=True)
class Digraph:
    """Directed graph on vertices 0..n-1."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        for i, j in self.edges:
            if not (0 <= i < self.n and 0 <= j < self.n):
                raise KarpelevicError(f"edge ({i}, {j}) outside vertex range 0..{self.n - 1}")

    def successors(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.n)]
        for i, j in sorted(self.edges):
            out[i].append(j)
        return out

    def reversed(self) -> "Digraph":
        return Digraph(self.n, frozenset((j, i) for i, j in self.edges))


def realizing_matrix(desc: ArcDescriptor) -> ParametricStochasticMatrix:
    """The symbolic realizing matrix of an arc.

    Type 0 (order n):    beta on the diagonal, alpha on the n-cycle.
    Type I (order s):    shift rows 1..s-1; last row alpha at column 1 and
                         beta at column s-q+1.
    Type II (order qm):  m blocks of the q-cycle; alpha hops chain the
                         blocks and the last row returns to column qm-s+1.
    Type III (order s):  alpha s-cycle over a beta graph made of a length-d
                         feed-in path (d = s - qm) and m q-cycles.
    """
    q, s, m, n = desc.pq.q, desc.rs.q, desc.floor_nq, desc.n
    e: dict[tuple[int, int], Weight] = {}
    kind = desc.arc_type
    if kind is ArcType.TYPE_0:
        order = n
        for i in range(n):
            e[(i, i)] = Weight.BETA
            e[(i, (i + 1) % n)] = Weight.ALPHA
    elif kind is ArcType.TYPE_I:
        order = s
        for i in range(s - 1):
            e[(i, i + 1)] = Weight.ONE
        e[(s - 1, 0)] = Weight.ALPHA
        e[(s - 1, s - q)] = Weight.BETA
    elif kind is ArcType.TYPE_II:
        order = q * m
        for i in range(1, order):  # 1-based row index
            if i % q:
                e[(i - 1, i)] = Weight.ONE
        for k in range(1, m):
            i = k * q
            e[(i - 1, i)] = Weight.ALPHA
            e[(i - 1, i - q)] = Weight.BETA
        e[(order - 1, order - s)] = Weight.ALPHA
        e[(order - 1, order - q)] = Weight.BETA
    else:
        order = s
        d = s - q * m
        for i in range(1, s):  # 1-based row index
            if i <= d or (i - d) % q:
                e[(i - 1, i)] = Weight.ONE
        for k in range(1, m):
            i = d + k * q
            e[(i - 1, i)] = Weight.ALPHA
            e[(i - 1, i - q)] = Weight.BETA
        e[(s - 1, 0)] = Weight.ALPHA
        e[(s - 1, d + (m - 1) * q)] = Weight.BETA
    return ParametricStochasticMatrix(order=order, entries=e, provenance=desc)


def evaluate(mat: ParametricStochasticMatrix, alpha: float) -> np.ndarray:
    """Dense numeric matrix at a concrete alpha in [0, 1]."""
    if not 0.0 <= alpha <= 1.0:
        raise KarpelevicError(f"alpha must lie in [0, 1], got {alpha}")
    a = np.zeros((mat.order, mat.order))
    for (i, j), w in mat.entries.items():
        a[i, j] += _weight_value(w, alpha)
    return a


def characteristic_polynomial(a: np.ndarray) -> RealPolynomial:
    """Monic det(tI - a), ascending coefficients (orders up to 64)."""
    return RealPolynomial(tuple(charpoly_coeffs(a)))


def rank_one_update_det(a: np.ndarray, k: int, l: int, alpha: float) -> float:
    """det(a + alpha e_k e_l^T) without forming the update.

    Indices are 1-based.  Uses the cofactor identity
    det(A + alpha e_k e_l^T) = det(A) + (-1)^(k+l) alpha det(A with row k
    and column l deleted).
    """
    a = np.asarray(a, dtype=float)
    n = a.shape[0]
    if a.ndim != 2 or a.shape[1] != n:
        raise KarpelevicError(f"matrix must be square, got shape {a.shape}")
    if not (1 <= k <= n and 1 <= l <= n):
        raise KarpelevicError(f"indices ({k}, {l}) outside 1..{n}")
    minor = np.delete(np.delete(a, k - 1, axis=0), l - 1, axis=1)
    minor_det = 1.0 if minor.size == 0 else float(np.linalg.det(minor))
    return float(np.linalg.det(a)) + (-1) ** (k + l) * alpha * minor_det


def digraph_of(a: np.ndarray, zero_tol: float = 1e-14) -> Digraph:
    """Digraph with an edge (i, j) wherever |a_ij| exceeds zero_tol."""
    a = np.asarray(a)
    n = a.shape[0]
    rows, cols = np.nonzero(np.abs(a) > zero_tol)
    return Digraph(n, frozenset(zip(rows.tolist(), cols.tolist())))


def digraph_of_symbolic(mat: ParametricStochasticMatrix) -> Digraph:
    """Structural digraph: every stored entry is nonzero for alpha in (0, 1)."""
    return Digraph(mat.order, frozenset(mat.entries))


def _reachable(succ: list[list[int]], start: int) -> set[int]:
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for v in succ[u]:
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return seen


def is_irreducible(g: Digraph) -> bool:
    """True iff the digraph is strongly connected (single vertices count)."""
    if g.n == 0:
        raise KarpelevicError("digraph must be nonempty")
    if g.n == 1:
        return True
    fwd = _reachable(g.successors(), 0)
    if len(fwd) < g.n:
        return False
    bwd = _reachable(g.reversed().successors(), 0)
    return len(bwd) == g.n


def is_primitive(g: Digraph) -> bool:
    """True iff the gcd of all directed cycle lengths is 1.

    Computed from BFS levels: for a strongly connected digraph the cycle
    gcd equals gcd(level(u) + 1 - level(v)) over all edges (u, v).
    """
    if not is_irreducible(g):
        raise KarpelevicError("primitivity requires a strongly connected digraph")
    succ = g.successors()
    level = [-1] * g.n
    level[0] = 0
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for v in succ[u]:
            if level[v] < 0:
                level[v] = level[u] + 1
                queue.append(v)
    g_cycles = 0
    for u, v in g.edges:
        g_cycles = math.gcd(g_cycles, level[u] + 1 - level[v])
    return g_cycles == 1


def matrix_power(a: np.ndarray, d: int) -> np.ndarray:
    """a**d by repeated squaring."""
    if d < 1:
        raise KarpelevicError(f"exponent must be >= 1, got {d}")
    return np.linalg.matrix_power(np.asarray(a, dtype=float), d)
