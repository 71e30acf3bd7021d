"""Arc tracing, boundary assembly, membership queries, and the empirical
check operations (power-of-matrix arc identities and conjecture probes).

Tracing follows one root of the reduced arc polynomial as the parameter
sweeps [0, 1].  The alpha = 1 end is always a simple root (the polynomial
there is t^s - 1 up to a power of t), whereas at alpha = 0 the seed has
multiplicity floor(n/q) for Types 0/II/III, so continuation runs from
alpha = 1 downward and the exact alpha = 0 endpoint is prepended; the
published samples are in ascending alpha either way.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np
import scipy.optimize

from .arcs import (
    ArcDescriptor,
    ArcType,
    arc_endpoints,
    arc_from_endpoints,
    enumerate_arcs,
    reduced_ito_polynomial,
)
from .errors import ArcTraceError, InvalidOrderError, KarpelevicError
from .farey import Fraction, is_farey_pair
from .matrices import (
    characteristic_polynomial,
    digraph_of_symbolic,
    evaluate,
    is_irreducible,
    is_primitive,
    matrix_power,
    realizing_matrix,
)
from .polyroots import roots

DEFAULT_STEPS = 256
DEFAULT_TOL = 1e-6

_MAX_HALVINGS = 20
_REAL_TOL = 1e-12


@dataclass(frozen=True)
class ArcTrace:
    """Ordered samples (alpha, lambda) along one arc, ascending alpha."""

    desc: ArcDescriptor
    samples: tuple[tuple[float, complex], ...]
    refinement_events: tuple[float, ...]

    @property
    def alphas(self) -> np.ndarray:
        return np.array([a for a, _ in self.samples])

    @property
    def points(self) -> np.ndarray:
        return np.array([z for _, z in self.samples])


@dataclass(frozen=True)
class BoundaryModel:
    """Upper-half boundary of the region: traces plus a radial table.

    degenerate marks the order-2 region, whose boundary is the real
    segment [-1, 1] and has no meaningful radial interpolant.
    """

    n: int
    traces: tuple[ArcTrace, ...]
    thetas: np.ndarray
    radii: np.ndarray
    degenerate: bool


def _distinct_alpha0_roots(desc: ArcDescriptor) -> np.ndarray:
    """Distinct roots of the reduced polynomial at alpha = 0 (exact)."""
    q = desc.pq.q
    ring = [cmath.exp(2j * cmath.pi * k / q) for k in range(q)]
    if desc.arc_type in (ArcType.TYPE_I, ArcType.TYPE_III):
        ring.append(0.0 + 0.0j)
    return np.array(ring)


def _pick_nearest(rts: np.ndarray, pred: complex) -> int:
    return int(np.argmin(np.abs(rts - pred)))


def _pick_with_tiebreak(rts: np.ndarray, pred: complex) -> int:
    """Nearest root to pred, breaking near-ties by modulus then upper half.

    Used only when stepping across a (near-)multiple root, where the
    prediction cannot separate the emerging branches: the boundary branch
    is the outermost one, and of a conjugate pair the primary arc takes
    the upper member.
    """
    dist = np.abs(rts - pred)
    best = float(dist.min())
    cand = np.where(dist <= 3.0 * best + 1e-12)[0]
    return int(max(cand, key=lambda i: (round(abs(rts[i]), 9), rts[i].imag)))


def _trace_type0(desc: ArcDescriptor, steps: int) -> ArcTrace:
    # closed form: the reduced polynomial factors as lambda = beta + alpha*w
    # over n-th roots of unity w; the arc is the branch ending at exp(2*pi*i*rs)
    w = cmath.exp(2j * cmath.pi * desc.rs.p / desc.rs.q)
    samples = []
    for k in range(steps + 1):
        alpha = k / steps
        samples.append((alpha, (1.0 - alpha) + alpha * w))
    return ArcTrace(desc=desc, samples=tuple(samples), refinement_events=())


def trace_arc(desc: ArcDescriptor, steps: int = DEFAULT_STEPS) -> ArcTrace:
    """Follow the arc's root from alpha = 0 to alpha = 1 in `steps` steps.

    The step is halved (up to 20 times, locally) whenever another root
    comes within twice the move distance of the tracked root; an
    unresolved ambiguity is stepped over as a double-root crossing.  Extra
    accepted samples from refinement are reported in refinement_events,
    so len(samples) == steps + 1 + len(refinement_events).
    """
    if steps < 8:
        raise KarpelevicError(f"need at least 8 steps, got {steps}")
    if desc.conjugate:
        inner = trace_arc(desc.mirror(), steps)
        samples = tuple((a, z.conjugate()) for a, z in inner.samples)
        return ArcTrace(desc=desc, samples=samples, refinement_events=inner.refinement_events)
    if desc.arc_type is ArcType.TYPE_0:
        return _trace_type0(desc, steps)

    seed_start, seed_end = arc_endpoints(desc)
    rev_samples: list[tuple[float, complex]] = [(1.0, seed_end)]
    events: list[float] = []
    pos, lam = 1.0, seed_end
    prev_pos: float | None = None
    prev_lam: complex = lam

    for k in range(steps - 1, 0, -1):
        target = k / steps
        budget = _MAX_HALVINGS
        while pos - target > 1e-12:
            step = pos - target
            choice = None
            full_step = True
            while True:
                a_try = target if full_step else pos - step
                rts = np.array(roots(reduced_ito_polynomial(desc, a_try)).roots)
                if prev_pos is None:
                    pred = lam
                else:
                    pred = lam + (lam - prev_lam) / (pos - prev_pos) * (a_try - pos)
                j = _pick_nearest(rts, pred)
                move = abs(rts[j] - lam)
                others = np.abs(rts - rts[j])
                others[j] = np.inf
                gap = float(others.min())
                if gap >= 2.0 * move or move <= 1e-13:
                    choice = (a_try, complex(rts[j]))
                    break
                if budget <= 0:
                    break
                budget -= 1
                step *= 0.5
                full_step = False
            if choice is None:
                # unresolved cluster: a genuine double root sits below pos;
                # step just past it and re-match by extrapolation + tie-break
                a_try = max(target, pos - max(2.0 * step, 1e-9))
                rts = np.array(roots(reduced_ito_polynomial(desc, a_try)).roots)
                if prev_pos is None:
                    pred = lam
                else:
                    pred = lam + (lam - prev_lam) / (pos - prev_pos) * (a_try - pos)
                j = _pick_with_tiebreak(rts, pred)
                choice = (a_try, complex(rts[j]))
                budget = _MAX_HALVINGS
            a_new, lam_new = choice
            if a_new != target:
                events.append(a_new)
            prev_pos, prev_lam = pos, lam
            pos, lam = a_new, lam_new
            rev_samples.append((pos, lam))

    # validate arrival: the last continued root must sit in the basin of the
    # exact alpha = 0 seed, not of any other distinct limit root
    ring = _distinct_alpha0_roots(desc)
    nearest = int(np.argmin(np.abs(ring - lam)))
    if abs(ring[nearest] - seed_start) > 1e-9:
        raise ArcTraceError(
            f"arc {desc.label}: continuation arrived at {ring[nearest]:.6f} "
            f"instead of {seed_start:.6f}",
            alpha=pos,
        )
    rev_samples.append((0.0, seed_start))
    rev_samples.reverse()
    events.reverse()
    return ArcTrace(desc=desc, samples=tuple(rev_samples), refinement_events=tuple(events))


def boundary(n: int, steps: int = DEFAULT_STEPS) -> BoundaryModel:
    """Trace all upper-half arcs and build the radial table on [0, pi]."""
    if n < 2:
        raise InvalidOrderError(f"boundary needs order >= 2, got {n}")
    descs = [d for d in enumerate_arcs(n) if not d.conjugate]
    traces = tuple(trace_arc(d, steps) for d in descs)

    pairs: dict[float, float] = {}
    all_real = True
    for tr in traces:
        for _, z in tr.samples:
            r = min(abs(z), 1.0)
            if abs(z.imag) <= _REAL_TOL:
                theta = 0.0 if z.real >= 0 else math.pi
            else:
                all_real = False
                theta = math.atan2(abs(z.imag), z.real)
            if r > pairs.get(theta, 0.0):
                pairs[theta] = r
    thetas = np.array(sorted(pairs))
    radii = np.array([pairs[t] for t in thetas])
    return BoundaryModel(
        n=n, traces=traces, thetas=thetas, radii=radii, degenerate=all_real
    )


def membership(
    z: complex, n: int, model: BoundaryModel, tol: float = DEFAULT_TOL
) -> str:
    """Classify z as 'inside', 'boundary', or 'outside' the order-n region.

    z is reflected to the upper half plane and its modulus compared with
    the piecewise-linear radial interpolant at arg(z).
    """
    if model is None or model.thetas.size == 0:
        raise KarpelevicError("boundary model is empty")
    if model.n != n:
        raise KarpelevicError(f"model was built for order {model.n}, queried with {n}")
    z = complex(z)
    az = abs(z)
    if az > 1.0 + tol:
        return "outside"
    if model.degenerate:
        # order 2: the region is the real segment [-1, 1]
        if abs(z.imag) > tol:
            return "outside"
        return "boundary" if abs(az - 1.0) <= tol else "inside"
    theta = math.atan2(abs(z.imag), z.real)
    r = float(np.interp(theta, model.thetas, model.radii))
    if abs(az - r) <= tol:
        return "boundary"
    return "inside" if az < r else "outside"


def _companion_trinomial(m: int, c1: float, c0: float) -> np.ndarray:
    """Companion matrix of t^m - c1*t - c0 (nonnegative for c1, c0 >= 0)."""
    a = np.zeros((m, m))
    for i in range(m - 1):
        a[i, i + 1] = 1.0
    a[m - 1, 0] = c0
    a[m - 1, 1] = c1
    return a


def _matched_spectrum_distance(lhs: np.ndarray, rhs: np.ndarray) -> float:
    """Max pairing distance between two spectra as multisets."""
    cost = np.abs(lhs[:, None] - rhs[None, :])
    rows, cols = scipy.optimize.linear_sum_assignment(cost)
    return float(cost[rows, cols].max())


def hausdorff_distance(a: np.ndarray, b: np.ndarray) -> float:
    """Symmetric Hausdorff distance between two finite point sets."""
    d = np.abs(a[:, None] - b[None, :])
    return float(max(d.min(axis=1).max(), d.min(axis=0).max()))


def power_arc_check(
    n: int,
    m: int,
    d: int,
    alpha_grid=None,
    hausdorff_steps: int = 128,
) -> dict:
    """Verify that d-th powers of the trinomial companion family realize
    another arc.

    With (1/m, 1/(m-1)) and (d/m, d/(m-1)) Farey pairs of order n:
      case i  (d | m,   k = m/d):      target K(1/k, d/(m-1)), source
               companion of t^m - alpha*t - beta (alpha/beta roles swapped);
      case ii (d | m-1, k = (m-1)/d,   requires m > k*floor(n/k)):
               target K(d/m, 1/k), source companion of t^m - beta*t - alpha.

    Asserts the characteristic polynomial of M^d against the target's
    reduced polynomial on the alpha grid, matches the powered spectrum as
    a multiset, and reports (without asserting) the Hausdorff distance
    between the powered source arc and the target arc as point sets.
    """
    if not 1 < d < m <= n:
        raise KarpelevicError(f"need 1 < d < m <= n, got d={d}, m={m}, n={n}")
    if m % d != 0 and (m - 1) % d != 0:
        raise KarpelevicError(f"d={d} divides neither m={m} nor m-1={m - 1}")
    source_lo, source_hi = Fraction(1, m), Fraction(1, m - 1)
    if not is_farey_pair(source_lo, source_hi, n):
        raise KarpelevicError(f"(1/{m}, 1/{m - 1}) is not a Farey pair of order {n}")
    if not is_farey_pair(Fraction(d, m), Fraction(d, m - 1), n):
        raise KarpelevicError(
            f"({d}/{m}, {d}/{m - 1}) is not a Farey pair of order {n}"
        )
    if alpha_grid is None:
        alpha_grid = np.linspace(0.0, 1.0, 21)

    if m % d == 0:
        case = "i"
        k = m // d
        target = arc_from_endpoints(n, Fraction(1, k), Fraction(d, m - 1))
    elif (m - 1) % d == 0:
        case = "ii"
        k = (m - 1) // d
        if m <= k * (n // k):
            raise KarpelevicError(
                f"case ii requires m > k*floor(n/k): m={m}, k={k}, n={n}"
            )
        target = arc_from_endpoints(n, Fraction(d, m), Fraction(1, k))
    if target.floor_nq != d:
        raise KarpelevicError(
            f"inconsistent hypothesis: floor({n}/{k}) = {target.floor_nq} != d = {d}"
        )

    max_resid = 0.0
    max_spec = 0.0
    for alpha in alpha_grid:
        beta = 1.0 - alpha
        if case == "i":
            src = _companion_trinomial(m, alpha, beta)
        else:
            src = _companion_trinomial(m, beta, alpha)
        powered = matrix_power(src, d)
        got = characteristic_polynomial(powered).as_array()
        want = reduced_ito_polynomial(target, alpha).as_array()
        max_resid = max(max_resid, float(np.max(np.abs(got - want))))
        spec = np.linalg.eigvals(src)
        max_spec = max(
            max_spec, _matched_spectrum_distance(spec**d, np.linalg.eigvals(powered))
        )

    source = arc_from_endpoints(n, source_lo, source_hi)
    src_pts = trace_arc(source, hausdorff_steps).points ** d
    tgt_pts = trace_arc(target, hausdorff_steps).points
    haus = hausdorff_distance(src_pts, tgt_pts)

    return {
        "check": "power_arc",
        "n": n,
        "m": m,
        "d": d,
        "case": case,
        "source_arc": source.label,
        "target_arc": target.label,
        "max_abs_residual": max_resid,
        "spectrum_mismatch": max_spec,
        "powered_set_hausdorff": haus,
        "pass": bool(max_resid <= 1e-8 and max_spec <= 1e-7),
    }


def convexity_report(desc: ArcDescriptor, steps: int = 128) -> dict:
    """Probe whether the modulus along the arc is convex in alpha.

    This is a conjecture probe: violations are reported, never raised.
    Second differences are taken over the uniform-grid samples only.
    """
    if steps < 32:
        raise KarpelevicError(f"convexity probe needs >= 32 steps, got {steps}")
    tr = trace_arc(desc, steps)
    moduli = [abs(z) for a, z in tr.samples if abs(a * steps - round(a * steps)) < 1e-9]
    second = np.diff(moduli, n=2)
    return {
        "check": "convexity",
        "n": desc.n,
        "arc": desc.label,
        "min_second_difference": float(second.min()),
        "strictly_midpoint_convex": bool((second > 0).all()),
        "violations": int((second < -1e-9).sum()),
    }


def differentiability_scan(n: int, steps: int = 128, threshold: float = 1e-6) -> dict:
    """Report near-zero |dF/dt| along every arc of order n.

    Candidate non-smooth points are interior samples where the derivative
    of the reduced polynomial nearly vanishes at the traced root.  The
    alpha = 0 endpoint of Type 0/II/III arcs is a structural multiple root
    (the branch point where floor(n/q) sheets meet) and is not counted.
    """
    if n < 4:
        raise KarpelevicError(f"differentiability scan needs order >= 4, got {n}")
    arcs_out = []
    total = 0
    for desc in enumerate_arcs(n):
        tr = trace_arc(desc, steps)
        base = desc.mirror() if desc.conjugate else desc
        encounters = []
        min_abs = np.inf
        for a, z in tr.samples:
            if not 0.0 < a < 1.0:
                continue
            zz = z.conjugate() if desc.conjugate else z
            val = abs(reduced_ito_polynomial(base, a).derivative()(zz))
            min_abs = min(min_abs, val)
            if val < threshold:
                encounters.append(a)
        arcs_out.append(
            {
                "arc": desc.label,
                "type": str(desc.arc_type),
                "min_abs_derivative": float(min_abs),
                "encounters": encounters,
            }
        )
        total += len(encounters)
    return {
        "check": "differentiability",
        "n": n,
        "threshold": threshold,
        "total_encounters": total,
        "arcs": arcs_out,
    }


def identity_suite(n: int, grid_size: int = 21) -> list[dict]:
    """Per-arc verification reports: characteristic polynomial identity,
    stochasticity, irreducibility/primitivity, and the trace pattern."""
    if n < 2:
        raise InvalidOrderError(f"verification needs order >= 2, got {n}")
    reports = []
    alphas = np.linspace(0.0, 1.0, grid_size)
    for desc in enumerate_arcs(n):
        mat = realizing_matrix(desc)
        char_resid = 0.0
        row_resid = 0.0
        nonneg = True
        for alpha in alphas:
            a = evaluate(mat, alpha)
            nonneg = nonneg and bool((a >= 0).all())
            row_resid = max(row_resid, float(np.max(np.abs(a.sum(axis=1) - 1.0))))
            got = characteristic_polynomial(a).as_array()
            want = reduced_ito_polynomial(desc, alpha).as_array()
            char_resid = max(char_resid, float(np.max(np.abs(got - want))))
        g = digraph_of_symbolic(mat)
        primitive = is_irreducible(g) and is_primitive(g)
        weights = mat.trace_weights()
        if desc.arc_type is ArcType.TYPE_0:
            trace_ok = len(weights) == mat.order and all(
                w.value == "BETA" for w in weights
            )
        else:
            trace_ok = not weights
        reports.append(
            {
                "check": "realizing_matrix",
                "n": n,
                "arc": desc.label,
                "type": str(desc.arc_type),
                "max_abs_residual": char_resid,
                "row_sum_residual": row_resid,
                "nonnegative": nonneg,
                "primitive": primitive,
                "trace_pattern_ok": trace_ok,
                "pass": bool(
                    char_resid <= 1e-9
                    and row_resid <= 1e-12
                    and nonneg
                    and primitive
                    and trace_ok
                ),
            }
        )
    return reports


def arc_filename(desc: ArcDescriptor) -> str:
    return f"arc_{desc.lo.p}_{desc.lo.q}__{desc.hi.p}_{desc.hi.q}.dat"


def write_trace_dat(trace: ArcTrace, path) -> None:
    """Two-column plot file: one 'Re Im' row per sample."""
    with open(path, "w", encoding="ascii") as fh:
        for _, z in trace.samples:
            fh.write(f"{z.real:.15f} {z.imag:.15f}\n")
