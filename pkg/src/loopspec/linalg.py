"""Exact characteristic polynomials, eigensolvers, and root finding.

Two independent eigenvalue routes keep floating-point results honest:

* ``eigenvalues`` runs LAPACK's Hessenberg + shifted-QR solver on the
  matrix, then coalesces clusters that a defective (Jordan-block)
  eigenvalue splits apart and restores exact conjugate pairing.
* ``poly_roots`` works purely from the exact integer characteristic
  polynomial: an exact square-free decomposition assigns multiplicities,
  then Aberth-Ehrlich simultaneous iteration locates the simple roots of
  each square-free factor.

``char_poly_exact`` (Faddeev-LeVerrier over arbitrary-precision integers)
and ``linear_subdigraph_charpoly`` (signed cycle-cover enumeration) give
the same dual-route treatment to the polynomial itself.
"""

from __future__ import annotations

import cmath
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .errors import (LoopspecError, NegativeProduct, NoConvergence,
                     SizeLimit)
from .graphs import Digraph
from .tolerances import EIGEN_RESIDUAL_TOL, ROOT_RESIDUAL_TOL

# Computed eigenvalues closer than CLUSTER_RTOL * max(1, ||A||_F) are
# treated as one multiple eigenvalue and replaced by their mean.  Measured
# on all 0/1 matrices with n <= 4 and large random samples up to n = 7:
# QR splits defective eigenvalues by at most ~1e-4 while genuinely distinct
# eigenvalues stay at least ~4e-2 apart, so 1e-3 clears both by an order
# of magnitude.  The mean of a split cluster is accurate to machine
# precision because the first-order perturbations of a Jordan block cancel.
CLUSTER_RTOL = 1e-3

MAX_EXACT_ORDER = 64
MAX_ENUMERATION_ORDER = 8


def adjacency(d: Digraph) -> np.ndarray:
    """0/1 adjacency matrix; diagonal entries mark loops."""
    a = np.zeros((d.n, d.n), dtype=np.int64)
    for u, v in d.arcs:
        a[u, v] = 1
    for v in d.loops:
        a[v, v] = 1
    return a


def _as_int_rows(mat) -> list[list[int]]:
    a = np.asarray(mat)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise LoopspecError("matrix must be square")
    if a.dtype.kind == "f":
        if not np.all(a == np.round(a)):
            raise LoopspecError("matrix entries must be integers")
        a = a.astype(np.int64)
    elif a.dtype.kind not in "iu" and a.dtype != object:
        raise LoopspecError("matrix entries must be integers")
    return [[int(x) for x in row] for row in a.tolist()]


def _as_float_matrix(mat) -> np.ndarray:
    a = np.asarray(mat, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise LoopspecError("matrix must be square")
    if not np.all(np.isfinite(a)):
        raise LoopspecError("matrix entries must be finite")
    return a


# ---------------------------------------------------------------------------
# Exact characteristic polynomials

@dataclass(frozen=True)
class CharPoly:
    """Monic integer polynomial det(lambda*I - A).

    ``coeffs`` holds the n coefficients below the leading term in ascending
    order: coeffs[0] is the constant term and coeffs[n-1] multiplies
    lambda^(n-1).  The leading 1 is implicit.
    """

    coeffs: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs)

    def full(self) -> tuple[int, ...]:
        """All coefficients ascending, leading 1 included."""
        return self.coeffs + (1,)

    def __call__(self, z: complex) -> complex:
        acc = 0j
        for c in reversed(self.full()):
            acc = acc * z + c
        return acc


def char_poly_exact(mat) -> CharPoly:
    """Faddeev-LeVerrier with exact integer arithmetic.

    Every trace division by the step index is exact for integer matrices
    and asserted so.  Supports n <= 64; the big-integer cost grows fast
    beyond that.
    """
    a = _as_int_rows(mat)
    n = len(a)
    if n > MAX_EXACT_ORDER:
        raise SizeLimit(f"exact characteristic polynomial capped at n = {MAX_EXACT_ORDER}")
    rng = range(n)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    m = [[1 if i == j else 0 for j in rng] for i in rng]  # M_1 = I
    for k in range(1, n + 1):
        if k > 1:
            prev = m
            m = [[sum(a[i][t] * prev[t][j] for t in rng) for j in rng] for i in rng]
            c = coeffs[n - k + 1]
            for i in rng:
                m[i][i] += c
        trace_am = sum(a[i][t] * m[t][i] for i in rng for t in rng)
        if trace_am % k:
            raise LoopspecError("non-exact division in Faddeev-LeVerrier")
        coeffs[n - k] = -(trace_am // k)
    return CharPoly(tuple(coeffs[:n]))


def digraph_charpoly(d: Digraph) -> CharPoly:
    return char_poly_exact(adjacency(d))


def charpoly_product(polys: Iterable[CharPoly]) -> CharPoly:
    """Product of monic polynomials, exact."""
    acc = [1]
    for p in polys:
        q = list(p.full())
        out = [0] * (len(acc) + len(q) - 1)
        for i, x in enumerate(acc):
            if x:
                for j, y in enumerate(q):
                    out[i + j] += x * y
        acc = out
    assert acc[-1] == 1
    return CharPoly(tuple(acc[:-1]))


def linear_subdigraph_charpoly(d: Digraph) -> CharPoly:
    """Characteristic polynomial from signed cycle-cover counts.

    The coefficient of lambda^(n-i) is the sum over all unions L of
    vertex-disjoint directed cycles covering exactly i vertices (loops count
    as 1-cycles) of (-1) raised to the number of cycles in L.  Exponential
    enumeration; the independent oracle for ``char_poly_exact``.
    """
    n = d.n
    if n > MAX_ENUMERATION_ORDER:
        raise SizeLimit(f"cycle-cover enumeration capped at n = {MAX_ENUMERATION_ORDER}")
    present = set(d.arcs) | {(v, v) for v in d.loops}
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    for size in range(1, n + 1):
        total = 0
        for subset in itertools.combinations(range(n), size):
            for image in itertools.permutations(subset):
                if all((u, v) in present for u, v in zip(subset, image)):
                    total += -1 if _cycle_count(subset, image) % 2 else 1
        # a_i = sum (-1)**p(L); the coefficient of lambda^(n-i)
        coeffs[n - size] = total
    return CharPoly(tuple(coeffs[:n]))


def _cycle_count(domain: tuple[int, ...], image: tuple[int, ...]) -> int:
    succ = dict(zip(domain, image))
    seen: set[int] = set()
    cycles = 0
    for start in domain:
        if start in seen:
            continue
        cycles += 1
        v = start
        while v not in seen:
            seen.add(v)
            v = succ[v]
    return cycles


# ---------------------------------------------------------------------------
# Spectra

@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues in canonical order (descending real part, then
    descending imaginary part) with per-value backward-error estimates.

    ``residuals`` may be empty when the caller skipped their computation.
    """

    values: tuple[complex, ...]
    residuals: tuple[float, ...] = ()

    def __len__(self) -> int:
        return len(self.values)

    def real_parts(self) -> tuple[float, ...]:
        return tuple(z.real for z in self.values)

    def rho(self) -> float:
        return max(abs(z) for z in self.values)


def _canonical(values: Iterable[complex]) -> tuple[complex, ...]:
    return tuple(sorted(values, key=lambda z: (-z.real, -z.imag)))


def _coalesce_clusters(values: list[complex], tol: float) -> list[complex]:
    """Single-linkage clusters under ``tol``; each replaced by its mean."""
    k = len(values)
    parent = list(range(k))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(k):
        for j in range(i + 1, k):
            if abs(values[i] - values[j]) <= tol:
                parent[find(i)] = find(j)
    groups: dict[int, list[complex]] = {}
    for i in range(k):
        groups.setdefault(find(i), []).append(values[i])
    out: list[complex] = []
    for members in groups.values():
        mean = sum(members) / len(members)
        out.extend([mean] * len(members))
    return out


def _conjugate_symmetrize(values: list[complex], tol: float) -> list[complex]:
    """Average matched conjugate pairs to exactly x +/- iy; unpaired
    near-real values drop their imaginary dust."""
    idx_pos = [i for i, z in enumerate(values) if z.imag > 0]
    idx_neg = [i for i, z in enumerate(values) if z.imag < 0]
    out = list(values)
    paired: set[int] = set()
    for i in sorted(idx_pos, key=lambda i: (values[i].real, values[i].imag)):
        best = None
        best_dist = tol
        for j in idx_neg:
            if j in paired:
                continue
            dist = abs(values[i].conjugate() - values[j])
            if dist <= best_dist:
                best, best_dist = j, dist
        if best is not None:
            paired.update((i, best))
            x = 0.5 * (values[i].real + values[best].real)
            y = 0.5 * (values[i].imag - values[best].imag)
            out[i] = complex(x, y)
            out[best] = complex(x, -y)
    for i in itertools.chain(idx_pos, idx_neg):
        if i not in paired and abs(out[i].imag) <= tol:
            out[i] = complex(out[i].real, 0.0)
    return out


def eigenvalues(mat, *, with_residuals: bool = True) -> Spectrum:
    """Spectrum of a real square matrix.

    LAPACK values are polished in two steps: clusters closer than
    CLUSTER_RTOL * max(1, ||A||_F) collapse to their mean (recovering
    defective multiple eigenvalues to machine precision), and conjugate
    pairs are averaged to exact conjugates.  The residual reported for each
    value is sigma_min(A - lambda*I), the smallest perturbation of A that
    makes the value exact; the contract caps it at 1e-10 * max(1, ||A||_F).

    ``with_residuals=False`` skips the residual computation for bulk
    sweeps; values are identical.
    """
    a = _as_float_matrix(mat)
    scale = max(1.0, float(np.linalg.norm(a)))
    try:
        raw = np.linalg.eigvals(a)
    except np.linalg.LinAlgError as exc:
        raise NoConvergence(f"QR iteration failed: {exc}") from exc
    polished = _coalesce_clusters([complex(z) for z in raw], CLUSTER_RTOL * scale)
    polished = _conjugate_symmetrize(polished, CLUSTER_RTOL * scale)
    values = _canonical(polished)
    residuals: tuple[float, ...] = ()
    if with_residuals:
        res = []
        eye = np.eye(len(a))
        for z in values:
            shifted = a - z * eye
            res.append(float(np.linalg.svd(shifted, compute_uv=False)[-1]))
        residuals = tuple(res)
        if residuals and max(residuals) > EIGEN_RESIDUAL_TOL * scale:
            raise NoConvergence(
                f"eigenvalue backward error {max(residuals):.3e} exceeds "
                f"{EIGEN_RESIDUAL_TOL:.0e} * {scale:.3e}")
    return Spectrum(values, residuals)


def digraph_spectrum(d: Digraph, *, with_residuals: bool = True) -> Spectrum:
    return eigenvalues(adjacency(d), with_residuals=with_residuals)


# ---------------------------------------------------------------------------
# Exact square-free decomposition (rational arithmetic throughout)

def _frac_normalize(p: list[Fraction]) -> list[Fraction]:
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _frac_deriv(p: Sequence[Fraction]) -> list[Fraction]:
    return _frac_normalize([p[i] * i for i in range(1, len(p))] or [Fraction(0)])


def _frac_divmod(a: Sequence[Fraction], b: Sequence[Fraction]):
    a = list(a)
    if len(b) == 1 and b[0] == 0:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(1, len(a) - len(b) + 1)
    for shift in range(len(a) - len(b), -1, -1):
        f = a[shift + len(b) - 1] / b[-1]
        q[shift] = f
        if f:
            for i, bc in enumerate(b):
                a[shift + i] -= f * bc
    return _frac_normalize(q), _frac_normalize(a[:len(b) - 1] or [Fraction(0)])


def _frac_gcd(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    a = _frac_normalize(list(a))
    b = _frac_normalize(list(b))
    while not (len(b) == 1 and b[0] == 0):
        _, r = _frac_divmod(a, b)
        a, b = b, r
    if a[-1] != 0:
        a = [c / a[-1] for c in a]  # monic
    return a


def _to_monic_int(p: Sequence[Fraction]) -> list[int]:
    if p[-1] != 1:
        p = [c / p[-1] for c in p]
    out = []
    for c in p:
        if c.denominator != 1:
            raise LoopspecError("factor of a monic integer polynomial must be integral")
        out.append(int(c))
    return out


def square_free_decomposition(coeffs: Sequence[int]) -> list[tuple[list[int], int]]:
    """Yun's algorithm on a monic integer polynomial.

    Returns (factor, multiplicity) pairs with monic integer square-free
    factors whose multiplicity-weighted product reproduces the input.
    """
    p = [Fraction(c) for c in coeffs]
    p = _frac_normalize(p)
    if len(p) < 2:
        return []
    d = _frac_deriv(p)
    g = _frac_gcd(p, d)
    if len(g) == 1:
        return [(_to_monic_int(p), 1)]
    w, r = _frac_divmod(p, g)
    assert len(r) == 1 and r[0] == 0
    y, r = _frac_divmod(d, g)
    assert len(r) == 1 and r[0] == 0
    z = _frac_normalize([yc - wc for yc, wc in
                         itertools.zip_longest(y, _frac_deriv(w), fillvalue=Fraction(0))])
    out: list[tuple[list[int], int]] = []
    k = 1
    while len(w) > 1:
        g1 = _frac_gcd(w, z)
        if len(g1) > 1:
            out.append((_to_monic_int(g1), k))
        w, r = _frac_divmod(w, g1)
        assert len(r) == 1 and r[0] == 0
        y, r = _frac_divmod(z, g1)
        assert len(r) == 1 and r[0] == 0
        z = _frac_normalize([yc - wc for yc, wc in
                             itertools.zip_longest(y, _frac_deriv(w), fillvalue=Fraction(0))])
        k += 1
    return out


# ---------------------------------------------------------------------------
# Aberth-Ehrlich root finding

def _horner_pair(coeffs: Sequence[float], z: complex) -> tuple[complex, complex]:
    """(p(z), p'(z)) in one pass."""
    p = 0j
    dp = 0j
    for c in reversed(coeffs):
        dp = dp * z + p
        p = p * z + c
    return p, dp


def _aberth_roots(coeffs: Sequence[float], max_iter: int) -> list[complex]:
    """All roots of a monic square-free polynomial (ascending coeffs)."""
    deg = len(coeffs) - 1
    if deg == 1:
        return [complex(-coeffs[0])]
    radius = 1.0 + max(abs(c) for c in coeffs[:-1])
    roots = [radius * cmath.exp(2j * cmath.pi * (k + 0.25) / deg + 0.35j)
             for k in range(deg)]
    for _ in range(max_iter):
        shift = 0.0
        new_roots = list(roots)
        for i, z in enumerate(roots):
            p, dp = _horner_pair(coeffs, z)
            if p == 0:
                continue
            if dp == 0:
                new_roots[i] = z * (1 + 1e-6) + 1e-6
                shift = float("inf")
                continue
            w = p / dp
            s = sum(1 / (z - roots[j]) for j in range(deg) if j != i)
            denom = 1 - w * s
            step = w / denom if denom != 0 else w
            new_roots[i] = z - step
            shift = max(shift, abs(step) / (1 + abs(z)))
        roots = new_roots
        if shift <= 1e-14:
            break
    else:
        raise NoConvergence(f"Aberth iteration cap {max_iter} reached")
    for i, z in enumerate(roots):  # final Newton polish
        for _ in range(2):
            p, dp = _horner_pair(coeffs, z)
            if dp == 0 or p == 0:
                break
            z = z - p / dp
        roots[i] = z
    return roots


def _relative_residual(coeffs: Sequence[float], z: complex) -> float:
    size = 0.0
    power = 1.0
    mag = abs(z)
    for c in coeffs:
        size += abs(c) * power
        power *= mag
    p, _ = _horner_pair(coeffs, z)
    return abs(p) / max(1.0, size)


def poly_roots(p: CharPoly | Sequence[int]) -> Spectrum:
    """All complex roots of a monic integer polynomial, with exact
    multiplicities.

    Roots at zero deflate exactly off the low-order coefficients; the rest
    is split into square-free factors by exact rational arithmetic, so
    Aberth iteration only ever sees simple roots.  The stored residuals are
    relative polynomial residuals |p(z)| / sum |a_k z^k|.
    """
    full = list(p.full()) if isinstance(p, CharPoly) else list(p)
    if len(full) < 2:
        raise LoopspecError("polynomial must have degree >= 1")
    if full[-1] != 1:
        raise LoopspecError("polynomial must be monic")
    zero_mult = 0
    while full[0] == 0 and len(full) > 1:
        full.pop(0)
        zero_mult += 1
    roots: list[complex] = [0j] * zero_mult
    if len(full) > 1:
        cap = 100 * (len(full) - 1)
        for factor, mult in square_free_decomposition(full):
            found = _aberth_roots([float(c) for c in factor], cap)
            found = _conjugate_symmetrize(found, 1e-6 * (1 + max(abs(z) for z in found)))
            roots.extend(z for z in found for _ in range(mult))
    values = _canonical(roots)
    target = list(p.full()) if isinstance(p, CharPoly) else list(p)
    residuals = tuple(_relative_residual([float(c) for c in target], z) for z in values)
    if residuals and max(residuals) > ROOT_RESIDUAL_TOL:
        raise NoConvergence(
            f"root residual {max(residuals):.3e} exceeds {ROOT_RESIDUAL_TOL:.0e}")
    return Spectrum(values, residuals)


# ---------------------------------------------------------------------------
# Spectrum comparison

def matching_distance(a: Spectrum | Sequence[complex],
                      b: Spectrum | Sequence[complex]) -> float:
    """Optimal bipartite matching distance (max matched pair separation).

    Greedy nearest-neighbour matching is returned when it is certifiably
    tight; otherwise (only possible for ambiguous clusters) small instances
    fall back to exhaustive assignment.
    """
    xs = list(a.values if isinstance(a, Spectrum) else a)
    ys = list(b.values if isinstance(b, Spectrum) else b)
    if len(xs) != len(ys):
        return float("inf")
    if not xs:
        return 0.0
    remaining = list(ys)
    worst = 0.0
    for x in sorted(xs, key=lambda z: (-z.real, -z.imag)):
        best = min(range(len(remaining)), key=lambda j: abs(x - remaining[j]))
        worst = max(worst, abs(x - remaining[best]))
        remaining.pop(best)
    if worst > 1e-9 and len(xs) <= 8:
        best_perm = min(
            max(abs(x - y) for x, y in zip(xs, perm))
            for perm in itertools.permutations(ys))
        return min(worst, best_perm)
    return worst


# ---------------------------------------------------------------------------
# Geometric symmetrization and diagonal similarity

def geometric_symmetrization(mat) -> np.ndarray:
    """Entrywise sqrt(a_ij * a_ji).

    For a 0/1 matrix this keeps exactly the digons and loops.  Requires all
    products nonnegative.
    """
    a = _as_float_matrix(mat)
    products = a * a.T
    if np.any(products < 0):
        raise NegativeProduct("a_ij * a_ji < 0 somewhere")
    return np.sqrt(products)


def diagonal_similarity_witness(a, b) -> list[float] | None:
    """A nonzero diagonal d with diag(d) A diag(d)^-1 = B, or None.

    Propagates the ratio constraints d_i / d_j = b_ij / a_ij along a BFS,
    then checks every constraint.
    """
    a = _as_float_matrix(a)
    b = _as_float_matrix(b)
    if a.shape != b.shape:
        raise LoopspecError("shape mismatch")
    n = len(a)
    for i in range(n):
        for j in range(n):
            if (a[i, j] == 0) != (b[i, j] == 0):
                return None
    d = [0.0] * n
    for root in range(n):
        if d[root]:
            continue
        d[root] = 1.0
        queue = [root]
        while queue:
            i = queue.pop()
            for j in range(n):
                if i == j or d[j]:
                    continue
                # d_i * a_ij / d_j = b_ij and d_j * a_ji / d_i = b_ji
                if a[i, j] != 0:
                    d[j] = d[i] * a[i, j] / b[i, j]
                    queue.append(j)
                elif a[j, i] != 0:
                    d[j] = d[i] * b[j, i] / a[j, i]
                    queue.append(j)
    for i in range(n):
        for j in range(n):
            if a[i, j] != 0 and abs(d[i] * a[i, j] / d[j] - b[i, j]) > 1e-9:
                return None
    return d


def diagonally_similar_to_symmetrization(mat, *, verify: bool = False) -> bool:
    """For a 0/1 matrix, diagonal similarity to its geometric
    symmetrization happens exactly when the matrix is already symmetric,
    so the test collapses to the symmetry check.

    ``verify=True`` additionally runs the explicit diagonal-witness search
    and raises if it ever disagrees (a debug mode for small matrices).
    """
    a = _as_float_matrix(mat)
    if not np.all((a == 0) | (a == 1)):
        raise LoopspecError("matrix entries must be 0 or 1")
    symmetric = bool(np.array_equal(a, a.T))
    if verify:
        witness = diagonal_similarity_witness(a, geometric_symmetrization(a))
        if (witness is not None) != symmetric:
            raise LoopspecError(
                "diagonal-similarity witness disagrees with symmetry test")
    return symmetric
