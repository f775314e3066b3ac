"""Universal adjacency matrices and their spectra.

The universal adjacency matrix of a graph H is

    U(H) = alpha*A(H) + beta*D(H) + gamma*I + eta*J,   alpha != 0,

which specializes to the adjacency, Laplacian, signless Laplacian and
Seidel matrices (and, after a parameter swap, the same matrices of the
complement).  Two independent routes to its spectrum live here:

* the structural route: for a validated join structure, per-block
  difference eigenpairs plus the eigenpairs of a small symmetric
  quotient matrix, lifted to block-constant vectors;
* the brute-force route: a dense symmetric eigensolver on U itself
  (cyclic Jacobi rotations, with LAPACK available for large orders).

Everything downstream cross-validates the two against each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import sqrt

import numpy as np

from .groups import LabeledGraph
from .joinstruct import JoinStructure

__all__ = [
    "UniversalParams",
    "UndefinedUniversalMatrixError",
    "JacobiConvergenceError",
    "PRESETS",
    "Eigenspace",
    "Spectrum",
    "QuotientMatrix",
    "VerificationReport",
    "universal_matrix",
    "complement_params",
    "quotient_matrix",
    "jacobi_eigh",
    "dense_eigen",
    "hjoin_spectrum",
    "verify_eigenpairs",
    "charpoly_exact",
    "charpoly_roots",
    "normalized_laplacian_charpoly_at",
    "multiset_gap",
    "sample_params",
]

GROUPING_RTOL = 1e-7  # two eigenvalues merge within 1e-7 * max(1, scale)

PRESETS = {
    "adjacency": (1, 0, 0, 0),
    "laplacian": (-1, 1, 0, 0),
    "signless": (1, 1, 0, 0),
    "seidel": (-2, 0, -1, 1),
}


class UndefinedUniversalMatrixError(ValueError):
    """alpha = 0 leaves U undefined."""


class JacobiConvergenceError(RuntimeError):
    """Cyclic Jacobi failed to push the off-diagonal mass below tolerance."""


@dataclass(frozen=True)
class UniversalParams:
    """The quadruple (alpha, beta, gamma, eta); alpha must be nonzero.

    Values may be int, Fraction or float; integer/Fraction quadruples keep
    quotient matrices exact, which the characteristic-polynomial route
    requires.
    """

    alpha: object
    beta: object
    gamma: object
    eta: object

    def __post_init__(self):
        if self.alpha == 0:
            raise UndefinedUniversalMatrixError(
                "universal matrix U is undefined for alpha = 0"
            )

    @classmethod
    def preset(cls, name: str) -> "UniversalParams":
        if name not in PRESETS:
            raise KeyError(f"unknown preset {name!r}; choose from {sorted(PRESETS)}")
        return cls(*PRESETS[name])

    def as_floats(self) -> tuple[float, float, float, float]:
        return (float(self.alpha), float(self.beta), float(self.gamma), float(self.eta))

    @property
    def is_rational(self) -> bool:
        return all(
            isinstance(v, (int, Fraction)) and not isinstance(v, bool)
            for v in (self.alpha, self.beta, self.gamma, self.eta)
        )


def complement_params(p: UniversalParams, order: int) -> UniversalParams:
    """Parameters p' with U(complement(G), p) == U(G, p') for every G on
    ``order`` vertices: (-a, -b, g + b*(order-1) - a, e + a)."""
    if order < 1:
        raise ValueError("order must be at least 1")
    return UniversalParams(
        -p.alpha,
        -p.beta,
        p.gamma + p.beta * (order - 1) - p.alpha,
        p.eta + p.alpha,
    )


def universal_matrix(g: LabeledGraph, p: UniversalParams) -> np.ndarray:
    """Dense symmetric U(g): entry (i,j) = alpha*A_ij + eta off the diagonal,
    beta*deg(i) + gamma + eta on it."""
    alpha, beta, gamma, eta = p.as_floats()
    a = g.adj.astype(float)
    u = alpha * a + eta
    np.fill_diagonal(u, beta * g.degrees().astype(float) + gamma + eta)
    return u


# ---------------------------------------------------------------------------
# eigen machinery
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Eigenspace:
    value: float
    multiplicity: int
    provenance: str  # "BlockDiff" | "Quotient" | "BlockDiff+Quotient" | "Dense"
    basis: tuple | None = None  # full-dimension vectors, one per multiplicity


@dataclass(eq=False)
class Spectrum:
    """Eigenvalues with multiplicities, sorted descending by value."""

    eigenspaces: tuple
    dimension: int

    def __post_init__(self):
        total = sum(e.multiplicity for e in self.eigenspaces)
        if total != self.dimension:
            raise ValueError(
                f"multiplicities sum to {total}, ambient dimension is {self.dimension}"
            )

    def expanded(self) -> np.ndarray:
        """All eigenvalues with multiplicity, ascending (for comparisons)."""
        vals = [e.value for e in self.eigenspaces for _ in range(e.multiplicity)]
        return np.sort(np.array(vals, dtype=float))

    def find(self, value: float, tol: float) -> Eigenspace | None:
        for e in self.eigenspaces:
            if abs(e.value - value) <= tol:
                return e
        return None


def multiset_gap(a, b) -> float:
    """Largest entrywise distance between two sorted eigenvalue multisets;
    inf when the counts differ."""
    va = a.expanded() if isinstance(a, Spectrum) else np.sort(np.asarray(a, dtype=float))
    vb = b.expanded() if isinstance(b, Spectrum) else np.sort(np.asarray(b, dtype=float))
    if va.shape != vb.shape:
        return float("inf")
    if va.size == 0:
        return 0.0
    return float(np.max(np.abs(va - vb)))


def _group_tolerance(values, group_tol=None) -> float:
    if group_tol is not None:
        return group_tol
    scale = max((abs(v) for v in values), default=0.0)
    return GROUPING_RTOL * max(1.0, scale)


def jacobi_eigh(m: np.ndarray, tol: float | None = None, max_sweeps: int = 50):
    """Cyclic Jacobi diagonalization of a symmetric matrix.

    Sweeps row-cyclically through all off-diagonal positions, annihilating
    each with a Givens rotation, until the off-diagonal Frobenius mass drops
    below ``tol`` (default 1e-14 * ||m||_F).  Returns (values, vectors) with
    orthonormal eigenvector columns.  Raises ``JacobiConvergenceError``
    instead of looping forever.
    """
    a = np.array(m, dtype=float, copy=True)
    n = a.shape[0]
    v = np.eye(n)
    if n <= 1:
        return np.diag(a).copy(), v
    fro = float(np.linalg.norm(a))
    if tol is None:
        tol = 1e-14 * fro
    for _ in range(max_sweeps):
        off = sqrt(2.0 * float(np.sum(np.triu(a, 1) ** 2)))
        if off <= tol:
            return np.diag(a).copy(), v
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                diff = a[q, q] - a[p, p]
                if diff == 0.0:
                    t = 1.0 if apq > 0 else -1.0
                else:
                    theta = diff / (2.0 * apq)
                    if abs(theta) > 1e150:  # tan collapses to 1/(2*theta)
                        t = 1.0 / (2.0 * theta)
                    else:
                        t = np.sign(theta) / (abs(theta) + np.hypot(theta, 1.0))
                c = 1.0 / np.hypot(t, 1.0)
                s = t * c
                app, aqq = a[p, p], a[q, q]
                rp, rq = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                cp, cq = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * cp - s * cq
                a[:, q] = s * cp + c * cq
                # explicit diagonal/pivot update is exacter than the rotation
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = a[q, p] = 0.0
                vp, vq = v[:, p].copy(), v[:, q].copy()
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
    off = sqrt(2.0 * float(np.sum(np.triu(a, 1) ** 2)))
    if off <= tol:
        return np.diag(a).copy(), v
    raise JacobiConvergenceError(
        f"off-diagonal mass {off:.3e} above tolerance {tol:.3e} after {max_sweeps} sweeps"
    )


# LAPACK takes over above this order; the Jacobi route stays available via
# method="jacobi" and is cross-checked against it in the test suite.
_JACOBI_CUTOFF = 12


def dense_eigen(
    m: np.ndarray,
    tol: float | None = None,
    method: str = "auto",
    group_tol: float | None = None,
    vectors: bool = True,
) -> Spectrum:
    """Full eigendecomposition of a symmetric matrix, grouped into
    eigenspaces by the merge tolerance.  The brute-force oracle.

    ``vectors=False`` skips the eigenvector bases (eigenvalue-multiset
    consumers like the route-agreement sweeps don't pay for them)."""
    m = np.asarray(m, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError("square matrix required")
    if not np.array_equal(m, m.T):
        raise ValueError("dense_eigen requires an exactly symmetric matrix")
    n = m.shape[0]
    if n == 0:
        return Spectrum((), 0)
    if method == "auto":
        method = "jacobi" if n <= _JACOBI_CUTOFF else "lapack"
    if method == "jacobi":
        vals, vecs = jacobi_eigh(m, tol=tol)
    elif method == "lapack":
        if vectors:
            vals, vecs = np.linalg.eigh(m)
        else:
            vals, vecs = np.linalg.eigvalsh(m), None
    else:
        raise ValueError(f"unknown method {method!r}")
    order = np.argsort(vals)
    vals = vals[order]
    if vecs is not None:
        vecs = vecs[:, order]
    gtol = _group_tolerance(vals.tolist(), group_tol)
    spaces = []
    start = 0
    for i in range(1, n + 1):
        if i == n or vals[i] - vals[i - 1] > gtol:
            group = vals[start:i]
            basis = None
            if vectors and vecs is not None:
                basis = tuple(vecs[:, j].copy() for j in range(start, i))
            spaces.append(
                Eigenspace(float(np.mean(group)) + 0.0, i - start, "Dense", basis)
            )
            start = i
    spaces.sort(key=lambda e: -e.value)
    return Spectrum(tuple(spaces), n)


# ---------------------------------------------------------------------------
# structural route
# ---------------------------------------------------------------------------


@dataclass(eq=False)
class QuotientMatrix:
    """Quotient of U over the block partition.

    ``sym`` is the symmetric form (off-diagonal theta_ij * sqrt(n_i*n_j));
    ``similar`` the integer-weighted form B = S^-1 K S with S = diag(sqrt n_i)
    (off-diagonal theta_ij * n_j), kept in exact arithmetic whenever the
    parameters are rational so characteristic polynomials stay exact.
    """

    sym: np.ndarray
    similar: list
    sizes: tuple

    @property
    def dimension(self) -> int:
        return len(self.sizes)


def quotient_matrix(js: JoinStructure, p: UniversalParams) -> QuotientMatrix:
    """kappa_i = alpha*r_i + beta*(r_i + rho_i) + gamma + eta*n_i on the
    diagonal; theta_ij = alpha+eta on template edges, eta elsewhere."""
    blocks = js.blocks
    t = len(blocks)
    sizes = js.sizes
    kappa = [
        p.alpha * b.regularity
        + p.beta * (b.regularity + b.join_degree)
        + p.gamma
        + p.eta * b.size
        for b in blocks
    ]
    sym = np.zeros((t, t))
    similar = [[0] * t for _ in range(t)]
    for i in range(t):
        sym[i, i] = float(kappa[i])
        similar[i][i] = kappa[i]
        for j in range(t):
            if i == j:
                continue
            theta = p.alpha + p.eta if js.template.adj[i, j] else p.eta
            similar[i][j] = theta * sizes[j]
            sym[i, j] = float(theta) * sqrt(sizes[i] * sizes[j])
    return QuotientMatrix(sym, similar, sizes)


def hjoin_spectrum(
    js: JoinStructure,
    p: UniversalParams,
    want_vectors: bool = False,
    group_tol: float | None = None,
    orthonormal: bool = False,
) -> Spectrum:
    """Spectrum of U over a validated join structure.

    Part one: every block of size m contributes alpha*lam + beta*(r+rho) +
    gamma with multiplicity m-1, where lam is -1 for clique blocks and 0 for
    independent-set blocks; eigenvectors are the in-block difference vectors
    e_{m,r} (+1 in the first block coordinate, -1 in the r-th), or an
    orthonormal basis of their span with ``orthonormal=True``.  Part two:
    the eigenpairs of the quotient matrix, each lifted to a block-constant
    vector scaled by sqrt(n_last / n_block).  Values are then grouped into
    eigenspaces by the merge tolerance.

    Eigenvectors come back in the canonical vertex order of the underlying
    graph (the oracle's element order), so they pair directly with
    ``universal_matrix`` of that graph.
    """
    from .groups import elements
    from .joinstruct import Variant

    blocks = js.blocks
    sizes = js.sizes
    total = js.order
    canon = elements(js.spec)
    if js.variant is Variant.PROPER:
        canon = [x for x in canon if x != js.spec.identity]
    index = {x: i for i, x in enumerate(canon)}
    coords = [np.array([index[x] for x in b.members], dtype=int) for b in blocks]

    # part 1, grouped by exact formula value
    block_groups: dict[float, list[int]] = {}
    for i, b in enumerate(blocks):
        if b.size < 2:
            continue
        lam_block = -1 if b.kind == "complete" else 0
        value = float(
            p.alpha * lam_block + p.beta * (b.regularity + b.join_degree) + p.gamma
        )
        block_groups.setdefault(value, []).append(i)

    candidates = []  # (value, multiplicity, provenance, vector factory args)
    for value, idxs in block_groups.items():
        mult = sum(sizes[i] - 1 for i in idxs)
        candidates.append((value, mult, "BlockDiff", ("blocks", idxs)))

    qm = quotient_matrix(js, p)
    if qm.dimension <= _JACOBI_CUTOFF:
        qvals, qvecs = jacobi_eigh(qm.sym)
    else:
        qvals, qvecs = np.linalg.eigh(qm.sym)
    for k in range(qm.dimension):
        candidates.append((float(qvals[k]), 1, "Quotient", ("quotient", k)))

    def block_vectors(idxs):
        vecs = []
        for i in idxs:
            for r in range(2, sizes[i] + 1):
                x = np.zeros(total)
                x[coords[i][0]] = 1.0
                x[coords[i][r - 1]] = -1.0
                vecs.append(x)
        return vecs

    def lifted_vector(k):
        nu = qvecs[:, k]
        last = sizes[-1]
        x = np.empty(total)
        for l in range(len(sizes)):
            x[coords[l]] = nu[l] * sqrt(last / sizes[l])
        return x

    gtol = _group_tolerance([v for v, *_ in candidates], group_tol)
    candidates.sort(key=lambda c: c[0])
    spaces = []
    group: list = []
    for cand in candidates:
        if group and cand[0] - group[-1][0] > gtol:
            spaces.append(
                _merge_candidates(group, want_vectors, block_vectors, lifted_vector, orthonormal)
            )
            group = []
        group.append(cand)
    if group:
        spaces.append(
            _merge_candidates(group, want_vectors, block_vectors, lifted_vector, orthonormal)
        )
    spaces.sort(key=lambda e: -e.value)
    return Spectrum(tuple(spaces), total)


def _merge_candidates(group, want_vectors, block_vectors, lifted_vector, orthonormal=False):
    total_mult = sum(m for _, m, _, _ in group)
    value = sum(v * m for v, m, _, _ in group) / total_mult + 0.0  # -0.0 -> 0.0
    provs = []
    for _, _, prov, _ in group:
        if prov not in provs:
            provs.append(prov)
    provenance = "+".join(sorted(provs))
    basis = None
    if want_vectors:
        vecs = []
        for _, _, _, (kind, arg) in group:
            if kind == "blocks":
                vecs.extend(block_vectors(arg))
            else:
                vecs.append(lifted_vector(arg))
        if orthonormal:
            q, _ = np.linalg.qr(np.column_stack(vecs))
            vecs = [q[:, j].copy() for j in range(len(vecs))]
        basis = tuple(vecs)
    return Eigenspace(value, total_mult, provenance, basis)


# ---------------------------------------------------------------------------
# verification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class VerificationReport:
    rows: tuple  # (value, multiplicity, max_residual, bound)
    tolerance: float
    max_residual: float
    passed: bool

    def __str__(self):
        lines = [
            f"eigenvalue {v:.12g} (x{m}): max residual {r:.3e} (bound {b:.3e})"
            for v, m, r, b in self.rows
        ]
        lines.append(
            f"{'PASS' if self.passed else 'FAIL'}: max residual {self.max_residual:.3e}"
        )
        return "\n".join(lines)


def verify_eigenpairs(u: np.ndarray, s: Spectrum, tol: float = 1e-8) -> VerificationReport:
    """Residual check ||U x - lambda x||_inf <= tol * max(1, ||U||_inf) * ||x||_inf
    for every eigenpair carried by ``s``."""
    u = np.asarray(u, dtype=float)
    if u.shape != (s.dimension, s.dimension):
        raise ValueError(
            f"matrix is {u.shape}, spectrum lives in dimension {s.dimension}"
        )
    scale = max(1.0, float(np.max(np.abs(u).sum(axis=1)))) if u.size else 1.0
    rows = []
    worst = 0.0
    passed = True
    for e in s.eigenspaces:
        if e.basis is None:
            raise ValueError("spectrum carries no eigenvector bases")
        res = 0.0
        bound = 0.0
        for x in e.basis:
            r = float(np.max(np.abs(u @ x - e.value * x)))
            b = tol * scale * float(np.max(np.abs(x)))
            res = max(res, r)
            bound = max(bound, b)
            if r > b:
                passed = False
        rows.append((e.value, e.multiplicity, res, bound))
        worst = max(worst, res)
    return VerificationReport(tuple(rows), tol, worst, passed)


# ---------------------------------------------------------------------------
# exact characteristic polynomials and determinants
# ---------------------------------------------------------------------------


def charpoly_exact(q: QuotientMatrix) -> list[Fraction]:
    """Monic characteristic polynomial det(lambda*I - B) of the similar form,
    by the Faddeev-LeVerrier recurrence in exact rational arithmetic.
    Coefficients descend from lambda^t; identical to the polynomial of the
    symmetric form by similarity."""
    for row in q.similar:
        for x in row:
            if not isinstance(x, (int, Fraction)) or isinstance(x, bool):
                raise TypeError(
                    "charpoly_exact needs rational parameters (int or Fraction)"
                )
    t = q.dimension
    b = [[Fraction(x) for x in row] for row in q.similar]
    coeffs = [Fraction(1)]
    m = [row[:] for row in b]
    for k in range(1, t + 1):
        ck = -sum(m[i][i] for i in range(t)) / k
        coeffs.append(ck)
        if k == t:
            break
        for i in range(t):
            m[i][i] += ck
        m = [
            [sum(b[i][l] * m[l][j] for l in range(t)) for j in range(t)]
            for i in range(t)
        ]
    return coeffs


def _poly_trim(c: list[Fraction]) -> list[Fraction]:
    i = 0
    while i < len(c) - 1 and c[i] == 0:
        i += 1
    return c[i:]


def _poly_derivative(c: list[Fraction]) -> list[Fraction]:
    n = len(c) - 1
    if n == 0:
        return [Fraction(0)]
    return [c[i] * (n - i) for i in range(n)]


def _poly_divmod(a: list[Fraction], b: list[Fraction]):
    a = _poly_trim(a[:])
    b = _poly_trim(b[:])
    if len(a) < len(b):
        return [Fraction(0)], a
    deg_q = len(a) - len(b)
    rem = a[:]
    quot = [Fraction(0)] * (deg_q + 1)
    for k in range(deg_q + 1):
        factor = rem[k] / b[0]
        quot[k] = factor
        if factor != 0:
            for j in range(len(b)):
                rem[k + j] -= factor * b[j]
    return _poly_trim(quot), _poly_trim(rem[deg_q + 1 :] or [Fraction(0)])


def _poly_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a, b = _poly_trim(a[:]), _poly_trim(b[:])
    while b != [Fraction(0)]:
        _, r = _poly_divmod(a, b)
        a, b = b, r
    return [x / a[0] for x in a]  # monic


def _poly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    width = max(len(a), len(b))
    pa = [Fraction(0)] * (width - len(a)) + a
    pb = [Fraction(0)] * (width - len(b)) + b
    return _poly_trim([x - y for x, y in zip(pa, pb)])


def _squarefree_parts(f: list[Fraction]):
    """Yun decomposition: f = prod part^mult with each part square-free.
    Returns [(part, multiplicity)] for the non-constant parts."""
    f = [x / f[0] for x in _poly_trim(f)]
    if len(f) == 1:
        return []
    df = _poly_derivative(f)
    a = _poly_gcd(f, df)
    b, _ = _poly_divmod(f, a)
    c, _ = _poly_divmod(df, a)
    d = _poly_sub(c, _poly_derivative(b))
    parts = []
    mult = 1
    while len(b) > 1:
        ai = _poly_gcd(b, d)
        if len(ai) > 1:
            parts.append((ai, mult))
        b, _ = _poly_divmod(b, ai)
        c, _ = _poly_divmod(d, ai)
        d = _poly_sub(c, _poly_derivative(b))
        mult += 1
    return parts


def charpoly_roots(coeffs, dps: int = 50) -> list[float]:
    """Real roots (with multiplicity) of a monic real-rooted polynomial from
    exact coefficients, ascending.

    The exact square-free decomposition is taken first, so repeated
    eigenvalues never degrade the numeric root finding; each square-free
    part is then solved at high precision with mpmath."""
    import mpmath

    exact = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
    out: list[float] = []
    with mpmath.workdps(dps):
        for part, mult in _squarefree_parts(exact):
            poly = [mpmath.mpf(c.numerator) / mpmath.mpf(c.denominator) for c in part]
            roots = mpmath.polyroots(poly, maxsteps=200, extraprec=160)
            for r in roots:
                out.extend([float(mpmath.re(r))] * mult)
    return sorted(out)


def _fraction_det(rows: list[list[Fraction]]) -> Fraction:
    n = len(rows)
    a = [row[:] for row in rows]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        det *= a[col][col]
        inv = a[col][col]
        for r in range(col + 1, n):
            if a[r][col] == 0:
                continue
            factor = a[r][col] / inv
            a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
    return det


def _logdet_pivoted(m: np.ndarray) -> tuple[float, float]:
    """(sign, log|det|) by partial-pivot Gaussian elimination."""
    a = np.array(m, dtype=float, copy=True)
    n = a.shape[0]
    sign = 1.0
    logabs = 0.0
    for col in range(n):
        pivot = col + int(np.argmax(np.abs(a[col:, col])))
        if a[pivot, col] == 0.0:
            return 0.0, float("-inf")
        if pivot != col:
            a[[col, pivot]] = a[[pivot, col]]
            sign = -sign
        pv = a[col, col]
        sign = sign if pv > 0 else -sign
        logabs += float(np.log(abs(pv)))
        a[col + 1 :, col:] -= np.outer(a[col + 1 :, col] / pv, a[col, col:])
    return sign, logabs


def normalized_laplacian_charpoly_at(g: LabeledGraph, lam):
    """Characteristic polynomial of the normalized Laplacian evaluated at
    ``lam``, through det(U(g, (-1, 1-lam, 0, 0))) / prod(deg).

    With an int or Fraction argument the whole computation is exact and a
    Fraction comes back; a float argument uses pivoted elimination in
    log space (the raw determinant and degree product overflow binary64
    long before the ratio does).  Isolated vertices are rejected.
    """
    deg = g.degrees()
    if g.n == 0:
        raise ValueError("empty graph has no normalized Laplacian")
    if int(deg.min()) == 0:
        raise ValueError("graph has an isolated vertex; det(D) = 0")
    if isinstance(lam, (int, Fraction)) and not isinstance(lam, bool):
        lam = Fraction(lam)
        rows = []
        for i in range(g.n):
            row = [Fraction(-1) if g.adj[i, j] else Fraction(0) for j in range(g.n)]
            row[i] = (1 - lam) * int(deg[i])
            rows.append(row)
        det = _fraction_det(rows)
        denom = 1
        for d in deg.tolist():
            denom *= int(d)
        return det / denom
    p = UniversalParams(-1.0, 1.0 - float(lam), 0.0, 0.0)
    sign, logabs = _logdet_pivoted(universal_matrix(g, p))
    if sign == 0.0:
        return 0.0
    logdeg = float(np.sum(np.log(deg.astype(float))))
    return sign * float(np.exp(logabs - logdeg))


# ---------------------------------------------------------------------------
# seeded parameter sampling (shared by the CLI battery and the tests)
# ---------------------------------------------------------------------------


def sample_params(rng: np.random.Generator, integer: bool = False) -> UniversalParams:
    """One random quadruple with alpha bounded away from zero."""
    if integer:
        alpha = int(rng.integers(1, 10)) * (1 if rng.integers(0, 2) else -1)
        beta, gamma, eta = (int(v) for v in rng.integers(-9, 10, size=3))
        return UniversalParams(alpha, beta, gamma, eta)
    alpha = float(rng.uniform(0.25, 3.0)) * (1.0 if rng.uniform() < 0.5 else -1.0)
    beta, gamma, eta = (float(v) for v in rng.uniform(-3.0, 3.0, size=3))
    return UniversalParams(alpha, beta, gamma, eta)
