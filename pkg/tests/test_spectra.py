"""Universal matrix assembly, both spectral routes, and exact polynomials."""

from fractions import Fraction

import numpy as np
import pytest

from powspec.groups import (
    GroupFamily,
    GroupSpec,
    LabeledGraph,
    complement_graph,
    delete_identity,
    power_graph_oracle,
)
from powspec.joinstruct import StructureValidationError, Variant, build_join
from powspec.spectra import (
    Eigenspace,
    JacobiConvergenceError,
    QuotientMatrix,
    Spectrum,
    UndefinedUniversalMatrixError,
    UniversalParams,
    charpoly_exact,
    charpoly_roots,
    complement_params,
    dense_eigen,
    hjoin_spectrum,
    jacobi_eigh,
    multiset_gap,
    normalized_laplacian_charpoly_at,
    quotient_matrix,
    sample_params,
    universal_matrix,
    verify_eigenpairs,
)

Z = GroupFamily.CYCLIC
D = GroupFamily.DIHEDRAL
Q = GroupFamily.DICYCLIC

LAPLACIAN = UniversalParams.preset("laplacian")
ADJACENCY = UniversalParams.preset("adjacency")
SIGNLESS = UniversalParams.preset("signless")
SEIDEL = UniversalParams.preset("seidel")


def k2():
    return power_graph_oracle(GroupSpec(Z, 2))


def test_universal_matrix_k2_presets():
    assert np.array_equal(universal_matrix(k2(), LAPLACIAN), [[1, -1], [-1, 1]])
    assert np.array_equal(universal_matrix(k2(), SEIDEL), [[0, -1], [-1, 0]])


def test_universal_matrix_signless_k4():
    u = universal_matrix(power_graph_oracle(GroupSpec(Z, 4)), SIGNLESS)
    assert np.array_equal(np.diag(u), [3, 3, 3, 3])
    off = u[~np.eye(4, dtype=bool)]
    assert np.array_equal(off, np.ones(12))


def test_alpha_zero_rejected():
    with pytest.raises(UndefinedUniversalMatrixError):
        UniversalParams(0, 1, 0, 0)
    with pytest.raises(UndefinedUniversalMatrixError):
        UniversalParams(Fraction(0), 1, 2, 3)


def test_complement_params_presets():
    n = 10
    assert complement_params(ADJACENCY, n) == UniversalParams(-1, 0, -1, 1)
    assert complement_params(LAPLACIAN, n) == UniversalParams(1, -1, n, -1)
    assert complement_params(SEIDEL, n) == UniversalParams(2, 0, 1, -1)


def test_complement_params_keeps_exactness():
    p = UniversalParams(Fraction(1, 3), Fraction(-2), Fraction(5, 7), Fraction(0))
    pc = complement_params(p, 9)
    assert pc.is_rational
    assert pc.alpha == Fraction(-1, 3)
    assert pc.gamma == Fraction(5, 7) + Fraction(-2) * 8 - Fraction(1, 3)
    assert pc.eta == Fraction(1, 3)


def test_quotient_case1_coupling_structure():
    # alpha = -eta kills every divisibility coupling; only the (p, q) pair
    # survives, with weight eta * sqrt(phi(p) * phi(q))
    p, q = 3, 5
    js = build_join(GroupSpec(Z, p * q), Variant.POWER)
    params = UniversalParams(-2, 1, 0, 2)
    k = quotient_matrix(js, params).sym
    labels = [b.label for b in js.blocks]
    i, j = labels.index(p), labels.index(q)
    off = k - np.diag(np.diag(k))
    expected = np.zeros_like(off)
    expected[i, j] = expected[j, i] = 2 * np.sqrt((p - 1) * (q - 1))
    assert np.allclose(off, expected)


def test_quotient_d15_laplacian_diagonal():
    js = build_join(GroupSpec(D, 15), Variant.POWER)
    k = quotient_matrix(js, LAPLACIAN).sym
    assert sorted(np.diag(k).tolist()) == [1, 7, 9, 9, 29]


def test_quotient_z2_by_hand():
    # blocks {1} and {0}, one template edge: kappa_i = beta + gamma + eta,
    # coupling alpha + eta
    js = build_join(GroupSpec(Z, 2), Variant.POWER)
    p = UniversalParams(2, 3, 5, 7)
    k = quotient_matrix(js, p).sym
    assert np.array_equal(k, [[3 + 5 + 7, 2 + 7], [2 + 7, 3 + 5 + 7]])


def test_hjoin_prime_power_values():
    for p, r in [(2, 1), (2, 3), (3, 2), (5, 1)]:
        n = p**r
        js = build_join(GroupSpec(Z, n), Variant.POWER)
        params = UniversalParams(1.5, -0.5, 2.0, 0.25)
        s = hjoin_spectrum(js, params)
        a, b, g, e = params.as_floats()
        top = a * (n - 1) + b * (n - 1) + e * n + g
        rest = -a + b * (n - 1) + g
        expected = np.sort([top] + [rest] * (n - 1))
        assert multiset_gap(s, expected) < 1e-12


def test_hjoin_d15_quotient_values():
    js = build_join(GroupSpec(D, 15), Variant.POWER)
    s = hjoin_spectrum(js, LAPLACIAN)
    quotient_values = sorted(
        e.value for e in s.eigenspaces if "Quotient" in e.provenance
    )
    assert np.allclose(quotient_values, [0, 1, 9, 15, 30], atol=1e-9)


def test_hjoin_z6_adjacency_matches_dense():
    js = build_join(GroupSpec(Z, 6), Variant.POWER)
    s = hjoin_spectrum(js, ADJACENCY)
    u = universal_matrix(power_graph_oracle(GroupSpec(Z, 6)), ADJACENCY)
    assert multiset_gap(s, dense_eigen(u)) < 1e-10


def test_dense_eigen_identity_and_swap():
    s = dense_eigen(np.eye(3))
    assert [(e.value, e.multiplicity) for e in s.eigenspaces] == [(1.0, 3)]
    s = dense_eigen(np.array([[0.0, 1.0], [1.0, 0.0]]))
    assert [(e.value, e.multiplicity) for e in s.eigenspaces] == [(1.0, 1), (-1.0, 1)]


def test_dense_eigen_d15_quotient():
    js = build_join(GroupSpec(D, 15), Variant.POWER)
    k = quotient_matrix(js, LAPLACIAN).sym
    s = dense_eigen(k)
    assert multiset_gap(s, np.array([0.0, 1.0, 9.0, 15.0, 30.0])) < 1e-10


def test_dense_eigen_rejects_asymmetric():
    with pytest.raises(ValueError):
        dense_eigen(np.array([[0.0, 1.0], [0.5, 0.0]]))


def test_jacobi_matches_lapack():
    rng = np.random.default_rng(7)
    for n in (2, 3, 10, 33):
        m = rng.normal(size=(n, n))
        m = m + m.T
        vals, vecs = jacobi_eigh(m)
        assert np.max(np.abs(np.sort(vals) - np.linalg.eigvalsh(m))) < 1e-11
        assert np.max(np.abs(vecs.T @ vecs - np.eye(n))) < 1e-12
        assert np.max(np.abs(vecs @ np.diag(vals) @ vecs.T - m)) < 1e-11


def test_jacobi_reports_nonconvergence():
    m = np.array([[0.0, 1.0], [1.0, 0.0]])
    with pytest.raises(JacobiConvergenceError):
        jacobi_eigh(m, max_sweeps=0)


def test_verify_eigenpairs_exact_k4_laplacian():
    n = 4
    u = universal_matrix(power_graph_oracle(GroupSpec(Z, n)), LAPLACIAN)
    diffs = []
    for r in range(2, n + 1):
        x = np.zeros(n)
        x[0], x[r - 1] = 1.0, -1.0
        diffs.append(x)
    s = Spectrum(
        (
            Eigenspace(4.0, 3, "closed", tuple(diffs)),
            Eigenspace(0.0, 1, "closed", (np.ones(n),)),
        ),
        n,
    )
    report = verify_eigenpairs(u, s, tol=1e-12)
    assert report.passed and report.max_residual == 0.0

    bad = Spectrum(
        (
            Eigenspace(4.001, 3, "closed", tuple(diffs)),
            Eigenspace(0.0, 1, "closed", (np.ones(n),)),
        ),
        n,
    )
    assert not verify_eigenpairs(u, bad, tol=1e-8).passed


def test_verify_eigenpairs_errors():
    u = np.eye(3)
    s = Spectrum((Eigenspace(1.0, 2, "x", (np.ones(2),)),), 2)
    with pytest.raises(ValueError):
        verify_eigenpairs(u, s)
    s2 = Spectrum((Eigenspace(1.0, 3, "x", None),), 3)
    with pytest.raises(ValueError):
        verify_eigenpairs(u, s2)


def test_pipeline_d15_residuals():
    js = build_join(GroupSpec(D, 15), Variant.POWER)
    s = hjoin_spectrum(js, LAPLACIAN, want_vectors=True)
    u = universal_matrix(power_graph_oracle(GroupSpec(D, 15)), LAPLACIAN)
    assert verify_eigenpairs(u, s, tol=1e-8).passed


def test_part1_part2_orthogonality_exact():
    js = build_join(GroupSpec(D, 15), Variant.POWER)
    rng = np.random.default_rng(23)
    s = hjoin_spectrum(js, sample_params(rng), want_vectors=True)
    block = [v for e in s.eigenspaces if e.provenance == "BlockDiff" for v in e.basis]
    lifted = [v for e in s.eigenspaces if e.provenance == "Quotient" for v in e.basis]
    assert block and lifted
    for x in block:
        for y in lifted:
            assert float(x @ y) == 0.0


def test_hjoin_orthonormal_flag():
    js = build_join(GroupSpec(D, 15), Variant.POWER)
    s = hjoin_spectrum(js, LAPLACIAN, want_vectors=True, orthonormal=True)
    u = universal_matrix(power_graph_oracle(GroupSpec(D, 15)), LAPLACIAN)
    assert verify_eigenpairs(u, s, tol=1e-8).passed
    for e in s.eigenspaces:
        m = np.column_stack(e.basis)
        assert np.max(np.abs(m.T @ m - np.eye(m.shape[1]))) < 1e-12


def test_trace_and_frobenius_identities():
    rng = np.random.default_rng(17)
    for spec in [GroupSpec(Z, 24), GroupSpec(D, 10), GroupSpec(Q, 4)]:
        g = power_graph_oracle(spec)
        for comp in (False, True):
            target = complement_graph(g) if comp else g
            for _ in range(3):
                p = sample_params(rng)
                u = universal_matrix(target, p)
                vals = dense_eigen(u).expanded()
                a, b, gm, e = p.as_floats()
                scale = max(1.0, float(np.abs(u).sum(axis=1).max()))
                expected_trace = 2 * b * target.edge_count() + (gm + e) * target.n
                assert abs(vals.sum() - expected_trace) <= 1e-9 * scale
                assert abs((vals**2).sum() - (u**2).sum()) <= 1e-8 * scale**2


def test_signless_laplacian_nonnegative():
    for spec in [GroupSpec(Z, 30), GroupSpec(D, 9), GroupSpec(Q, 8)]:
        g = power_graph_oracle(spec)
        for target in (g, complement_graph(g), delete_identity(g)):
            if target.n == 0:
                continue
            vals = dense_eigen(universal_matrix(target, SIGNLESS)).expanded()
            assert vals.min() >= -1e-9


def test_oracle_equivalence_small_sweep():
    rng = np.random.default_rng(101)
    cases = (
        [(GroupSpec(Z, n), None) for n in range(1, 41)]
        + [(GroupSpec(D, n), None) for n in range(1, 21)]
        + [(GroupSpec(Q, n), None) for n in (2, 3, 4, 8)]
    )
    for spec, _ in cases:
        g_power = power_graph_oracle(spec)
        variants = [(Variant.POWER, g_power)]
        if g_power.n >= 2:
            variants.append((Variant.PROPER, delete_identity(g_power)))
        for variant, gv in variants:
            try:
                js = build_join(spec, variant)
            except StructureValidationError:
                assert spec.family is Q
                continue
            for comp in (False, True):
                target = complement_graph(gv) if comp else gv
                for _ in range(3):
                    p = sample_params(rng)
                    p_eff = complement_params(p, gv.n) if comp else p
                    u = universal_matrix(target, p)
                    scale = max(1.0, float(np.abs(u).sum(axis=1).max())) if u.size else 1.0
                    gap = multiset_gap(hjoin_spectrum(js, p_eff), dense_eigen(u))
                    assert gap <= 1e-8 * scale, (spec, variant, comp, gap)


def test_complement_matrix_identity_exact():
    rng = np.random.default_rng(5)
    for _ in range(20):
        n = int(rng.integers(2, 30))
        adj = np.triu(rng.uniform(size=(n, n)) < 0.4, 1)
        g = LabeledGraph(adj | adj.T, tuple(range(n)))
        p = sample_params(rng, integer=True)
        lhs = universal_matrix(complement_graph(g), p)
        rhs = universal_matrix(g, complement_params(p, n))
        assert np.array_equal(lhs, rhs)


# ---------------------------------------------------------------------------
# exact characteristic polynomials
# ---------------------------------------------------------------------------


def _quotient_stub(similar):
    t = len(similar)
    return QuotientMatrix(np.array(similar, dtype=float), similar, tuple([1] * t))


def test_charpoly_one_by_one():
    assert charpoly_exact(_quotient_stub([[7]])) == [1, -7]


def test_charpoly_two_by_two_symmetric():
    a, b = 3, 5
    coeffs = charpoly_exact(_quotient_stub([[a, b], [b, a]]))
    assert coeffs == [1, -2 * a, a * a - b * b]


def test_charpoly_d15_constant_term_zero():
    js = build_join(GroupSpec(D, 15), Variant.POWER)
    coeffs = charpoly_exact(quotient_matrix(js, LAPLACIAN))
    assert coeffs[-1] == 0
    roots = charpoly_roots(coeffs)
    assert np.allclose(roots, [0, 1, 9, 15, 30], atol=1e-10)


def test_charpoly_rejects_float_params():
    js = build_join(GroupSpec(Z, 6), Variant.POWER)
    q = quotient_matrix(js, UniversalParams(1.5, 0.0, 0.0, 0.0))
    with pytest.raises(TypeError):
        charpoly_exact(q)


def test_charpoly_roots_match_dense():
    rng = np.random.default_rng(31)
    for n in (6, 12, 30, 36):
        js = build_join(GroupSpec(Z, n), Variant.POWER)
        p = sample_params(rng, integer=True)
        q = quotient_matrix(js, p)
        roots = charpoly_roots(charpoly_exact(q))
        scale = max(1.0, float(np.max(np.abs(q.sym))))
        assert multiset_gap(np.array(roots), dense_eigen(q.sym)) <= 1e-8 * scale


def test_charpoly_similar_matches_symmetric():
    # det(lambda I - B) must agree with the symmetric form's eigenvalues
    js = build_join(GroupSpec(D, 12), Variant.POWER)
    p = UniversalParams(2, -1, 3, 1)
    q = quotient_matrix(js, p)
    roots = charpoly_roots(charpoly_exact(q))
    assert multiset_gap(np.array(roots), dense_eigen(q.sym)) < 1e-8


# ---------------------------------------------------------------------------
# normalized Laplacian evaluations
# ---------------------------------------------------------------------------


def test_normalized_laplacian_k2():
    g = k2()
    assert normalized_laplacian_charpoly_at(g, 1) == -1
    assert normalized_laplacian_charpoly_at(g, 0) == 0
    # eigenvalues of the normalized Laplacian of K_2 are 0 and 2
    assert abs(normalized_laplacian_charpoly_at(g, 0.5) - (0 - 0.5) * (2 - 0.5)) < 1e-12


def test_normalized_laplacian_z4_at_zero():
    g = power_graph_oracle(GroupSpec(Z, 4))
    assert normalized_laplacian_charpoly_at(g, 0) == 0


def test_normalized_laplacian_float_matches_exact():
    g = power_graph_oracle(GroupSpec(Z, 12))
    lam = Fraction(3, 10)
    exact = normalized_laplacian_charpoly_at(g, lam)
    approx = normalized_laplacian_charpoly_at(g, 0.3)
    assert abs(approx - float(exact)) <= 1e-9 * max(1.0, abs(float(exact)))


def test_normalized_laplacian_large_graph_no_overflow():
    g = power_graph_oracle(GroupSpec(Z, 200))
    value = normalized_laplacian_charpoly_at(g, 0.37)
    assert np.isfinite(value)


def test_normalized_laplacian_rejects_isolated():
    g = delete_identity(power_graph_oracle(GroupSpec(D, 2)))
    with pytest.raises(ValueError):
        normalized_laplacian_charpoly_at(g, 1)


def test_multiset_gap_count_mismatch():
    assert multiset_gap(np.array([1.0]), np.array([1.0, 2.0])) == float("inf")
