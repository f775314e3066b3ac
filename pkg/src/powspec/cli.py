"""Command-line frontend.

Subcommands:

* ``spectrum`` -- eigenvalues (optionally eigenvectors) of U over a chosen
  power graph, computed through the structural route when the join
  validates and through the dense eigensolver otherwise;
* ``verify``   -- the invariant battery (route agreement, residuals, trace,
  Frobenius norm, complement identity) over seeded random parameters;
* ``charpoly`` -- exact rational characteristic polynomial of the quotient
  matrix, or a pointwise normalized-Laplacian characteristic value;
* ``graph``    -- the edge list of the constructed graph, one "u v" per line.

Output on stdout is deterministic for fixed flags and seed: every float is
serialized with 17 significant digits and JSON field order is fixed.
Diagnostics and timing go to stderr.  Exit codes: 0 success, 1 usage or
construction error, 2 cross-check mismatch.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from fractions import Fraction

import numpy as np

from .closedforms import (
    cyclic_prime_power_spectrum,
    cyclic_two_prime_complement_eta0,
    cyclic_two_prime_quotient,
    dicyclic_repeated_quotient_eigenvalue,
    quaternion8_complement_spectrum,
)
from .groups import (
    GroupFamily,
    GroupSpec,
    complement_graph,
    delete_identity,
    edge_lines,
    power_graph_oracle,
)
from .joinstruct import StructureValidationError, Variant, build_join
from .numtheory import factorize, prime_power
from .spectra import (
    UndefinedUniversalMatrixError,
    UniversalParams,
    charpoly_exact,
    complement_params,
    dense_eigen,
    hjoin_spectrum,
    multiset_gap,
    normalized_laplacian_charpoly_at,
    quotient_matrix,
    sample_params,
    universal_matrix,
    verify_eigenpairs,
)

__all__ = ["main", "entry"]

SCHEMA_VERSION = 1


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit(2); we own the exit codes
        raise _UsageError(message)


# ---------------------------------------------------------------------------
# deterministic serialization
# ---------------------------------------------------------------------------


def _fmt_float(x: float) -> str:
    return format(float(x), ".17g")


def _emit_json(obj, indent: int = 0) -> str:
    pad = "  " * indent
    inner = "  " * (indent + 1)
    if obj is None:
        return "null"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return _fmt_float(obj)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        parts = [f"{inner}{json.dumps(k)}: {_emit_json(v, indent + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(parts) + f"\n{pad}}}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        parts = [f"{inner}{_emit_json(v, indent + 1)}" for v in obj]
        return "[\n" + ",\n".join(parts) + f"\n{pad}]"
    raise TypeError(f"cannot serialize {type(obj)!r}")


# ---------------------------------------------------------------------------
# shared construction helpers
# ---------------------------------------------------------------------------


def _parse_params(args) -> tuple[UniversalParams, str | None]:
    if getattr(args, "params", None) and getattr(args, "preset", None):
        raise _UsageError("give either --preset or --params, not both")
    if getattr(args, "params", None):
        pieces = args.params.split(",")
        if len(pieces) != 4:
            raise _UsageError("--params needs four comma-separated values a,b,g,e")
        try:
            vals = [Fraction(piece.strip()) for piece in pieces]
        except (ValueError, ZeroDivisionError) as exc:
            raise _UsageError(f"bad --params value: {exc}")
        return UniversalParams(*vals), None
    name = getattr(args, "preset", None) or "adjacency"
    return UniversalParams.preset(name), name


def _build_spec(args) -> GroupSpec:
    return GroupSpec(GroupFamily(args.group), args.n)


def _variant_graph(spec: GroupSpec, variant: Variant):
    """(power graph, variant graph) pair; the former feeds validation."""
    base = power_graph_oracle(spec)
    g = base
    if variant is Variant.PROPER:
        if g.n < 2:
            raise ValueError("proper variant needs group order >= 2")
        g = delete_identity(g)
    return base, g


def _try_structural(spec, variant, oracle=None):
    try:
        return build_join(spec, variant, oracle=oracle)
    except StructureValidationError:
        return None


def _two_distinct_primes(n: int):
    facs = factorize(n)
    if len(facs) == 2 and facs[0][1] == 1 and facs[1][1] == 1:
        return facs[0][0], facs[1][0]
    return None


# ---------------------------------------------------------------------------
# spectrum
# ---------------------------------------------------------------------------


def _closed_form_checks(spec, variant, complement, params, js, computed, qvals, tol_eff):
    """Closed-form comparisons applicable to this instance: (name, gap)."""
    checks = []
    n = spec.n
    if spec.family is GroupFamily.CYCLIC and variant is Variant.POWER:
        if not complement and prime_power(n):
            p, r = prime_power(n)
            cf = cyclic_prime_power_spectrum(p, r, params)
            checks.append(("prime-power", multiset_gap(cf.expanded(), computed)))
        pq = _two_distinct_primes(n)
        if pq and not complement and js is not None and qvals is not None:
            cf = cyclic_two_prime_quotient(*pq, params)
            checks.append(("two-prime-quotient", multiset_gap(cf.expanded(), qvals)))
        if pq and complement and params.eta == 0:
            cf = cyclic_two_prime_complement_eta0(*pq, params)
            checks.append(("two-prime-complement", multiset_gap(cf.expanded(), computed)))
    if spec.family is GroupFamily.DICYCLIC and js is not None:
        try:
            dicyclic_repeated_quotient_eigenvalue(
                n, params, proper=variant is Variant.PROPER, complemented=complement
            )
            checks.append(("dicyclic-repeated-eigenvalue", 0.0))
        except ArithmeticError:
            checks.append(("dicyclic-repeated-eigenvalue", float("inf")))
        if n == 2 and variant is Variant.POWER and complement:
            cf = quaternion8_complement_spectrum(params)
            checks.append(("quaternion8-complement", multiset_gap(cf.expanded(), computed)))
    return checks


def cmd_spectrum(args) -> int:
    t0 = time.perf_counter()
    spec = _build_spec(args)
    params, preset_name = _parse_params(args)
    variant = Variant(args.variant)
    base, g = _variant_graph(spec, variant)
    order = g.n
    p_eff = complement_params(params, order) if args.complement else params
    target = complement_graph(g) if args.complement else g
    u = universal_matrix(target, params)
    scale = max(1.0, float(np.max(np.abs(u).sum(axis=1)))) if order else 1.0
    tol_eff = args.tol * scale

    js = _try_structural(spec, variant, oracle=base)
    want_vectors = args.vectors or args.oracle_check
    if js is not None:
        route = "structural"
        spectrum = hjoin_spectrum(js, p_eff, want_vectors=want_vectors)
    else:
        route = "oracle"
        spectrum = dense_eigen(u)

    verification = None
    mismatch = []
    if args.oracle_check or args.vectors:
        residual = verify_eigenpairs(u, spectrum, tol=args.tol)
        worst = residual.max_residual
        checked = ["residual"]
        passed = residual.passed
        if args.oracle_check:
            qvals = None
            if js is not None:
                dense = dense_eigen(u)
                gap = multiset_gap(spectrum, dense)
                checked.append("dense-route")
                worst = max(worst, gap)
                if gap > tol_eff:
                    passed = False
                    mismatch.append(f"structural vs dense gap {gap:.3e} > {tol_eff:.3e}")
                qvals = dense_eigen(quotient_matrix(js, p_eff).sym).expanded()
            for name, gap in _closed_form_checks(
                spec, variant, args.complement, params, js, spectrum.expanded(), qvals, tol_eff
            ):
                checked.append(name)
                worst = max(worst, gap)
                if gap > tol_eff:
                    passed = False
                    mismatch.append(f"{name} gap {gap:.3e} > {tol_eff:.3e}")
        verification = {
            "checked": checked,
            "max_residual": worst,
            "tolerance": tol_eff,
            "passed": passed,
        }

    report = {
        "schema": SCHEMA_VERSION,
        "group": {"family": spec.family.value, "n": spec.n},
        "variant": variant.value,
        "complement": bool(args.complement),
        "params": {
            "alpha": float(params.alpha),
            "beta": float(params.beta),
            "gamma": float(params.gamma),
            "eta": float(params.eta),
            "preset": preset_name,
        },
        "order": order,
        "route": route,
        "eigenspaces": [
            {
                "value": e.value,
                "multiplicity": e.multiplicity,
                "provenance": e.provenance,
                **(
                    {"basis": [[float(x) for x in vec] for vec in e.basis]}
                    if args.vectors and e.basis is not None
                    else {}
                ),
            }
            for e in spectrum.eigenspaces
        ],
        "verification": verification,
    }

    if args.format == "json":
        print(_emit_json(report))
    else:
        print("value,multiplicity,provenance")
        for e in spectrum.eigenspaces:
            print(f"{_fmt_float(e.value)},{e.multiplicity},{e.provenance}")
    print(f"# spectrum computed in {time.perf_counter() - t0:.3f} s", file=sys.stderr)
    if mismatch:
        for line in mismatch:
            print(f"cross-check mismatch: {line}", file=sys.stderr)
        return 2
    return 0


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def _run_battery(spec, variant, params, g, js, tol):
    """One parameter quadruple through the invariant battery.

    Returns (lines, ok); float comparisons are scaled by max(1, ||U||_inf).
    """
    lines = []
    ok = True

    def check(name, good, detail):
        nonlocal ok
        ok = ok and good
        lines.append(f"  {'ok  ' if good else 'FAIL'} {name}: {detail}")

    order = g.n
    for complement in (False, True):
        target = complement_graph(g) if complement else g
        u = universal_matrix(target, params)
        scale = max(1.0, float(np.max(np.abs(u).sum(axis=1)))) if order else 1.0
        dense = dense_eigen(u)
        tag = "complement" if complement else "plain"

        if js is not None:
            p_eff = complement_params(params, order) if complement else params
            structural = hjoin_spectrum(js, p_eff, want_vectors=True)
            gap = multiset_gap(structural, dense)
            check(f"route-agreement[{tag}]", gap <= tol * scale, f"gap {gap:.3e}")
            residual = verify_eigenpairs(u, structural, tol=tol)
            check(
                f"residual[{tag}]",
                residual.passed,
                f"max residual {residual.max_residual:.3e}",
            )
        else:
            residual = verify_eigenpairs(u, dense, tol=tol)
            check(
                f"residual[{tag}]",
                residual.passed,
                f"max residual {residual.max_residual:.3e} (oracle route)",
            )

        values = dense.expanded()
        alpha, beta, gamma, eta = params.as_floats()
        tr_expect = 2.0 * beta * target.edge_count() + (gamma + eta) * order
        tr_gap = abs(float(values.sum()) - tr_expect)
        check(f"trace[{tag}]", tr_gap <= 1e-9 * scale, f"gap {tr_gap:.3e}")
        fro_gap = abs(float((values**2).sum()) - float((u**2).sum()))
        check(f"frobenius[{tag}]", fro_gap <= 1e-8 * max(1.0, scale**2), f"gap {fro_gap:.3e}")

    return lines, ok


def cmd_verify(args) -> int:
    t0 = time.perf_counter()
    spec = _build_spec(args)
    variant = Variant(args.variant)
    base, g = _variant_graph(spec, variant)
    js = _try_structural(spec, variant, oracle=base)
    seed = args.seed
    if seed is None:
        seed = int(os.environ.get("POWSPEC_SEED", "0"))
    rng = np.random.default_rng(seed)

    print(
        f"verify group={spec.family.value} n={spec.n} variant={variant.value} "
        f"order={g.n} route={'structural' if js is not None else 'oracle'} seed={seed}"
    )
    if js is None:
        print("  note: structural route refused; running oracle-only checks")
    all_ok = True
    for k in range(args.count):
        params = sample_params(rng)
        a, b, gm, e = params.as_floats()
        print(f"quadruple {k}: alpha={a:.6g} beta={b:.6g} gamma={gm:.6g} eta={e:.6g}")
        lines, ok = _run_battery(spec, variant, params, g, js, args.tol)
        print("\n".join(lines))
        all_ok = all_ok and ok

        int_params = sample_params(rng, integer=True)
        u_comp = universal_matrix(complement_graph(g), int_params)
        u_sub = universal_matrix(g, complement_params(int_params, g.n))
        exact = bool(np.array_equal(u_comp, u_sub))
        print(f"  {'ok  ' if exact else 'FAIL'} complement-identity: exact={exact}")
        all_ok = all_ok and exact

    print(f"result: {'PASS' if all_ok else 'FAIL'}")
    print(f"# verify ran in {time.perf_counter() - t0:.3f} s", file=sys.stderr)
    return 0 if all_ok else 2


# ---------------------------------------------------------------------------
# charpoly
# ---------------------------------------------------------------------------


def cmd_charpoly(args) -> int:
    spec = _build_spec(args)
    params, preset_name = _parse_params(args)
    variant = Variant(args.variant)
    if args.quotient == (args.normalized is not None):
        raise _UsageError("choose exactly one of --quotient or --normalized --at X")

    if args.quotient:
        if not params.is_rational:
            raise _UsageError("charpoly --quotient needs rational parameters")
        js = build_join(spec, variant)  # StructureValidationError -> exit 1
        p_eff = complement_params(params, js.order) if args.complement else params
        coeffs = charpoly_exact(quotient_matrix(js, p_eff))
        report = {
            "schema": SCHEMA_VERSION,
            "group": {"family": spec.family.value, "n": spec.n},
            "variant": variant.value,
            "complement": bool(args.complement),
            "preset": preset_name,
            "kind": "quotient-charpoly",
            "degree": len(coeffs) - 1,
            "coefficients": [str(c) for c in coeffs],
        }
        print(_emit_json(report))
        return 0

    _, g = _variant_graph(spec, variant)
    if args.complement:
        g = complement_graph(g)
    try:
        at = Fraction(args.normalized_at)
    except (ValueError, ZeroDivisionError) as exc:
        raise _UsageError(f"bad --at value: {exc}")
    value = normalized_laplacian_charpoly_at(g, at)
    report = {
        "schema": SCHEMA_VERSION,
        "group": {"family": spec.family.value, "n": spec.n},
        "variant": variant.value,
        "complement": bool(args.complement),
        "kind": "normalized-laplacian-charpoly",
        "at": float(at),
        "value": float(value),
    }
    print(_emit_json(report))
    return 0


# ---------------------------------------------------------------------------
# graph
# ---------------------------------------------------------------------------


def cmd_graph(args) -> int:
    spec = _build_spec(args)
    variant = Variant(args.variant)
    _, g = _variant_graph(spec, variant)
    if args.complement:
        g = complement_graph(g)
    for line in edge_lines(g):
        print(line)
    return 0


# ---------------------------------------------------------------------------
# argument plumbing
# ---------------------------------------------------------------------------


def _add_common(sub):
    sub.add_argument("--group", required=True, choices=["zn", "dn", "qn"])
    sub.add_argument("--n", required=True, type=int)
    sub.add_argument("--variant", default="power", choices=["power", "proper"])
    sub.add_argument("--complement", action="store_true")
    sub.add_argument("--preset", choices=["adjacency", "laplacian", "signless", "seidel"])
    sub.add_argument("--params", help="alpha,beta,gamma,eta (rationals accepted)")
    sub.add_argument("--tol", type=float, default=1e-8)


def build_parser() -> _Parser:
    parser = _Parser(prog="powspec", description=__doc__.splitlines()[0])
    subs = parser.add_subparsers(dest="command", required=True)

    sp = subs.add_parser("spectrum", help="eigenvalues of U over a power graph")
    _add_common(sp)
    sp.add_argument("--vectors", action="store_true")
    sp.add_argument("--oracle-check", dest="oracle_check", action="store_true")
    sp.add_argument("--format", default="json", choices=["json", "csv"])
    sp.set_defaults(func=cmd_spectrum)

    vf = subs.add_parser("verify", help="invariant battery over random parameters")
    _add_common(vf)
    vf.add_argument("--seed", type=int, default=None)
    vf.add_argument("--count", type=int, default=5)
    vf.set_defaults(func=cmd_verify)

    cp = subs.add_parser("charpoly", help="exact quotient charpoly / normalized value")
    _add_common(cp)
    cp.add_argument("--quotient", action="store_true")
    cp.add_argument("--normalized", dest="normalized", action="store_true", default=None)
    cp.add_argument("--at", dest="normalized_at", default=None)
    cp.set_defaults(func=cmd_charpoly)

    gr = subs.add_parser("graph", help="edge list of the constructed graph")
    _add_common(gr)
    gr.set_defaults(func=cmd_graph)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "normalized", None) and args.normalized_at is None:
            raise _UsageError("--normalized needs --at VALUE")
        return args.func(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except (
        UndefinedUniversalMatrixError,
        StructureValidationError,
        ValueError,
        KeyError,
        TypeError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
