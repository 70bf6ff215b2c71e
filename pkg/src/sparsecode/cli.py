"""Command-line surface: build constructions, certify properties, plan bounds.

Machine-readable JSON goes to stdout; short human summaries go to stderr.
Exit codes: 0 pass, 1 property violated or recovery failed, 2 usage or
internal error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time
from itertools import combinations
from pathlib import Path

import numpy as np

from . import bounds as bounds_mod
from . import certify, codes, group_testing, listdecode, matrixio, recovery
from .embeddings import bool_code, sph_code
from .errors import SparseCodeError
from .group_testing import Design

TOOL_VERSION = "0.1.0"
EXHAUSTIVE_ROUNDTRIP_LIMIT = 10**5


def _emit(report: dict, started: float) -> None:
    report = dict(report)
    report["elapsed_ms"] = round((time.monotonic() - started) * 1000.0, 3)
    print(json.dumps(report))


def _summary(msg: str) -> None:
    print(msg, file=sys.stderr)


def _write_provenance(path: Path, record: dict) -> None:
    meta = Path(str(path) + ".meta.json")
    meta.write_text(json.dumps({"tool_version": TOOL_VERSION, **record}) + "\n")


# ---------------------------------------------------------------- build

def _require(active: bool, **named) -> None:
    if not active:
        return
    missing = [name for name, value in named.items() if value is None]
    if missing:
        raise SparseCodeError(f"missing required flag(s): {', '.join(missing)}")


def _cmd_build(args) -> int:
    started = time.monotonic()
    out = Path(args.out)
    record = {"construction": args.kind}
    _require(args.kind == "gv-code",
             q=args.q, n=args.n, delta=args.delta, seed=args.seed)
    _require(args.kind in ("rs-code", "kautz-singleton"), q=args.q, k=args.k)
    _require(args.kind in ("sph", "bool"), code=args.code)
    _require(args.kind == "vandermonde", n=args.n, cols=args.cols)
    if args.kind == "gv-code":
        lc = codes.random_linear_code_gv(
            args.q, args.n, args.delta, seed=args.seed, slack=args.slack
        )
        code = codes.enumerate_codewords(lc)
        codes.write_code_file(code, out)
        record.update(q=args.q, n=args.n, delta=args.delta, slack=args.slack,
                      seed=args.seed, k=lc.k, retries=lc.retries, size=len(code))
    elif args.kind == "rs-code":
        code = codes.reed_solomon(args.q, args.k)
        codes.write_code_file(code, out)
        record.update(q=args.q, k=args.k, size=len(code))
    elif args.kind in ("sph", "bool"):
        code = codes.read_code_file(args.code)
        if args.kind == "sph":
            m = sph_code(code)
        else:
            m = bool_code(code, normalize=args.normalize)
        matrixio.write_matrix(m, out)
        record.update(source=str(args.code), normalize=bool(args.normalize),
                      rows=int(m.shape[0]), cols=int(m.shape[1]))
    elif args.kind == "kautz-singleton":
        m, prov = group_testing.kautz_singleton(args.q, args.k)
        matrixio.write_matrix(m, out)
        record.update(prov)
    elif args.kind == "vandermonde":
        nodes = recovery.unit_circle_nodes(args.cols)
        m = recovery.vandermonde_matrix(nodes, args.n)
        matrixio.write_matrix(m, out)
        record.update(rows=args.n, cols=args.cols, nodes="unit-circle")
    else:  # pragma: no cover - argparse restricts choices
        raise SparseCodeError(f"unknown construction {args.kind}")
    _write_provenance(out, record)
    _emit({"built": args.kind, "out": str(out), **record}, started)
    _summary(f"wrote {args.kind} to {out}")
    return 0


# ---------------------------------------------------------------- verify

def _matrix_design(m: np.ndarray) -> Design:
    supports = [tuple(int(i) for i in np.flatnonzero(m[:, j]))
                for j in range(m.shape[1])]
    sizes = {len(s) for s in supports}
    if len(sizes) != 1:
        raise SparseCodeError("matrix columns have non-uniform support sizes")
    return Design(m.shape[0], sizes.pop(), tuple(supports))


def _cmd_verify(args) -> int:
    started = time.monotonic()
    prop = args.property
    threshold = args.threshold
    ok = True
    if prop in ("rip2", "flat-rip", "coherence", "kernel"):
        m = matrixio.read_matrix(args.input)
        if prop == "rip2":
            rep = certify.rip2_constant(m, args.L, cap=args.cap, workers=args.workers)
            value = rep.alpha
        elif prop == "flat-rip":
            rep = certify.flat_rip_constant(m, args.L, cap=args.cap, workers=args.workers)
            value = rep.constant
        elif prop == "coherence":
            rep = certify.coherence(m)
            value = rep.value
        else:
            rep = certify.kernel_injectivity(m, args.L, cap=args.cap, workers=args.workers)
            value = rep.min_singular_value
            ok = rep.injective
        report = rep.to_dict()
        if prop != "kernel" and threshold is not None:
            ok = value <= threshold + 1e-12
    elif prop == "disjunct":
        m = matrixio.read_matrix(args.input)
        rep = group_testing.verify_disjunct(m, args.L, cap=args.cap)
        report = rep.to_dict()
        ok = rep.disjunct
    elif prop == "design":
        m = matrixio.read_matrix(args.input)
        rep = group_testing.verify_design(_matrix_design(m))
        report = rep.to_dict()
        if threshold is not None:
            ok = rep.max_intersection <= threshold
    elif prop == "list-decode":
        code = codes.read_code_file(args.input)
        rep = listdecode.list_size_at_radius(code, args.rho, cap=args.cap)
        report = rep.to_dict()
        if threshold is not None:
            ok = rep.max_list_size < threshold
    elif prop == "lwise-distance":
        code = codes.read_code_file(args.input)
        rep = codes.lwise_distance(code, args.L, cap=args.cap)
        report = {"property": "lwise-distance", "order": args.L,
                  "constant": rep.relative, "witness": list(rep.witness)}
        if threshold is not None:
            ok = rep.relative >= threshold - 1e-12
    elif prop == "lwise-bias":
        code = codes.read_code_file(args.input)
        value = codes.lwise_bias(code, args.L, cap=args.cap)
        report = {"property": "lwise-bias", "order": args.L, "constant": value}
        if threshold is not None:
            ok = value <= threshold + 1e-12
    else:  # pragma: no cover
        raise SparseCodeError(f"unknown property {prop}")
    report["threshold"] = threshold
    report["pass"] = bool(ok)
    _emit(report, started)
    _summary(f"{prop}: {'pass' if ok else 'VIOLATED'}")
    return 0 if ok else 1


# ---------------------------------------------------------------- bounds

def _cmd_bounds(args) -> int:
    started = time.monotonic()
    out: dict = {"property": "bounds"}
    if args.delta is not None:
        out["q_ary_entropy"] = bounds_mod.q_ary_entropy(args.q, args.delta)
        if args.delta < 1 - 1 / args.q:
            out["gv_rate"] = bounds_mod.gv_rate(args.q, args.delta)
        out["mrrw_rate_bound"] = bounds_mod.mrrw_rate_bound(args.q, args.delta)
    if args.epsilon is not None:
        out["gv_critical_expansion"] = bounds_mod.gv_critical_expansion(
            args.q, args.epsilon)
    if args.n is not None and args.N is not None and args.N > args.n:
        out["coherence_lower_indicator"] = bounds_mod.coherence_lower_indicator(
            args.n, args.N)
    if args.L is not None and args.N is not None:
        out["row_indicators"] = bounds_mod.row_bound_indicators(
            args.L, args.N, args.r, args.n_prime)
        if args.epsilon is not None and args.alpha is not None:
            out["rip_rows_indicator"] = bounds_mod.rip_rows_indicator(
                args.L, args.N, args.q, args.alpha)
    _emit(out, started)
    _summary("bounds computed")
    return 0


# ---------------------------------------------------------------- round trips

def _cmd_gt_roundtrip(args) -> int:
    started = time.monotonic()
    m = matrixio.read_matrix(args.matrix)
    n_cols = m.shape[1]
    total = sum(math.comb(n_cols, w) for w in range(args.L + 1))
    passed = failed = 0
    first_failure = None

    def run_case(support):
        nonlocal passed, failed, first_failure
        x = np.zeros(n_cols, dtype=np.int64)
        x[list(support)] = 1
        y = group_testing.gt_encode(m, x)
        got = group_testing.gt_decode_cover(m, y)
        if np.array_equal(got, x):
            passed += 1
        else:
            failed += 1
            if first_failure is None:
                first_failure = list(int(i) for i in support)

    if total <= EXHAUSTIVE_ROUNDTRIP_LIMIT:
        mode = "exhaustive"
        for w in range(args.L + 1):
            for support in combinations(range(n_cols), w):
                run_case(support)
    else:
        mode = "random"
        rng = np.random.default_rng(args.seed)
        for _ in range(args.trials):
            w = int(rng.integers(0, args.L + 1))
            support = tuple(sorted(rng.choice(n_cols, size=w, replace=False)))
            run_case(support)
    report = {
        "property": "gt-roundtrip",
        "order": args.L,
        "mode": mode,
        "passed": passed,
        "failed": failed,
        "first_failure": first_failure,
    }
    _emit(report, started)
    _summary(f"gt-roundtrip: {passed} ok, {failed} failed")
    return 0 if failed == 0 else 1


def _cmd_cs_roundtrip(args) -> int:
    started = time.monotonic()
    m = matrixio.read_matrix(args.matrix).astype(np.complex128)
    n_cols = m.shape[1]
    rng = np.random.default_rng(args.seed)
    max_err = 0.0
    failures = 0
    for _ in range(args.trials):
        size = int(rng.integers(0, args.L + 1))
        support = sorted(rng.choice(n_cols, size=size, replace=False))
        x = np.zeros(n_cols, dtype=np.complex128)
        for pos in support:
            x[pos] = complex(rng.normal(), rng.normal())
        y = recovery.cs_encode(m, x)
        result = recovery.cs_decode_exhaustive(m, y, args.L, cap=args.cap)
        if not result.success:
            failures += 1
            continue
        max_err = max(max_err, float(np.abs(result.estimate - x).max()))
    report = {
        "property": "cs-roundtrip",
        "order": args.L,
        "trials": args.trials,
        "failures": failures,
        "max_recovery_error": max_err,
    }
    _emit(report, started)
    _summary(f"cs-roundtrip: {failures} failures, max error {max_err:.2e}")
    return 0 if failures == 0 and max_err <= 1e-6 else 1


# ---------------------------------------------------------------- pipelines

def _cmd_pipeline(args) -> int:
    started = time.monotonic()
    _require(args.name == "gv-rip",
             q=args.q, n=args.n, delta=args.delta, seed=args.seed, L=args.L)
    _require(args.name == "ks-gt", q=args.q, k=args.k)
    _require(args.name == "rip-ld",
             matrix=args.matrix, L=args.L, epsilon=args.epsilon)
    if args.name == "gv-rip":
        lc = codes.random_linear_code_gv(
            args.q, args.n, args.delta, seed=args.seed, slack=args.slack)
        code = codes.balance_closure(codes.enumerate_codewords(lc))
        quotient = codes.quotient_by_ones(code)
        eps = codes.min_distance_epsilon(code)
        m = sph_code(quotient)
        coh = certify.coherence(m)
        rip = certify.rip2_constant(m, args.L, cap=args.cap, workers=args.workers)
        report = {
            "property": "pipeline-gv-rip",
            "q": args.q, "n": args.n, "delta": args.delta, "seed": args.seed,
            "code_size": len(code), "quotient_size": len(quotient),
            "epsilon": eps,
            "coherence": coh.value,
            "coherence_bound": 2.0 * eps,
            "coherence_ok": coh.value <= 2.0 * eps + 1e-9,
            "rip2_constant": rip.alpha,
            "rip2_bound": 2.0 * args.L * eps,
            "rip2_ok": rip.alpha <= 2.0 * args.L * eps + 1e-9,
        }
        ok = report["coherence_ok"] and report["rip2_ok"]
    elif args.name == "ks-gt":
        m, prov = group_testing.kautz_singleton(args.q, args.k)
        guaranteed = prov["guaranteed_disjunct_order"]
        L = args.L if args.L is not None else guaranteed
        design = group_testing.verify_design(_matrix_design(m))
        disjunct = group_testing.verify_disjunct(m, L, cap=args.cap)
        n_cols = m.shape[1]
        passed = failed = 0
        first_failure = None
        for w in range(L + 1):
            for support in combinations(range(n_cols), w):
                x = np.zeros(n_cols, dtype=np.int64)
                x[list(support)] = 1
                if np.array_equal(
                    group_testing.gt_decode_cover(m, group_testing.gt_encode(m, x)), x
                ):
                    passed += 1
                else:
                    failed += 1
                    if first_failure is None:
                        first_failure = list(support)
        report = {
            "property": "pipeline-ks-gt",
            "q": args.q, "k": args.k, "order": L,
            "rows": int(m.shape[0]), "cols": int(m.shape[1]),
            "design_r": design.max_intersection,
            "design_r_bound": args.k,
            "guaranteed_disjunct_order": guaranteed,
            "disjunct": disjunct.disjunct,
            "roundtrip_passed": passed,
            "roundtrip_failed": failed,
            "first_failure": first_failure,
        }
        ok = disjunct.disjunct and failed == 0
    elif args.name == "rip-ld":
        m = matrixio.read_matrix(args.matrix).astype(np.complex128)
        rip = certify.rip2_constant(m, args.L, cap=args.cap, workers=args.workers)
        report = listdecode.rip_to_listdecoding_report(
            m, args.L, rip.alpha, args.epsilon, cap=args.cap)
        report["measured_rip_constant"] = rip.alpha
        ok = report["flat_ok"] and all(s["ok"] for s in report["bias_stages"])
        ok = ok and report["johnson"]["verdict"] in ("pass", "vacuous", "not-applicable")
    else:  # pragma: no cover
        raise SparseCodeError(f"unknown pipeline {args.name}")
    report["pass"] = bool(ok)
    _emit(report, started)
    _summary(f"pipeline {args.name}: {'pass' if ok else 'VIOLATED'}")
    return 0 if ok else 1


# ---------------------------------------------------------------- parser

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sparsecode",
        description="Measurement matrices from codes, with exhaustive certification",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="construct codes and matrices")
    b.add_argument("kind", choices=["gv-code", "rs-code", "sph", "bool",
                                    "kautz-singleton", "vandermonde"])
    b.add_argument("--q", type=int)
    b.add_argument("--n", type=int)
    b.add_argument("--k", type=int)
    b.add_argument("--cols", type=int)
    b.add_argument("--delta", type=float)
    b.add_argument("--slack", type=float, default=0.1)
    b.add_argument("--seed", type=int)
    b.add_argument("--code", help="input code file for embeddings")
    b.add_argument("--normalize", action="store_true")
    b.add_argument("--out", required=True)
    b.set_defaults(func=_cmd_build)

    v = sub.add_parser("verify", help="certify a property of a code or matrix")
    v.add_argument("property", choices=["rip2", "flat-rip", "coherence",
                                        "disjunct", "design", "list-decode",
                                        "lwise-distance", "lwise-bias", "kernel"])
    v.add_argument("--input", required=True)
    v.add_argument("--L", type=int)
    v.add_argument("--rho", type=float)
    v.add_argument("--threshold", type=float)
    v.add_argument("--cap", type=int)
    v.add_argument("--workers", type=int, default=1)
    v.set_defaults(func=_cmd_verify)

    d = sub.add_parser("bounds", help="evaluate the closed-form calculators")
    d.add_argument("--q", type=int, default=2)
    d.add_argument("--n", type=int)
    d.add_argument("--N", type=int)
    d.add_argument("--L", type=int)
    d.add_argument("--r", type=int)
    d.add_argument("--n-prime", type=int)
    d.add_argument("--delta", type=float)
    d.add_argument("--epsilon", type=float)
    d.add_argument("--alpha", type=float)
    d.set_defaults(func=_cmd_bounds)

    g = sub.add_parser("gt-roundtrip", help="group-testing encode/decode sweep")
    g.add_argument("--matrix", required=True)
    g.add_argument("--L", type=int, required=True)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--trials", type=int, default=1000)
    g.set_defaults(func=_cmd_gt_roundtrip)

    c = sub.add_parser("cs-roundtrip", help="compressed-sensing recovery sweep")
    c.add_argument("--matrix", required=True)
    c.add_argument("--L", type=int, required=True)
    c.add_argument("--seed", type=int, required=True)
    c.add_argument("--trials", type=int, default=50)
    c.add_argument("--cap", type=int)
    c.set_defaults(func=_cmd_cs_roundtrip)

    p = sub.add_parser("pipeline", help="end-to-end construction + certification")
    p.add_argument("name", choices=["gv-rip", "ks-gt", "rip-ld"])
    p.add_argument("--q", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--L", type=int)
    p.add_argument("--delta", type=float)
    p.add_argument("--slack", type=float, default=0.1)
    p.add_argument("--epsilon", type=float)
    p.add_argument("--seed", type=int)
    p.add_argument("--matrix")
    p.add_argument("--cap", type=int)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=_cmd_pipeline)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SparseCodeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
