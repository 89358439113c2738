"""Command line interface.

Every subcommand builds a JSON-serializable record; ``--json`` prints it,
otherwise a short human summary is printed. Exit codes: 0 success, 2 bad
input, 3 verification mismatch, 4 resource cap exceeded.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
import time

from . import hunt as hunt_mod
from . import kron2row, oracle, reduced, stretch
from .core import KronTriple, Partition
from .errors import (
    FitMismatch,
    InsufficientSamples,
    KronError,
    OracleOverflow,
    VerifyMismatch,
)

EXIT_OK, EXIT_INPUT, EXIT_VERIFY, EXIT_CAP = 0, 2, 3, 4


class CLIError(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


# --- kron -------------------------------------------------------------------

def _reduction_then_rosas(t: KronTriple):
    r = kron2row.reduce_by_determinants(t, 2, 2)
    if isinstance(r, kron2row.ZeroCertificate):
        return 0
    return kron2row.kron_two_row(r)


def _fits_two_row(t):
    return len(t.mu) <= 2 and len(t.nu) <= 2 and len(t.lam) <= 3


def _kron_by(method: str, t: KronTriple, max_n: int) -> int:
    if method == "rosas":
        return kron2row.kron_two_row(t)
    if method == "reduction":
        return _reduction_then_rosas(t)
    if method == "reduced":
        return reduced.kron_from_reduced_2x2(t)
    if method == "oracle":
        return oracle.kron_oracle(t, max_n=max_n)
    raise ValueError(method)


def _auto_method(t: KronTriple) -> str:
    if not kron2row.length_bound_check(t):
        return "length-bound"
    if _fits_two_row(t):
        return "rosas"
    if len(t.mu) <= 2 and len(t.nu) <= 2 and len(t.lam) == 4:
        return "reduction"
    return "oracle"


def _compute_kron(args):
    t = KronTriple.parse(args.lam, args.mu, args.nu)
    method = args.method if args.method != "auto" else _auto_method(t)
    if method == "length-bound":
        value = 0
    else:
        value = _kron_by(method, t, args.max_n)
    meta = {"method": method}
    if args.verify:
        others = [m for m in ("rosas", "reduced", "oracle") if m != method]
        if not _fits_two_row(t):
            others = [m for m in others if m == "oracle"]
        if method == "oracle" and len(t.lam) == 4 and len(t.mu) <= 2 and len(t.nu) <= 2:
            others.append("reduction")
        if t.n > args.max_n:
            others = [m for m in others if m != "oracle"]
        if not others:
            raise CLIError("--verify: no second method applies to this triple", EXIT_INPUT)
        checked = {}
        for m in others:
            checked[m] = _kron_by(m, t, args.max_n)
        meta["verified_with"] = sorted(checked)
        if any(v != value for v in checked.values()):
            raise VerifyMismatch(f"methods disagree on {t.format()}: {method}={value}, {checked}")
    return t, value, meta


def cmd_kron(args):
    t, value, meta = _compute_kron(args)
    return _record(args, _triple_inputs(t), {"value": value}, meta), f"g = {value}"


def cmd_zerokron(args):
    t, value, meta = _compute_kron(args)
    verdict = "positive" if value > 0 else "zero"
    return _record(args, _triple_inputs(t), {"positive": value > 0, "verdict": verdict}, meta), verdict


# --- rkron / kostka / lr -----------------------------------------------------

def cmd_rkron(args):
    gamma, alpha, beta = (Partition.parse(x) for x in (args.gamma, args.alpha, args.beta))
    inputs = {"gamma": gamma.format(), "alpha": alpha.format(), "beta": beta.format()}
    if args.polytope:
        if len(alpha) > 1 or len(beta) > 1 or len(gamma) > 2:
            raise CLIError("--polytope needs one-row alpha, beta and at most two-row gamma", EXIT_INPUT)
        value = reduced.rkron_one_row(alpha.part(1), beta.part(1), gamma.part(1), gamma.part(2))
        meta = {"method": "polytope"}
    else:
        idx = reduced.ReducedIndex(gamma, alpha, beta)
        value = reduced.rkron_stabilized(idx, max_n=args.max_n)
        meta = {"method": "stabilized", "n0": idx.stable_bound()}
    return _record(args, inputs, {"value": value}, meta), f"gbar = {value}"


def cmd_kostka(args):
    lam, mu = Partition.parse(args.lam), Partition.parse(args.mu)
    value = oracle.kostka(lam, mu)
    return _record(args, {"lambda": lam.format(), "mu": mu.format()}, {"value": value}, {"method": "tableaux"}), f"K = {value}"


def cmd_lr(args):
    lam, mu, nu = (Partition.parse(x) for x in (args.lam, args.mu, args.nu))
    value = oracle.lr_coeff(lam, mu, nu)
    meta = {"method": "tableaux"}
    if args.via_rkron:
        other = reduced.murnaghan_littlewood_lr(lam, mu, nu, max_n=args.max_n)
        meta["verified_with"] = ["stabilized-rkron"]
        if other != value:
            raise VerifyMismatch(f"LR tableaux give {value}, reduced Kronecker gives {other}")
    inputs = {"lambda": lam.format(), "mu": mu.format(), "nu": nu.format()}
    return _record(args, inputs, {"value": value}, meta), f"c = {value}"


# --- stretch ----------------------------------------------------------------

def cmd_stretch(args):
    t = KronTriple.parse(args.lam, args.mu, args.nu)
    n_max = args.nmax or args.period * (args.degree + 2)
    report = stretch.analyze_triple(
        t,
        N_max=n_max,
        period=args.period,
        degree=args.degree,
        cap=args.cap,
        method=args.method,
        saturation_domain=args.saturation_domain,
        max_n=args.max_n,
    )
    method = args.method if args.method != "auto" else ("rosas" if _fits_two_row(t) else "oracle")
    rec = _record(args, _triple_inputs(t), report.to_json(), {"method": method})
    lines = [
        f"f(N): {report.quasipolynomial.format()}",
        f"strong SH: {report.strong_sh_holds}",
        f"strong PH2: {report.strong_ph2_holds}",
        f"saturation index ({report.saturation_domain}): {_idx_text(report.saturation_index)}",
        f"positivity index: {_idx_text(report.positivity_index)}",
    ]
    if report.saturation_index_other is not None:
        other = "class" if report.saturation_domain == "all" else "all"
        lines.append(f"saturation index ({other}): {_idx_text(report.saturation_index_other)}")
    if report.shape:
        s = report.shape
        lines.append(f"shape: Q = {s.Q}, L = {s.L}, Delta(even) = {s.delta_even}, Delta(odd) = {s.delta_odd}")
    capped = any(isinstance(v, stretch.ExceededCap) for v in (report.saturation_index, report.positivity_index))
    return rec, "\n".join(lines), (EXIT_CAP if capped else EXIT_OK)


def _idx_text(v):
    return f"> {v.cap}" if isinstance(v, stretch.ExceededCap) else str(v)


# --- hunt / selftest ----------------------------------------------------------

def cmd_hunt(args):
    box = hunt_mod.SearchBox(args.max_lambda1, args.max_weight)
    fn = hunt_mod.hunt_strong_sh if args.mode == "sh" else hunt_mod.hunt_strong_ph2
    hits = fn(box, N_max=args.nmax, cap=args.cap, method=args.method, workers=args.workers)
    if args.mode == "sh":
        family = [t.key() for t in hunt_mod.family_members(box)]
        classification = {
            "matches_explicit_family": [t.key() for t, _ in hits] == family,
            "all_on_codim2_subspace": all(hunt_mod.sh_classification_holds(t) for t, _ in hits),
        }
    else:
        classification = {"all_satisfy_congruences": all(hunt_mod.ph2_congruence_holds(t) for t, _ in hits)}
    result = {
        "count": len(hits),
        "hits": [dict(_triple_inputs(t), report=r.to_json()) for t, r in hits],
        "classification": classification,
    }
    inputs = {"max_lambda1": args.max_lambda1, "max_weight": args.max_weight, "mode": args.mode, "nmax": args.nmax}
    if args.csv:
        _write_csv(
            args.csv,
            ["lambda", "mu", "nu", "quasipolynomial", "strong_sh", "strong_ph2", "saturation_index", "positivity_index"],
            [
                [t.lam.format(), t.mu.format(), t.nu.format(), r.quasipolynomial.format(),
                 str(r.strong_sh_holds), str(r.strong_ph2_holds),
                 _idx_text(r.saturation_index), _idx_text(r.positivity_index)]
                for t, r in hits
            ],
        )
    lines = [f"{len(hits)} hit(s)"]
    lines += [f"  {t.format()}  {r.quasipolynomial.format()}" for t, r in hits]
    lines += [f"{k}: {v}" for k, v in classification.items()]
    code = EXIT_OK if all(classification.values()) else EXIT_VERIFY
    return _record(args, inputs, result, {"method": args.method}), "\n".join(lines), code


def selftest(max_weight: int, max_n: int = oracle.DEFAULT_MAX_N):
    """Compare the lattice-point formula, the reduced-coefficient formula and the oracle."""
    rows, mismatches = [], []
    from .core import partitions

    for n in range(max_weight + 1):
        for lam in partitions(n, max_length=3):
            for mu in partitions(n, max_length=2):
                for nu in partitions(n, max_length=2):
                    t = KronTriple(lam, mu, nu)
                    a = kron2row.kron_two_row(t)
                    b = reduced.kron_from_reduced_2x2(t)
                    c = oracle.kron_oracle(t, max_n=max_n)
                    ok = a == b == c
                    rows.append((t, a, b, c, ok))
                    if not ok:
                        mismatches.append((t, a, b, c))
    return rows, mismatches


def cmd_selftest(args):
    rows, mismatches = selftest(args.max_weight, max(args.max_n, args.max_weight))
    if args.csv:
        _write_csv(
            args.csv,
            ["lambda", "mu", "nu", "rosas", "reduced", "oracle", "ok"],
            [[t.lam.format(), t.mu.format(), t.nu.format(), a, b, c, str(ok)] for t, a, b, c, ok in rows],
        )
    result = {
        "checked": len(rows),
        "mismatches": [dict(_triple_inputs(t), rosas=a, reduced=b, oracle=c) for t, a, b, c in mismatches],
        "passed": not mismatches,
    }
    lines = [f"checked {len(rows)} triples: " + ("pass" if not mismatches else "FAIL")]
    lines += [f"  mismatch {t.format()}: rosas={a} reduced={b} oracle={c}" for t, a, b, c in mismatches]
    return (
        _record(args, {"max_weight": args.max_weight}, result, {"methods": ["rosas", "reduced", "oracle"]}),
        "\n".join(lines),
        EXIT_OK if not mismatches else EXIT_VERIFY,
    )


# --- plumbing ---------------------------------------------------------------

def _triple_inputs(t: KronTriple) -> dict:
    return {"lambda": t.lam.format(), "mu": t.mu.format(), "nu": t.nu.format()}


def _record(args, inputs, result, meta) -> dict:
    return {"command": args.argv, "inputs": inputs, "result": result, "meta": meta}


def _write_csv(path, header, rows):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, quoting=csv.QUOTE_NONNUMERIC)
        w.writerow(header)
        w.writerows(rows)


def _add_common(p, max_n=True):
    p.add_argument("--json", action="store_true", help="print the machine-readable record")
    p.add_argument("--timings", action="store_true", help="add wall-clock timings to the record")
    if max_n:
        p.add_argument("--max-n", type=int, default=oracle.DEFAULT_MAX_N,
                       help="largest symmetric group the character oracle may use")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kronsat", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="cmd", required=True)

    for name, fn, helptext in (
        ("kron", cmd_kron, "compute a Kronecker coefficient"),
        ("zerokron", cmd_zerokron, "decide whether a Kronecker coefficient is positive"),
    ):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("lam", metavar="LAMBDA")
        p.add_argument("mu", metavar="MU")
        p.add_argument("nu", metavar="NU")
        p.add_argument("--method", choices=["auto", "rosas", "reduction", "reduced", "oracle"], default="auto")
        p.add_argument("--verify", action="store_true", help="cross-check with every other applicable method")
        _add_common(p)
        p.set_defaults(func=fn)

    p = sub.add_parser("rkron", help="reduced Kronecker coefficient gbar^GAMMA_{ALPHA,BETA}")
    p.add_argument("gamma", metavar="GAMMA")
    p.add_argument("alpha", metavar="ALPHA")
    p.add_argument("beta", metavar="BETA")
    p.add_argument("--polytope", action="store_true", help="count lattice points (one-row alpha, beta)")
    _add_common(p)
    p.set_defaults(func=cmd_rkron, max_n=reduced.DEFAULT_STABLE_MAX_N)

    p = sub.add_parser("kostka", help="Kostka number")
    p.add_argument("lam", metavar="LAMBDA")
    p.add_argument("mu", metavar="MU")
    _add_common(p, max_n=False)
    p.set_defaults(func=cmd_kostka)

    p = sub.add_parser("lr", help="Littlewood-Richardson coefficient c^LAMBDA_{MU,NU}")
    p.add_argument("lam", metavar="LAMBDA")
    p.add_argument("mu", metavar="MU")
    p.add_argument("nu", metavar="NU")
    p.add_argument("--via-rkron", action="store_true", help="also compute it as a reduced Kronecker coefficient")
    _add_common(p)
    p.set_defaults(func=cmd_lr, max_n=reduced.DEFAULT_STABLE_MAX_N)

    p = sub.add_parser("stretch", help="fit the stretching quasipolynomial and test the hypotheses")
    p.add_argument("lam", metavar="LAMBDA")
    p.add_argument("mu", metavar="MU")
    p.add_argument("nu", metavar="NU")
    p.add_argument("--nmax", type=int, default=None, help="samples N = 1..NMAX (default period*(degree+2))")
    p.add_argument("--period", type=int, default=stretch.DEFAULT_PERIOD)
    p.add_argument("--degree", type=int, default=stretch.DEFAULT_DEGREE)
    p.add_argument("--cap", type=int, default=stretch.DEFAULT_CAP)
    p.add_argument("--method", choices=["auto", "rosas", "oracle"], default="auto")
    p.add_argument("--saturation-domain", choices=["all", "class"], default="all")
    _add_common(p)
    p.set_defaults(func=cmd_stretch)

    p = sub.add_parser("hunt", help="exhaustive counter-example search")
    p.add_argument("--max-lambda1", type=int, required=True)
    p.add_argument("--max-weight", type=int, default=None)
    p.add_argument("--mode", choices=["sh", "ph2"], default="sh")
    p.add_argument("--nmax", type=int, default=hunt_mod.DEFAULT_N_MAX)
    p.add_argument("--cap", type=int, default=stretch.DEFAULT_CAP)
    p.add_argument("--method", choices=["rosas", "reduced"], default="rosas")
    p.add_argument("--workers", type=int, default=1, help="process pool size, 0 for all cores")
    p.add_argument("--csv", metavar="PATH")
    _add_common(p, max_n=False)
    p.set_defaults(func=cmd_hunt)

    p = sub.add_parser("selftest", help="formula vs oracle sweep over two two-row triples")
    p.add_argument("--max-weight", type=int, default=9)
    p.add_argument("--csv", metavar="PATH")
    _add_common(p)
    p.set_defaults(func=cmd_selftest)
    return parser


def run(argv: list[str]) -> tuple[dict | None, str, int]:
    """Execute one command; returns (record, human text, exit code)."""
    parser = build_parser()
    args = parser.parse_args(argv)
    args.argv = list(argv)
    start = time.perf_counter()
    try:
        out = args.func(args)
    except VerifyMismatch as exc:
        return None, f"verification mismatch: {exc}", EXIT_VERIFY
    except OracleOverflow as exc:
        return None, f"resource limit: {exc}", EXIT_CAP
    except (FitMismatch, InsufficientSamples) as exc:
        return None, f"fit failed: {exc}", EXIT_INPUT
    except CLIError as exc:
        return None, str(exc), exc.code
    except KronError as exc:
        return None, f"invalid input: {exc}", EXIT_INPUT
    record, text = out[0], out[1]
    code = out[2] if len(out) > 2 else EXIT_OK
    if args.timings:
        record["meta"]["seconds"] = round(time.perf_counter() - start, 6)
    return record, text, code


def dumps(record: dict) -> str:
    return json.dumps(record, sort_keys=True, indent=2)


def reevaluate(record: dict) -> bool:
    """Re-run the command a record came from and compare the results."""
    again, _, _ = run(record["command"])
    return again is not None and again["result"] == record["result"] and again["inputs"] == record["inputs"]


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        record, text, code = run(argv)
    except SystemExit as exc:  # argparse
        return EXIT_INPUT if exc.code else EXIT_OK
    wants_json = "--json" in argv
    if record is not None and wants_json:
        print(dumps(record))
    else:
        stream = sys.stdout if record is not None else sys.stderr
        print(text, file=stream)
    return code


if __name__ == "__main__":
    sys.exit(main())
