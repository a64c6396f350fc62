"""Batch command-line front end.

One subcommand per experiment; every run validates its hypotheses up front,
emits exactly one JSON or CSV report embedding the full configuration and
library version, and exits 0 on success, 1 on a hypothesis/usage error, or
2 when an internal certificate check fails (which should never happen and
must never be silent).

Reports are byte-identical for identical configurations regardless of the
parallelism width (CYCLOGCD_JOBS overrides --jobs).
"""

import argparse
import csv
import io
import json
import sys

from . import __version__
from .arith import factorize
from .champion import ChampionParams, run_champion
from .density import empirical_density
from .errors import HypothesisError, VerificationError
from .ffield import FieldContext, FqPolynomial, ff_construction, ff_direct_verify, ff_scan, fq_context
from .oracles import delta_count_range, delta_squarefree_range, gcd_seq_exact
from .parallel import effective_jobs
from .residues import lemma_scan


def parse_poly(text: str, field: FieldContext) -> FqPolynomial:
    """Comma-separated nonnegative integer coefficients, constant term first,
    reduced mod the characteristic."""
    if not text.strip():
        raise ValueError("empty polynomial text")
    coeffs = []
    for token in text.split(","):
        token = token.strip()
        if not token.isdigit():
            raise ValueError(f"bad polynomial coefficient {token!r}")
        coeffs.append(int(token) % field.p)
    return FqPolynomial.of(field, coeffs)


def _field_from_size(q: int) -> FieldContext:
    fac = factorize(q)
    if len(fac.factors) != 1:
        raise ValueError(f"q = {q} is not a prime power")
    (p, e), = fac.factors.items()
    return fq_context(p, e)


def _emit(args, config: dict, report: dict, csv_header, csv_rows) -> None:
    if args.format == "json":
        doc = {"config": config, "report": report, "version": __version__}
        text = json.dumps(doc, sort_keys=True, indent=2) + "\n"
    else:
        buf = io.StringIO()
        buf.write(f"# version={__version__}\n")
        buf.write(f"# config={json.dumps(config, sort_keys=True)}\n")
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(csv_header)
        writer.writerows(csv_rows)
        text = buf.getvalue()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_gcd_seq(args, jobs) -> None:
    idx_a = args.M if args.M is not None else args.N
    config = {
        "subcommand": "gcd-seq", "a": args.a, "b": args.b, "M": idx_a, "N": args.N,
        "n_max": args.n_max, "format": args.format,
    }
    rows = gcd_seq_exact(args.a, args.b, idx_a, args.N, args.n_max, jobs=jobs)
    report = {
        "rows": [
            {"n": r.n, "gcd": r.gcd_value, "log_gcd": r.log_gcd,
             "distinct_prime_count": r.distinct_prime_count}
            for r in rows
        ]
    }
    csv_rows = [[r.n, r.gcd_value, repr(r.log_gcd), r.distinct_prime_count] for r in rows]
    _emit(args, config, report, ["n", "gcd", "log_gcd", "distinct_prime_count"], csv_rows)


def _cmd_champion(args, jobs) -> None:
    config = {
        "subcommand": "champion", "a": args.a, "b": args.b, "N": args.N, "M": args.M,
        "x": args.x, "delta": args.delta, "format": args.format,
    }
    params = ChampionParams(a=args.a, b=args.b, N=args.N, x=args.x, delta=args.delta, M=args.M)
    report = run_champion(params, jobs=jobs).to_dict()
    header = [
        "n", "representation_count", "distinct_primes", "log_gcd_lower_bound",
        "pigeonhole_floor", "pair_count", "kernel", "kernel_omega",
        "curve_value", "curve_ratio", "verified",
    ]
    row = [
        report["n"], report["representation_count"],
        ";".join(str(p) for p in report["distinct_primes"]),
        repr(report["log_gcd_lower_bound"]), report["pigeonhole_floor"],
        report["pair_count"], report["kernel"], report["kernel_omega"],
        repr(report["curve_value"]), repr(report["curve_ratio"]), report["verified"],
    ]
    _emit(args, config, report, header, [row])


def _cmd_density(args, jobs) -> None:
    config = {
        "subcommand": "density", "N": args.N, "d": args.d, "a": args.a, "b": args.b,
        "x": args.x, "format": args.format,
    }
    check = empirical_density(args.x, args.N, args.d, args.a, args.b, jobs=jobs)
    ratio = check.prediction.ratio
    report = {
        "N": args.N, "d": args.d, "x": args.x,
        "exponents": [[l, e] for l, e in check.prediction.exponents],
        "ratio": f"{ratio.numerator}/{ratio.denominator}",
        "ratio_decimal": float(ratio),
        "count": check.count,
        "expected": check.expected,
        "relative_error": check.relative_error,
    }
    header = ["N", "d", "ratio", "ratio_decimal", "count", "expected", "relative_error"]
    row = [args.N, args.d, report["ratio"], repr(report["ratio_decimal"]),
           check.count, repr(check.expected), repr(check.relative_error)]
    _emit(args, config, report, header, [row])


def _cmd_delta(args, jobs) -> None:
    config = {
        "subcommand": "delta", "limit": args.limit, "squarefree": args.squarefree,
        "format": args.format,
    }
    counts = delta_count_range(args.limit)
    if args.squarefree:
        sf = delta_squarefree_range(args.limit)
        rows = [{"n": n, "delta": counts[n], "delta_squarefree": sf[n]}
                for n in range(1, args.limit + 1)]
        header = ["n", "delta", "delta_squarefree"]
        csv_rows = [[r["n"], r["delta"], r["delta_squarefree"]] for r in rows]
    else:
        rows = [{"n": n, "delta": counts[n]} for n in range(1, args.limit + 1)]
        header = ["n", "delta"]
        csv_rows = [[r["n"], r["delta"]] for r in rows]
    _emit(args, config, {"rows": rows}, header, csv_rows)


def _cmd_verify_lemma(args, jobs) -> None:
    config = {
        "subcommand": "verify-lemma", "N": args.N, "a": args.a, "b": args.b,
        "p_max": args.p_max, "m_max": args.m_max, "format": args.format,
    }
    result = lemma_scan(args.N, args.a, args.b, args.p_max, args.m_max, jobs=jobs)
    report = {
        "N": result.modulus, "a": result.a, "b": result.b,
        "p_max": result.p_max, "m_max": result.m_max,
        "qualified_primes": result.qualified_primes,
        "cases_checked": result.cases_checked,
        "failures": result.failures,
        "all_verified": result.failures == 0,
    }
    header = ["N", "a", "b", "p_max", "m_max", "qualified_primes", "cases_checked", "failures"]
    row = [result.modulus, result.a, result.b, result.p_max, result.m_max,
           result.qualified_primes, result.cases_checked, result.failures]
    _emit(args, config, report, header, [row])


def _ff_common(args, jobs, verify: bool) -> None:
    name = "ff-verify" if verify else "ff"
    config = {
        "subcommand": name, "q": args.q, "k": args.k, "n0": args.n0, "m": args.m,
        "a_poly": args.a_poly, "b_poly": args.b_poly, "deg_max": args.deg_max,
        "format": args.format,
    }
    if verify:
        config["n_cap"] = args.n_cap
    base = _field_from_size(args.q)
    a = parse_poly(args.a_poly, base)
    b = parse_poly(args.b_poly, base)
    constr = ff_construction(base, args.k, args.n0, args.m)
    per_n = []
    for N in range(1, args.deg_max + 1):
        scan = ff_scan(constr, N, a, b, jobs=jobs)
        entry = {
            "N": N, "n": scan.n, "pi_count": scan.count,
            "predicted": scan.predicted, "predicted_alt": scan.predicted_alt,
            "total_irreducible": scan.total_irreducible,
        }
        if verify:
            res = ff_direct_verify(constr, N, a, b, n_cap=args.n_cap, scan=scan)
            entry.update(deg_gcd=res.deg_gcd, certified_bound=res.certified_bound,
                         ratio_to_n=res.ratio_to_n, verified=True)
        per_n.append(entry)
    report = {"r": constr.r, "t": constr.t, "Q": constr.Q, "per_N": per_n}
    header = ["N", "n", "pi_count", "predicted", "predicted_alt", "total_irreducible"]
    if verify:
        header += ["deg_gcd", "certified_bound", "ratio_to_n"]
    csv_rows = []
    for e in per_n:
        row = [e["N"], e["n"], e["pi_count"], repr(e["predicted"]),
               repr(e["predicted_alt"]), e["total_irreducible"]]
        if verify:
            row += [e["deg_gcd"], e["certified_bound"], repr(e["ratio_to_n"])]
        csv_rows.append(row)
    _emit(args, config, report, header, csv_rows)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclogcd",
        description="Exact experiments on gcd sequences of cyclotomic values.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p):
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--out", default=None, help="output path (default: stdout)")
        p.add_argument("--jobs", type=int, default=1,
                       help="parallelism width (env CYCLOGCD_JOBS overrides)")

    p = sub.add_parser("gcd-seq", help="exact gcd(Phi_M(a^n), Phi_N(b^n)) rows")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--M", type=int, default=None)
    p.add_argument("--n-max", dest="n_max", type=int, required=True)
    common(p)
    p.set_defaults(run=_cmd_gcd_seq)

    p = sub.add_parser("champion", help="pigeonhole a champion n with many certified prime divisors")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--M", type=int, default=None)
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--delta", type=float, default=0.9)
    common(p)
    p.set_defaults(run=_cmd_champion)

    p = sub.add_parser("density", help="predicted vs empirical qualifying-prime density")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--d", type=int, default=1)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--x", type=int, required=True)
    common(p)
    p.set_defaults(run=_cmd_density)

    p = sub.add_parser("delta", help="divisor counters delta(n) up to a limit")
    p.add_argument("--limit", type=int, required=True)
    p.add_argument("--squarefree", action="store_true")
    common(p)
    p.set_defaults(run=_cmd_delta)

    p = sub.add_parser("verify-lemma", help="exhaustive divisibility-lemma verification")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--p-max", dest="p_max", type=int, required=True)
    p.add_argument("--m-max", dest="m_max", type=int, default=20)
    common(p)
    p.set_defaults(run=_cmd_verify_lemma)

    p = sub.add_parser("ff", help="function-field qualifying-pi scan")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n0", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--a-poly", dest="a_poly", required=True,
                   help="coefficients, constant first, e.g. '0,1' for T")
    p.add_argument("--b-poly", dest="b_poly", required=True)
    p.add_argument("--deg-max", dest="deg_max", type=int, required=True)
    common(p)
    p.set_defaults(run=lambda a, j: _ff_common(a, j, verify=False))

    p = sub.add_parser("ff-verify", help="scan plus exact gcd degree certification")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n0", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--a-poly", dest="a_poly", required=True)
    p.add_argument("--b-poly", dest="b_poly", required=True)
    p.add_argument("--deg-max", dest="deg_max", type=int, required=True)
    p.add_argument("--n-cap", dest="n_cap", type=int, default=5000)
    common(p)
    p.set_defaults(run=lambda a, j: _ff_common(a, j, verify=True))

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse uses 2 for usage errors; keep 2 reserved for verification
        # failures and report usage problems as exit 1
        return 1 if exc.code == 2 else (exc.code or 0)
    jobs = effective_jobs(args.jobs)
    try:
        args.run(args, jobs)
    except VerificationError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 2
    except (HypothesisError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
