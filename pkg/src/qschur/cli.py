"""Command line front end.

Subcommands: `verify` runs one identity over parameter ranges,
`enumerate` prints gap-condition partition counts, `bijection` encodes,
decodes, or sweeps the motion correspondence, `series` prints a builder's
exact coefficients, and `report` runs the whole verification matrix.

Exit codes: 0 when everything requested verified, 1 when any check found
a discrepancy, 2 for usage errors.  `--jobs` (or the QSCHUR_JOBS
environment variable) fans verification rows out over worker processes.

Testing hook: setting QSCHUR_FAULT_INJECT to a non-empty value makes
`report` perturb the first row's left side by +1, so the failure path of
the report plumbing can be exercised end to end.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from concurrent.futures import ProcessPoolExecutor
from datetime import datetime, timezone
from typing import Any

from . import __version__
from .bijection import (DecodeError, MotionData, MotionRuleError,
                        apply_motions, certify_range, decode)
from .partitions import (distinct_pm1_counts, enumerate_schur,
                         format_partition, parse_partition, schur_counts,
                         schur_gf_oracle)
from .qpoly import QPoly, XSeries
from .schur_sums import (IdentityId, UsageError, VerificationReport,
                         ali_gf_truncated, bounded_gf, cor1_bounded_sum,
                         even_odd_split_lhs, kursungoz_gf_truncated,
                         lhs_schur, rhs_schur, schur_product_truncated,
                         verify)

MAX_INDEX = 100   # hard cap on N-like parameters
MAX_WINDOW = 500  # hard cap on truncation windows

_RANGE_RE = re.compile(r"^(-?\d+)(?:\.\.(-?\d+))?$")


def _parse_range(text: str, name: str) -> list[int]:
    match = _RANGE_RE.match(text)
    if not match:
        raise UsageError("%s must be an integer or a..b range, got %r" % (name, text))
    lo = int(match.group(1))
    hi = int(match.group(2)) if match.group(2) is not None else lo
    if hi < lo:
        raise UsageError("%s range is empty: %s" % (name, text))
    return list(range(lo, hi + 1))


def _check_caps(params: dict[str, Any]) -> None:
    for key, value in params.items():
        if key in ("N", "M", "L", "a", "max") and abs(value) > MAX_INDEX:
            raise UsageError("%s=%d exceeds the hard cap %d" % (key, value, MAX_INDEX))
        if key == "T" and value > MAX_WINDOW:
            raise UsageError("T=%d exceeds the hard cap %d" % (value, MAX_WINDOW))


# ---------------------------------------------------------------------------
# verification rows

def _execute_row(row: dict[str, Any]) -> dict[str, Any]:
    """Run one verification row; also the worker entry point."""
    check = row["check"]
    params = row["params"]
    if check == "schur-counts":
        return _run_schur_counts(params)
    if check == "cor1-bounded-sum":
        return _run_cor1(params)
    if check == "bijection-sweep":
        return _run_sweep(params)
    return verify(check, params).as_dict()


def _report_dict(check: str, params: dict[str, Any],
                 disc: dict[str, Any] | None) -> dict[str, Any]:
    echo = {k: v for k, v in params.items() if not k.startswith("_")}
    return VerificationReport(
        identity=check, params=echo,
        status="verified" if disc is None else "failed",
        first_discrepancy=disc).as_dict()


def _run_schur_counts(params: dict[str, Any]) -> dict[str, Any]:
    n_max = params.get("max_n", 60)
    gap = schur_counts(n_max)
    if "_perturb" in params:
        gap[0] += int(params["_perturb"]["delta"])
    pm1 = distinct_pm1_counts(n_max)
    product = schur_product_truncated(n_max)
    disc = None
    for n in range(n_max + 1):
        want = product.coefficient_q(n)
        if not (gap[n] == pm1[n] == want):
            disc = {"x_degree": None, "exponent_half_steps": 2 * n,
                    "lhs": "%d,%d" % (gap[n], pm1[n]), "rhs": str(want)}
            break
    return _report_dict("schur-counts", params, disc)


def _run_cor1(params: dict[str, Any]) -> dict[str, Any]:
    N = params["N"]
    lhs, rhs = cor1_bounded_sum(N)
    if "_perturb" in params:
        hook = params["_perturb"]
        lhs = lhs + QPoly.monomial(int(hook["delta"]),
                                   int(hook["exponent_half_steps"]))
    diff = lhs - rhs
    disc = None
    if diff:
        e = diff.min_half_exponent()
        disc = {"x_degree": None, "exponent_half_steps": e,
                "lhs": str(lhs.coefficient(e)), "rhs": str(rhs.coefficient(e))}
    return _report_dict("cor1-bounded-sum", params, disc)


def _run_sweep(params: dict[str, Any]) -> dict[str, Any]:
    summary = certify_range(params.get("max_size", 40),
                            strict=params.get("strict", True))
    disc = None
    if summary["status"] != "verified":
        disc = {"x_degree": None, "exponent_half_steps": 0,
                "lhs": json.dumps(summary["failure"], sort_keys=True),
                "rhs": "clean sweep"}
    return _report_dict("bijection-sweep",
                        {"max_size": params.get("max_size", 40)}, disc)


def acceptance_matrix() -> list[dict[str, Any]]:
    """The full verification matrix, in reporting order."""
    rows: list[dict[str, Any]] = []

    def add(check: str, **params: Any) -> None:
        rows.append({"check": check, "params": params})

    for N in range(0, 26):
        add(IdentityId.SCHUR_POLY.value, N=N)
    for N in range(2, 26):
        add(IdentityId.REC_ANDREWS.value, N=N)
    for N in range(4, 26):
        add(IdentityId.REC_L.value, N=N)
    for N in range(4, 13):
        add(IdentityId.REC_SUMMAND.value, N=N)
    add("schur-counts", max_n=60)
    for N in range(0, 16):
        add(IdentityId.GF_BOUNDED.value, N=N, T=45)
    for N in range(1, 11):
        add("cor1-bounded-sum", N=N)
    add(IdentityId.GF_ALI_EQ_KURSUNGOZ.value, T=60)
    add(IdentityId.GF_EVEN_ODD_SPLIT.value, T=60)
    add(IdentityId.ANALYTIC_SCHUR.value, T=60)
    for N in range(0, 21):
        add(IdentityId.DUAL.value, N=N)
    for N in range(0, 21):
        add(IdentityId.T0_BINOM.value, N=N)
    add(IdentityId.T0_LIMIT.value, N=40, T=40)
    add(IdentityId.QT_LIMIT.value, t=1, T=50)
    add(IdentityId.QT_LIMIT.value, t=2, T=50)
    for M in range(0, 13):
        add(IdentityId.SUMMATION_M.value, M=M)
    for L in range(0, 13):
        add(IdentityId.WARNAAR.value, L=L)
    for M in range(0, 16):
        add(IdentityId.Q1_TRIPLE.value, M=M)
    for M in range(0, 16):
        add(IdentityId.Q1_QUAD.value, M=M)
    add("bijection-sweep", max_size=40)
    add(IdentityId.EXPONENT_DIFF.value, max=20)
    return rows


def _run_rows(rows: list[dict[str, Any]], jobs: int) -> list[dict[str, Any]]:
    if jobs <= 1 or len(rows) <= 1:
        return [_execute_row(row) for row in rows]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_execute_row, rows))


def _jobs(args: argparse.Namespace) -> int:
    if args.jobs is not None:
        value = args.jobs
    else:
        env = os.environ.get("QSCHUR_JOBS", "")
        try:
            value = int(env) if env else 1
        except ValueError:
            raise UsageError("QSCHUR_JOBS must be an integer, got %r" % env)
    if value < 1:
        raise UsageError("--jobs must be >= 1")
    return value


# ---------------------------------------------------------------------------
# output plumbing

def _poly_pairs(p: QPoly) -> list[list[Any]]:
    return p.to_pairs()


def _strata_pairs(s: XSeries) -> list[list[Any]]:
    return [[x, _poly_pairs(s.stratum(x))] for x in s.x_degrees()]


def _format_poly_text(p: QPoly) -> str:
    if p.is_zero():
        return "0"
    terms = []
    for e, c in sorted(p.items()):
        if e == 0:
            terms.append(str(c))
            continue
        if c == 1:
            lead = ""
        elif c == -1:
            lead = "-"
        else:
            lead = "%d*" % c
        if e == 2:
            terms.append("%sq" % lead)
        elif e % 2 == 0:
            terms.append("%sq^%d" % (lead, e // 2))
        else:
            terms.append("%sq^(%d/2)" % (lead, e))
    return " + ".join(terms).replace("+ -", "- ")


def _emit(doc: dict[str, Any], args: argparse.Namespace,
          text_lines: list[str]) -> None:
    rendered = json.dumps(doc, indent=2) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(rendered)
    if args.format == "json":
        sys.stdout.write(rendered)
    else:
        sys.stdout.write("\n".join(text_lines) + "\n")


def _entry_line(entry: dict[str, Any]) -> str:
    params = " ".join("%s=%s" % kv for kv in entry["params"].items())
    line = "%-20s %-28s %s" % (entry["identity"], params, entry["status"])
    disc = entry["first_discrepancy"]
    if disc:
        line += "  first diff at "
        if disc["x_degree"] is not None:
            line += "x^%d, " % disc["x_degree"]
        line += "q-exponent %s/2: lhs=%s rhs=%s" % (
            disc["exponent_half_steps"], disc["lhs"], disc["rhs"])
    return line


def _entries_doc(entries: list[dict[str, Any]]) -> dict[str, Any]:
    verified = sum(1 for e in entries if e["status"] == "verified")
    return {
        "version": __version__,
        "started_at": datetime.now(timezone.utc).isoformat(timespec="seconds"),
        "entries": entries,
        "summary": {"verified": verified, "failed": len(entries) - verified},
    }


# ---------------------------------------------------------------------------
# subcommands

def _cmd_verify(args: argparse.Namespace) -> int:
    try:
        ident = IdentityId(args.identity)
    except ValueError:
        raise UsageError("unknown identity %r" % args.identity)

    sweeps: dict[str, list[int]] = {}
    for name in ("N", "M", "L", "a"):
        raw = getattr(args, name)
        if raw is not None:
            sweeps[name] = _parse_range(raw, "--" + name)
    if args.t is not None:
        sweeps["t"] = [args.t]
    elif ident is IdentityId.QT_LIMIT:
        sweeps["t"] = [1, 2]
    fixed: dict[str, Any] = {}
    if args.T is not None:
        fixed["T"] = args.T
    if args.max_n is not None:
        fixed["max"] = args.max_n

    rows: list[dict[str, Any]] = [{"check": ident.value, "params": dict(fixed)}]
    for name, values in sweeps.items():
        rows = [{"check": ident.value, "params": {**row["params"], name: v}}
                for row in rows for v in values]
    for row in rows:
        _check_caps(row["params"])

    entries = _run_rows(rows, _jobs(args))
    doc = _entries_doc(entries)
    _emit(doc, args, [_entry_line(e) for e in entries]
          + ["%d verified, %d failed" % (doc["summary"]["verified"],
                                         doc["summary"]["failed"])])
    return 0 if doc["summary"]["failed"] == 0 else 1


def _cmd_report(args: argparse.Namespace) -> int:
    rows = acceptance_matrix()
    if args.identity is not None:
        rows = [r for r in rows if r["check"] == args.identity]
    if os.environ.get("QSCHUR_FAULT_INJECT") and rows:
        rows[0] = {"check": rows[0]["check"],
                   "params": {**rows[0]["params"],
                              "_perturb": {"exponent_half_steps": 0, "delta": 1}}}
    entries = _run_rows(rows, _jobs(args))
    doc = _entries_doc(entries)
    _emit(doc, args, [_entry_line(e) for e in entries]
          + ["%d verified, %d failed" % (doc["summary"]["verified"],
                                         doc["summary"]["failed"])])
    return 0 if doc["summary"]["failed"] == 0 else 1


def _cmd_enumerate(args: argparse.Namespace) -> int:
    n_max = args.max_n
    if n_max is None:
        raise UsageError("enumerate needs --max-n")
    if n_max > MAX_INDEX:
        raise UsageError("--max-n exceeds the hard cap %d" % MAX_INDEX)
    which = args.cls
    counts: dict[str, list[int]] = {}
    if which in ("schur", "both"):
        if args.largest_part is not None:
            by_size = enumerate_schur(n_max, largest_part=args.largest_part)
            counts["schur"] = [len(by_size.get(n, ())) for n in range(n_max + 1)]
        else:
            counts["schur"] = schur_counts(n_max)
    if which in ("pm1mod3", "both"):
        if args.largest_part is not None:
            raise UsageError("--largest-part only applies to the gap-condition class")
        counts["pm1mod3"] = distinct_pm1_counts(n_max)
    doc: dict[str, Any] = {"max_n": n_max, "class": which, "counts": counts}
    if args.largest_part is not None:
        doc["largest_part"] = args.largest_part
    lines = ["n " + " ".join(sorted(counts))]
    for n in range(n_max + 1):
        lines.append("%d %s" % (n, " ".join(str(counts[k][n]) for k in sorted(counts))))
    if which == "both":
        agree = counts["schur"] == counts["pm1mod3"]
        doc["classes_agree"] = agree
        lines.append("classes agree: %s" % agree)
        _emit(doc, args, lines)
        return 0 if agree else 1
    _emit(doc, args, lines)
    return 0


def _cmd_bijection(args: argparse.Namespace) -> int:
    chosen = [x for x in (args.motions, args.partition, args.max_n) if x is not None]
    if len(chosen) != 1:
        raise UsageError("give exactly one of --motions, --partition, --max-n")

    if args.motions is not None:
        try:
            data = MotionData.from_dict(json.loads(args.motions))
        except (json.JSONDecodeError, ValueError, TypeError) as exc:
            raise UsageError("bad motion data: %s" % exc)
        try:
            result = apply_motions(data, strict=args.strict)
        except MotionRuleError as exc:
            print("motion failed: %s" % exc, file=sys.stderr)
            return 1
        doc = {"motions": data.as_dict(),
               "partition": format_partition(result), "size": sum(result)}
        _emit(doc, args, ["%s -> %s (size %d)" % (
            json.dumps(data.as_dict()), format_partition(result) or "(empty)",
            sum(result))])
        return 0

    if args.partition is not None:
        try:
            parts = parse_partition(args.partition)
        except ValueError as exc:
            raise UsageError(str(exc))
        try:
            data = decode(parts, strict=args.strict)
        except ValueError as exc:
            # inadmissible input is a usage problem; a missing pre-image
            # for an admissible partition is a genuine discrepancy
            if isinstance(exc, DecodeError):
                print("decode failed: %s" % exc, file=sys.stderr)
                return 1
            raise UsageError(str(exc))
        doc = {"partition": format_partition(parts), "motions": data.as_dict()}
        _emit(doc, args, ["%s -> %s" % (format_partition(parts) or "(empty)",
                                        json.dumps(data.as_dict()))])
        return 0

    if args.max_n > MAX_INDEX:
        raise UsageError("--max-n exceeds the hard cap %d" % MAX_INDEX)
    summary = certify_range(args.max_n, strict=args.strict)
    lines = ["sweep to size %d: %s" % (args.max_n, summary["status"])]
    if summary["status"] == "verified":
        lines.append("%d partitions round-tripped" % summary["partitions"])
    else:
        lines.append(json.dumps(summary["failure"]))
    _emit(summary, args, lines)
    return 0 if summary["status"] == "verified" else 1


def _cmd_series(args: argparse.Namespace) -> int:
    name = args.name
    T = args.T
    doc: dict[str, Any] = {"series": name}

    def need_T() -> int:
        if T is None:
            raise UsageError("series %r needs --T" % name)
        if T > MAX_WINDOW:
            raise UsageError("T=%d exceeds the hard cap %d" % (T, MAX_WINDOW))
        return T

    def need_N() -> int:
        if args.N is None:
            raise UsageError("series %r needs --N" % name)
        values = _parse_range(args.N, "--N")
        if len(values) != 1:
            raise UsageError("series takes a single --N")
        if abs(values[0]) > MAX_INDEX:
            raise UsageError("N exceeds the hard cap %d" % MAX_INDEX)
        return values[0]

    if name in ("lhs", "rhs"):
        N = need_N()
        poly = lhs_schur(N) if name == "lhs" else rhs_schur(N)
        doc.update(N=N, pairs=_poly_pairs(poly))
        _emit(doc, args, [_format_poly_text(poly)])
        return 0
    if name == "product":
        poly = schur_product_truncated(need_T())
        doc.update(T=T, pairs=_poly_pairs(poly))
        _emit(doc, args, [_format_poly_text(poly)])
        return 0

    if name == "ali":
        series = ali_gf_truncated(need_T())
    elif name == "kursungoz":
        series = kursungoz_gf_truncated(need_T())
    elif name == "even-odd":
        series = even_odd_split_lhs(need_T())
    elif name == "bounded":
        if args.largest_part is None:
            raise UsageError("series 'bounded' needs --largest-part")
        series = bounded_gf(args.largest_part, need_T())
    elif name == "oracle":
        series = schur_gf_oracle(need_T(), largest_part=args.largest_part)
    else:
        raise UsageError("unknown series %r" % name)
    doc.update(T=T, strata=_strata_pairs(series))
    if args.largest_part is not None:
        doc["largest_part"] = args.largest_part
    lines = ["x^%d: %s" % (x, _format_poly_text(series.stratum(x)))
             for x in series.x_degrees()]
    _emit(doc, args, lines or ["0"])
    return 0


# ---------------------------------------------------------------------------
# argument tree

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qschur",
        description="Exact verification of gap-condition partition identities.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("json", "text"), default="text")
        p.add_argument("--out", help="also write the JSON document to a file")

    p_verify = sub.add_parser("verify", help="verify one identity over ranges")
    p_verify.add_argument("--identity", required=True)
    p_verify.add_argument("--N")
    p_verify.add_argument("--M")
    p_verify.add_argument("--L")
    p_verify.add_argument("--a")
    p_verify.add_argument("--T", type=int)
    p_verify.add_argument("--t", type=int, choices=(1, 2))
    p_verify.add_argument("--max-n", dest="max_n", type=int)
    p_verify.add_argument("--jobs", type=int)
    common(p_verify)

    p_report = sub.add_parser("report", help="run the full verification matrix")
    p_report.add_argument("--identity", help="only rows with this check name")
    p_report.add_argument("--jobs", type=int)
    common(p_report)

    p_enum = sub.add_parser("enumerate", help="partition counts by size")
    p_enum.add_argument("--max-n", dest="max_n", type=int, required=True)
    p_enum.add_argument("--class", dest="cls",
                        choices=("schur", "pm1mod3", "both"), default="both")
    p_enum.add_argument("--largest-part", dest="largest_part", type=int)
    common(p_enum)

    p_bij = sub.add_parser("bijection", help="encode, decode, or sweep motions")
    p_bij.add_argument("--motions", help="motion data as JSON")
    p_bij.add_argument("--partition", help="comma-separated ascending parts")
    p_bij.add_argument("--max-n", dest="max_n", type=int,
                       help="certify all sizes up to this bound")
    p_bij.add_argument("--strict", action="store_true")
    common(p_bij)

    p_series = sub.add_parser("series", help="print a builder's coefficients")
    p_series.add_argument("name", choices=(
        "lhs", "rhs", "ali", "kursungoz", "even-odd", "bounded", "oracle",
        "product"))
    p_series.add_argument("--N")
    p_series.add_argument("--T", type=int)
    p_series.add_argument("--largest-part", dest="largest_part", type=int)
    common(p_series)

    return parser


_COMMANDS = {
    "verify": _cmd_verify,
    "report": _cmd_report,
    "enumerate": _cmd_enumerate,
    "bijection": _cmd_bijection,
    "series": _cmd_series,
}


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
