"""Command-line front end: ``qcap verify``, ``qcap expand``, ``qcap list``."""

from __future__ import annotations

import argparse
import json
import os
import re
import sys

from .partitions import GapConfig, brute_force_series, count_series
from .qdiff import M, delta_index, finite_C, gamma_seq, theorem_rhs
from .series import QSeries, format_term
from .theta import ThetaSpec, false_theta, theta_sum
from .verify import (
    REGISTRY,
    SCHEMA_VERSION,
    FAIL,
    RunConfig,
    list_checks,
    run_all,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

_NAMED_CFG = {"C1": (1, 1), "C2": (0, 1), "C2star": (1, 0), "C3": (0, 0)}
_THETAS = {"theta-tq4": M(1, 1, 4), "theta-tq": M(1, 1, 1), "theta-t2q2": M(-1, 2, 2)}

SERIES_HELP = ("C1 C2 C2star C3 (counts at t=1), <same>-refined, C<M>-finite, Cab-refined, "
               "theorem-rhs, theta-tq4, theta-tq, theta-t2q2, Theta1, Theta2, "
               "gamma<n>, F<n>, delta<n>, H<n>")


class UsageError(Exception):
    pass


def default_order() -> int:
    raw = os.environ.get("QCAP_DEFAULT_ORDER")
    if raw is None:
        return 50
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"QCAP_DEFAULT_ORDER must be an integer, got {raw!r}") from None


def expand_series(name: str, order: int, alpha: int = 1, beta: int = 1) -> QSeries:
    """Resolve a series name to its expansion below q^order."""
    cfg = GapConfig(alpha, beta)
    if name in _NAMED_CFG:
        return count_series(brute_force_series(GapConfig(*_NAMED_CFG[name]), None, order).at_t1())
    if name.endswith("-refined") and name[:-8] in _NAMED_CFG:
        return brute_force_series(GapConfig(*_NAMED_CFG[name[:-8]]), None, order)
    if name in ("Cab-refined", "theorem-rhs"):
        return theorem_rhs(cfg, order)
    if name in _THETAS:
        return theta_sum(ThetaSpec(_THETAS[name], 6), order)
    if name in ("Theta1", "Theta2"):
        return false_theta(int(name[-1]), "character", order)
    m = re.fullmatch(r"C(-?\d+)-finite", name)
    if m:
        Mx = int(m.group(1))
        if Mx < -2 or Mx == -1:
            raise UsageError(f"C_M is defined for M = -2 and M >= 0, got {Mx}")
        return finite_C(cfg, Mx, order)
    m = re.fullmatch(r"(gamma|F|delta|H)(\d+)", name)
    if m:
        n = int(m.group(2))
        if m.group(1) in ("gamma", "F"):
            return gamma_seq(cfg, n, order)[n]
        return delta_index(cfg, n, order)
    raise UsageError(f"unknown series {name!r}; known: {SERIES_HELP}")


def series_to_json(name: str, s: QSeries, alpha: int, beta: int) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "series": name,
        "alpha": alpha,
        "beta": beta,
        "lo": s.lo,
        "order": s.order,
        "coefficients": [[[te, str(c)] for te, c in s[q].items()] for q in range(s.lo, s.order)],
    }


def format_report_text(report) -> str:
    lines = []
    for c in report.checks:
        if c.status == FAIL:
            d = c.discrepancy
            if d is not None:
                detail = f"q^{d.q_exp} t^{d.t_exp}: lhs {d.lhs_coeff}, rhs {d.rhs_coeff} ({d.where})"
            else:
                detail = c.message
            lines.append(f"FAIL  {c.name}  {detail}")
        else:
            lines.append(f"{c.status.upper():5} {c.name}  [{c.comparisons} comparisons, {c.elapsed:.2f}s]")
    s = report.summary
    lines.append(f"{s['pass']} passed, {s['fail']} failed, {s['skipped']} skipped")
    return "\n".join(lines)


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _cfg_filter(args) -> list | None:
    if args.alpha is None and args.beta is None:
        return None
    pairs = [(a, b) for a in (0, 1) for b in (0, 1)
             if (args.alpha is None or a == args.alpha) and (args.beta is None or b == args.beta)]
    return [list(p) for p in pairs]


def cmd_verify(args) -> int:
    if args.identity == "all":
        names = sorted(REGISTRY)
    elif args.identity in REGISTRY:
        names = [args.identity]
    else:
        raise UsageError(f"unknown identity {args.identity!r}; valid names: all, "
                         + ", ".join(sorted(REGISTRY)))
    if args.q_order is not None and args.q_order < 1:
        raise UsageError("--q-order must be >= 1")
    residual = any("z_degree" in REGISTRY[n].defaults for n in names)
    if args.z_degree is not None and args.z_degree < 3 and residual:
        raise UsageError("--z-degree must be >= 3 for residual checks")
    order = args.q_order
    if order is None and "QCAP_DEFAULT_ORDER" in os.environ:
        order = default_order()
    config = RunConfig(order=order, z_degree=args.z_degree, configs=_cfg_filter(args),
                       names=names, workers=args.workers)
    report = run_all(config)
    if args.format == "json":
        _emit(json.dumps(report.to_dict(), indent=2), args.output)
    else:
        _emit(format_report_text(report), args.output)
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_expand(args) -> int:
    order = args.q_order if args.q_order is not None else default_order()
    if order < 1:
        raise UsageError("--q-order must be >= 1")
    alpha = 1 if args.alpha is None else args.alpha
    beta = 1 if args.beta is None else args.beta
    s = expand_series(args.series, order, alpha, beta)
    if args.format == "json":
        _emit(json.dumps(series_to_json(args.series, s, alpha, beta), indent=2), args.output)
    else:
        _emit("\n".join(format_term(c, te, qe) for qe, te, c in s.terms()) or "0", args.output)
    return EXIT_OK


def cmd_list(args) -> int:
    checks = list_checks()
    if args.format == "json":
        out = json.dumps([{k: c[k] for k in ("name", "description", "label")} for c in checks], indent=2)
    else:
        width = max(len(c["name"]) for c in checks)
        out = "\n".join(f"{c['name']:<{width}}  {c['label']}: {c['description']}" for c in checks)
    _emit(out, args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qcap", description="Exact q-series identity verifier")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--output", help="write to this path instead of stdout")

    v = sub.add_parser("verify", help="run identity checks")
    v.add_argument("--identity", default="all", help="check name or 'all'")
    v.add_argument("--q-order", type=int, help="truncation order (default: per check, "
                   "or QCAP_DEFAULT_ORDER)")
    v.add_argument("--z-degree", type=int, help="z-degree for q-difference residuals")
    v.add_argument("--alpha", type=int, choices=(0, 1))
    v.add_argument("--beta", type=int, choices=(0, 1))
    v.add_argument("--workers", type=int, default=min(4, os.cpu_count() or 1))
    common(v)

    e = sub.add_parser("expand", help="print a named series")
    e.add_argument("--series", required=True, help=SERIES_HELP)
    e.add_argument("--q-order", type=int, help="truncation order (default 50 or QCAP_DEFAULT_ORDER)")
    e.add_argument("--alpha", type=int, choices=(0, 1))
    e.add_argument("--beta", type=int, choices=(0, 1))
    common(e)

    ls = sub.add_parser("list", help="list registered checks")
    common(ls)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = {"verify": cmd_verify, "expand": cmd_expand, "list": cmd_list}[args.command]
    try:
        return handler(args)
    except UsageError as exc:
        print(f"qcap: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
