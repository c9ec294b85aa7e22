"""Command-line front end: claim checks and evaluation tables.

    pzcheck check <claim> [--mode symbolic|numeric|probe] [--s S]
                  [--max-n N] [--tol T] [--depth D] [--format text|structured]
    pzcheck table <selector> [--s LIST] [--n RANGE] [--eps RANGE]
                  [--depth D] [--tol T] [--format text|structured]

Exit status encodes run success (0) or usage error (2), never the
mathematical verdict: REFUTED is a result, not a failure, so scripted
pipelines can consume reports without error handling.  Structured
output is one UTF-8 JSON object with stable key order; identical
invocations produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass, field

from . import arith, dirichlet, radical, zeta
from .cyclotomic import cyclotomic as cyclotomic_poly
from .cyclotomic import height as cyclotomic_height

CLAIM_IDS = ("CLAIM2_3", "CLAIM4", "MIGOTTI_REMARK")
MODES = ("SYMBOLIC", "NUMERIC", "PROBE")
VERDICTS = ("REFUTED", "CONSISTENT", "INCONCLUSIVE")

# which modes make sense per claim; first entry is the default
_CLAIM_MODES = {
    "CLAIM2_3": ("SYMBOLIC", "NUMERIC", "PROBE"),
    "CLAIM4": ("NUMERIC",),
    "MIGOTTI_REMARK": ("SYMBOLIC",),
}

_DEFAULT_EPS = (1e-2, 1e-3, 1e-4, 1e-5)
_DEFAULT_MAX_N = 10**4
_MIGOTTI_DEFAULT_LIMIT = 200


class UsageError(ValueError):
    """Bad flags, ranges, or claim/mode combinations (exit status 2)."""


def _r(v: float) -> float:
    # report floats at 15 significant digits; stored == printed, so
    # structured reports round-trip exactly
    return float(f"{v:.15g}")


def _opt(options: dict, key: str, default):
    value = options.get(key)
    return default if value is None else value


@dataclass
class ClaimReport:
    """Structured verdict: claim, mode, verdict, evidence, parameters.

    A REFUTED verdict must be carried by at least one evidence fact
    that is exact or whose discrepancy exceeds its combined error
    bound; validate() enforces that before anything is emitted.
    """

    claim_id: str
    mode: str
    verdict: str
    parameters: dict = field(default_factory=dict)
    evidence: list = field(default_factory=list)

    def validate(self) -> "ClaimReport":
        if self.claim_id not in CLAIM_IDS:
            raise ValueError(f"unknown claim_id {self.claim_id!r}")
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.verdict not in VERDICTS:
            raise ValueError(f"unknown verdict {self.verdict!r}")
        if self.verdict == "REFUTED":
            supported = any(
                fact.get("exact") is True or fact.get("exceeds_bound") is True
                for fact in self.evidence
            )
            if not supported:
                raise ValueError(
                    "REFUTED verdict without an exact mismatch or a "
                    "discrepancy exceeding its combined error bound"
                )
        return self

    def to_dict(self) -> dict:
        return {
            "claim_id": self.claim_id,
            "mode": self.mode,
            "verdict": self.verdict,
            "parameters": self.parameters,
            "evidence": self.evidence,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "ClaimReport":
        return cls(
            claim_id=d["claim_id"],
            mode=d["mode"],
            verdict=d["verdict"],
            parameters=d["parameters"],
            evidence=d["evidence"],
        ).validate()


def emit_report(report: ClaimReport, fmt: str) -> str:
    if fmt == "structured":
        return json.dumps(report.to_dict(), indent=2)
    lines = [
        f"claim   : {report.claim_id} [{report.mode}]",
        f"verdict : {report.verdict}",
        "parameters: "
        + " ".join(f"{k}={_fmt_value(v)}" for k, v in report.parameters.items()),
        "evidence:",
    ]
    for fact in report.evidence:
        rest = " ".join(
            f"{k}={_fmt_value(v)}" for k, v in fact.items() if k != "name"
        )
        lines.append(f"  - {fact['name']}: {rest}")
    return "\n".join(lines)


def parse_report(text: str) -> ClaimReport:
    """Inverse of emit_report(..., "structured")."""
    return ClaimReport.from_dict(json.loads(text))


def _fmt_value(v) -> str:
    if isinstance(v, float):
        return f"{v:.15g}"
    if isinstance(v, (list, tuple)):
        return "[" + ",".join(_fmt_value(x) for x in v) + "]"
    return str(v)


# ---------------------------------------------------------------- check


def _eval_fact(name: str, ev: zeta.EvalResult, **extra) -> dict:
    fact = {"name": name, "value": _r(ev.value), "error_bound": _r(ev.error_bound)}
    fact.update(extra)
    return fact


def _check_claim23_symbolic(params: dict) -> ClaimReport:
    n = params["max_n"]
    table = arith.sieve(max(n, 2))
    lhs = dirichlet.claim_lhs_series(n)
    rhs = dirichlet.claim_rhs_series(n, table)
    hit = dirichlet.first_mismatch(lhs, rhs)
    if hit is None:
        return ClaimReport(
            claim_id="CLAIM2_3",
            mode="SYMBOLIC",
            verdict="CONSISTENT",
            parameters=params,
            evidence=[
                {"name": "coefficient_agreement", "truncation": n, "exact": True}
            ],
        )
    index, a, b = hit
    mismatches = [m for m in range(1, n + 1) if lhs[m] != rhs[m]]
    all_three = all(
        arith.factorize(m, table).omega >= 3 for m in mismatches
    )
    return ClaimReport(
        claim_id="CLAIM2_3",
        mode="SYMBOLIC",
        verdict="REFUTED",
        parameters=params,
        evidence=[
            {
                "name": "first_mismatch",
                "index": index,
                "lhs_coefficient": str(a),
                "rhs_coefficient": str(b),
                "exact": True,
            },
            {
                "name": "mismatch_scan",
                "truncation": n,
                "mismatch_count": len(mismatches),
                "all_mismatches_have_three_distinct_primes": all_three,
            },
        ],
    )


def _check_claim23_numeric(params: dict) -> ClaimReport:
    s, tol = params["s"], params["tol"]
    lhs = zeta.claim_lhs(s, tol)
    rhs = zeta.claim_rhs(s, tol)
    diff = abs(lhs.value - rhs.value)
    combined = lhs.error_bound + rhs.error_bound
    exceeds = diff > combined
    evidence = [
        _eval_fact("lhs", lhs),
        _eval_fact("rhs", rhs),
        {
            "name": "difference",
            "value": _r(diff),
            "combined_error_bound": _r(combined),
            "exceeds_bound": exceeds,
        },
    ]
    if exceeds:
        verdict = "REFUTED"
    else:
        verdict = "INCONCLUSIVE"
        evidence.append(
            {
                "name": "reason",
                "detail": "difference within combined error bounds at this s",
            }
        )
    return ClaimReport(
        claim_id="CLAIM2_3",
        mode="NUMERIC",
        verdict=verdict,
        parameters=params,
        evidence=evidence,
    )


def _check_claim23_probe(params: dict) -> ClaimReport:
    tol = params["tol"]
    eps_grid = params["eps_grid"]
    rows = zeta.singularity_probe(list(eps_grid), tol)
    evidence = []
    for row in rows:
        if row.lhs is None:
            evidence.append({"name": "probe_row", "eps": _r(row.eps), "error": row.note})
        else:
            evidence.append(
                {
                    "name": "probe_row",
                    "eps": _r(row.eps),
                    "lhs_value": _r(row.lhs.value),
                    "lhs_error_bound": _r(row.lhs.error_bound),
                    "rhs_value": _r(row.rhs.value),
                    "rhs_error_bound": _r(row.rhs.error_bound),
                    "note": row.note,
                }
            )
    good = [r for r in rows if r.lhs is not None and not r.note]
    if len(good) != len(rows):
        return ClaimReport(
            claim_id="CLAIM2_3",
            mode="PROBE",
            verdict="INCONCLUSIVE",
            parameters=params,
            evidence=evidence
            + [{"name": "reason", "detail": "precision failure on probe rows"}],
        )

    lhs_vals = [r.lhs.value for r in good]
    rhs_vals = [r.rhs.value for r in good]
    lhs_decreasing = all(a > b > 0.0 for a, b in zip(lhs_vals, lhs_vals[1:]))
    rhs_increasing = all(a < b for a, b in zip(rhs_vals, rhs_vals[1:]))
    fit = zeta.fit_log_quadratic(rows)
    last = good[-1]
    div_gap = abs(last.lhs.value - last.rhs.value)
    div_bound = last.lhs.error_bound + last.rhs.error_bound
    evidence += [
        {
            "name": "monotonicity",
            "lhs_decreasing_to_zero": lhs_decreasing,
            "rhs_increasing": rhs_increasing,
        },
        {
            "name": "log_quadratic_fit",
            "leading": _r(fit.leading),
            "linear": _r(fit.linear),
            "constant": _r(fit.constant),
            "relative_residual": _r(fit.rel_residual),
        },
        {
            "name": "divergence",
            "eps": _r(last.eps),
            "difference": _r(div_gap),
            "combined_error_bound": _r(div_bound),
            "exceeds_bound": div_gap > div_bound,
        },
    ]
    ok = (
        lhs_decreasing
        and rhs_increasing
        and fit.leading > 0.0
        and fit.rel_residual < 0.1
        and div_gap > div_bound
    )
    if not ok:
        evidence.append(
            {"name": "reason", "detail": "probe shape checks failed"}
        )
    return ClaimReport(
        claim_id="CLAIM2_3",
        mode="PROBE",
        verdict="REFUTED" if ok else "INCONCLUSIVE",
        parameters=params,
        evidence=evidence,
    )


def _check_claim4(params: dict) -> ClaimReport:
    s, depth, tol = params["s"], params["depth"], params["tol"]
    result = radical.claim4_check(s, depth, tol)
    combined = (
        result.radical_value.error_bound + result.prime_zeta_value.error_bound
    )
    exceeds = result.gap > combined

    # exact-series leg: squaring the radical identity must land on the
    # claimed identity's coefficient structure, sharing its mismatch
    n = 100
    table = arith.sieve(n)
    p = dirichlet.prime_zeta_series(n, table)
    delta = dirichlet.unit_series(n)
    one_minus_p = dirichlet.linear_combine([(1, delta), (-1, p)])
    squared_lhs = dirichlet.convolve(one_minus_p, one_minus_p)
    squared_rhs = dirichlet.linear_combine(
        [
            (1, dirichlet.claim_lhs_series(n)),  # 2/zeta(s)
            (-1, delta),
            (1, dirichlet.dilate(p, 2, n)),
        ]
    )
    squared_diff = dirichlet.linear_combine([(1, squared_lhs), (-1, squared_rhs)])
    claim_diff = dirichlet.linear_combine(
        [(1, dirichlet.claim_rhs_series(n, table)), (-1, dirichlet.claim_lhs_series(n))]
    )
    structure_ok = squared_diff == claim_diff
    shared = dirichlet.first_mismatch(
        dirichlet.claim_lhs_series(n), dirichlet.claim_rhs_series(n, table)
    )

    evidence = [
        _eval_fact("radical_side", result.radical_value, depth=depth),
        _eval_fact("prime_zeta_side", result.prime_zeta_value),
        {
            "name": "gap",
            "value": _r(result.gap),
            "combined_error_bound": _r(combined),
            "exceeds_bound": exceeds,
        },
        {
            "name": "squared_form_equals_claim_form",
            "truncation": n,
            "equal": structure_ok,
        },
        {
            "name": "series_mismatch",
            "index": shared[0],
            "lhs_coefficient": str(shared[1]),
            "rhs_coefficient": str(shared[2]),
            "exact": True,
        },
    ]
    verdict = "REFUTED" if exceeds else "INCONCLUSIVE"
    if not exceeds:
        evidence.append(
            {"name": "reason", "detail": "gap within combined error bounds"}
        )
    return ClaimReport(
        claim_id="CLAIM4",
        mode="NUMERIC",
        verdict=verdict,
        parameters=params,
        evidence=evidence,
    )


def _check_migotti(params: dict) -> ClaimReport:
    limit = params["max_n"]
    phi105 = cyclotomic_poly(105)
    c7, c41 = phi105.coefficient(7), phi105.coefficient(41)
    table = arith.sieve(max(limit, 2))
    eligible = []
    for n in range(1, limit + 1):
        odd_part_omega = sum(
            1 for prime, _ in arith.factorize(n, table).factors if prime != 2
        )
        if odd_part_omega <= 2:
            eligible.append(n)
    violations = [n for n in eligible if cyclotomic_height(n) != 1]
    ok = c7 == -2 and c41 == -2 and not violations
    evidence = [
        {
            "name": "phi_105_coefficients",
            "degree_7": c7,
            "degree_41": c41,
            "height": cyclotomic_height(105),
            "exact": True,
        },
        {
            "name": "migotti_bound",
            "scan_limit": limit,
            "eligible_count": len(eligible),
            "all_heights_one": not violations,
            "exact": True,
        },
    ]
    if violations:
        evidence.append({"name": "violations", "indices": violations[:10]})
    return ClaimReport(
        claim_id="MIGOTTI_REMARK",
        mode="SYMBOLIC",
        verdict="CONSISTENT" if ok else "REFUTED",
        parameters=params,
        evidence=evidence,
    )


def cmd_check(claim_id: str, mode: str | None, options: dict) -> ClaimReport:
    """Run one claim-check pipeline and return its validated report.

    options keys (all optional): s, max_n, tol, depth.  Unknown claim,
    unsupported claim/mode pairing, or out-of-domain parameter values
    raise UsageError; precision shortfalls inside a pipeline degrade
    the verdict to INCONCLUSIVE instead of raising.
    """
    claim_id = claim_id.upper()
    if claim_id not in _CLAIM_MODES:
        raise UsageError(f"unknown claim {claim_id!r}")
    allowed = _CLAIM_MODES[claim_id]
    mode = mode.upper() if mode else allowed[0]
    if mode not in allowed:
        raise UsageError(
            f"{claim_id} supports modes {'/'.join(allowed)}, not {mode}"
        )

    default_max_n = (
        _MIGOTTI_DEFAULT_LIMIT if claim_id == "MIGOTTI_REMARK" else _DEFAULT_MAX_N
    )
    params = {
        "claim": claim_id,
        "mode": mode,
        "s": _r(float(_opt(options, "s", 2.0))),
        "max_n": int(_opt(options, "max_n", default_max_n)),
        "tol": _r(float(_opt(options, "tol", 1e-12))),
        "depth": int(_opt(options, "depth", 20)),
    }
    if params["max_n"] < 1:
        raise UsageError(f"--max-n must be >= 1, got {params['max_n']}")
    if claim_id == "MIGOTTI_REMARK" and params["max_n"] > 10**4:
        raise UsageError("migotti scan limit capped at 10^4 (cyclotomic domain)")
    if claim_id == "CLAIM2_3" and mode == "PROBE":
        params["eps_grid"] = [_r(e) for e in _DEFAULT_EPS]

    try:
        if claim_id == "CLAIM2_3" and mode == "SYMBOLIC":
            report = _check_claim23_symbolic(params)
        elif claim_id == "CLAIM2_3" and mode == "NUMERIC":
            report = _check_claim23_numeric(params)
        elif claim_id == "CLAIM2_3" and mode == "PROBE":
            report = _check_claim23_probe(params)
        elif claim_id == "CLAIM4":
            report = _check_claim4(params)
        else:
            report = _check_migotti(params)
    except zeta.PrecisionError as exc:
        report = ClaimReport(
            claim_id=claim_id,
            mode=mode,
            verdict="INCONCLUSIVE",
            parameters=params,
            evidence=[{"name": "reason", "detail": str(exc)}],
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    return report.validate()


# ---------------------------------------------------------------- table


def _parse_float_list(spec: str, flag: str) -> list[float]:
    try:
        values = [float(part) for part in spec.split(",") if part.strip()]
    except ValueError as exc:
        raise UsageError(f"bad {flag} list {spec!r}") from exc
    if not values:
        raise UsageError(f"empty {flag} list")
    return values


def _parse_int_range(spec: str, flag: str) -> list[int]:
    try:
        if ".." in spec:
            lo_text, hi_text = spec.split("..", 1)
            lo, hi = int(lo_text), int(hi_text)
            if hi < lo:
                raise UsageError(f"{flag} range {spec!r} is reversed")
            return list(range(lo, hi + 1))
        return [int(part) for part in spec.split(",") if part.strip()]
    except ValueError as exc:
        raise UsageError(f"bad {flag} range {spec!r}") from exc


def _parse_eps_range(spec: str) -> list[float]:
    # "1e-2..1e-5" walks down a decade at a time; commas list explicitly
    try:
        if ".." in spec:
            start_text, end_text = spec.split("..", 1)
            start, end = float(start_text), float(end_text)
            hi = round(math.log10(start))
            lo = round(math.log10(end))
            if not (
                math.isclose(start, 10.0**hi)
                and math.isclose(end, 10.0**lo)
                and lo <= hi
            ):
                raise UsageError(
                    f"--eps range {spec!r} must run from a larger to a smaller power of 10"
                )
            return [10.0**k for k in range(hi, lo - 1, -1)]
        return [float(part) for part in spec.split(",") if part.strip()]
    except ValueError as exc:
        raise UsageError(f"bad --eps range {spec!r}") from exc


def _text_table(headers: list[str], rows: list[list[str]]) -> str:
    widths = [
        max(len(h), *(len(r[i]) for r in rows)) if rows else len(h)
        for i, h in enumerate(headers)
    ]
    def render(cells):
        return "  ".join(c.ljust(w) for c, w in zip(cells, widths)).rstrip()
    return "\n".join([render(headers)] + [render(r) for r in rows])


def _f(v: float | None) -> str:
    if v is None:
        return "-"
    if math.isinf(v):
        return "inf"
    return f"{v:.15g}"


def cmd_table(selector: str, options: dict) -> str:
    """Build one deterministic table (text or structured)."""
    fmt = _opt(options, "format", "text")
    tol = float(_opt(options, "tol", 1e-12))
    depth = int(_opt(options, "depth", 20))
    params: dict = {"tol": _r(tol)}
    headers: list[str]
    text_rows: list[list[str]] = []
    json_rows: list[dict] = []

    if selector in ("zeta", "prime-zeta"):
        s_values = _parse_float_list(options.get("s") or "2,3,4", "--s")
        evaluate = zeta.zeta_real if selector == "zeta" else zeta.prime_zeta
        params["s"] = [_r(s) for s in s_values]
        headers = ["s", "value", "error_bound"]
        for s in s_values:
            try:
                ev = evaluate(s, tol)
            except ValueError as exc:
                raise UsageError(str(exc)) from exc
            text_rows.append([_f(s), _f(ev.value), _f(ev.error_bound)])
            json_rows.append(
                {"s": _r(s), "value": _r(ev.value), "error_bound": _r(ev.error_bound)}
            )

    elif selector == "cyclotomic-height":
        n_values = _parse_int_range(options.get("n") or "1..120", "--n")
        params["n"] = [n_values[0], n_values[-1]] if n_values else []
        headers = ["n", "degree", "height"]
        for n in n_values:
            try:
                poly = cyclotomic_poly(n)
            except ValueError as exc:
                raise UsageError(str(exc)) from exc
            h = max(abs(c) for c in poly.coeffs)
            text_rows.append([str(n), str(poly.degree), str(h)])
            json_rows.append({"n": n, "degree": poly.degree, "height": h})

    elif selector == "probe":
        eps_grid = _parse_eps_range(options.get("eps") or "1e-2..1e-5")
        params["eps"] = [_r(e) for e in eps_grid]
        try:
            rows = zeta.singularity_probe(eps_grid, tol)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        headers = ["eps", "lhs", "lhs_bound", "rhs", "rhs_bound", "note"]
        for row in rows:
            if row.lhs is None:
                text_rows.append([_f(row.eps), "-", "-", "-", "-", row.note])
                json_rows.append({"eps": _r(row.eps), "error": row.note})
            else:
                text_rows.append(
                    [
                        _f(row.eps),
                        _f(row.lhs.value),
                        _f(row.lhs.error_bound),
                        _f(row.rhs.value),
                        _f(row.rhs.error_bound),
                        row.note,
                    ]
                )
                json_rows.append(
                    {
                        "eps": _r(row.eps),
                        "lhs": _r(row.lhs.value),
                        "lhs_error_bound": _r(row.lhs.error_bound),
                        "rhs": _r(row.rhs.value),
                        "rhs_error_bound": _r(row.rhs.error_bound),
                        "note": row.note,
                    }
                )

    elif selector == "radical":
        s_values = _parse_float_list(options.get("s") or "2", "--s")
        if len(s_values) != 1:
            raise UsageError("radical table takes exactly one --s value")
        s = s_values[0]
        params.update({"s": _r(s), "depth": depth})
        try:
            report = radical.convergence_report(s, depth)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        headers = ["n", "zero_tail_gap", "one_tail_gap"]
        for n, gap0, gap1 in report:
            text_rows.append([str(n), _f(gap0), _f(gap1)])
            json_rows.append(
                {
                    "n": n,
                    "zero_tail_gap": None if math.isinf(gap0) else _r(gap0),
                    "one_tail_gap": None if math.isinf(gap1) else _r(gap1),
                }
            )

    elif selector == "radical-domain":
        s_values = _parse_float_list(
            options.get("s") or "1.05,1.1,1.2,1.3,1.4,1.5,1.6,1.8,2,3", "--s"
        )
        params.update({"s": [_r(s) for s in s_values], "depth": depth})
        for s in s_values:
            if not s > 1.0:
                raise UsageError(f"radical-domain needs s > 1, got {s}")
        rows = radical.domain_scan(s_values, depth, radical.TailMode.ONE_TAIL)
        headers = ["s", "all_radicands_positive", "failing_level"]
        for s, ok, level in rows:
            text_rows.append([_f(s), "yes" if ok else "no", "-" if ok else str(level)])
            json_rows.append(
                {"s": _r(s), "all_radicands_positive": ok, "failing_level": level}
            )
        valid = [s for s, ok, _ in rows if ok]
        summary = (
            f"smallest grid s with all ONE_TAIL radicands positive: {_f(min(valid))}"
            if valid
            else "no grid s kept all ONE_TAIL radicands positive"
        )
        if fmt == "structured":
            return json.dumps(
                {
                    "table": selector,
                    "parameters": params,
                    "rows": json_rows,
                    "summary": summary,
                },
                indent=2,
            )
        return _text_table(headers, text_rows) + "\n" + summary

    else:
        raise UsageError(f"unknown table selector {selector!r}")

    if fmt == "structured":
        return json.dumps(
            {"table": selector, "parameters": params, "rows": json_rows}, indent=2
        )
    return _text_table(headers, text_rows)


# ----------------------------------------------------------------- main


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pzcheck",
        description="Falsification checks for claimed prime-zeta identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="run a claim check and print its report")
    check.add_argument(
        "claim", choices=["claim2_3", "claim4", "migotti_remark"], help="claim to check"
    )
    check.add_argument("--mode", choices=["symbolic", "numeric", "probe"])
    check.add_argument("--s", type=float, help="evaluation point (default 2)")
    check.add_argument(
        "--max-n", type=int, dest="max_n",
        help="series truncation / scan limit (default 10^4; migotti 200)",
    )
    check.add_argument("--tol", type=float, help="error-bound target (default 1e-12)")
    check.add_argument("--depth", type=int, help="radical depth (default 20)")
    check.add_argument("--format", choices=["text", "structured"], default="text")

    table = sub.add_parser("table", help="print an evaluation table")
    table.add_argument(
        "selector",
        choices=[
            "zeta",
            "prime-zeta",
            "cyclotomic-height",
            "probe",
            "radical",
            "radical-domain",
        ],
    )
    table.add_argument("--s", help="comma-separated s values")
    table.add_argument("--n", help="n range, e.g. 1..120 or 3,5,105")
    table.add_argument("--eps", help="eps grid, e.g. 1e-2..1e-5")
    table.add_argument("--depth", type=int, help="radical depth (default 20)")
    table.add_argument("--tol", type=float, help="error-bound target (default 1e-12)")
    table.add_argument("--format", choices=["text", "structured"], default="text")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    options = {k: v for k, v in vars(args).items() if k not in ("command",)}
    try:
        if args.command == "check":
            report = cmd_check(args.claim, args.mode, options)
            print(emit_report(report, args.format))
        else:
            print(cmd_table(args.selector, options))
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
