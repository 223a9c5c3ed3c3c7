# ks2/report.py
"""
Dispatch to evaluators and build / render KsReport records.
"""

from __future__ import annotations

import json
import logging
import time
from dataclasses import dataclass
from decimal import Decimal, localcontext
from itertools import combinations
from typing import Iterable, List, Optional

from ks2.asymptotic import scale_statistic, smirnov_tail
from ks2.corridor import CorridorSpec
from ks2.errors import ResourceLimit
from ks2.exact_oracle import ExactP, brute_force_p2, p2_classical_exact, to_double
from ks2.exact_stable import p2_complement_float, p2_stable, p2_stable_full
from ks2.schemas import KsReport, Method, MethodDelta

logger = logging.getLogger(__name__)

HUMAN_DIGITS = 6


@dataclass(frozen=True)
class Evaluation:
    p: float
    exact: Optional[ExactP] = None


def evaluate(spec: CorridorSpec, method: Method) -> Evaluation:
    method = Method(method)
    if method is Method.STABLE:
        return Evaluation(p=p2_stable(spec))
    if method is Method.FULL:
        return Evaluation(p=p2_stable_full(spec))
    if method is Method.COMPLEMENT:
        return Evaluation(p=p2_complement_float(spec))
    if method is Method.ASYMPTOTIC:
        return Evaluation(p=smirnov_tail(scale_statistic(spec)))
    if method is Method.EXACT_RATIONAL:
        exact = p2_classical_exact(spec)
    else:
        exact = brute_force_p2(spec)
    return Evaluation(p=to_double(exact), exact=exact)


def render_d(c: int, m: int, n: int) -> str:
    with localcontext() as ctx:
        ctx.prec = 17
        return str(Decimal(c) / Decimal(m * n))


def build_report(spec: CorridorSpec, method: Method, *, ties_detected: bool = False) -> KsReport:
    started = time.perf_counter()
    ev = evaluate(spec, method)
    elapsed_ms = (time.perf_counter() - started) * 1000

    logger.info(
        "p-value evaluated",
        extra={"m": spec.m, "n": spec.n, "c": spec.c, "method": Method(method).value, "elapsed_ms": round(elapsed_ms, 3)},
    )
    return KsReport(
        m=spec.m,
        n=spec.n,
        c=spec.c,
        d=render_d(spec.c, spec.m, spec.n),
        method=method,
        p_value=repr(ev.p),
        p_exact=str(ev.exact) if ev.exact is not None else None,
        ties_detected=ties_detected,
        elapsed_ms=round(elapsed_ms, 3),
    )


@dataclass(frozen=True)
class SkippedMethod:
    method: Method
    reason: str


def build_all_reports(spec: CorridorSpec) -> tuple[List[KsReport], List[SkippedMethod]]:
    """Every method in turn; methods refused by a cost guard are skipped, not fatal."""
    reports: List[KsReport] = []
    skipped: List[SkippedMethod] = []
    for method in Method:
        try:
            reports.append(build_report(spec, method))
        except ResourceLimit as exc:
            logger.warning("Method skipped by cost guard", extra={"method": method.value, "reason": str(exc)})
            skipped.append(SkippedMethod(method=method, reason=str(exc)))
    return reports, skipped


def method_deltas(reports: Iterable[KsReport]) -> List[MethodDelta]:
    out: List[MethodDelta] = []
    for ra, rb in combinations(list(reports), 2):
        pa, pb = float(ra.p_value), float(rb.p_value)
        diff = abs(pa - pb)
        scale = max(abs(pa), abs(pb))
        out.append(
            MethodDelta(a=ra.method, b=rb.method, abs_delta=diff, rel_delta=(diff / scale) if scale > 0 else None)
        )
    return out


# =========================
# Rendering
# =========================
def render_json(report: KsReport) -> str:
    return report.model_dump_json()


def render_all_json(reports: List[KsReport], skipped: List[SkippedMethod]) -> str:
    payload = {
        "reports": [r.model_dump(mode="json") for r in reports],
        "deltas": [d.model_dump(mode="json") for d in method_deltas(reports)],
        "skipped": [{"method": s.method.value, "reason": s.reason} for s in skipped],
    }
    stable = next((r for r in reports if r.method is Method.STABLE), None)
    if stable is not None:
        payload["one_minus_p_stable"] = repr(1.0 - float(stable.p_value))
    return json.dumps(payload)


def _fmt_p(p: str) -> str:
    return f"{float(p):.{HUMAN_DIGITS}g}"


def render_human(report: KsReport) -> str:
    lines = [
        f"m            {report.m}",
        f"n            {report.n}",
        f"c            {report.c}",
        f"D            {report.d}",
        f"method       {report.method.value}",
        f"p-value      {_fmt_p(report.p_value)}",
    ]
    if report.p_exact is not None:
        lines.append(f"p (exact)    {report.p_exact}")
    lines.append(f"ties         {'yes (resolved at ECDF jumps)' if report.ties_detected else 'no'}")
    lines.append(f"elapsed_ms   {report.elapsed_ms:.3f}")
    return "\n".join(lines)


def render_all_human(reports: List[KsReport], skipped: List[SkippedMethod]) -> str:
    if not reports:
        return "no method produced a value"
    head = reports[0]
    lines = [f"m={head.m} n={head.n} c={head.c} D={head.d}", ""]
    for r in reports:
        exact = f"  ({r.p_exact})" if r.p_exact is not None and len(r.p_exact) <= 60 else ""
        lines.append(f"{r.method.value:<15} {_fmt_p(r.p_value):<14} {r.elapsed_ms:>10.3f} ms{exact}")
    for s in skipped:
        lines.append(f"{s.method.value:<15} skipped: {s.reason}")

    deltas = method_deltas(reports)
    if deltas:
        lines.append("")
        for d in deltas:
            rel = f"{d.rel_delta:.3g}" if d.rel_delta is not None else "-"
            lines.append(f"{d.a.value} vs {d.b.value}: abs={d.abs_delta:.3g} rel={rel}")

    stable = next((r for r in reports if r.method is Method.STABLE), None)
    if stable is not None:
        lines.append("")
        lines.append(f"1 - p (stable, double): {1.0 - float(stable.p_value)!r}")
    return "\n".join(lines)
