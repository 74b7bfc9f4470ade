"""Structured analysis reports and their text rendering.

Every report is a plain ``dict`` built in a fixed key order, so
``json.dumps`` of it is byte-stable.  The text form is computed from that
dict alone and never looks at the algebra again.
"""

from __future__ import annotations

import json
import math

from .algebra import FiniteAlgebra
from .congruence import (
    QuotientAlgebra,
    check_prime_iff_weakly_linear,
    check_strongly_maximal_iff_locally_finite,
    element_order,
    is_locally_finite,
)
from .gates import SUBSET_GATE, within
from .search import SearchReport
from .structure import (
    classify,
    enumerate_deductive_systems,
    enumerate_filters,
    is_quasi_linear,
    is_weakly_linear,
)
from .subsets import Subset, Verdict

REPORT_VERSION = 1


def _verdict(v: Verdict) -> dict:
    return {"holds": bool(v), "witness": list(v.witness) if v.witness else None}


def _header(command: str, name: str, A: FiniteAlgebra) -> dict:
    return {
        "report_version": REPORT_VERSION,
        "command": command,
        "algebra": {
            "name": name,
            "n": A.n,
            "elements": list(A.names),
            "zero": A.name(A.zero),
            "one": A.name(A.one),
        },
    }


def check_record(A: FiniteAlgebra, name: str) -> dict:
    rec = _header("check", name, A)
    rec["axioms"] = A.axioms.to_dict()
    return rec


def _orders(A: FiniteAlgebra) -> dict:
    out = {}
    for x in range(A.n):
        o = element_order(A, x)
        out[A.name(x)] = None if o == math.inf else int(o)
    return out


def analyze_record(A: FiniteAlgebra, name: str, override: bool | None = None) -> dict:
    rec = _header("analyze", name, A)
    rec["axioms"] = A.axioms.to_dict()
    if not A.is_qw:
        rec["skipped"] = "not a QW algebra"
        return rec
    rec["weakly_linear"] = _verdict(is_weakly_linear(A))
    rec["quasi_linear"] = _verdict(is_quasi_linear(A))
    rec["locally_finite"] = {"holds": is_locally_finite(A), "orders": _orders(A)}
    if not within(A.n, SUBSET_GATE, override):
        rec["skipped"] = f"subset enumeration above n={SUBSET_GATE}"
        return rec
    filters = enumerate_filters(A, override)
    systems = enumerate_deductive_systems(A, override)
    rec["filters"] = [classify(A, F).to_dict() for F in filters]
    rec["deductive_systems"] = [F.names(A) for F in systems]
    checks = []
    for F in systems:
        checks.append(check_strongly_maximal_iff_locally_finite(A, F).to_dict())
        checks.append(check_prime_iff_weakly_linear(A, F).to_dict())
    rec["equivalence_checks"] = checks
    return rec


def quotient_record(A: FiniteAlgebra, name: str, F: Subset, Q: QuotientAlgebra, document: str) -> dict:
    rec = _header("quotient", name, A)
    rec["ds"] = F.names(A)
    rec["classes"] = [
        {"name": Q.algebra.name(c), "members": list(ms)} for c, ms in enumerate(Q.members)
    ]
    rec["quotient_axioms"] = Q.algebra.axioms.to_dict()
    rec["document"] = document
    return rec


def search_record(rep: SearchReport, files: list[str]) -> dict:
    return {
        "report_version": REPORT_VERSION,
        "command": "search",
        "order": rep.order,
        "count": rep.count,
        "complete": rep.complete,
        "stats": rep.stats.to_dict(),
        "files": files,
    }


def to_json(rec: dict) -> str:
    return json.dumps(rec, indent=2, ensure_ascii=False) + "\n"


# -- text rendering ---------------------------------------------------------------


def _set(names) -> str:
    return "{" + ", ".join(names) + "}"


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


def _axiom_lines(ax: dict) -> list[str]:
    lines = []
    for tag, status in ax["status"].items():
        line = f"  {tag:<14} {status}"
        if tag in ax["witnesses"]:
            line += "  at (" + ", ".join(ax["witnesses"][tag]) + ")"
        lines.append(line)
    lines.append(f"  commutative    {_yn(ax['is_commutative'])}")
    if ax["is_qw"]:
        lines.append(f"  wajsberg       {_yn(ax['is_wajsberg'])}")
    return lines


def _verdict_line(label: str, v: dict) -> str:
    s = f"{label}: {_yn(v['holds'])}"
    if v["witness"]:
        s += "  (" + ", ".join(v["witness"]) + ")"
    return s


def render_text(rec: dict) -> str:
    cmd = rec["command"]
    if cmd == "search":
        return _render_search(rec)
    alg = rec["algebra"]
    lines = [f"algebra {alg['name']}  (n = {alg['n']}, zero {alg['zero']}, one {alg['one']})"]
    if cmd == "quotient":
        lines.append(f"quotient by {_set(rec['ds'])}")
        for c in rec["classes"]:
            lines.append(f"  {c['name']} = {_set(c['members'])}")
        lines.append(f"quotient is QW: {_yn(rec['quotient_axioms']['is_qw'])}")
        return "\n".join(lines) + "\n"
    lines.append("axioms")
    lines.extend(_axiom_lines(rec["axioms"]))
    if cmd == "check":
        lines.append("QW algebra: " + _yn(rec["axioms"]["is_qw"]))
        return "\n".join(lines) + "\n"
    if "weakly_linear" in rec:
        lines.append(_verdict_line("weakly linear", rec["weakly_linear"]))
        lines.append(_verdict_line("quasi-linear", rec["quasi_linear"]))
        lf = rec["locally_finite"]
        orders = ", ".join(f"{k}:{'inf' if v is None else v}" for k, v in lf["orders"].items())
        lines.append(f"locally finite: {_yn(lf['holds'])}  orders {orders}")
    if "filters" in rec:
        lines.append(f"filters ({len(rec['filters'])})")
        for f in rec["filters"]:
            tags = [
                tag
                for tag, key in (
                    ("ds", "is_deductive_system"),
                    ("proper", "is_proper"),
                    ("maximal", "is_maximal_filter"),
                    ("maximal-ds", "is_maximal_ds"),
                    ("strongly-maximal", "is_strongly_maximal"),
                    ("prime", "is_prime"),
                    ("commutative", "is_commutative_filter"),
                )
                if f[key]
            ]
            lines.append(f"  {_set(f['members'])}  " + " ".join(tags))
        lines.append(f"deductive systems ({len(rec['deductive_systems'])})")
        for d in rec["deductive_systems"]:
            lines.append(f"  {_set(d)}")
        lines.append("equivalence checks")
        for c in rec["equivalence_checks"]:
            status = "agree" if c["agree"] else "DISAGREE"
            lines.append(
                f"  {c['name']} on {_set(c['evidence']['ds'])}: {_yn(c['lhs'])} / {_yn(c['rhs'])}  {status}"
            )
    if "skipped" in rec:
        lines.append(f"skipped: {rec['skipped']}")
    return "\n".join(lines) + "\n"


def _render_search(rec: dict) -> str:
    st = rec["stats"]
    lines = [
        f"order {rec['order']}: {rec['count']} model(s)" + ("" if rec["complete"] else " (limit reached)"),
        f"nodes {st['nodes']}, prunes {st['prunes']}, isomorph rejections {st['isomorph_rejections']}",
    ]
    lines.extend(f"  {f}" for f in rec["files"])
    return "\n".join(lines) + "\n"
