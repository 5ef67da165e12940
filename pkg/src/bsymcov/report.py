"""Analysis reports: a JSON-stable dict plus a text rendering.

Every top-level key is always present.  Sections that were not requested
carry ``{"status": "skipped"}``; sections that ran out of budget carry
``{"status": "budget_exceeded"}``.  Coordinates are 0-based in the dict and
1-based in the text rendering.
"""

from __future__ import annotations

import json
from typing import Any

from . import __version__, config
from .bounds import bound_report, covering_data, perfect_check
from .bsymbol import min_distance_b, weight_profile_b
from .config import BudgetExceeded
from .linalg import LinearCode
from .listdecode import list_size_at_radius

SECTIONS = ("invariants", "weight_profiles", "bounds", "perfect", "list_decoding")


def code_summary(C: LinearCode) -> dict[str, Any]:
    F = C.field
    return {
        "name": C.name,
        "q": F.q,
        "p": F.p,
        "e": F.e,
        "modulus": list(F.modulus) if F.modulus else None,
        "n": C.n,
        "k": C.k,
        "generator": C.G.tolist(),
    }


def _section(fn):
    try:
        out = fn()
    except BudgetExceeded as e:
        return {"status": "budget_exceeded", "reason": str(e)}
    out["status"] = "ok"
    return out


def _invariants(C: LinearCode, b: int) -> dict[str, Any]:
    cov_h = covering_data(C, 1)
    cov_b = cov_h if b == 1 else covering_data(C, b)
    return {
        "d_H": min_distance_b(C, 1),
        "d_b": min_distance_b(C, b),
        "R_H": cov_h.radius,
        "R_b": cov_b.radius,
        "worst_coset_leader_H": cov_h.leader,
        "worst_coset_leader_b": cov_b.leader,
    }


def _profiles(C: LinearCode, b: int) -> dict[str, Any]:
    h = weight_profile_b(C, 1).distribution
    wb = weight_profile_b(C, b).distribution
    return {
        "hamming": {str(w): c for w, c in h.items()},
        "b": {str(w): c for w, c in wb.items()},
        "nonzero_hamming_weights": sorted(h),
        "nonzero_b_weights": sorted(wb),
    }


def build_report(
    C: LinearCode,
    b: int,
    *,
    sections=SECTIONS,
    list_radius: int | None = None,
    supercode: LinearCode | None = None,
) -> dict[str, Any]:
    rep: dict[str, Any] = {
        "tool": {"name": "bsymcov", "version": __version__},
        "budget_log2": config.get_budget(),
        "code": code_summary(C),
        "b": b,
    }
    builders = {
        "invariants": lambda: _invariants(C, b),
        "weight_profiles": lambda: _profiles(C, b),
        "bounds": lambda: bound_report(C, b).to_dict(),
        "perfect": lambda: perfect_check(C, b, supercode=supercode).to_dict(),
        "list_decoding": lambda: list_size_at_radius(C, b, list_radius).to_dict(),
    }
    for name in SECTIONS:
        if name not in sections or (name == "list_decoding" and list_radius is None):
            rep[name] = {"status": "skipped"}
        else:
            rep[name] = _section(builders[name])
    return rep


def to_json(rep: dict[str, Any]) -> str:
    return json.dumps(rep, sort_keys=True, indent=2) + "\n"


def _support(v) -> str:
    pos = [str(i + 1) for i, x in enumerate(v) if x]
    return "{" + ", ".join(pos) + "}"


def render_text(rep: dict[str, Any]) -> str:
    c = rep["code"]
    b = rep["b"]
    out = [f"code {c['name'] or '(unnamed)'}: [{c['n']}, {c['k']}]_{c['q']}   b = {b}"]
    inv = rep["invariants"]
    if inv["status"] == "ok":
        out.append(f"  d_H = {inv['d_H']}   d_{b} = {inv['d_b']}   R_H = {inv['R_H']}   R_{b} = {inv['R_b']}")
        out.append(f"  worst coset leader (b-metric): {inv['worst_coset_leader_b']}"
                   f"  support {_support(inv['worst_coset_leader_b'])}")
    elif inv["status"] != "skipped":
        out.append(f"  invariants: {inv['status']}")
    wp = rep["weight_profiles"]
    if wp["status"] == "ok":
        out.append(f"  nonzero Hamming weights: {wp['nonzero_hamming_weights']}")
        out.append(f"  nonzero {b}-weights: {wp['nonzero_b_weights']}   distribution {wp['b']}")
    bd = rep["bounds"]
    if bd["status"] == "ok":
        out.append("  bounds:")
        for it in bd["items"]:
            flag = " (tight)" if it["tight"] else ""
            vals = "" if it["value"] is None else f"  value {it['value']} vs bound {it['bound']}"
            note = f"  [{it['note']}]" if it["note"] else ""
            out.append(f"    {it['name']:<18} {it['status']}{flag}{vals}{note}")
    elif bd["status"] != "skipped":
        out.append(f"  bounds: {bd['status']}")
    pf = rep["perfect"]
    if pf["status"] == "ok":
        verdict = {True: "perfect", False: "not perfect", None: "undecided"}[pf["is_perfect"]]
        out.append(f"  perfectness: {verdict} (rule: {pf['deciding_rule']}) {pf['detail']}".rstrip())
    elif pf["status"] != "skipped":
        out.append(f"  perfectness: {pf['status']}")
    ld = rep["list_decoding"]
    if ld["status"] == "ok":
        out.append(f"  list size at radius {ld['radius']}: L_max = {ld['L_max']}"
                   f"  centre {ld['witness']} support {_support(ld['witness'])}")
    elif ld["status"] != "skipped":
        out.append(f"  list decoding: {ld['status']}")
    return "\n".join(out) + "\n"
