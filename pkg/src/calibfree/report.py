"""Structured documents for CLI output, and their text rendering.

Text output is rendered from the same document as ``--json`` so both
carry identical numbers.  Rationals never pass through floats.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any

from .verdicts import FullReport, ObstructionLedger, Reason, Verdict

SECTIONS = ("invariants", "gauss_classes", "intersections", "verdicts", "certificates")

COMMAND_SECTIONS = {
    "invariants": ("invariants",),
    "gauss": ("invariants", "gauss_classes", "intersections"),
    "verdicts": ("invariants", "verdicts"),
    "certificate": SECTIONS,
}


def _decimal(q: Fraction) -> str | None:
    d = q.denominator
    twos = fives = 0
    while d % 2 == 0:
        d //= 2
        twos += 1
    while d % 5 == 0:
        d //= 5
        fives += 1
    if d != 1:
        return None
    places = max(twos, fives)
    scaled = abs(q.numerator) * (10 ** places // q.denominator)
    sign = "-" if q < 0 else ""
    if places == 0:
        return f"{sign}{scaled}"
    digits = str(scaled).rjust(places + 1, "0")
    return f"{sign}{digits[:-places]}.{digits[-places:]}"


def rational_json(q: Fraction) -> dict[str, Any]:
    return {"num": q.numerator, "den": q.denominator, "str": str(q), "decimal": _decimal(q)}


def jsonable(obj: Any) -> Any:
    if isinstance(obj, Fraction):
        return rational_json(obj)
    if isinstance(obj, dict):
        return {k: jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    return obj


def reason_json(r: Reason) -> dict[str, Any]:
    return {
        "claim": r.claim,
        "citation": r.citation,
        "kind": r.kind,
        "operation": r.operation,
        "args": list(r.args),
        "values": jsonable(r.values),
        "supports": r.supports,
    }


def verdict_json(v: Verdict) -> dict[str, Any]:
    return {"question": v.question, "answer": v.answer,
            "reasons": [reason_json(r) for r in v.reasons]}


def ledger_json(led: ObstructionLedger) -> dict[str, Any]:
    stages = {
        s.name: {"group": s.group, "vanishes": s.vanishes, "status": s.status,
                 "justification": s.justification, "values": jsonable(s.values)}
        for s in led.stages
    }
    hur = None
    if led.hurewicz is not None:
        hur = {"provable": led.hurewicz.provable, "witness_prime": led.hurewicz.witness_prime,
               "steps": list(led.hurewicz.steps)}
    return {"conclusion": led.conclusion, "stages": stages, "hurewicz": hur,
            "notes": list(led.notes)}


def document(text: str, rep: FullReport, command: str = "certificate") -> dict[str, Any]:
    m = rep.manifold
    cc = rep.char_classes
    full = {
        "invariants": {
            "label": m.label, "chi": m.euler, "tau": m.signature, "spin": m.spin,
            "char_classes": {
                "w1_zero": cc.w1_zero, "w2_zero": cc.w2_zero, "w3_zero": cc.w3_zero,
                "w4_zero": cc.w4_zero, "euler_class_zero": cc.euler_class_zero,
                "p1": cc.p1_over_fundamental,
            },
        },
        "gauss_classes": {
            "g37": {"cp2": rational_json(rep.gauss_g37.coeff_cp2),
                    "cp2bar": rational_json(rep.gauss_g37.coeff_cp2bar)},
            "g48": {"g45": rational_json(rep.gauss_g48.coeff_g45),
                    "g15": rational_json(rep.gauss_g48.coeff_g15),
                    "g24": rational_json(rep.gauss_g48.coeff_g24)},
        },
        "intersections": jsonable(rep.intersections),
        "verdicts": {**{k: v.answer for k, v in rep.verdicts.items()},
                     "gauss_map": rep.ledger.conclusion},
        "certificates": {**{k: verdict_json(v) for k, v in rep.verdicts.items()},
                         "gauss_map": ledger_json(rep.ledger)},
    }
    keep = COMMAND_SECTIONS[command]
    doc: dict[str, Any] = {"input": text, "command": command}
    for s in SECTIONS:
        doc[s] = full[s] if s in keep else None
    doc["flags"] = list(rep.flags)
    return doc


def _fmt(v: Any) -> str:
    if isinstance(v, dict) and "num" in v and "den" in v:
        return v["str"]
    if isinstance(v, bool):
        return str(v).lower()
    if v is None:
        return "undetermined"
    return str(v)


def render_text(doc: dict[str, Any]) -> str:
    lines = [f"input: {doc['input']}"]
    inv = doc.get("invariants")
    if inv:
        lines.append(f"{inv['label']}: chi={inv['chi']} tau={inv['tau']} "
                     f"spin={_fmt(inv['spin'])}")
        cc = inv["char_classes"]
        lines.append("  " + " ".join(f"{k}={_fmt(v)}" for k, v in cc.items()))
    gc = doc.get("gauss_classes")
    if gc:
        g37, g48 = gc["g37"], gc["g48"]
        lines.append(f"G(3,7) class: ({_fmt(g37['cp2'])}, {_fmt(g37['cp2bar'])}) "
                     "in basis [CP2], [CP2bar]")
        lines.append(f"G(4,8) class: ({_fmt(g48['g45'])}, {_fmt(g48['g15'])}, "
                     f"{_fmt(g48['g24'])}) in basis [G(4,5)], [G(1,5)], [G(2,4)]")
    it = doc.get("intersections")
    if it:
        labels = {"ass": "ASS", "ass_tilde": "ASS~", "ass_degree8": "ASS (degree-8 route)",
                  "cay": "CAY", "cay_tilde": "CAY~"}
        lines.append("intersections: " + ", ".join(
            f"{labels.get(k, k)}={_fmt(v)}" for k, v in it.items()))
    vd = doc.get("verdicts")
    if vd:
        lines.append("verdicts:")
        lines.extend(f"  {k}: {v}" for k, v in vd.items())
    certs = doc.get("certificates")
    if certs:
        lines.append("certificates:")
        for key, c in certs.items():
            if key == "gauss_map":
                lines.append(f"  gauss_map: {c['conclusion']}")
                for name, s in c["stages"].items():
                    vals = " ".join(f"{k}={_fmt(v)}" for k, v in s["values"].items())
                    lines.append(f"    {name} in {s['group']}: {s['status']}; "
                                 f"{s['justification']}" + (f" [{vals}]" if vals else ""))
                if c["hurewicz"]:
                    h = c["hurewicz"]
                    lines.append(f"    hurewicz: provable={_fmt(h['provable'])} "
                                 f"witness_prime={_fmt(h['witness_prime'])}")
                    lines.extend(f"      {s}" for s in h["steps"])
                lines.extend(f"    {n}" for n in c["notes"])
                continue
            lines.append(f"  {c['question']}: {c['answer']}")
            for r in c["reasons"]:
                vals = " ".join(f"{k}={_fmt(v)}" for k, v in r["values"].items())
                tail = f" [{vals}]" if vals else ""
                lines.append(f"    - {r['claim']} ({r['citation']}; {r['kind']}){tail}")
    for f in doc.get("flags") or ():
        lines.append(f"FLAG: {f}")
    return "\n".join(lines)
