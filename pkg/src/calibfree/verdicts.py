"""Decision procedures with certificates.

Each :class:`Verdict` carries an ordered list of :class:`Reason` objects.
A computed reason records the operation name and arguments that produced
its values, so :func:`replay` can re-run it; external reasons cite an
imported theorem and carry no computation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable

from . import grassmann as gr
from .algebra import FgAbelianGroup, HurewiczReport, hurewicz_injectivity
from .manifolds import CharClassStatus, ManifoldClass, char_class_status

COMPUTED = "computed"
EXTERNAL = "external"

# pi_0 .. pi_4 of G(3,7)+.
G37_HOMOTOPY: tuple[FgAbelianGroup, ...] = (
    FgAbelianGroup.trivial(),
    FgAbelianGroup.trivial(),
    FgAbelianGroup.cyclic(2),
    FgAbelianGroup.trivial(),
    FgAbelianGroup(2),
)
G37_HOMOTOPY_SOURCE = "homotopy groups of G(3,7)+: pi_0..pi_3 = 0, 0, Z2, 0 and pi_4 = Z + Z"


def _char_status_values(chi: int, tau: int, spin: bool) -> dict[str, Any]:
    s = char_class_status(ManifoldClass("replay", chi, tau, spin, lax=True))
    return {
        "w1_zero": s.w1_zero,
        "w2_zero": s.w2_zero,
        "w3_zero": s.w3_zero,
        "w4_zero": s.w4_zero,
        "euler_class_zero": s.euler_class_zero,
        "p1": s.p1_over_fundamental,
    }


def _gauss37_values(chi: int, tau: int) -> dict[str, Any]:
    x = gr.gauss_class_g37(chi, tau)
    return {"cp2": x.coeff_cp2, "cp2bar": x.coeff_cp2bar}


def _hurewicz_values() -> dict[str, Any]:
    r = hurewicz_injectivity(G37_HOMOTOPY, 4)
    return {"provable": r.provable, "witness_prime": r.witness_prime}


OPERATIONS: dict[str, Callable[..., dict[str, Any]]] = {
    "vanishing_system_g37": lambda chi, tau: {
        "i_ass": gr.intersect_ass(chi, tau),
        "i_ass_tilde": gr.intersect_ass_tilde(chi, tau),
    },
    "vanishing_system_g48": lambda chi, tau: {
        "i_cay": gr.intersect_cay(chi, tau),
        "i_cay_tilde": gr.intersect_cay_tilde(chi, tau),
    },
    "euler_characteristic": lambda chi: {"chi": chi},
    "char_class_status": _char_status_values,
    "gauss_class_g37": _gauss37_values,
    "hurewicz_injectivity_g37": _hurewicz_values,
}


@dataclass(frozen=True)
class Reason:
    """One step of a certificate.

    ``supports`` is True/False for a decisive step and None for a purely
    informational one (external citations, cross-references).
    """

    claim: str
    citation: str
    kind: str = COMPUTED
    operation: str | None = None
    args: tuple = ()
    values: dict[str, Any] = field(default_factory=dict)
    supports: bool | None = None


def replay(reason: Reason) -> bool:
    """Re-run a computed reason's operation and compare its recorded values."""
    if reason.operation is None:
        return reason.kind == EXTERNAL
    fresh = OPERATIONS[reason.operation](*reason.args)
    return all(fresh[k] == v for k, v in reason.values.items())


@dataclass(frozen=True)
class Verdict:
    question: str
    answer: str
    reasons: tuple[Reason, ...]

    def __post_init__(self):
        if self.answer not in ("yes", "no"):
            raise ValueError(f"answer must be 'yes' or 'no', got {self.answer!r}")
        decisive = [r.supports for r in self.reasons if r.supports is not None]
        if not decisive:
            raise ValueError("a verdict needs at least one decisive reason")
        if (self.answer == "yes") != all(decisive):
            raise ValueError("answer disagrees with its reasons")

    @property
    def yes(self) -> bool:
        return self.answer == "yes"

    def __str__(self) -> str:
        lines = [f"{self.question}: {self.answer}"]
        for r in self.reasons:
            tag = f"[{r.citation}; {r.kind}]"
            lines.append(f"  - {r.claim} {tag}")
        return "\n".join(lines)


def _verdict(question: str, reasons: list[Reason]) -> Verdict:
    ok = all(r.supports for r in reasons if r.supports is not None)
    return Verdict(question, "yes" if ok else "no", tuple(reasons))


def coassociative_free_immersion(m: ManifoldClass) -> Verdict:
    chi, tau = m.euler, m.signature
    v = gr.vanishing_system_g37(chi, tau)
    reasons = [Reason(
        claim=(f"Gauss image meets [ASS] in {v.i_ass} = (chi - 3 tau)/2 and [ASS~] in "
               f"{v.i_ass_tilde} = -(chi + 3 tau)/2; a coassociative-free immersion needs "
               "both to vanish, which happens iff chi = tau = 0"),
        citation="associative intersection vanishing",
        operation="vanishing_system_g37", args=(chi, tau),
        values={"i_ass": v.i_ass, "i_ass_tilde": v.i_ass_tilde},
        supports=v.forces_zero,
    )]
    if v.forces_zero:
        reasons.append(Reason(
            claim="conversely chi = tau = 0 suffices for a coassociative-free immersion "
                  "into R^7 (h-principle)",
            citation="h-principle converse", kind=EXTERNAL,
        ))
    return _verdict("coassociative-free immersion into R^7", reasons)


def cayley_free_embedding(m: ManifoldClass) -> Verdict:
    chi, tau = m.euler, m.signature
    v = gr.vanishing_system_g48(chi, tau)
    reasons = [Reason(
        claim=(f"embedded Gauss image meets [CAY] in {v.i_cay} = -(chi - 3 tau)/2 and "
               f"[CAY~] in {v.i_cay_tilde} = (chi + 3 tau)/2; Cayley-freeness needs both zero"),
        citation="Cayley intersection vanishing",
        operation="vanishing_system_g48", args=(chi, tau),
        values={"i_cay": v.i_cay, "i_cay_tilde": v.i_cay_tilde},
        supports=v.forces_zero,
    )]
    if v.forces_zero:
        reasons.append(Reason(
            claim="conversely chi = tau = 0 suffices for a Cayley-free embedding into R^8 "
                  "(h-principle)",
            citation="h-principle converse", kind=EXTERNAL,
        ))
    return _verdict("Cayley-free embedding into R^8", reasons)


def chi_vanishing_g2_target(m: ManifoldClass) -> Verdict:
    """Necessary condition only: "yes" means not excluded by chi."""
    chi, tau = m.euler, m.signature
    reasons = [Reason(
        claim=(f"chi = {chi}; a coassociative-free immersion into any G2-manifold needs "
               "chi = 0 (necessary, not sufficient)"),
        citation="chi vanishing for G2 targets",
        operation="euler_characteristic", args=(chi,), values={"chi": chi},
        supports=chi == 0,
    )]
    if chi == 0 and tau != 0:
        v = gr.vanishing_system_g37(chi, tau)
        reasons.append(Reason(
            claim=(f"not excluded by chi, but the R^7 criterion still fails: tau = {tau}, "
                   f"[ASS] intersection {v.i_ass}"),
            citation="associative intersection vanishing",
            operation="vanishing_system_g37", args=(chi, tau),
            values={"i_ass": v.i_ass, "i_ass_tilde": v.i_ass_tilde},
        ))
    return _verdict("coassociative-free immersion into a G2-manifold (chi criterion)", reasons)


def parallelizable(m: ManifoldClass) -> Verdict:
    """Trivial tangent bundle iff w1 = w2 = 0, e = 0 and p1 = 0."""
    chi, tau, spin = m.euler, m.signature, m.spin
    s = char_class_status(m)
    op = dict(operation="char_class_status", args=(chi, tau, spin))
    cite = "Hirzebruch-Hopf / Massey parallelizability criterion"
    reasons = [
        Reason(claim="w1 = 0 (oriented)", citation=cite, values={"w1_zero": True},
               supports=True, **op),
        Reason(claim=f"w2 {'=' if s.w2_zero else '!='} 0 ({'spin' if spin else 'not spin'})",
               citation=cite, values={"w2_zero": s.w2_zero}, supports=s.w2_zero, **op),
        Reason(claim=f"e[M] = chi = {chi}", citation=cite,
               values={"euler_class_zero": s.euler_class_zero}, supports=s.euler_class_zero, **op),
        Reason(claim=f"p1[M] = 3 tau = {s.p1_over_fundamental} (signature theorem)",
               citation=cite, values={"p1": s.p1_over_fundamental},
               supports=s.p1_over_fundamental == 0, **op),
    ]
    return _verdict("parallelizable", reasons)


@dataclass(frozen=True)
class ObstructionStage:
    """``vanishes`` is None when the stage was never reached."""

    name: str
    group: str
    vanishes: bool | None
    justification: str
    values: dict[str, Any] = field(default_factory=dict)

    @property
    def status(self) -> str:
        return {True: "vanishes", False: "nonzero", None: "unevaluated"}[self.vanishes]


@dataclass(frozen=True)
class ObstructionLedger:
    o2: ObstructionStage
    o3: ObstructionStage
    o4: ObstructionStage
    hurewicz: HurewiczReport | None
    conclusion: str
    notes: tuple[str, ...] = ()

    def __post_init__(self):
        all_vanish = all(s.vanishes for s in self.stages)
        if (self.conclusion == "contractible") != all_vanish:
            raise ValueError("conclusion disagrees with the obstruction stages")

    @property
    def stages(self) -> tuple[ObstructionStage, ...]:
        return (self.o2, self.o3, self.o4)

    @property
    def contractible(self) -> bool:
        return self.conclusion == "contractible"

    def __str__(self) -> str:
        lines = [f"Gauss map: {self.conclusion}"]
        for s in self.stages:
            lines.append(f"  {s.name} in {s.group}: {s.status} ({s.justification})")
        lines.extend(f"  {n}" for n in self.notes)
        return "\n".join(lines)


def _unevaluated(name: str, group: str) -> ObstructionStage:
    return ObstructionStage(name, group, None, "not evaluated: an earlier stage is blocked")


def gauss_contractibility(m: ManifoldClass) -> ObstructionLedger:
    """Shrink the Gauss map M -> G(3,7)+ skeleton by skeleton.

    The 0- and 1-skeleta contract since the target is simply connected.
    o2 is w2(M); o3 lives in H^3(M; 0); o4 is decided by the Gauss class
    together with injectivity of h_4 on pi_4 = Z + Z.
    """
    g2, g3, g4 = "H^2(M; Z2)", "H^3(M; pi_3 = 0)", "H^4(M; Z + Z)"
    if not m.spin:
        o2 = ObstructionStage("o2", g2, False, "o2 = w2(M) != 0: not spin", {"w2_zero": False})
        return ObstructionLedger(o2, _unevaluated("o3", g3), _unevaluated("o4", g4), None,
                                 "blocked-at-o2")
    o2 = ObstructionStage("o2", g2, True, "o2 = w2(M) = 0: spin", {"w2_zero": True})
    o3 = ObstructionStage("o3", g3, True, "coefficient group pi_3(G(3,7)+) is trivial")

    x = gr.gauss_class_g37(m.euler, m.signature)
    hur = hurewicz_injectivity(G37_HOMOTOPY, 4)
    vals = {"cp2": x.coeff_cp2, "cp2bar": x.coeff_cp2bar, "hurewicz_provable": hur.provable}
    if not x.is_zero:
        why = (f"Gauss class ({x.coeff_cp2}, {x.coeff_cp2bar}) != 0, so the top-cell map "
               "S^4 -> G(3,7)+ is homologically, hence homotopically, nontrivial")
        o4 = ObstructionStage("o4", g4, False, why, vals)
    elif not hur.provable:
        o4 = ObstructionStage("o4", g4, False,
                              "Gauss class is zero but injectivity of h_4 is not established", vals)
    else:
        why = (f"Gauss class is zero and h_4 is injective (mod-C_{hur.witness_prime} Hurewicz), "
               "so the top-cell map is null-homotopic")
        o4 = ObstructionStage("o4", g4, True, why, vals)

    if o4.vanishes:
        return ObstructionLedger(o2, o3, o4, hur, "contractible",
                                 ("Gauss map contractible, hence M is parallelizable",))
    return ObstructionLedger(o2, o3, o4, hur, "blocked-at-o4")


@dataclass(frozen=True)
class FullReport:
    manifold: ManifoldClass
    char_classes: CharClassStatus
    gauss_g37: gr.H4ClassG37
    gauss_g48: gr.H4ClassG48
    intersections: dict[str, Fraction]
    verdicts: dict[str, Verdict]
    ledger: ObstructionLedger
    flags: tuple[str, ...] = ()


def full_report(m: ManifoldClass, flags: tuple[str, ...] = ()) -> FullReport:
    chi, tau = m.euler, m.signature
    intersections = {
        "ass": gr.intersect_ass(chi, tau),
        "ass_tilde": gr.intersect_ass_tilde(chi, tau),
        "ass_degree8": gr.intersect_ass_degree8(chi, tau),
        "cay": gr.intersect_cay(chi, tau),
        "cay_tilde": gr.intersect_cay_tilde(chi, tau),
    }
    verdicts = {
        "coassociative_free_immersion": coassociative_free_immersion(m),
        "cayley_free_embedding": cayley_free_embedding(m),
        "chi_vanishing_g2_target": chi_vanishing_g2_target(m),
        "parallelizable": parallelizable(m),
    }
    return FullReport(
        manifold=m,
        char_classes=char_class_status(m),
        gauss_g37=gr.gauss_class_g37(chi, tau),
        gauss_g48=gr.gauss_class_g48(chi, tau, 0),
        intersections=intersections,
        verdicts=verdicts,
        ledger=gauss_contractibility(m),
        flags=tuple(flags),
    )
