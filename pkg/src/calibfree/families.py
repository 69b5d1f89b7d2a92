"""Infinite families of connected sums with published invariants, audited.

Each family pairs a construction with the invariants claimed for it.  The
audit recomputes the invariants from the catalog formulas and reports any
mismatch instead of adjusting the construction.  Two of the claimed
families come out at chi = 4 and two at chi = -2 rather than 0; those
audits carry a discrepancy flag.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .manifolds import CATALOG, Catalog, ManifoldClass, multi_sum, params_text
from .verdicts import parallelizable

# (head name, head params, block name, block count)
Shape = tuple[str, tuple[int, ...], str, int]


@dataclass(frozen=True)
class Family:
    key: str
    description: str
    build: Callable[..., Shape]
    recognize: Callable[[str, tuple[int, ...], str, int], tuple[int, ...] | None]
    valid: Callable[..., bool]
    claimed_chi: Callable[..., int]
    claimed_tau: Callable[..., int | None]
    claimed_parallelizable: bool


@dataclass(frozen=True)
class FamilyAudit:
    family: str
    params: tuple[int, ...]
    expression: str
    manifold: ManifoldClass
    claimed_chi: int
    claimed_tau: int | None
    claimed_parallelizable: bool
    computed_parallelizable: bool

    @property
    def discrepancies(self) -> tuple[str, ...]:
        out = []
        m = self.manifold
        if m.euler != self.claimed_chi:
            out.append(f"computed chi = {m.euler}, claimed chi = {self.claimed_chi}")
        if self.claimed_tau is not None and m.signature != self.claimed_tau:
            out.append(f"computed tau = {m.signature}, claimed tau = {self.claimed_tau}")
        if self.computed_parallelizable != self.claimed_parallelizable:
            out.append(f"computed parallelizable = {self.computed_parallelizable}, "
                       f"claimed {self.claimed_parallelizable}")
        return tuple(out)

    @property
    def flag(self) -> str | None:
        if not self.discrepancies:
            return None
        return (f"family {self.family}{params_text(self.params)}: claimed invariants not "
                "reproduced by the connected-sum formulas (" + "; ".join(self.discrepancies) + ")")


def _rec_nonpar1(head, hp, block, count):
    if head == "M1" and block == "K3" and hp[0] % 11 == 0 and count == 2 * (hp[0] // 11):
        return (hp[0] // 11,)
    return None


def _rec_nonpar2(name):
    def rec(head, hp, block, count):
        if head != name or block != "K3":
            return None
        g, n = hp
        if (g + n) % 11 == 0 and count == 2 * ((g + n) // 11):
            return ((g + n) // 11, g)
        return None
    return rec


def _rec_nonpar3(head, hp, block, count):
    if head == "M4" and block == "K3" and (hp[0] + 2) % 11 == 0 and count == (hp[0] + 2) // 11:
        return (count,)
    return None


def _rec_par1(head, hp, block, count):
    if head == "M1" and block == "S2xS2" and count == 2 * hp[0]:
        return hp
    return None


def _rec_par2(name):
    def rec(head, hp, block, count):
        if head == name and block == "S2xS2" and count == 2 * hp[0] + 2 * hp[1] - 3:
            return hp
        return None
    return rec


def _rec_par3(head, hp, block, count):
    if head == "M4" and block == "S2xS2" and count == hp[0] - 1:
        return hp
    return None


def _families() -> dict[str, Family]:
    fams = [
        Family("nonpar-1", "M1(11k) # 2k*K3, k > 0",
               lambda k: ("M1", (11 * k,), "K3", 2 * k), _rec_nonpar1,
               lambda k: k > 0, lambda k: 0, lambda k: -32 * k, False),
        Family("nonpar-3", "M4(11k-2) # k*K3, k > 0",
               lambda k: ("M4", (11 * k - 2,), "K3", k), _rec_nonpar3,
               lambda k: k > 0, lambda k: 0, lambda k: None, False),
        Family("par-1", "M1(g) # 2g*S2xS2, g > 0",
               lambda g: ("M1", (g,), "S2xS2", 2 * g), _rec_par1,
               lambda g: g > 0, lambda g: 0, lambda g: 0, True),
        Family("par-3", "M4(n) # (n-1)*S2xS2, n > 0",
               lambda n: ("M4", (n,), "S2xS2", n - 1), _rec_par3,
               lambda n: n > 0, lambda n: 0, lambda n: 0, True),
    ]
    for name in ("M2", "M3", "M5"):
        fams.append(Family(
            f"nonpar-2-{name}", f"{name}(g,11k-g) # 2k*K3, 11k > g > 0",
            lambda k, g, name=name: (name, (g, 11 * k - g), "K3", 2 * k), _rec_nonpar2(name),
            lambda k, g: 11 * k > g > 0, lambda k, g: 0, lambda k, g: None, False))
        fams.append(Family(
            f"par-2-{name}", f"{name}(g,n) # (2g+2n-3)*S2xS2, g, n > 0",
            lambda g, n, name=name: (name, (g, n), "S2xS2", 2 * g + 2 * n - 3), _rec_par2(name),
            lambda g, n: g > 0 and n > 0, lambda g, n: 0, lambda g, n: 0, True))
    return {f.key: f for f in fams}


FAMILIES = _families()


def shape_text(shape: Shape) -> str:
    head, hp, block, count = shape
    text = head + params_text(hp)
    if count == 1:
        return f"{text} # {block}"
    if count > 1:
        return f"{text} # {count}*{block}"
    return text


def build_member(shape: Shape, catalog: Catalog = CATALOG) -> ManifoldClass:
    head, hp, block, count = shape
    parts = [(1, catalog.lookup(head, hp))]
    if count:
        parts.append((count, catalog.lookup(block)))
    return multi_sum(parts).relabel(shape_text(shape))


def audit(key: str, *params: int) -> FamilyAudit:
    fam = FAMILIES[key]
    if not fam.valid(*params):
        raise ValueError(f"{key}: parameters {params} outside {fam.description}")
    shape = fam.build(*params)
    m = build_member(shape)
    return FamilyAudit(
        family=key,
        params=tuple(params),
        expression=shape_text(shape),
        manifold=m,
        claimed_chi=fam.claimed_chi(*params),
        claimed_tau=fam.claimed_tau(*params),
        claimed_parallelizable=fam.claimed_parallelizable,
        computed_parallelizable=parallelizable(m).yes,
    )


def recognize(shape: Shape) -> FamilyAudit | None:
    """Audit ``shape`` if it is a member of a known family."""
    for fam in FAMILIES.values():
        params = fam.recognize(*shape)
        if params is not None and fam.valid(*params):
            return audit(fam.key, *params)
    return None


def default_audits(kmax: int = 5) -> list[FamilyAudit]:
    """A fixed sample of every family for small parameters."""
    out = []
    for key, fam in FAMILIES.items():
        if key.startswith("nonpar-2"):
            out.extend(audit(key, k, 1) for k in range(1, kmax + 1))
        elif key.startswith("par-2"):
            out.extend(audit(key, g, 1) for g in range(1, kmax + 1))
        else:
            out.extend(audit(key, k) for k in range(1, kmax + 1))
    return out
