"""Invariant tuples of closed oriented smooth 4-manifolds and connected sums."""

from __future__ import annotations

import re
import warnings
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Iterable, Sequence


class InvalidManifoldError(ValueError):
    """An invariant tuple no closed oriented smooth 4-manifold can have."""

    def __init__(self, message: str, invariant: str):
        super().__init__(message)
        self.invariant = invariant


class RokhlinWarning(UserWarning):
    pass


class CatalogError(LookupError):
    pass


class UnknownNameError(CatalogError):
    pass


class ArityError(CatalogError):
    pass


class DomainError(ValueError):
    """Catalog parameters outside the family's domain."""


class CatalogFileError(ValueError):
    pass


@dataclass(frozen=True)
class ManifoldClass:
    """(chi, tau, spin) of a closed oriented smooth 4-manifold.

    Construction checks chi = tau (mod 2) and Rokhlin's theorem
    (spin implies tau = 0 mod 16).  With ``lax=True`` a Rokhlin violation
    only warns; ``lax`` is sticky through connected sums.
    """

    label: str
    euler: int
    signature: int
    spin: bool
    lax: bool = field(default=False, compare=False, repr=False)

    def __post_init__(self):
        for name in ("euler", "signature"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool):
                raise TypeError(f"{name} must be an integer, got {v!r}")
        if (self.euler - self.signature) % 2:
            raise InvalidManifoldError(
                f"{self.label}: parity violated, chi = {self.euler} and tau = {self.signature} "
                "must be congruent mod 2",
                invariant="parity",
            )
        if self.spin and self.signature % 16:
            msg = (f"{self.label}: Rokhlin violated, spin manifold with tau = {self.signature} "
                   "not divisible by 16")
            if not self.lax:
                raise InvalidManifoldError(msg, invariant="rokhlin")
            warnings.warn(msg, RokhlinWarning, stacklevel=3)

    @property
    def invariants(self) -> tuple[int, int, bool]:
        return (self.euler, self.signature, self.spin)

    def relabel(self, label: str) -> "ManifoldClass":
        return ManifoldClass(label, self.euler, self.signature, self.spin, self.lax)

    def __str__(self) -> str:
        return f"{self.label}: chi={self.euler} tau={self.signature} spin={str(self.spin).lower()}"


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    params: tuple[str, ...]
    formula: Callable[..., tuple[int, int, bool]]
    domain: Callable[..., bool] = lambda *a: True
    domain_text: str = ""
    description: str = ""

    @property
    def arity(self) -> int:
        return len(self.params)

    def build(self, params: Sequence[int], lax: bool = False) -> ManifoldClass:
        params = tuple(params)
        if len(params) != self.arity:
            raise ArityError(f"{self.name} takes {self.arity} parameter(s), got {len(params)}")
        if not self.domain(*params):
            raise DomainError(f"{self.name}{params_text(params)}: parameters must satisfy "
                              f"{self.domain_text}")
        chi, tau, spin = self.formula(*params)
        return ManifoldClass(self.name + params_text(params), chi, tau, spin, lax)


def params_text(params: Sequence[int]) -> str:
    return "(" + ",".join(str(p) for p in params) + ")" if params else ""


def _fixed(chi, tau, spin):
    return lambda: (chi, tau, spin)


# Panelled-web families carry locally conformally flat metrics, so tau = 0.
BUILTIN_ENTRIES = (
    CatalogEntry("S4", (), _fixed(2, 0, True), description="4-sphere"),
    CatalogEntry("CP2", (), _fixed(3, 1, False), description="complex projective plane"),
    CatalogEntry("CP2bar", (), _fixed(3, -1, False),
                 description="complex projective plane, reversed orientation"),
    CatalogEntry("K3", (), _fixed(24, -16, True), description="K3 surface"),
    CatalogEntry("S2xS2", (), _fixed(4, 0, True), description="product of two 2-spheres"),
    CatalogEntry("T4", (), _fixed(0, 0, True), description="4-torus"),
    CatalogEntry("SigmaProd", ("g", "h"), lambda g, h: ((2 - 2 * g) * (2 - 2 * h), 0, True),
                 lambda g, h: g >= 0 and h >= 0, "g >= 0, h >= 0",
                 "product of closed surfaces of genus g and h"),
    CatalogEntry("M1", ("n",), lambda n: (-4 * n, 0, True),
                 lambda n: n > 0, "n > 0", "panelled web manifold M^1_n"),
    CatalogEntry("M2", ("g", "n"), lambda g, n: (4 - 4 * g - 4 * n, 0, True),
                 lambda g, n: g > 0 and n > 0, "g > 0, n > 0", "panelled web manifold M^2_{g,n}"),
    CatalogEntry("M3", ("g", "n"), lambda g, n: (4 - 4 * g - 4 * n, 0, True),
                 lambda g, n: g > 0 and n > 0, "g > 0, n > 0", "panelled web manifold M^3_{g,n}"),
    CatalogEntry("M4", ("n",), lambda n: (-2 * n, 0, True),
                 lambda n: n > 0, "n > 0", "panelled web manifold M^4_n"),
    CatalogEntry("M5", ("g", "n"), lambda g, n: (4 - 4 * g - 4 * n, 0, True),
                 lambda g, n: g > 0 and n > 0, "g > 0, n > 0", "panelled web manifold M^5_{g,n}"),
)


class Catalog:
    """Read-only name -> entry table; names match case-insensitively."""

    def __init__(self, entries: Iterable[CatalogEntry] = BUILTIN_ENTRIES):
        self._entries: dict[str, CatalogEntry] = {}
        for e in entries:
            key = e.name.lower()
            if key in self._entries:
                raise CatalogError(f"duplicate catalog name {e.name!r}")
            self._entries[key] = e

    def __contains__(self, name: str) -> bool:
        return name.lower() in self._entries

    def __iter__(self):
        return iter(self._entries.values())

    def __len__(self) -> int:
        return len(self._entries)

    def entry(self, name: str) -> CatalogEntry:
        try:
            return self._entries[name.lower()]
        except KeyError:
            raise UnknownNameError(f"unknown manifold name {name!r}") from None

    def lookup(self, name: str, params: Sequence[int] = (), lax: bool = False) -> ManifoldClass:
        return self.entry(name).build(params, lax=lax)

    def extended(self, entries: Iterable[CatalogEntry]) -> "Catalog":
        return Catalog([*self, *entries])

    def with_file(self, path: str | Path) -> "Catalog":
        return self.extended(load_catalog_file(path))


CATALOG = Catalog()

_RECORD = re.compile(
    r"^manifold\s+(?P<name>[A-Za-z_][A-Za-z0-9_]*)\s+chi=(?P<chi>[+-]?\d+)\s+"
    r"tau=(?P<tau>[+-]?\d+)\s+spin=(?P<spin>true|false)$"
)


def parse_catalog_text(text: str, source: str = "<catalog>") -> list[CatalogEntry]:
    """Parse ``manifold NAME chi=<int> tau=<int> spin=<true|false>`` records.

    ``#`` starts a comment.  Duplicate names within the file are an error,
    as are records whose invariants fail validation.
    """
    entries = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _RECORD.match(line)
        if not m:
            raise CatalogFileError(f"{source}:{lineno}: malformed record {line!r}")
        name = m["name"]
        if name.lower() in seen:
            raise CatalogFileError(f"{source}:{lineno}: duplicate name {name!r}")
        seen.add(name.lower())
        chi, tau, spin = int(m["chi"]), int(m["tau"]), m["spin"] == "true"
        try:
            ManifoldClass(name, chi, tau, spin, lax=True)
        except InvalidManifoldError as exc:
            raise CatalogFileError(f"{source}:{lineno}: {exc}") from None
        entries.append(CatalogEntry(name, (), _fixed(chi, tau, spin), description=f"from {source}"))
    return entries


def load_catalog_file(path: str | Path) -> list[CatalogEntry]:
    path = Path(path)
    return parse_catalog_text(path.read_text(encoding="utf-8"), source=str(path))


def catalog_lookup(name: str, params: Sequence[int] = (), catalog: Catalog = CATALOG,
                   lax: bool = False) -> ManifoldClass:
    return catalog.lookup(name, params, lax=lax)


def connected_sum(a: ManifoldClass, b: ManifoldClass) -> ManifoldClass:
    """chi adds minus 2, tau adds, spin iff both summands are spin."""
    return ManifoldClass(
        f"{a.label} # {b.label}",
        a.euler + b.euler - 2,
        a.signature + b.signature,
        a.spin and b.spin,
        a.lax or b.lax,
    )


def multi_sum(parts: Sequence[tuple[int, ManifoldClass]]) -> ManifoldClass:
    """Left fold of :func:`connected_sum` over ``[(multiplicity, manifold), ...]``."""
    if not parts:
        raise ValueError("multi_sum needs at least one summand")
    expanded = []
    for mult, m in parts:
        if not isinstance(mult, int) or mult < 1:
            raise ValueError(f"multiplicity must be a positive integer, got {mult!r}")
        expanded.extend([m] * mult)
    acc = expanded[0]
    for m in expanded[1:]:
        acc = connected_sum(acc, m)
    label = " # ".join(m.label if k == 1 else f"{k}*{m.label}" for k, m in parts)
    return acc.relabel(label)


@dataclass(frozen=True)
class CharClassStatus:
    """Vanishing of characteristic classes read off (chi, tau, spin).

    ``w3_zero`` is None when the manifold is not spin: the Bockstein
    argument Sq^1 w2 = w1 w2 + w3 only settles w3 once w2 = 0.
    """

    w1_zero: bool
    w2_zero: bool
    w3_zero: bool | None
    w4_zero: bool
    euler_class_zero: bool
    p1_over_fundamental: int

    @property
    def all_vanish(self) -> bool:
        return bool(self.w1_zero and self.w2_zero and self.w3_zero and self.w4_zero
                    and self.euler_class_zero and self.p1_over_fundamental == 0)


def char_class_status(m: ManifoldClass) -> CharClassStatus:
    return CharClassStatus(
        w1_zero=True,
        w2_zero=m.spin,
        # spin: w3 = Sq^1 w2 + w1 w2 = 0
        w3_zero=True if m.spin else None,
        w4_zero=m.euler % 2 == 0,
        euler_class_zero=m.euler == 0,
        p1_over_fundamental=3 * m.signature,
    )
