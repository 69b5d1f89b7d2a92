"""Degree-4 homology bookkeeping in G(3,7)+ and G(4,8)+.

Over G(3,7)+ (oriented 3-planes in R^7, tautological bundle E, complement F)
rational H_4 has basis [CP2], [CP2bar] and H^4 is spanned by p1(E), e(F),
with characteristic numbers

    p1E[CP2] = p1E[CP2bar] = eF[CP2] = -eF[CP2bar] = 1.

A degree-4 cohomology class is stored through its pairings against the
homology basis (``CohFunctionalG37``).  The Poincare duals of the
associative loci are ASS = (p1E + eF)/2 and ASS~ = (p1E - eF)/2.

Degree 8 is handled by a small polynomial model in p1E, eF subject to
p1E^2 = eF^2, contracted against an integration table for the associative
loci.  That second route is deliberately independent of the closed-form
Gauss-class formula so the two can be checked against each other.

Over G(4,8)+ the homology basis is [G(4,5)], [G(1,5)], [G(2,4)].
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .manifolds import InvalidManifoldError

HALF = Fraction(1, 2)


class UnknownPairingError(ValueError):
    """Pairing needs a [G(1,5)] value that is not known."""


def _check_parity(chi: int, tau: int) -> None:
    if (chi - tau) % 2:
        raise InvalidManifoldError(
            f"chi = {chi}, tau = {tau}: no closed oriented 4-manifold has chi and tau of "
            "different parity", invariant="parity")


# -- G(3,7) -------------------------------------------------------------------

@dataclass(frozen=True)
class H4ClassG37:
    coeff_cp2: Fraction
    coeff_cp2bar: Fraction

    def __add__(self, other):
        return H4ClassG37(self.coeff_cp2 + other.coeff_cp2, self.coeff_cp2bar + other.coeff_cp2bar)

    def __rmul__(self, k):
        return H4ClassG37(k * self.coeff_cp2, k * self.coeff_cp2bar)

    @property
    def is_zero(self) -> bool:
        return self.coeff_cp2 == 0 and self.coeff_cp2bar == 0

    @property
    def is_integral(self) -> bool:
        return self.coeff_cp2.denominator == 1 and self.coeff_cp2bar.denominator == 1

    def as_tuple(self) -> tuple[Fraction, Fraction]:
        return (self.coeff_cp2, self.coeff_cp2bar)


@dataclass(frozen=True)
class CohFunctionalG37:
    on_cp2: Fraction
    on_cp2bar: Fraction

    def __add__(self, other):
        return CohFunctionalG37(self.on_cp2 + other.on_cp2, self.on_cp2bar + other.on_cp2bar)

    def __rmul__(self, k):
        return CohFunctionalG37(k * self.on_cp2, k * self.on_cp2bar)


def _f(a, b=1):
    return Fraction(a, b)


P1E = CohFunctionalG37(_f(1), _f(1))
EF = CohFunctionalG37(_f(1), _f(-1))
ASS = CohFunctionalG37(_f(1), _f(0))
ASS_TILDE = CohFunctionalG37(_f(0), _f(1))

CP2 = H4ClassG37(_f(1), _f(0))
CP2BAR = H4ClassG37(_f(0), _f(1))


def pair_g37(f: CohFunctionalG37, x: H4ClassG37) -> Fraction:
    return f.on_cp2 * x.coeff_cp2 + f.on_cp2bar * x.coeff_cp2bar


@lru_cache(maxsize=4096)
def gauss_class_g37(chi: int, tau: int) -> H4ClassG37:
    """Image of [M] under the complemented Gauss map M -> G(3,7)+.

    Independent of the immersion: ((chi - 3 tau)/2) [CP2] - ((chi + 3 tau)/2) [CP2bar].
    """
    _check_parity(chi, tau)
    return H4ClassG37(HALF * (chi - 3 * tau), -HALF * (chi + 3 * tau))


def gauss_class_from_c(chi: int, c: Fraction) -> H4ClassG37:
    """c [CP2] + (c - chi) [CP2bar]: the general shape forced by <eF, x> = chi."""
    return H4ClassG37(Fraction(c), Fraction(c) - chi)


@lru_cache(maxsize=4096)
def intersect_ass(chi: int, tau: int) -> Fraction:
    """Intersection number of the Gauss image with [ASS]: (chi - 3 tau)/2."""
    _check_parity(chi, tau)
    return HALF * (chi - 3 * tau)


@lru_cache(maxsize=4096)
def intersect_ass_tilde(chi: int, tau: int) -> Fraction:
    """Intersection number with the reversed associative locus: -(chi + 3 tau)/2."""
    _check_parity(chi, tau)
    return -HALF * (chi + 3 * tau)


# -- degree-8 route -------------------------------------------------------------

@dataclass(frozen=True)
class Deg4Poly:
    """a p1E + b eF in H^4(G(3,7)+; Q)."""

    p1e: Fraction
    ef: Fraction

    def __mul__(self, other: "Deg4Poly") -> "Deg8Poly":
        # p1E^2 = eF^2
        return Deg8Poly(
            p1e_ef=self.p1e * other.ef + self.ef * other.p1e,
            ef2=self.p1e * other.p1e + self.ef * other.ef,
        )

    def __add__(self, other: "Deg4Poly") -> "Deg4Poly":
        return Deg4Poly(self.p1e + other.p1e, self.ef + other.ef)

    def __rmul__(self, k):
        return Deg4Poly(k * self.p1e, k * self.ef)

    def functional(self) -> CohFunctionalG37:
        return self.p1e * P1E + self.ef * EF


@dataclass(frozen=True)
class Deg8Poly:
    """u p1E.eF + v eF^2 in H^8(G(3,7)+; Q), already reduced by p1E^2 = eF^2."""

    p1e_ef: Fraction
    ef2: Fraction

    def __add__(self, other):
        return Deg8Poly(self.p1e_ef + other.p1e_ef, self.ef2 + other.ef2)

    def __rmul__(self, k):
        return Deg8Poly(k * self.p1e_ef, k * self.ef2)


P1E_POLY = Deg4Poly(_f(1), _f(0))
EF_POLY = Deg4Poly(_f(0), _f(1))
ASS_POLY = HALF * Deg4Poly(_f(1), _f(1))
ASS_TILDE_POLY = HALF * Deg4Poly(_f(1), _f(-1))


@dataclass(frozen=True)
class IntegrationTableG37:
    """<locus, monomial> values for the degree-8 monomials p1E.eF and eF^2."""

    values: tuple[tuple[str, Fraction, Fraction], ...] = (
        ("ASS", _f(1), _f(1)),
        # back-solved from ASS~ being dual to (p1E - eF)/2
        ("ASS_TILDE", _f(1), _f(-1)),
    )
    relations: tuple[str, ...] = ("p1E = -p1F", "p1E^2 = eF^2")

    def contract(self, locus: str, z: Deg8Poly) -> Fraction:
        for name, on_pe, on_ee in self.values:
            if name == locus:
                return on_pe * z.p1e_ef + on_ee * z.ef2
        raise KeyError(locus)


INTEGRATION_TABLE = IntegrationTableG37()


def dual_cp2() -> Deg8Poly:
    """PD^-1 [CP2] = ((p1E + eF)/2) eF."""
    return ASS_POLY * EF_POLY


def dual_cp2bar() -> Deg8Poly:
    """PD^-1 [CP2bar] = ((p1E - eF)/2) eF."""
    return ASS_TILDE_POLY * EF_POLY


def solve_class_g37(constraints: list[tuple[CohFunctionalG37, Fraction]]) -> H4ClassG37:
    """Unique H4ClassG37 with prescribed pairings against two functionals (Cramer's rule)."""
    (f, s), (g, t) = constraints
    det = f.on_cp2 * g.on_cp2bar - f.on_cp2bar * g.on_cp2
    if det == 0:
        raise ValueError("functionals are linearly dependent")
    a = (Fraction(s) * g.on_cp2bar - f.on_cp2bar * Fraction(t)) / det
    b = (f.on_cp2 * Fraction(t) - Fraction(s) * g.on_cp2) / det
    return H4ClassG37(a, b)


def gauss_class_by_char_numbers(chi: int, tau: int) -> H4ClassG37:
    """Recover the Gauss class from its characteristic numbers alone.

    <eF, x> = e(TM)[M] = chi, and since the complement map swaps E and F,
    <p1E, x> = p1F[g_*M] = -p1(TM)[M] = -3 tau.
    """
    _check_parity(chi, tau)
    return solve_class_g37([(EF, Fraction(chi)), (P1E, Fraction(-3 * tau))])


def intersect_locus_degree8(x: H4ClassG37, locus: str = "ASS") -> Fraction:
    """x . [locus] by dualizing the homology basis into H^8 and integrating."""
    z = x.coeff_cp2 * dual_cp2() + x.coeff_cp2bar * dual_cp2bar()
    return INTEGRATION_TABLE.contract(locus, z)


def intersect_ass_degree8(chi: int, tau: int) -> Fraction:
    return intersect_locus_degree8(gauss_class_by_char_numbers(chi, tau), "ASS")


def intersect_ass_tilde_degree8(chi: int, tau: int) -> Fraction:
    return intersect_locus_degree8(gauss_class_by_char_numbers(chi, tau), "ASS_TILDE")


@dataclass(frozen=True)
class VanishingSystem:
    i_ass: Fraction
    i_ass_tilde: Fraction

    @property
    def forces_zero(self) -> bool:
        return self.i_ass == 0 and self.i_ass_tilde == 0


def vanishing_system_g37(chi: int, tau: int) -> VanishingSystem:
    """Both associative intersection numbers; a free immersion needs both zero."""
    return VanishingSystem(intersect_ass(chi, tau), intersect_ass_tilde(chi, tau))


# -- G(4,8) -------------------------------------------------------------------

@dataclass(frozen=True)
class H4ClassG48:
    coeff_g45: Fraction
    coeff_g15: Fraction
    coeff_g24: Fraction

    @property
    def is_zero(self) -> bool:
        return self.coeff_g45 == 0 and self.coeff_g15 == 0 and self.coeff_g24 == 0

    def as_tuple(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.coeff_g45, self.coeff_g15, self.coeff_g24)


@dataclass(frozen=True)
class CohFunctionalG48:
    on_g45: Fraction
    on_g15: Optional[Fraction]
    on_g24: Fraction


# Values on [G(4,5)] and [G(2,4)] fit the known Cayley intersection numbers
# for embeddings; the [G(1,5)] value is not available.
CAY = CohFunctionalG48(_f(-1), None, _f(1))
CAY_TILDE = CohFunctionalG48(_f(1), None, _f(1))


def gauss_class_g48(chi: int, tau: int, lam: Fraction | int = 0) -> H4ClassG48:
    """g_*[M] = (chi/2) [G(4,5)] + lam [G(1,5)] + (3 tau/2) [G(2,4)]; lam = 0 for embeddings."""
    return H4ClassG48(HALF * chi, Fraction(lam), Fraction(3, 2) * tau)


def pair_g48(f: CohFunctionalG48, x: H4ClassG48) -> Fraction:
    total = f.on_g45 * x.coeff_g45 + f.on_g24 * x.coeff_g24
    if x.coeff_g15 != 0:
        if f.on_g15 is None:
            raise UnknownPairingError("unknown [G(1,5)] pairing: immersion case with lambda != 0 "
                                      "is not supported")
        total += f.on_g15 * x.coeff_g15
    return total


def _embedding_class(chi, tau, lam):
    if lam != 0:
        raise UnknownPairingError("unknown [G(1,5)] pairing: only embeddings (lambda = 0) "
                                  "are supported")
    return gauss_class_g48(chi, tau, 0)


@lru_cache(maxsize=4096)
def intersect_cay(chi: int, tau: int, lam: Fraction | int = 0) -> Fraction:
    """Gauss image . [CAY] for an embedding in R^8: -(chi - 3 tau)/2."""
    return pair_g48(CAY, _embedding_class(chi, tau, lam))


@lru_cache(maxsize=4096)
def intersect_cay_tilde(chi: int, tau: int, lam: Fraction | int = 0) -> Fraction:
    """Gauss image . [CAY~] for an embedding in R^8: (chi + 3 tau)/2."""
    return pair_g48(CAY_TILDE, _embedding_class(chi, tau, lam))


@dataclass(frozen=True)
class CayleySystem:
    i_cay: Fraction
    i_cay_tilde: Fraction

    @property
    def forces_zero(self) -> bool:
        return self.i_cay == 0 and self.i_cay_tilde == 0


def vanishing_system_g48(chi: int, tau: int) -> CayleySystem:
    return CayleySystem(intersect_cay(chi, tau), intersect_cay_tilde(chi, tau))
