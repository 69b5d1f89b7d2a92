"""Finitely generated abelian groups, Serre classes and the mod-C Hurewicz test.

Rationals are plain :class:`fractions.Fraction`; nothing here rounds.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Sequence

DEFAULT_PRIME_BOUND = 100


class NotPrimeError(ValueError):
    pass


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def require_prime(p: int) -> int:
    if not isinstance(p, int) or isinstance(p, bool) or not is_prime(p):
        raise NotPrimeError(f"{p!r} is not a prime")
    return p


def primes_up_to(bound: int) -> list[int]:
    return [p for p in range(2, bound + 1) if is_prime(p)]


def invariant_factors(orders: Iterable[int]) -> tuple[int, ...]:
    """Normalize cyclic orders to the divisibility chain d1 | d2 | ... (all >= 2).

    Uses the pairwise gcd/lcm sweep; orders equal to 1 are dropped.
    """
    a = []
    for d in orders:
        if not isinstance(d, int) or isinstance(d, bool) or d < 1:
            raise ValueError(f"cyclic order must be a positive integer, got {d!r}")
        a.append(d)
    for i in range(len(a)):
        for j in range(i + 1, len(a)):
            g = gcd(a[i], a[j])
            a[i], a[j] = g, a[i] * a[j] // g
    return tuple(d for d in a if d > 1)


@dataclass(frozen=True)
class FgAbelianGroup:
    """Z^free_rank + Z/d1 + ... + Z/dk with d1 | ... | dk.

    ``torsion`` may be given in any cyclic-factor form; it is normalized.
    """

    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if not isinstance(self.free_rank, int) or self.free_rank < 0:
            raise ValueError(f"free rank must be a non-negative integer, got {self.free_rank!r}")
        object.__setattr__(self, "torsion", invariant_factors(self.torsion))

    @classmethod
    def trivial(cls) -> "FgAbelianGroup":
        return cls(0, ())

    @classmethod
    def cyclic(cls, n: int) -> "FgAbelianGroup":
        """Z/n, with n = 0 meaning Z."""
        return cls(1, ()) if n == 0 else cls(0, (n,))

    @classmethod
    def from_cyclic(cls, orders: Iterable[int]) -> "FgAbelianGroup":
        """Direct sum of cyclic groups; an order of 0 contributes a copy of Z."""
        orders = list(orders)
        return cls(sum(1 for d in orders if d == 0), tuple(d for d in orders if d != 0))

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    @property
    def is_torsion(self) -> bool:
        return self.free_rank == 0

    @property
    def is_torsion_free(self) -> bool:
        return not self.torsion

    @property
    def order(self) -> int | None:
        """Group order, or None when infinite."""
        if self.free_rank:
            return None
        n = 1
        for d in self.torsion:
            n *= d
        return n

    def __add__(self, other: "FgAbelianGroup") -> "FgAbelianGroup":
        return FgAbelianGroup(self.free_rank + other.free_rank, self.torsion + other.torsion)

    def __str__(self) -> str:
        parts = ["Z"] * self.free_rank + [f"Z{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"


def has_p_power_torsion(g: FgAbelianGroup, p: int) -> bool:
    """True iff ``g`` has an element of order p^k for some k >= 1."""
    require_prime(p)
    return any(d % p == 0 for d in g.torsion)


def in_serre_class(g: FgAbelianGroup, primes: Iterable[int]) -> bool:
    """Membership in C_P: torsion, and no element of order a power of any p in P."""
    primes = list(primes)
    if not primes:
        raise ValueError("the prime set must be non-empty")
    for p in primes:
        require_prime(p)
    if not g.is_torsion:
        return False
    return not any(has_p_power_torsion(g, p) for p in primes)


@dataclass(frozen=True)
class HurewiczReport:
    provable: bool
    witness_prime: int | None
    steps: tuple[str, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.provable != (self.witness_prime is not None):
            raise ValueError("witness_prime must be present exactly when provable")

    def __str__(self) -> str:
        head = (f"h_n injective (witness prime {self.witness_prime})" if self.provable
                else "inconclusive")
        return "\n".join([head] + [f"  - {s}" for s in self.steps])


def _admissible(pi: Sequence[FgAbelianGroup], n: int, p: int) -> bool:
    return all(in_serre_class(pi[i], [p]) for i in range(2, n))


def hurewicz_injectivity(
    pi: Sequence[FgAbelianGroup],
    n: int,
    prime_search_bound: int = DEFAULT_PRIME_BOUND,
    prime: int | None = None,
) -> HurewiczReport:
    """Decide injectivity of h_n : pi_n(X) -> H_n(X; Z) by the mod-C_p criterion.

    ``pi`` lists pi_0 .. pi_n of a space X.  If X is 1-connected and
    pi_i lies in C_p for 2 <= i < n, then ker h_n lies in C_p, hence is
    torsion; a torsion-free pi_n then forces ker h_n = 0.

    The smallest admissible prime up to ``prime_search_bound`` is reported.
    Passing ``prime`` checks that single prime instead of searching.

    A negative answer only means this criterion does not apply; it is never
    a proof that h_n has a kernel.
    """
    if n < 2:
        raise ValueError(f"degree n must be >= 2, got {n}")
    if len(pi) < n + 1:
        raise ValueError(f"homotopy groups for degrees 0..{n} required, got {len(pi)} entries")
    if prime_search_bound < 2:
        raise ValueError(f"prime search bound must be >= 2, got {prime_search_bound}")
    if prime is not None:
        require_prime(prime)

    steps = []
    fail = "criterion inconclusive: this is not a proof that h_%d fails to be injective" % n

    if not (pi[0].is_trivial and pi[1].is_trivial):
        steps.append(f"1-connected: no (pi_0 = {pi[0]}, pi_1 = {pi[1]})")
        steps.append(fail)
        return HurewiczReport(False, None, tuple(steps))
    steps.append("1-connected: yes (pi_0 = pi_1 = 0)")

    if not pi[n].is_torsion_free:
        steps.append(f"pi_{n} torsion-free: no (pi_{n} = {pi[n]}); the kernel need not vanish")
        steps.append(fail)
        return HurewiczReport(False, None, tuple(steps))
    steps.append(f"pi_{n} torsion-free: yes (pi_{n} = {pi[n]})")

    candidates = [prime] if prime is not None else primes_up_to(prime_search_bound)
    for p in candidates:
        if _admissible(pi, n, p):
            for i in range(2, n):
                steps.append(f"pi_{i} = {pi[i]} in C_{p}: yes")
            steps.append(f"mod-C_{p} Hurewicz: ker h_{n} in C_{p}, a torsion subgroup of "
                         f"torsion-free pi_{n}, hence ker h_{n} = 0")
            return HurewiczReport(True, p, tuple(steps))

    if prime is not None:
        bad = [i for i in range(2, n) if not in_serre_class(pi[i], [prime])]
        steps.append(f"C_{prime} membership fails in degree(s) {bad}")
    else:
        steps.append(f"no prime p <= {prime_search_bound} puts pi_2..pi_{n - 1} in C_p")
    steps.append(fail)
    return HurewiczReport(False, None, tuple(steps))
