"""Prime and irreducible classification without search.

The decision procedures here are closed-form characterizations, one per
ring; the brute-force counterparts live in :mod:`planeint.oracle` and the
test suite checks that both agree on exhaustive boxes.

Highlights of the landscape these rules encode:

* Gaussian integers: prime == irreducible (the ring has unique
  factorization); the irreducibles are the elements of prime norm plus the
  integer primes ``p ≡ 3 (mod 4)`` and their associates.
* hyperbolic integers: the primes are the associates of ``1±j`` (inside the
  zero-divisor diagonals, where they are nevertheless *reducible*) and the
  elements of prime norm outside; the irreducible non-primes are exactly the
  associates of ``(2^γ+1) ± j(2^γ-1)``.
* parabolic integers: the only primes are ``±k``; off the axis an element
  ``x + ky`` (taken with x > 0) is irreducible iff x is prime, or x is a
  prime power ``p^γ`` (γ >= 2) with ``p ∤ y``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Classification, Element, RingKind
from .factor import is_prime_int, int_factor, sum_two_squares


@dataclass(frozen=True)
class IrreducibleForm:
    """The hyperbolic irreducible non-prime family ``(2^γ+1) ± j(2^γ-1)``."""

    gamma: int
    sign_y: int

    def __post_init__(self) -> None:
        if self.gamma < 0:
            raise ValueError("gamma must be nonnegative")
        if self.sign_y not in (-1, 1):
            raise ValueError("sign_y must be ±1")

    def element(self) -> Element:
        half = 1 << self.gamma
        return Element(RingKind.HYPERBOLIC, half + 1, self.sign_y * (half - 1))


def _two_power_exponent(n: int) -> int | None:
    """e with n == 2^e, or None."""
    if n < 1 or n & (n - 1):
        return None
    return n.bit_length() - 1


def is_prime(z: Element) -> bool:
    """Prime in the ring-theoretic sense: ``p | ab`` forces ``p | a`` or ``p | b``."""
    if not z or z.is_unit():
        return False
    kind = z.kind
    if kind is RingKind.PARABOLIC:
        return z.x == 0 and abs(z.y) == 1
    if kind is RingKind.HYPERBOLIC:
        if z.eta == 0:
            return abs(z.x) == 1 and abs(z.y) == 1
        return is_prime_int(z.eta_plus)
    return is_irreducible(z)


def is_irreducible(z: Element) -> bool:
    """Irreducible: every factorization has a unit factor."""
    if not z or z.is_unit():
        return False
    kind = z.kind
    if kind is RingKind.PARABOLIC:
        if z.x == 0:
            return abs(z.y) == 1
        x = abs(z.x)
        if is_prime_int(x):
            return True
        _, primes = int_factor(x)
        if len(primes) != 1:
            return False
        p, _ = primes[0]
        return z.y % p != 0
    ep = z.eta_plus
    if kind is RingKind.HYPERBOLIC:
        if ep == 0:
            return False
        if is_prime_int(ep):
            return True
        e = _two_power_exponent(ep)
        if e is None or e < 2:
            return False
        half = 1 << (e - 2)
        c = z.canonical_associate()[0]
        return c.x == half + 1 and abs(c.y) == half - 1
    # elliptic
    if is_prime_int(ep):
        return True
    c = z.canonical_associate()[0]
    return c.y == 0 and c.x % 4 == 3 and is_prime_int(c.x)


def classify(z: Element) -> Classification:
    """Joint verdict; zero and units carry no prime/irreducible/reducible flags."""
    if not z:
        return Classification(True, False, True, False, False, False)
    if z.is_unit():
        return Classification(False, True, False, False, False, False)
    irr = is_irreducible(z)
    return Classification(False, False, z.is_zero_divisor(), is_prime(z), irr, not irr)


@dataclass(frozen=True)
class PrimeIntegerReport:
    """How an integer prime behaves when read inside one of the rings."""

    is_prime_elt: bool
    is_irreducible_elt: bool
    witness: tuple[Element, Element] | None


def prime_integer_behavior(p: int, kind: RingKind) -> PrimeIntegerReport:
    """Prime/irreducible status of the integer prime p in the given ring.

    Where p splits, a witness pair of non-unit factors with product p is
    returned: ``((n+1)+jn)((n+1)-jn)`` for odd p in the hyperbolic ring, a
    conjugate pair from the two-squares representation in the Gaussian one.
    """
    if not is_prime_int(p):
        raise ValueError(f"{p} is not prime")
    if kind is RingKind.PARABOLIC:
        return PrimeIntegerReport(False, True, None)
    if kind is RingKind.HYPERBOLIC:
        if p == 2:
            return PrimeIntegerReport(False, True, None)
        n = (p - 1) // 2
        witness = (Element(kind, n + 1, n), Element(kind, n + 1, -n))
        return PrimeIntegerReport(False, False, witness)
    if p % 4 == 3:
        return PrimeIntegerReport(True, True, None)
    rs = sum_two_squares(p)
    assert rs is not None
    witness = (Element(kind, rs[0], rs[1]), Element(kind, rs[0], -rs[1]))
    return PrimeIntegerReport(False, False, witness)


__all__ = [
    "IrreducibleForm",
    "PrimeIntegerReport",
    "classify",
    "is_irreducible",
    "is_prime",
    "prime_integer_behavior",
]
