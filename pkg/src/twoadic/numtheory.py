"""Number-theoretic groundwork for the interleaved sequence constructions.

Primality, primitive roots, Legendre symbols, the decomposition p = a^2 + 4b^2
with b = +-1, and the order-4 cyclotomic classes of Z_p*. All arithmetic is
exact on plain ints; nothing here is probabilistic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "is_prime",
    "is_primitive_root",
    "smallest_primitive_root",
    "all_primitive_roots",
    "legendre_symbol",
    "is_eligible_prime",
    "eligible_primes",
    "QuarticParams",
    "CyclotomicClasses",
    "quartic_decomposition",
    "cyclotomic_classes",
]

# Witness set that makes Miller-Rabin deterministic for every n < 2**64.
_MR_WITNESSES = (2, 325, 9375, 28178, 450775, 9780504, 1795265022)

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic primality test for 0 <= n < 2**64."""
    if n < 0 or n >= 1 << 64:
        raise ValueError("is_prime is deterministic only for 0 <= n < 2**64")
    if n < 2:
        return False
    for q in _SMALL_PRIMES:
        if n % q == 0:
            return n == q
    d = n - 1
    r = (d & -d).bit_length() - 1
    d >>= r
    for a in _MR_WITNESSES:
        a %= n
        if a == 0:
            continue
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _require_odd_prime(p: int) -> None:
    if p < 3 or p % 2 == 0 or not is_prime(p):
        raise ValueError(f"expected an odd prime, got {p}")


def _prime_factors(n: int) -> list[int]:
    """Distinct prime factors by trial division (n here is always p - 1, small)."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def is_primitive_root(g: int, p: int) -> bool:
    """True iff g generates the full multiplicative group mod the odd prime p."""
    _require_odd_prime(p)
    g %= p
    if g == 0:
        return False
    return all(pow(g, (p - 1) // q, p) != 1 for q in _prime_factors(p - 1))


def smallest_primitive_root(p: int) -> int:
    _require_odd_prime(p)
    factors = _prime_factors(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in factors):
            return g
    raise AssertionError("unreachable: every odd prime has a primitive root")


def all_primitive_roots(p: int) -> set[int]:
    """The phi(p-1) generators of Z_p*, as canonical residues."""
    g0 = smallest_primitive_root(p)
    return {pow(g0, e, p) for e in range(1, p - 1) if math.gcd(e, p - 1) == 1}


def legendre_symbol(i: int, p: int) -> int:
    """Legendre symbol (i/p) in {-1, 0, +1} via Euler's criterion."""
    _require_odd_prime(p)
    i %= p
    if i == 0:
        return 0
    r = pow(i, (p - 1) // 2, p)
    return 1 if r == 1 else -1


def is_eligible_prime(p: int) -> bool:
    """True iff p is prime and p = a^2 + 4 with a odd.

    These are exactly the primes p = 4k + 1 (k odd) admitting p = a^2 + 4b^2
    with b = +-1; the smallest are 5, 13, 29, 53, 173, 229, 293.
    """
    if p < 5 or not is_prime(p):
        return False
    a = math.isqrt(p - 4)
    return a * a == p - 4 and a % 2 == 1


def eligible_primes(limit: int) -> list[int]:
    """All eligible primes <= limit, ascending.

    Enumerates a = 1, 3, 5, ... with a^2 + 4 <= limit instead of sieving.
    """
    out = []
    a = 1
    while a * a + 4 <= limit:
        p = a * a + 4
        if is_prime(p):
            out.append(p)
        a += 2
    return out


@dataclass(frozen=True)
class QuarticParams:
    """The tuple (p, k, a, b, g) with p = 4k + 1 = a^2 + 4b^2, a = 1 mod 4, b = +-1.

    The sign of b is pinned to the primitive root g through the quartic
    Jacobi sum, see quartic_decomposition.
    """

    p: int
    k: int
    a: int
    b: int
    g: int

    def __post_init__(self) -> None:
        if self.p != 4 * self.k + 1:
            raise ValueError("k must equal (p - 1) / 4")
        if self.a * self.a + 4 * self.b * self.b != self.p:
            raise ValueError("a^2 + 4b^2 must equal p")
        if self.a % 4 != 1:
            raise ValueError("a must be 1 mod 4")
        if self.b not in (-1, 1):
            raise ValueError("b must be +1 or -1")


@dataclass(frozen=True)
class CyclotomicClasses:
    """The four order-4 cyclotomic classes D_0..D_3 partitioning Z_p*.

    classes[j] = { g^(4i + j) mod p : 0 <= i < (p - 1) / 4 }.
    """

    p: int
    g: int
    classes: tuple[frozenset[int], frozenset[int], frozenset[int], frozenset[int]]

    def union(self, *indices: int) -> frozenset[int]:
        out: frozenset[int] = frozenset()
        for j in indices:
            out |= self.classes[j]
        return out

    @property
    def quadratic_residues(self) -> frozenset[int]:
        # QRs are the even-index classes: squares land on even exponents of g.
        return self.classes[0] | self.classes[2]


def cyclotomic_classes(p: int, g: int) -> CyclotomicClasses:
    """Build D_0..D_3 for a prime p = 1 mod 4 and a primitive root g."""
    _require_odd_prime(p)
    if p % 4 != 1:
        raise ValueError(f"order-4 cyclotomy needs p = 1 mod 4, got {p}")
    if not is_primitive_root(g, p):
        raise ValueError(f"{g} is not a primitive root of {p}")
    buckets: tuple[list[int], ...] = ([], [], [], [])
    x = 1
    for e in range(p - 1):
        buckets[e & 3].append(x)
        x = x * g % p
    return CyclotomicClasses(p=p, g=g, classes=tuple(frozenset(c) for c in buckets))


def quartic_decomposition(p: int, g: int) -> QuarticParams:
    """Write p = a^2 + 4b^2 with a = 1 mod 4 and the sign of b tied to g.

    Let chi be the quartic character with chi(g) = i. The Jacobi sum
    J(chi, chi) = sum_t chi(t) chi(1 - t) is a Gaussian integer of norm p
    whose even imaginary part is 2b after normalising the real part to
    1 mod 4. That b is the one appearing in the closed-form autocorrelation
    of the interleaved construction.
    """
    if not is_eligible_prime(p):
        raise ValueError(f"{p} is not prime of the form a^2 + 4 with a odd")
    if not is_primitive_root(g, p):
        raise ValueError(f"{g} is not a primitive root of {p}")

    index = [0] * p
    x = 1
    for e in range(p - 1):
        index[x] = e
        x = x * g % p

    # chi(t) chi(1-t) = i^(ind(t) + ind(1-t)), so only the exponent mod 4 matters.
    counts = [0, 0, 0, 0]
    for t in range(2, p):
        counts[(index[t] + index[(1 - t) % p]) & 3] += 1
    re = counts[0] - counts[2]
    im = counts[1] - counts[3]
    assert re * re + im * im == p, "Jacobi sum must have norm p"

    if re % 4 != 1:
        re, im = -re, -im
    assert im % 2 == 0 and abs(im) == 2, "eligible p forces imaginary part +-2"
    return QuarticParams(p=p, k=(p - 1) // 4, a=re, b=im // 2, g=g)
