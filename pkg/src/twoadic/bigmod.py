"""Exact arithmetic modulo 2^N - 1, plus the sequence evaluations S(2) and T(2^-1).

The modulus shape makes reduction cheap: 2^N = 1, so any integer reduces by
folding its N-bit limbs together instead of dividing. Residues are canonical
in [0, 2^N - 2]; the modulus itself reduces to 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .sequences import BinarySequence

__all__ = [
    "MersenneResidue",
    "modulus",
    "reduce",
    "mul",
    "add_signed",
    "gcd_with_modulus",
    "eval_S",
    "eval_T_inv",
]


def modulus(N: int) -> int:
    if N < 1:
        raise ValueError("modulus exponent must be >= 1")
    return (1 << N) - 1


@dataclass(frozen=True)
class MersenneResidue:
    """A canonical residue modulo 2^N - 1."""

    N: int
    value: int

    def __post_init__(self) -> None:
        if self.N < 1:
            raise ValueError("N must be >= 1")
        if self.N > 1 and not 0 <= self.value < (1 << self.N) - 1:
            raise ValueError("value must lie in [0, 2^N - 2]")
        if self.N == 1 and self.value != 0:
            raise ValueError("the ring mod 2^1 - 1 is trivial; only 0 is canonical")


def _fold(x: int, N: int) -> int:
    # sum of N-bit limbs preserves the value mod 2^N - 1
    m = (1 << N) - 1
    while x > m:
        x = (x >> N) + (x & m)
    return 0 if x == m else x


def reduce(x: int, N: int) -> MersenneResidue:
    """Canonical residue of a non-negative integer, by limb folding."""
    if x < 0:
        raise ValueError("reduce takes non-negative input; use add_signed for signed terms")
    if N < 1:
        raise ValueError("modulus exponent must be >= 1")
    return MersenneResidue(N, _fold(x, N))


def mul(x: MersenneResidue, y: MersenneResidue) -> MersenneResidue:
    if x.N != y.N:
        raise ValueError(f"mixed moduli: 2^{x.N}-1 vs 2^{y.N}-1")
    return MersenneResidue(x.N, _fold(x.value * y.value, x.N))


def add_signed(x: MersenneResidue, t: int) -> MersenneResidue:
    """Canonical residue of x + t for any signed integer t."""
    m = modulus(x.N)
    if m == 1:
        return MersenneResidue(x.N, 0)
    return MersenneResidue(x.N, (x.value + t) % m)


def gcd_with_modulus(x: MersenneResidue) -> int:
    """gcd(value, 2^N - 1); the zero residue yields the full modulus."""
    return math.gcd(x.value, modulus(x.N))


def eval_S(s: BinarySequence) -> MersenneResidue:
    """S(2) = sum s(i) 2^i mod 2^N - 1.

    The packed sequence value *is* that integer, so this is a single fold.
    """
    return reduce(s.value, s.period)


def eval_T_inv(s: BinarySequence) -> MersenneResidue:
    """T(2^-1) = sum (-1)^s(i) 2^(-i) mod 2^N - 1.

    Uses 2^-1 = 2^(N-1), hence 2^(-i) = 2^((N - i) mod N).
    """
    n = s.period
    if n < 2:
        raise ValueError("T(2^-1) needs period >= 2")
    m = modulus(n)
    plus = 0
    minus = 0
    v = s.value
    for i in range(n):
        e = (n - i) % n
        if (v >> i) & 1:
            minus += 1 << e
        else:
            plus += 1 << e
    return MersenneResidue(n, (plus - minus) % m)
