"""Sequence analyses: autocorrelation spectra, 2-adic complexity, the
spectral product identity, and Berlekamp-Massey linear complexity.

All results are exact integers. The autocorrelation scan works on the packed
sequence form (XOR with a rotation, then popcount), so full spectra stay cheap
well past the period sizes the constructions produce.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from . import bigmod
from .bigmod import MersenneResidue
from .numtheory import cyclotomic_classes
from .sequences import BinarySequence, ConstructionParams, left_shift

__all__ = [
    "AutocorrSpectrum",
    "TwoAdicReport",
    "IdentityCheck",
    "autocorrelation",
    "closed_form_spectrum",
    "two_adic_complexity",
    "hu_identity_check",
    "berlekamp_massey",
    "linear_complexity",
]


@dataclass(frozen=True)
class AutocorrSpectrum:
    """AC(tau) for tau = 0..N-1; AC(0) = N always.

    Serializes via to_record() to {"period": int, "values": comma-joined
    decimal string}.
    """

    period: int
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.values) != self.period:
            raise ValueError("need one value per shift")

    def histogram(self) -> dict[int, int]:
        """Counts of the out-of-phase values (tau >= 1), keyed by value."""
        return dict(sorted(Counter(self.values[1:]).items()))

    def out_of_phase(self) -> set[int]:
        return set(self.values[1:])

    def to_record(self) -> dict[str, object]:
        return {"period": self.period,
                "values": ",".join(str(v) for v in self.values)}


@dataclass(frozen=True)
class TwoAdicReport:
    """Output of the 2-adic complexity computation.

    s2 is S(2) as a canonical residue, gcd = gcd(S(2), 2^N - 1), f the
    cofactor (2^N - 1) / gcd, and phi = floor(log2(f + 1)). Serializes via
    to_record() to {"period", "s2", "gcd", "f", "phi"} with the big integers
    as decimal strings.
    """

    period: int
    s2: int
    gcd: int
    f: int
    phi: int

    def to_record(self) -> dict[str, object]:
        return {"period": self.period, "s2": str(self.s2), "gcd": str(self.gcd),
                "f": str(self.f), "phi": self.phi}


@dataclass(frozen=True)
class IdentityCheck:
    """Both sides of a residue identity, plus whether they agree."""

    holds: bool
    lhs: MersenneResidue
    rhs: MersenneResidue


def autocorrelation(s: BinarySequence) -> AutocorrSpectrum:
    """Periodic autocorrelation AC(tau) = sum_t (-1)^(s(t) + s(t + tau))."""
    n = s.period
    values = [n]
    for tau in range(1, n):
        # AC = N - 2 * (number of positions where s and its shift differ)
        diff = (s.value ^ left_shift(s, tau).value).bit_count()
        values.append(n - 2 * diff)
    return AutocorrSpectrum(period=n, values=tuple(values))


def closed_form_spectrum(params: ConstructionParams) -> AutocorrSpectrum:
    """Autocorrelation of the interleaved construction without touching bits.

    Writing tau = tau1 + 4*tau2, the spectrum is:

      tau = 0:               4p
      tau1 = 0, tau2 != 0:   -4
      tau1 = 2:              +4 once (tau2 + 2d = 0 mod p), else 0
      tau1 in {1, 3}, with r = (tau2 + tau1*d) mod p:
                             -4e        if r = 0
                             -4eb       if r is a quadratic residue (D0 u D2)
                             +4eb       if r is a non-residue (D1 u D3)

    where e = +1 when w(0) != w(1) and e = -1 when w(0) = w(1): complementing
    adjacent columns flips every cross-column correlation, which is exactly
    the tau1-odd block. Out-of-phase values always lie in {0, 4, -4}.
    """
    p, g, d, b = params.p, params.g, params.d, params.b
    classes = cyclotomic_classes(p, g)
    residues = classes.quadratic_residues
    eps = 1 if params.w[0] != params.w[1] else -1
    values = [4 * p]
    for tau in range(1, 4 * p):
        tau1, tau2 = tau % 4, tau // 4
        if tau1 == 0:
            values.append(-4)
        elif tau1 == 2:
            values.append(4 if (tau2 + 2 * d) % p == 0 else 0)
        else:
            r = (tau2 + tau1 * d) % p
            if r == 0:
                values.append(-4 * eps)
            elif r in residues:
                values.append(-4 * eps * b)
            else:
                values.append(4 * eps * b)
    return AutocorrSpectrum(period=4 * p, values=tuple(values))


def two_adic_complexity(s: BinarySequence) -> TwoAdicReport:
    """2-adic complexity phi = floor(log2((2^N - 1) / gcd(2^N - 1, S(2)) + 1)).

    Exact integer arithmetic throughout: floor(log2(m)) is bit_length(m) - 1.
    The all-zero and all-one sequences get the degenerate gcd = 2^N - 1 and
    phi = 1.
    """
    n = s.period
    s2 = bigmod.eval_S(s)
    g = bigmod.gcd_with_modulus(s2)
    f = bigmod.modulus(n) // g
    return TwoAdicReport(period=n, s2=s2.value, gcd=g, f=f,
                         phi=(f + 1).bit_length() - 1)


def hu_identity_check(s: BinarySequence) -> IdentityCheck:
    """Check -2 S(2) T(2^-1) = N + sum_tau AC(tau) 2^tau mod 2^N - 1.

    This holds for every periodic binary sequence; the remaining term of the
    underlying polynomial identity carries a factor sum_i 2^i = 2^N - 1 and
    vanishes here. Returns both sides for diagnostics.
    """
    n = s.period
    if n < 2:
        raise ValueError("identity needs period >= 2")
    st = bigmod.mul(bigmod.eval_S(s), bigmod.eval_T_inv(s))
    lhs = bigmod.add_signed(bigmod.reduce(0, n), -2 * st.value)
    spectrum = autocorrelation(s)
    acc = n
    for tau in range(1, n):
        acc += spectrum.values[tau] << tau
    rhs = bigmod.add_signed(bigmod.reduce(0, n), acc)
    return IdentityCheck(holds=lhs == rhs, lhs=lhs, rhs=rhs)


def berlekamp_massey(bits) -> int:
    """Length of the shortest LFSR over GF(2) generating the given bits.

    Connection polynomials are packed ints (bit i = coefficient of x^i); the
    discrepancy is a masked popcount parity, so each step costs O(L / 64).
    """
    c, prev = 1, 1  # current and previous connection polynomials
    lc = 0
    gap = 1  # steps since the last length change
    seen = 0  # bits processed so far, most recent at bit 0
    for n, bit in enumerate(bits):
        if bit not in (0, 1):
            raise ValueError("bits must be 0 or 1")
        d = bit ^ (((c >> 1) & seen).bit_count() & 1)
        if d == 0:
            gap += 1
        elif 2 * lc <= n:
            c, prev = c ^ (prev << gap), c
            lc = n + 1 - lc
            gap = 1
        else:
            c ^= prev << gap
            gap += 1
        seen = (seen << 1) | bit
    return lc


def linear_complexity(s: BinarySequence) -> int:
    """Linear complexity of the periodic extension, from two periods.

    2N terms suffice to pin any linear complexity <= N.
    """
    two_periods = s.bits() * 2
    return berlekamp_massey(two_periods)
