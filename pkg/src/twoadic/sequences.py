"""Periodic binary sequences and the interleaved construction built on them.

A sequence of period N is stored as a packed int whose bit i is s(i), with the
period tracked separately (leading zero bits would otherwise vanish). All
operators work on logical indices, so the packed form is an implementation
detail; it keeps the O(N^2) autocorrelation scans cheap via word-wide XOR and
popcount.
"""

from __future__ import annotations

from dataclasses import dataclass

from .numtheory import (
    QuarticParams,
    cyclotomic_classes,
    quartic_decomposition,
    smallest_primitive_root,
)

__all__ = [
    "BinarySequence",
    "ConstructionParams",
    "ADMISSIBLE_W",
    "dhl_sequence",
    "left_shift",
    "add_constant",
    "interleave",
    "deinterleave",
    "construction_params",
    "su_sequence",
    "generalized_interleaved",
    "parse_sequence_literal",
    "sequence_literal",
]

# The four offset vectors w with w(0) = w(2) and w(1) = w(3).
ADMISSIBLE_W = ((0, 0, 0, 0), (0, 1, 0, 1), (1, 0, 1, 0), (1, 1, 1, 1))

# Supports of the four Ding-Helleseth-Lam sequences, as cyclotomic class indices.
_DHL_SUPPORTS = {1: (0, 1), 2: (0, 3), 3: (1, 2), 4: (2, 3)}


@dataclass(frozen=True)
class BinarySequence:
    """One period of a binary sequence; bit i of ``value`` is s(i)."""

    period: int
    value: int

    def __post_init__(self) -> None:
        if self.period < 1:
            raise ValueError("period must be >= 1")
        if not 0 <= self.value < 1 << self.period:
            raise ValueError("value must fit in `period` bits")

    @classmethod
    def from_bits(cls, bits) -> "BinarySequence":
        bits = list(bits)
        value = 0
        for i, bit in enumerate(bits):
            if bit not in (0, 1):
                raise ValueError(f"bit {i} is {bit!r}, expected 0 or 1")
            value |= bit << i
        return cls(period=len(bits), value=value)

    @classmethod
    def from_support(cls, period: int, support) -> "BinarySequence":
        value = 0
        for i in support:
            if not 0 <= i < period:
                raise ValueError(f"support element {i} outside [0, {period})")
            value |= 1 << i
        return cls(period=period, value=value)

    def bit(self, i: int) -> int:
        """s(i) with cyclic indexing."""
        return (self.value >> (i % self.period)) & 1

    def bits(self) -> tuple[int, ...]:
        return tuple((self.value >> i) & 1 for i in range(self.period))

    @property
    def weight(self) -> int:
        return self.value.bit_count()

    def __len__(self) -> int:
        return self.period

    def __str__(self) -> str:
        return "".join(str((self.value >> i) & 1) for i in range(self.period))


def left_shift(s: BinarySequence, d: int) -> BinarySequence:
    """Cyclic left shift: output(i) = s(i + d)."""
    n = s.period
    d %= n
    if d == 0:
        return s
    mask = (1 << n) - 1
    # Shifting the sequence left rotates the packed value right.
    return BinarySequence(n, ((s.value >> d) | (s.value << (n - d))) & mask)


def add_constant(s: BinarySequence, c: int) -> BinarySequence:
    """XOR the constant bit c onto every term (c = 1 complements)."""
    if c not in (0, 1):
        raise ValueError("constant must be 0 or 1")
    if c == 0:
        return s
    return BinarySequence(s.period, s.value ^ ((1 << s.period) - 1))


def interleave(s0: BinarySequence, s1: BinarySequence, s2: BinarySequence,
               s3: BinarySequence) -> BinarySequence:
    """Read the v x 4 column matrix row by row: output(4t + j) = s_j(t)."""
    cols = (s0, s1, s2, s3)
    v = s0.period
    if any(c.period != v for c in cols):
        raise ValueError("all four columns must share one period")
    value = 0
    for j, c in enumerate(cols):
        cv = c.value
        t = 0
        while cv:
            low = cv & 1
            if low:
                value |= 1 << (4 * t + j)
            cv >>= 1
            t += 1
    return BinarySequence(4 * v, value)


def deinterleave(s: BinarySequence) -> tuple[BinarySequence, ...]:
    """Inverse of interleave; requires 4 | N."""
    if s.period % 4 != 0:
        raise ValueError("period must be divisible by 4")
    v = s.period // 4
    cols = []
    for j in range(4):
        value = 0
        for t in range(v):
            value |= ((s.value >> (4 * t + j)) & 1) << t
        cols.append(BinarySequence(v, value))
    return tuple(cols)


def dhl_sequence(p: int, g: int, kind: int) -> BinarySequence:
    """Ding-Helleseth-Lam sequence of period p.

    kind selects the support: 1 -> D0 u D1, 2 -> D0 u D3, 3 -> D1 u D2,
    4 -> D2 u D3. Out-of-phase autocorrelation values are 1 and -3.
    """
    if kind not in _DHL_SUPPORTS:
        raise ValueError(f"kind must be 1..4, got {kind}")
    classes = cyclotomic_classes(p, g)
    return BinarySequence.from_support(p, classes.union(*_DHL_SUPPORTS[kind]))


@dataclass(frozen=True)
class ConstructionParams:
    """Everything defining one interleaved instance: (p, k, a, b, g), d, and w.

    d = (3p + 1) / 4 is the canonical solution of 4d = 1 mod p; w is one of
    the four admissible offset vectors.
    """

    quartic: QuarticParams
    d: int
    w: tuple[int, int, int, int]

    def __post_init__(self) -> None:
        p = self.quartic.p
        if self.d != (3 * p + 1) // 4:
            raise ValueError("d must be (3p + 1) / 4")
        if tuple(self.w) not in ADMISSIBLE_W:
            raise ValueError("w must satisfy w(0) = w(2) and w(1) = w(3)")

    @property
    def p(self) -> int:
        return self.quartic.p

    @property
    def g(self) -> int:
        return self.quartic.g

    @property
    def b(self) -> int:
        return self.quartic.b


def construction_params(p: int, g: int | None = None,
                        w=(0, 1, 0, 1)) -> ConstructionParams:
    """Resolve (p, g, w) into full construction parameters.

    g defaults to the smallest primitive root; b comes from the Jacobi-sum
    decomposition of p.
    """
    if g is None:
        g = smallest_primitive_root(p)
    quartic = quartic_decomposition(p, g)
    return ConstructionParams(quartic=quartic, d=(3 * p + 1) // 4, w=tuple(w))


def su_sequence(params: ConstructionParams) -> BinarySequence:
    """The interleaved sequence of period 4p built from DHL sequences.

    Columns are (s3 + w0, L^d s2 + w1, L^2d s1 + w2, L^3d s1 + w3); the last
    two columns both come from the kind-1 sequence.
    """
    p, g, d = params.p, params.g, params.d
    w = params.w
    s1 = dhl_sequence(p, g, 1)
    s2 = dhl_sequence(p, g, 2)
    s3 = dhl_sequence(p, g, 3)
    return interleave(
        add_constant(s3, w[0]),
        add_constant(left_shift(s2, d), w[1]),
        add_constant(left_shift(s1, 2 * d), w[2]),
        add_constant(left_shift(s1, 3 * d), w[3]),
    )


def generalized_interleaved(p: int, g: int, kinds, shifts, w, *,
                            allow_any_w: bool = False) -> BinarySequence:
    """Interleave L^shifts[j](s^kinds[j]) + w[j] for arbitrary kind/shift picks.

    The standard construction is kinds = (3, 2, 1, 1), shifts = (0, d, 2d, 3d).
    Offset vectors outside the admissible four need allow_any_w=True.
    """
    kinds = tuple(kinds)
    shifts = tuple(shifts)
    w = tuple(w)
    if len(kinds) != 4 or len(shifts) != 4 or len(w) != 4:
        raise ValueError("kinds, shifts and w must have four entries each")
    if any(k not in _DHL_SUPPORTS for k in kinds):
        raise ValueError("kinds must be in 1..4")
    if any(bit not in (0, 1) for bit in w):
        raise ValueError("w entries must be bits")
    if not allow_any_w and w not in ADMISSIBLE_W:
        raise ValueError("w must satisfy w(0) = w(2) and w(1) = w(3); "
                         "pass allow_any_w=True to override")
    base = {k: dhl_sequence(p, g, k) for k in set(kinds)}
    cols = [add_constant(left_shift(base[kinds[j]], shifts[j]), w[j]) for j in range(4)]
    return interleave(*cols)


def parse_sequence_literal(text: str) -> BinarySequence:
    """Parse the fixture literal: a '0'/'1' line, optionally 'N=<int>;' prefixed.

    Blank lines and lines starting with '#' are skipped, so files written by
    the CLI (parameter header plus payload) round-trip.
    """
    payload = None
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            payload = line
            break
    if payload is None:
        raise ValueError("no sequence payload found")
    declared = None
    if ";" in payload:
        head, payload = payload.split(";", 1)
        if not head.startswith("N="):
            raise ValueError(f"bad sequence prefix {head!r}, expected 'N=<int>'")
        declared = int(head[2:])
    if not payload or set(payload) - {"0", "1"}:
        raise ValueError("sequence payload must be a nonempty string of 0/1")
    if declared is not None and declared != len(payload):
        raise ValueError(f"declared N={declared} but payload has {len(payload)} bits")
    return BinarySequence.from_bits(int(ch) for ch in payload)


def sequence_literal(s: BinarySequence, *, include_period: bool = True) -> str:
    """Serialize to the fixture literal format."""
    body = str(s)
    return f"N={s.period};{body}" if include_period else body
