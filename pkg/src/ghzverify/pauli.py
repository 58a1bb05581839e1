"""Exact algebra of phase-tracked multi-qubit Pauli strings.

Operators are stored in symplectic form: two n-bit masks plus a power of i.
Qubit 1 occupies the most significant bit of each mask, so rendered strings
read left to right ("qubit 1 first").  The letter on qubit k is determined
by its (x, z) bit pair:

    (0, 0) -> I    (1, 0) -> X    (0, 1) -> Z    (1, 1) -> Y

The product convention is the cyclic one: X*Y = iZ, Y*Z = iX, Z*X = iY.
Every operation below is integer arithmetic on masks and phase exponents,
so products, commutators and equality checks are exact; nothing in this
module touches floating point.

Text rendering is "(sign)(i?)letters", e.g. "+XXX", "-YYY", "+iXZ", "-iY".
"""

from __future__ import annotations

import re
from dataclasses import dataclass, replace
from typing import Iterable

from .errors import DimensionError, DomainError, LetterError

_PHASE_TEXT = ("+", "+i", "-", "-i")
_LETTER_BITS = {"I": (0, 0), "X": (1, 0), "Z": (0, 1), "Y": (1, 1)}
_BITS_LETTER = {bits: letter for letter, bits in _LETTER_BITS.items()}
_TEXT_RE = re.compile(r"^([+-]?)(i?)([IXYZ]+)$")


@dataclass(frozen=True)
class QuarterPhase:
    """A fourth root of unity i**exponent, with the exponent kept modulo 4."""

    exponent: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "exponent", self.exponent % 4)

    def __mul__(self, other: QuarterPhase) -> QuarterPhase:
        return QuarterPhase(self.exponent + other.exponent)

    @property
    def value(self) -> complex:
        return (1, 1j, -1, -1j)[self.exponent]

    @property
    def sign(self) -> int:
        """The phase as an integer +1/-1; imaginary phases have no sign."""
        if self.exponent == 0:
            return 1
        if self.exponent == 2:
            return -1
        raise DomainError(f"phase {self} is imaginary, not a sign")

    def __str__(self) -> str:
        return _PHASE_TEXT[self.exponent]


@dataclass(frozen=True)
class PauliOperator:
    """A phase-tracked tensor product of I/X/Y/Z over ``n`` qubits.

    ``x_bits`` marks the qubits whose letter anticommutes with Z (X or Y);
    ``z_bits`` marks those anticommuting with X (Z or Y).  Bit k sits at
    position n - k, i.e. qubit 1 is the most significant bit.
    """

    n: int
    x_bits: int
    z_bits: int
    phase: QuarterPhase = QuarterPhase(0)

    def __post_init__(self) -> None:
        if self.n < 1:
            raise DimensionError("operator needs at least one qubit")
        full = (1 << self.n) - 1
        if not 0 <= self.x_bits <= full or not 0 <= self.z_bits <= full:
            raise DomainError("bit mask out of range for qubit count")

    def letter(self, k: int) -> str:
        """Letter on qubit k (1-based, qubit 1 leftmost)."""
        if not 1 <= k <= self.n:
            raise DomainError(f"qubit index {k} out of range 1..{self.n}")
        pos = self.n - k
        return _BITS_LETTER[(self.x_bits >> pos) & 1, (self.z_bits >> pos) & 1]

    def letters(self) -> str:
        return "".join(self.letter(k) for k in range(1, self.n + 1))

    @property
    def y_bits(self) -> int:
        return self.x_bits & self.z_bits

    @property
    def is_xy_string(self) -> bool:
        """True when every letter is X or Y (no I, no Z)."""
        return self.x_bits == (1 << self.n) - 1

    def __mul__(self, other: PauliOperator) -> PauliOperator:
        return multiply(self, other)

    def __str__(self) -> str:
        return render(self)


def identity(n: int) -> PauliOperator:
    return PauliOperator(n, 0, 0)


def from_letters(letters: Iterable[str]) -> PauliOperator:
    """Build a phase +1 operator from a letter sequence such as "YXX".

    Round-trips with :meth:`PauliOperator.letters`.
    """
    seq = list(letters)
    if not seq:
        raise DimensionError("empty letter sequence")
    x = z = 0
    for ch in seq:
        try:
            xb, zb = _LETTER_BITS[ch]
        except KeyError:
            raise LetterError(f"unknown Pauli letter {ch!r}") from None
        x = (x << 1) | xb
        z = (z << 1) | zb
    return PauliOperator(len(seq), x, z)


def to_letters(op: PauliOperator) -> str:
    return op.letters()


def single(n: int, k: int, letter: str) -> PauliOperator:
    """The operator that is ``letter`` on qubit k and identity elsewhere."""
    return from_letters("I" * (k - 1) + letter + "I" * (n - k))


def multiply(a: PauliOperator, b: PauliOperator) -> PauliOperator:
    """Exact operator product a*b with the accumulated power of i.

    The per-qubit phase bookkeeping follows from writing each letter as
    i**(x*z) X**x Z**z and commuting the Z of the left factor past the X of
    the right one.
    """
    if a.n != b.n:
        raise DimensionError(f"qubit counts differ: {a.n} vs {b.n}")
    x = a.x_bits ^ b.x_bits
    z = a.z_bits ^ b.z_bits
    exponent = (
        a.phase.exponent
        + b.phase.exponent
        + (a.x_bits & a.z_bits).bit_count()
        + (b.x_bits & b.z_bits).bit_count()
        + 2 * (a.z_bits & b.x_bits).bit_count()
        - (x & z).bit_count()
    )
    return PauliOperator(a.n, x, z, QuarterPhase(exponent))


def commutes(a: PauliOperator, b: PauliOperator) -> bool:
    """True iff the symplectic inner product of the two mask pairs is even."""
    if a.n != b.n:
        raise DimensionError(f"qubit counts differ: {a.n} vs {b.n}")
    overlap = (a.x_bits & b.z_bits).bit_count() + (a.z_bits & b.x_bits).bit_count()
    return overlap % 2 == 0


def y_count(op: PauliOperator) -> int:
    """Number of Y letters in an X/Y string; rejects I and Z letters."""
    if not op.is_xy_string:
        raise LetterError(f"{op.letters()} contains I or Z letters")
    return op.y_bits.bit_count()


def render(op: PauliOperator) -> str:
    """Text form "(sign)(i?)letters", e.g. "-YYY" or "+iXZ"."""
    return f"{op.phase}{op.letters()}"


def parse(text: str) -> PauliOperator:
    """Inverse of :func:`render`; a missing sign means +1."""
    match = _TEXT_RE.match(text.strip())
    if match is None:
        raise LetterError(f"cannot parse operator text {text!r}")
    sign, imag, letters = match.groups()
    exponent = (2 if sign == "-" else 0) + (1 if imag else 0)
    return replace(from_letters(letters), phase=QuarterPhase(exponent))


def operator_to_json(op: PauliOperator) -> dict:
    """JSON form: the text rendering plus an explicit phase field."""
    return {"text": render(op), "phase": str(op.phase)}
