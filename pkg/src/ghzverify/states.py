"""GHZ basis labels, their dense statevectors, and the collective-angle law.

A basis pair is named by an n-bit pattern plus a sign: the state is
(|bits> + sign |~bits>)/sqrt(2).  A pattern and its complement name the same
physical pair, so the canonical form keeps the most significant bit (qubit 1)
at 0; the two signs over the 2**(n-1) canonical patterns span the full
2**n-dimensional space.

Rotating qubit k about its z axis by phi_k multiplies the amplitude at
computational index b by exp(-i (+/-) phi_k / 2), the sign set by bit k of b.
On a labeled pair this collapses to a single parameter, the collective angle
Phi = sum_k (-1)^{bits_k} phi_k: the rotated state is

    cos(Phi/2) |pair, sign> - i sin(Phi/2) |pair, -sign>.

Amplitudes are 2*pi-antiperiodic in Phi (a full turn flips the overall sign).
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import CapacityError, DimensionError, DomainError

#: Largest qubit count for which dense 2**n statevectors are materialized.
DENSE_VECTOR_CAP = 14

_LABEL_RE = re.compile(r"^([01]+)([+-])$")


@dataclass(frozen=True)
class GhzLabel:
    """Identifies one GHZ basis state: n qubits, bit pattern, and sign."""

    n: int
    bits: int
    sign: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise DimensionError("label needs at least one qubit")
        if not 0 <= self.bits < (1 << self.n):
            raise DomainError("label bits out of range for qubit count")
        if self.sign not in (1, -1):
            raise DomainError("label sign must be +1 or -1")

    @property
    def complement_bits(self) -> int:
        return self.bits ^ ((1 << self.n) - 1)

    @property
    def is_canonical(self) -> bool:
        """Canonical form puts qubit 1's bit at 0."""
        return self.bits < (1 << (self.n - 1))

    def canonical(self) -> GhzLabel:
        """The canonical label of the same pair.

        For sign -1 the complement pattern names the negated vector; callers
        comparing states rather than rays must track that sign themselves.
        """
        if self.is_canonical:
            return self
        return GhzLabel(self.n, self.complement_bits, self.sign)

    def bit(self, k: int) -> int:
        """Bit of qubit k (1-based, qubit 1 most significant)."""
        if not 1 <= k <= self.n:
            raise DomainError(f"qubit index {k} out of range 1..{self.n}")
        return (self.bits >> (self.n - k)) & 1

    def bits_text(self) -> str:
        return format(self.bits, f"0{self.n}b")

    def __str__(self) -> str:
        return self.bits_text() + ("+" if self.sign > 0 else "-")


def parse_label(text: str, n: int | None = None) -> GhzLabel:
    """Parse "010+" style labels; ``n`` enforces an expected length."""
    match = _LABEL_RE.match(text.strip())
    if match is None:
        raise DomainError(f"cannot parse state label {text!r} (want e.g. '010+')")
    bits_str, sign_str = match.groups()
    if n is not None and len(bits_str) != n:
        raise DimensionError(f"label {text!r} has {len(bits_str)} bits, expected {n}")
    return GhzLabel(len(bits_str), int(bits_str, 2), 1 if sign_str == "+" else -1)


@dataclass(frozen=True)
class RotatedState:
    """A labeled GHZ pair viewed at collective angle ``phi`` (radians)."""

    label: GhzLabel
    phi: float


def _check_dense_cap(n: int) -> None:
    if n > DENSE_VECTOR_CAP:
        raise CapacityError(f"dense statevectors are capped at {DENSE_VECTOR_CAP} qubits (got {n})")


def build_state(label: GhzLabel) -> np.ndarray:
    """Dense amplitudes of (|bits> + sign |~bits>)/sqrt(2)."""
    _check_dense_cap(label.n)
    vec = np.zeros(1 << label.n, dtype=complex)
    amp = 1.0 / math.sqrt(2.0)
    vec[label.bits] = amp
    vec[label.complement_bits] = label.sign * amp
    return vec


def collective_angle(label: GhzLabel, phis: Sequence[float]) -> float:
    """The signed sum of per-qubit angles, sum_k (-1)^{bits_k} phi_k."""
    if len(phis) != label.n:
        raise DimensionError(f"expected {label.n} angles, got {len(phis)}")
    return float(sum((-1.0 if label.bit(k) else 1.0) * phi for k, phi in enumerate(phis, start=1)))


def rotate_2d(state: RotatedState, delta_phi: float) -> RotatedState:
    """Advance the collective angle; the label never changes."""
    return RotatedState(state.label, state.phi + delta_phi)


def rotated_dense(state: RotatedState) -> np.ndarray:
    """Expand the two-component view into dense amplitudes."""
    partner = GhzLabel(state.label.n, state.label.bits, -state.label.sign)
    half = 0.5 * state.phi
    return math.cos(half) * build_state(state.label) - 1j * math.sin(half) * build_state(partner)


def signed_bit_sums(n: int, phis: Sequence[float]) -> np.ndarray:
    """For every index b, sum_k (-1)^{b_k} phi_k (qubit 1 = most significant)."""
    if len(phis) != n:
        raise DimensionError(f"expected {n} angles, got {len(phis)}")
    idx = np.arange(1 << n)
    total = np.zeros(1 << n)
    for k, phi in enumerate(phis, start=1):
        bit = (idx >> (n - k)) & 1
        total += (1 - 2 * bit) * phi
    return total


def apply_rotations(state: np.ndarray, label: GhzLabel, phis: Sequence[float]) -> np.ndarray:
    """Rotate each qubit about its own z axis by the given physical angle.

    The action is diagonal and label-independent; the label is accepted for
    dimension checking and to document which two-dimensional representation
    the caller is tracking.
    """
    state = np.asarray(state, dtype=complex)
    if state.shape != (1 << label.n,):
        raise DimensionError(f"state has dimension {state.shape}, expected ({1 << label.n},)")
    return state * np.exp(-0.5j * signed_bit_sums(label.n, phis))


def pihalf_state(label: GhzLabel) -> np.ndarray:
    """The quarter-turn basis state ((1-i)/2)(|bits> + sign*i |~bits>).

    Equals :func:`apply_rotations` on :func:`build_state` for any angle set
    whose collective angle is pi/2, global phase included.
    """
    _check_dense_cap(label.n)
    vec = np.zeros(1 << label.n, dtype=complex)
    vec[label.bits] = (1 - 1j) / 2
    vec[label.complement_bits] = label.sign * 1j * (1 - 1j) / 2
    return vec


def inner_product(a: np.ndarray, b: np.ndarray) -> complex:
    """<a|b>, conjugate-linear in the first argument."""
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape != b.shape:
        raise DimensionError(f"state dimensions differ: {a.shape} vs {b.shape}")
    return complex(np.vdot(a, b))


def max_norm_diff(a: np.ndarray, b: np.ndarray) -> float:
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape != b.shape:
        raise DimensionError(f"state dimensions differ: {a.shape} vs {b.shape}")
    return float(np.max(np.abs(a - b)))


def states_equal(a: np.ndarray, b: np.ndarray, tol: float = 1e-12) -> bool:
    """Phase-sensitive comparison in max norm."""
    return max_norm_diff(a, b) <= tol


def equal_up_to_global_phase(a: np.ndarray, b: np.ndarray, tol: float = 1e-12) -> bool:
    """Ray-level comparison: some unit phase aligns the two vectors."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.shape != b.shape:
        raise DimensionError(f"state dimensions differ: {a.shape} vs {b.shape}")
    pivot = int(np.argmax(np.abs(a)))
    if abs(a[pivot]) < tol:
        return bool(np.max(np.abs(b)) <= tol)
    phase = b[pivot] / a[pivot]
    if abs(abs(phase) - 1.0) > tol:
        return False
    return bool(np.max(np.abs(a * phase - b)) <= tol)


def label_to_json(state: RotatedState | GhzLabel) -> dict:
    """Symbolic JSON form {n, label_bits, sign, phi}."""
    if isinstance(state, GhzLabel):
        label, phi = state, 0.0
    else:
        label, phi = state.label, state.phi
    return {"n": label.n, "label_bits": label.bits_text(), "sign": label.sign, "phi": phi}


def state_to_json(vec: np.ndarray) -> dict:
    """Dense JSON form {n, amplitudes: [[re, im], ...]}."""
    vec = np.asarray(vec, dtype=complex)
    n = int(vec.shape[0]).bit_length() - 1
    if vec.shape != (1 << n,):
        raise DimensionError("statevector length is not a power of two")
    return {"n": n, "amplitudes": [[z.real, z.imag] for z in vec]}


def state_from_json(payload: dict) -> np.ndarray:
    amps = payload["amplitudes"]
    if len(amps) != 1 << int(payload["n"]):
        raise DimensionError("amplitude count does not match qubit count")
    return np.array([complex(re, im) for re, im in amps], dtype=complex)
