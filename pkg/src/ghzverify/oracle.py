"""Dense numeric cross-checks for every symbolic claim.

This module is the independent second route: operators become explicit
matrices (or matrix-free actions on amplitude vectors) and claims are judged
by residuals in max norm.  Tolerance is 1e-12 throughout; amplitudes are
O(1) and all matrix entries are exact fourth roots of unity times exact
cosines, which leaves at least three orders of magnitude of headroom in
double precision.

Caps: vectors up to 2**14 amplitudes, full matrices up to 2**10 x 2**10.
Conjugation checks above the matrix cap exploit that both sides map each
computational basis vector to a phase times its bit-complement, so columns
can be compared without materializing anything quadratic.
"""

from __future__ import annotations

import math
from typing import NamedTuple, Sequence

import numpy as np

from .errors import CapacityError, DimensionError
from .pauli import PauliOperator, from_letters
from .states import DENSE_VECTOR_CAP, GhzLabel, build_state, signed_bit_sums

#: Largest qubit count for which full 2**n x 2**n matrices are built.
DENSE_MATRIX_CAP = 10

EIGEN_TOL = 1e-12

PAULI_1Q = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}


class CheckResult(NamedTuple):
    passed: bool
    residual: float


def observable_factor(phi: float) -> np.ndarray:
    """Single-qubit X cos(phi) + Y sin(phi)."""
    return np.array([[0, math.cos(phi) - 1j * math.sin(phi)],
                     [math.cos(phi) + 1j * math.sin(phi), 0]], dtype=complex)


def observable_matrix(angles: Sequence[float]) -> np.ndarray:
    """Kronecker product of the per-qubit rotated-X factors."""
    n = len(angles)
    if n > DENSE_MATRIX_CAP:
        raise CapacityError(f"dense matrices are capped at {DENSE_MATRIX_CAP} qubits (got {n})")
    out = np.eye(1, dtype=complex)
    for phi in angles:
        out = np.kron(out, observable_factor(phi))
    return out


def materialize(op) -> np.ndarray:
    """Dense matrix of a Pauli string or a product observable."""
    if isinstance(op, PauliOperator):
        if op.n > DENSE_MATRIX_CAP:
            raise CapacityError(f"dense matrices are capped at {DENSE_MATRIX_CAP} qubits (got {op.n})")
        out = np.eye(1, dtype=complex)
        for k in range(1, op.n + 1):
            out = np.kron(out, PAULI_1Q[op.letter(k)])
        return op.phase.value * out
    angles = getattr(op, "angles", None)
    if angles is not None:
        return observable_matrix(angles)
    raise TypeError(f"cannot materialize {type(op).__name__}")


def apply_pauli(op: PauliOperator, vec: np.ndarray) -> np.ndarray:
    """Matrix-free action of a Pauli string on an amplitude vector.

    The string maps basis index b to b xor x_bits with phase
    i**(exponent + #Y) * (-1)**popcount(b & z_bits).
    """
    vec = np.asarray(vec, dtype=complex)
    if vec.shape != (1 << op.n,):
        raise DimensionError(f"state has dimension {vec.shape}, expected ({1 << op.n},)")
    idx = np.arange(1 << op.n)
    masked = idx & op.z_bits
    parity = np.zeros(1 << op.n, dtype=np.int64)
    while masked.any():
        parity ^= masked & 1
        masked >>= 1
    coeff = op.phase.value * (1j) ** (op.y_bits.bit_count() % 4) * (1 - 2 * parity)
    out = np.empty_like(vec)
    out[idx ^ op.x_bits] = coeff * vec
    return out


def apply_observable(vec: np.ndarray, angles: Sequence[float]) -> np.ndarray:
    """Matrix-free action of the product observable with the given angles.

    Every factor is antidiagonal, so index b maps to its full bit-complement
    with phase exp(i sum_k (-1)^{b_k} angle_k).
    """
    n = len(angles)
    vec = np.asarray(vec, dtype=complex)
    if vec.shape != (1 << n,):
        raise DimensionError(f"state has dimension {vec.shape}, expected ({1 << n},)")
    phases = np.exp(1j * signed_bit_sums(n, angles))
    return (phases * vec)[::-1]


def rotation_diagonal(angles: Sequence[float]) -> np.ndarray:
    """Diagonal of the per-qubit z-rotation product."""
    n = len(angles)
    if n > DENSE_VECTOR_CAP:
        raise CapacityError(f"dense statevectors are capped at {DENSE_VECTOR_CAP} qubits (got {n})")
    return np.exp(-0.5j * signed_bit_sums(n, angles))


def check_eigen(state: np.ndarray, op, expected: int) -> CheckResult:
    """Residual test of op|state> = expected|state> in max norm.

    ``op`` may be a dense matrix, a PauliOperator, or anything with an
    ``angles`` attribute (applied matrix-free).
    """
    state = np.asarray(state, dtype=complex)
    if isinstance(op, np.ndarray):
        if op.shape != (state.shape[0], state.shape[0]):
            raise DimensionError(f"operator shape {op.shape} does not match state {state.shape}")
        image = op @ state
    elif isinstance(op, PauliOperator):
        image = apply_pauli(op, state)
    else:
        angles = getattr(op, "angles", None)
        if angles is None:
            raise TypeError(f"cannot apply {type(op).__name__}")
        image = apply_observable(state, angles)
    residual = float(np.max(np.abs(image - expected * state)))
    return CheckResult(residual < EIGEN_TOL, residual)


def check_conjugation(angles: Sequence[float]) -> CheckResult:
    """Compare rotating the all-X string by conjugation against the factored form.

    Left side: R diag-conjugates the all-X matrix; right side: the product
    observable built directly from the angles.  Above the matrix cap the two
    antidiagonals are compared column by column.
    """
    n = len(angles)
    diag = rotation_diagonal(angles)
    if n <= DENSE_MATRIX_CAP:
        all_x = materialize(from_letters("X" * n))
        lhs = (diag[:, None] * all_x) * np.conj(diag)[None, :]
        rhs = observable_matrix(angles)
        residual = float(np.max(np.abs(lhs - rhs)))
    else:
        # Column b of R O R^-1 is d[~b] conj(d[b]) e_{~b}; same shape as the
        # factored observable's column phase exp(i sum (-1)^{b_k} angle_k).
        lhs_phase = diag[::-1] * np.conj(diag)
        rhs_phase = np.exp(1j * signed_bit_sums(n, angles))
        residual = float(np.max(np.abs(lhs_phase - rhs_phase)))
    return CheckResult(residual < EIGEN_TOL, residual)


def expectation(vec: np.ndarray, op) -> complex:
    """<vec| op |vec> using the matrix-free applications above."""
    vec = np.asarray(vec, dtype=complex)
    if isinstance(op, PauliOperator):
        image = apply_pauli(op, vec)
    elif isinstance(op, np.ndarray):
        image = op @ vec
    else:
        image = apply_observable(vec, op.angles)
    return complex(np.vdot(vec, image))


def two_dim_invariance_residual(label: GhzLabel, angles: Sequence[float]) -> float:
    """How far rotation leaks out of the labeled pair's two-dimensional span."""
    plus = build_state(GhzLabel(label.n, label.bits, 1))
    minus = build_state(GhzLabel(label.n, label.bits, -1))
    diag = rotation_diagonal(angles)
    worst = 0.0
    for base in (plus, minus):
        rotated = diag * base
        projected = np.vdot(plus, rotated) * plus + np.vdot(minus, rotated) * minus
        worst = max(worst, float(np.max(np.abs(rotated - projected))))
    return worst
