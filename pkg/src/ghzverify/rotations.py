"""Co-rotation of the all-X product observable under per-qubit z rotations.

Two tiers share this module.  Quarter turns stay symbolic: each factor lands
back on +/-X or +/-Y exactly, so the result is a phase-tracked Pauli string.
General angles produce a factored product observable whose dense matrix is
only ever built inside the oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from . import oracle
from .errors import ConsistencyError, DomainError
from .pauli import PauliOperator, QuarterPhase
from .states import GhzLabel, RotatedState, collective_angle, rotated_dense

#: Angle sums within this distance of a quarter-turn multiple snap to the pole.
POLE_SNAP_TOL = 1e-9

_TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class QuarterTurns:
    """Per-qubit rotation counts in units of pi/2, each modulo 4."""

    turns: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.turns:
            raise DomainError("need at least one turn entry")
        if any(t not in (0, 1, 2, 3) for t in self.turns):
            raise DomainError(f"turns must lie in 0..3, got {self.turns}")

    @property
    def n(self) -> int:
        return len(self.turns)

    @property
    def total(self) -> int:
        """Collective quarter-turn count for the all-zero label, modulo 4."""
        return sum(self.turns) % 4

    def angles(self) -> tuple[float, ...]:
        return tuple(t * math.pi / 2 for t in self.turns)


@dataclass(frozen=True)
class ProductObservable:
    """prod_k (X_k cos(angle_k) + Y_k sin(angle_k)), kept in factored form."""

    n: int
    angles: tuple[float, ...]

    def __post_init__(self) -> None:
        if len(self.angles) != self.n:
            raise DomainError(f"expected {self.n} angles, got {len(self.angles)}")


def co_rotate_quarter(turns: QuarterTurns | Sequence[int]) -> PauliOperator:
    """Exact quarter-turn co-rotation: 0 -> +X, 1 -> +Y, 2 -> -X, 3 -> -Y."""
    if not isinstance(turns, QuarterTurns):
        turns = QuarterTurns(tuple(turns))
    n = turns.n
    x = (1 << n) - 1
    z = 0
    flips = 0
    for k, t in enumerate(turns.turns, start=1):
        if t % 2:
            z |= 1 << (n - k)
        if t in (2, 3):
            flips += 1
    return PauliOperator(n, x, z, QuarterPhase(2 * flips))


def co_rotate_general(angles: Sequence[float]) -> ProductObservable:
    """General-angle co-rotation of the all-X string, as a factored observable."""
    angles = tuple(float(a) for a in angles)
    return ProductObservable(len(angles), angles)


def eigen_check_general(label: GhzLabel, state_phi: float,
                        angles: Sequence[float]) -> int | None:
    """Eigenvalue of the angle-set observable on the rotated labeled state.

    Returns +1 when the observable's collective angle matches the state's
    (mod 2 pi), -1 when they differ by pi, and None otherwise.  A minus label
    at angle phi is the plus label at phi + pi up to phase, which shifts the
    comparison point accordingly.  Every returned sign is confirmed against
    the dense state; disagreement raises ConsistencyError.
    """
    observable_angle = collective_angle(label, angles)
    effective = state_phi if label.sign > 0 else state_phi + math.pi
    delta = (observable_angle - effective) % _TWO_PI
    if min(delta, _TWO_PI - delta) <= POLE_SNAP_TOL:
        predicted: int | None = 1
    elif abs(delta - math.pi) <= POLE_SNAP_TOL:
        predicted = -1
    else:
        predicted = None

    vec = rotated_dense(RotatedState(label, state_phi))
    if predicted is None:
        for sign in (1, -1):
            result = oracle.check_eigen(vec, co_rotate_general(angles), sign)
            if result.passed:
                raise ConsistencyError(
                    f"angle sum {observable_angle!r} is off-pole but the dense state "
                    f"is an eigenstate with sign {sign}")
        return None
    result = oracle.check_eigen(vec, co_rotate_general(angles), predicted)
    if not result.passed:
        raise ConsistencyError(
            f"predicted eigenvalue {predicted} fails densely (residual {result.residual:.3e})")
    return predicted
