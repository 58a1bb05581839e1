"""Noncontextual value assignments, sign contradictions, and the swap argument.

A hidden-variable assignment gives every single-qubit X and Y a definite
value +/-1, so any +/-1-phased X/Y string inherits the product of its factor
values.  On a quarter-turn basis state, the values of the n single-Y strings
fix (by the product rule) the predicted value of every S-pole string, and
each prediction has the opposite sign from the exact eigenvalue: one
absolute contradiction per S string.

The exhaustive search below confirms the stronger statement by brute force:
no assignment at all matches the eigenvalues of every N- and S-pole string
simultaneously, while dropping the S constraints leaves exactly 2**n
survivors.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Mapping

import numpy as np

from . import oracle
from .errors import (CapacityError, ConsistencyError, DimensionError,
                     DomainError, LetterError)
from .pauli import PauliOperator, QuarterPhase, multiply
from .poles import (Pole, PoleOperator, enumerate_pole, eigenvalue_symbolic,
                    single_y_generator, xy_string)
from .states import GhzLabel

#: Above this qubit count the 2**(2n) assignment sweep is refused.
EXHAUSTIVE_CAP = 10


@dataclass(frozen=True)
class ValueAssignment:
    """Definite +/-1 values for every X_k and Y_k.

    Bit k of ``vx`` (qubit 1 most significant) set means v(X_k) = -1, clear
    means +1; ``vy`` likewise for v(Y_k).
    """

    n: int
    vx: int
    vy: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise DimensionError("assignment needs at least one qubit")
        full = (1 << self.n) - 1
        if not 0 <= self.vx <= full or not 0 <= self.vy <= full:
            raise DomainError("assignment mask out of range for qubit count")

    @classmethod
    def from_index(cls, n: int, index: int) -> ValueAssignment:
        """Decode 0 <= index < 2**(2n): high n bits are vx, low n bits vy."""
        if not 0 <= index < (1 << (2 * n)):
            raise DomainError(f"assignment index {index} out of range for n={n}")
        return cls(n, index >> n, index & ((1 << n) - 1))

    def x_value(self, k: int) -> int:
        return -1 if (self.vx >> (self.n - k)) & 1 else 1

    def y_value(self, k: int) -> int:
        return -1 if (self.vy >> (self.n - k)) & 1 else 1


@dataclass(frozen=True)
class ContradictionReport:
    """One S-pole (or swap-transported) string whose predicted value is wrong."""

    n: int
    s_operator: PoleOperator
    lhv_value: int
    quantum_value: int
    generators_used: tuple[PoleOperator, ...]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "s_operator": self.s_operator.letters,
            "lhv": self.lhv_value,
            "quantum": self.quantum_value,
            "generators": [g.letters for g in self.generators_used],
        }


def value_of(assignment: ValueAssignment, op: PauliOperator) -> int:
    """Product of the assigned factor values, times the string's sign."""
    if op.n != assignment.n:
        raise DimensionError(f"operator acts on {op.n} qubits, assignment on {assignment.n}")
    if not op.is_xy_string:
        raise LetterError(f"{op.letters()} contains I or Z letters")
    sign = op.phase.sign
    x_mask = op.x_bits & ~op.z_bits
    y_mask = op.y_bits
    flips = (assignment.vx & x_mask).bit_count() + (assignment.vy & y_mask).bit_count()
    return -sign if flips % 2 else sign


def predicted_s_values(n: int, quantum_n_values: Mapping[int, int]) -> dict[PoleOperator, int]:
    """Product-rule predictions for every S string from the single-Y values.

    ``quantum_n_values`` maps the Y position k of each single-Y generator to
    its observed value v(O_k); all n positions must be present.
    """
    missing = [k for k in range(1, n + 1) if k not in quantum_n_values]
    if missing:
        raise DomainError(f"missing single-Y values for positions {missing}")
    predictions = {}
    for target in enumerate_pole(n, Pole.S):
        value = 1
        for k in target.y_positions:
            value *= quantum_n_values[k]
        predictions[target] = value
    return predictions


def find_contradictions(label: GhzLabel) -> list[ContradictionReport]:
    """All S-pole contradictions on the label's quarter-turn state.

    The quantum side is always the exact symbolic eigenvalue; the prediction
    side is the product rule over the single-Y generator values.
    """
    if not label.is_canonical:
        raise DomainError(f"label {label} is not canonical (qubit 1 bit must be 0)")
    n = label.n
    generator_values = {}
    generators = {}
    for k in range(1, n + 1):
        gen = single_y_generator(n, k)
        value = eigenvalue_symbolic(label, 1, gen)
        if value is None:
            raise ConsistencyError(f"single-Y generator {gen.letters} lost its eigenstate")
        generators[k] = gen
        generator_values[k] = value
    predictions = predicted_s_values(n, generator_values)
    reports = []
    for target in enumerate_pole(n, Pole.S):
        quantum = eigenvalue_symbolic(label, 1, target)
        if quantum is None:
            raise ConsistencyError(f"S operator {target.letters} lost its eigenstate")
        lhv = predictions[target]
        if lhv != -quantum:
            raise ConsistencyError(
                f"{target.letters}: predicted {lhv} does not oppose eigenvalue {quantum}")
        reports.append(ContradictionReport(
            n, target, lhv, quantum,
            tuple(generators[k] for k in target.y_positions)))
    return reports


def _constraints(label: GhzLabel, require_s: bool) -> list[tuple[PoleOperator, int]]:
    ops = list(enumerate_pole(label.n, Pole.N))
    if require_s:
        ops += enumerate_pole(label.n, Pole.S)
    out = []
    for op in ops:
        expected = eigenvalue_symbolic(label, 1, op)
        if expected is None:
            raise ConsistencyError(f"{op.letters} lost its eigenstate")
        out.append((op, expected))
    return out


def exhaustive_search(label: GhzLabel, *, require_s: bool = True) -> int:
    """Count assignments matching every N (and optionally S) eigenvalue.

    Sweeps all 2**(2n) assignments in index order; the count is a pure
    reduction, so any partition of the range gives the same total.
    """
    n = label.n
    if n > EXHAUSTIVE_CAP:
        raise CapacityError(f"exhaustive search is capped at {EXHAUSTIVE_CAP} qubits (got {n})")
    index = np.arange(1 << (2 * n), dtype=np.int64)
    vx = index >> n
    vy = index & ((1 << n) - 1)
    # parity[m] = popcount(m) mod 2 for every n-bit mask
    parity = np.zeros(1 << n, dtype=np.int8)
    for value in range(1 << n):
        parity[value] = value.bit_count() & 1
    alive = np.ones(index.shape, dtype=bool)
    for op, expected in _constraints(label, require_s):
        x_mask = op.op.x_bits & ~op.op.z_bits
        y_mask = op.op.y_bits
        flips = parity[vx & x_mask] ^ parity[vy & y_mask]
        values = 1 - 2 * flips.astype(np.int64)
        alive &= values == expected
        if not alive.any():
            return 0
    return int(alive.sum())


def verify_ks_identity(n: int, y_positions: Iterable[int]) -> bool:
    """Exact product identity for an odd set of single-Y generators.

    The ordered product of the generators at the given Y positions must
    equal the multi-Y string at those positions with sign + for sizes
    1 mod 4 and - for sizes 3 mod 4.
    """
    positions = sorted(set(y_positions))
    if len(positions) % 2 == 0:
        raise DomainError(f"need an odd number of Y positions, got {len(positions)}")
    product = reduce(multiply, (single_y_generator(n, k).op for k in positions))
    target = xy_string(n, positions)
    expected_exponent = 0 if len(positions) % 4 == 1 else 2
    expected = PauliOperator(n, target.x_bits, target.z_bits, QuarterPhase(expected_exponent))
    return product == expected


def _subset_mask(n: int, subset: Iterable[int]) -> int:
    mask = 0
    for k in set(subset):
        if not 1 <= k <= n:
            raise DomainError(f"qubit index {k} out of range 1..{n}")
        mask |= 1 << (n - k)
    return mask


def ew_swap(op: PoleOperator, subset: Iterable[int]) -> PoleOperator:
    """Interchange X and Y on an odd set of qubits.

    Flips the Y-count parity, carrying N/S strings to E/W and back.
    """
    subset = set(subset)
    if len(subset) % 2 == 0:
        raise DomainError(f"swap subset must have odd size, got {len(subset)}")
    mask = _subset_mask(op.n, subset)
    swapped = PauliOperator(op.n, op.op.x_bits, op.op.z_bits ^ mask)
    return PoleOperator.from_op(swapped)


def _swapped_state(label: GhzLabel, mask: int) -> tuple[GhzLabel, int]:
    """Image of the label's quarter-turn state under the swap unitary.

    Per swapped qubit the unitary is (X + Y)/sqrt(2), which flips the bit and
    contributes a phase exp(+/- i pi/4).  Collecting phases turns
    |bits> + sign i |~bits> into |bits^mask> + sign i**(1 - z) |~(bits^mask)>
    with z = (#swapped zeros) - (#swapped ones) of the original pattern.
    """
    z = (mask & label.complement_bits).bit_count() - (mask & label.bits).bit_count()
    quarter = (1 - z) % 4
    return GhzLabel(label.n, label.bits ^ mask, label.sign), quarter


def ew_contradictions(label: GhzLabel, subset: Iterable[int]) -> list[ContradictionReport]:
    """Transport the N/S contradiction analysis through an odd X<->Y swap.

    The swapped generators keep their values on the swapped state, the
    product rule is form-invariant, and each swapped S target still opposes
    its prediction, so exactly as many contradictions appear among E/W
    strings as at the S pole.
    """
    subset = set(subset)
    if len(subset) % 2 == 0:
        raise DomainError(f"swap subset must have odd size, got {len(subset)}")
    if not label.is_canonical:
        raise DomainError(f"label {label} is not canonical (qubit 1 bit must be 0)")
    n = label.n
    mask = _subset_mask(n, subset)
    carrier, quarter = _swapped_state(label, mask)
    swapped_generators = {}
    generator_values = {}
    for k in range(1, n + 1):
        gen = ew_swap(single_y_generator(n, k), subset)
        value = eigenvalue_symbolic(carrier, quarter, gen)
        if value is None:
            raise ConsistencyError(f"swapped generator {gen.letters} lost its eigenstate")
        swapped_generators[k] = gen
        generator_values[k] = value
    reports = []
    for target in enumerate_pole(n, Pole.S):
        swapped_target = ew_swap(target, subset)
        quantum = eigenvalue_symbolic(carrier, quarter, swapped_target)
        if quantum is None:
            raise ConsistencyError(f"swapped target {swapped_target.letters} lost its eigenstate")
        lhv = 1
        for k in target.y_positions:
            lhv *= generator_values[k]
        if lhv != -quantum:
            raise ConsistencyError(
                f"{swapped_target.letters}: predicted {lhv} does not oppose eigenvalue {quantum}")
        reports.append(ContradictionReport(
            n, swapped_target, lhv, quantum,
            tuple(swapped_generators[k] for k in target.y_positions)))
    return reports


def swap_conjugation_residual(op: PoleOperator, subset: Iterable[int]) -> float:
    """Dense check that the swap is conjugation by the diagonal-axis half turn.

    Builds U = prod over the subset of (X_k + Y_k)/sqrt(2) and compares
    U M U^dagger against the swapped string entrywise.
    """
    subset = set(subset)
    if len(subset) % 2 == 0:
        raise DomainError(f"swap subset must have odd size, got {len(subset)}")
    n = op.n
    factors = []
    for k in range(1, n + 1):
        if k in subset:
            factors.append((oracle.PAULI_1Q["X"] + oracle.PAULI_1Q["Y"]) / np.sqrt(2))
        else:
            factors.append(oracle.PAULI_1Q["I"])
    unitary = np.eye(1, dtype=complex)
    for factor in factors:
        unitary = np.kron(unitary, factor)
    conjugated = unitary @ oracle.materialize(op.op) @ unitary.conj().T
    swapped = oracle.materialize(ew_swap(op, subset).op)
    return float(np.max(np.abs(conjugated - swapped)))
