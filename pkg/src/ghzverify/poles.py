"""Quarter-turn operator families and their exact eigenvalues.

Every X/Y string sits at one of four poles according to its Y count modulo
4 (each Y letter is a quarter turn of that factor): 0 -> E, 1 -> N, 2 -> W,
3 -> S.  The labeled basis states at the quarter-turn angles are exact +/-1
eigenstates of same- and opposite-pole strings, and the eigenvalue follows
from applying the string to the pair's two kets with X|0> = |1>, X|1> = |0>,
Y|0> = i|1>, Y|1> = -i|0>.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from functools import reduce

from .errors import DimensionError, DomainError, RuleNotApplicableError
from .pauli import PauliOperator, multiply, y_count
from .states import GhzLabel


class Pole(enum.Enum):
    """The four quarter-turn points, in units of pi/2."""

    E = 0
    N = 1
    W = 2
    S = 3

    @property
    def quarter(self) -> int:
        return self.value


def classify(op: PauliOperator) -> Pole:
    """Pole of a phase-free X/Y string, from its Y count modulo 4."""
    if op.phase.exponent != 0:
        raise DomainError(f"pole classification expects phase +1, got {op.phase}")
    return Pole(y_count(op) % 4)


@dataclass(frozen=True)
class PoleOperator:
    """A phase +1 X/Y string together with its (consistent) pole."""

    op: PauliOperator
    pole: Pole

    def __post_init__(self) -> None:
        actual = classify(self.op)
        if actual is not self.pole:
            raise DomainError(f"{self.op.letters()} sits at pole {actual.name}, not {self.pole.name}")

    @classmethod
    def from_op(cls, op: PauliOperator) -> PoleOperator:
        return cls(op, classify(op))

    @property
    def n(self) -> int:
        return self.op.n

    @property
    def letters(self) -> str:
        return self.op.letters()

    @property
    def y_positions(self) -> tuple[int, ...]:
        return tuple(k for k in range(1, self.op.n + 1) if self.op.letter(k) == "Y")


def xy_string(n: int, y_positions) -> PauliOperator:
    """Phase +1 string with Y at the given 1-based positions, X elsewhere."""
    z = 0
    for k in y_positions:
        if not 1 <= k <= n:
            raise DomainError(f"qubit index {k} out of range 1..{n}")
        z |= 1 << (n - k)
    return PauliOperator(n, (1 << n) - 1, z)


def single_y_generator(n: int, k: int) -> PoleOperator:
    """The N-pole string with its single Y on qubit k."""
    return PoleOperator(xy_string(n, (k,)), Pole.N)


def enumerate_pole(n: int, pole: Pole) -> list[PoleOperator]:
    """All X/Y strings at a pole, by increasing Y count then position order."""
    if n < 1:
        raise DomainError(f"need n >= 1, got {n}")
    found = []
    for count in range(pole.quarter, n + 1, 4):
        for positions in itertools.combinations(range(1, n + 1), count):
            found.append(PoleOperator(xy_string(n, positions), pole))
    return found


def normalize_signed(op: PauliOperator) -> tuple[int, PoleOperator]:
    """Split a +/-1 X/Y string into its sign and its pole representative."""
    sign = op.phase.sign
    bare = PauliOperator(op.n, op.x_bits, op.z_bits)
    return sign, PoleOperator.from_op(bare)


def eigenvalue_symbolic(label: GhzLabel, state_phi_quarter: int,
                        op: PoleOperator) -> int | None:
    """Exact eigenvalue of ``op`` on the labeled state at a quarter-turn angle.

    The state at quarter q is |bits> + sign * i**q |~bits> up to overall
    normalization.  The string maps |bits> to i**(y0 - y1) |~bits| where y0
    and y1 count Y letters over 0 and 1 bits of the pattern, so the pair is
    an eigenpair exactly when y0 - y1 - q is even, with eigenvalue
    sign * i**(y0 - y1 - q).  Returns None (not an eigenstate) otherwise.
    """
    if op.op.n != label.n:
        raise DimensionError(f"operator acts on {op.op.n} qubits, state on {label.n}")
    if state_phi_quarter not in (0, 1, 2, 3):
        raise DomainError(f"quarter angle must lie in 0..3, got {state_phi_quarter}")
    y_mask = op.op.y_bits
    y_over_ones = (y_mask & label.bits).bit_count()
    y_over_zeros = (y_mask & label.complement_bits).bit_count()
    exponent = (y_over_zeros - y_over_ones - state_phi_quarter) % 4
    if exponent % 2:
        return None
    return label.sign * (1 if exponent == 0 else -1)


def eigenvalue_rule(label: GhzLabel, op: PoleOperator) -> int:
    """Shortcut rule for N/S strings on the label's quarter-turn state.

    Start at the label's sign, flip once per Y letter sitting on a 1 bit of
    the pattern, and flip once more for S strings.  Must agree with
    :func:`eigenvalue_symbolic` at quarter angle 1 on the same inputs.
    """
    if op.pole not in (Pole.N, Pole.S):
        raise RuleNotApplicableError(
            f"the rule covers N and S operators only, got pole {op.pole.name}")
    if op.op.n != label.n:
        raise DimensionError(f"operator acts on {op.op.n} qubits, state on {label.n}")
    flips = (op.op.y_bits & label.bits).bit_count()
    value = -1 if flips % 2 else 1
    if op.pole is Pole.S:
        value = -value
    return label.sign * value


def compatible_family(n: int) -> list[PauliOperator]:
    """All 2**n - 1 nonempty products of the single-Y generators.

    Phases are tracked; odd-size products are +/- X/Y strings and even-size
    products are Z-type strings.  Every pair commutes.
    """
    if n < 2:
        raise DomainError(f"need n >= 2, got {n}")
    generators = [single_y_generator(n, k).op for k in range(1, n + 1)]
    family = []
    for size in range(1, n + 1):
        for combo in itertools.combinations(range(n), size):
            family.append(reduce(multiply, (generators[i] for i in combo)))
    return family


def pole_to_json(n: int, pole: Pole, operators: list[PoleOperator]) -> dict:
    return {
        "n": n,
        "pole": pole.name,
        "operators": [p.letters for p in operators],
        "count": len(operators),
    }
