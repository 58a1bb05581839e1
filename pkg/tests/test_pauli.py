"""Exactness tests for the symplectic Pauli-string algebra."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ghzverify import (DimensionError, LetterError, PauliOperator,
                       QuarterPhase, commutes, from_letters, identity,
                       multiply, parse, render, to_letters, y_count)
from ghzverify.oracle import materialize


class TestQuarterPhase:
    def test_exponent_normalized(self):
        assert QuarterPhase(7).exponent == 3
        assert QuarterPhase(-1).exponent == 3

    def test_multiplication_adds_exponents(self):
        assert (QuarterPhase(3) * QuarterPhase(2)).exponent == 1

    @pytest.mark.parametrize("exp,value", [(0, 1), (1, 1j), (2, -1), (3, -1j)])
    def test_values(self, exp, value):
        assert QuarterPhase(exp).value == value

    def test_sign_of_imaginary_phase_rejected(self):
        with pytest.raises(Exception):
            QuarterPhase(1).sign


class TestMultiply:
    def test_xy_is_iz(self):
        assert render(multiply(from_letters("X"), from_letters("Y"))) == "+iZ"

    def test_cyclic_convention(self):
        assert render(multiply(from_letters("Y"), from_letters("Z"))) == "+iX"
        assert render(multiply(from_letters("Z"), from_letters("X"))) == "+iY"

    def test_xx_is_identity(self):
        assert multiply(from_letters("X"), from_letters("X")) == identity(1)

    def test_three_generator_product(self):
        # hand multiplication per qubit: (YXX)(XYX) = +ZZI, then (ZZI)(XXY) = -YYY
        product = multiply(multiply(from_letters("YXX"), from_letters("XYX")),
                           from_letters("XXY"))
        assert render(product) == "-YYY"

    def test_size_mismatch(self):
        with pytest.raises(DimensionError):
            multiply(from_letters("X"), from_letters("XX"))


class TestCommutes:
    def test_two_anticommuting_positions_commute(self):
        assert commutes(from_letters("XX"), from_letters("YY"))

    def test_single_pair_anticommutes(self):
        assert not commutes(from_letters("X"), from_letters("Y"))

    def test_generators_commute(self):
        assert commutes(from_letters("YXX"), from_letters("XYX"))

    def test_size_mismatch(self):
        with pytest.raises(DimensionError):
            commutes(from_letters("X"), from_letters("XX"))


class TestYCount:
    @pytest.mark.parametrize("letters,count", [("YXX", 1), ("YYY", 3), ("XXXX", 0)])
    def test_counts(self, letters, count):
        assert y_count(from_letters(letters)) == count

    @pytest.mark.parametrize("letters", ["XIZ", "XZ", "IY"])
    def test_rejects_i_and_z(self, letters):
        with pytest.raises(LetterError):
            y_count(from_letters(letters))


class TestConstruction:
    def test_round_trip(self):
        for letters in ("XXX", "YXX", "Z", "IXYZ"):
            assert to_letters(from_letters(letters)) == letters

    def test_empty_rejected(self):
        with pytest.raises(DimensionError):
            from_letters("")

    def test_bad_letter_rejected(self):
        with pytest.raises(LetterError):
            from_letters("XQ")

    def test_parse_render_round_trip(self):
        for text in ("+XXX", "-YYY", "+iXZ", "-iY", "+IZXY"):
            assert render(parse(text)) == text

    def test_parse_defaults_to_plus(self):
        assert parse("YYY") == from_letters("YYY")

    def test_operator_json_carries_text_and_phase(self):
        from ghzverify.pauli import operator_to_json
        assert operator_to_json(parse("-YYY")) == {"text": "-YYY", "phase": "-"}
        assert operator_to_json(parse("+iXZ")) == {"text": "+iXZ", "phase": "+i"}


def _ops(draw, n, count):
    return [PauliOperator(n,
                          draw(st.integers(0, (1 << n) - 1)),
                          draw(st.integers(0, (1 << n) - 1)),
                          QuarterPhase(draw(st.integers(0, 3))))
            for _ in range(count)]


@st.composite
def op_triples(draw):
    n = draw(st.integers(1, 8))
    return _ops(draw, n, 3)


@st.composite
def op_pairs(draw):
    n = draw(st.integers(1, 8))
    return _ops(draw, n, 2)


@given(op_triples())
@settings(deadline=None)
def test_associativity(ops):
    a, b, c = ops
    assert multiply(multiply(a, b), c) == multiply(a, multiply(b, c))


@given(op_pairs())
@settings(deadline=None)
def test_anticommutation_parity(ops):
    a, b = ops
    ab = multiply(a, b)
    ba = multiply(b, a)
    if commutes(a, b):
        assert ab == ba
    else:
        flipped = PauliOperator(ba.n, ba.x_bits, ba.z_bits,
                                QuarterPhase(ba.phase.exponent + 2))
        assert ab == flipped


@given(st.text(alphabet="XYZ", min_size=1, max_size=8))
@settings(deadline=None)
def test_involution(letters):
    op = from_letters(letters)
    assert multiply(op, op) == identity(op.n)


def _random_op(rng, n):
    return PauliOperator(n, int(rng.integers(0, 1 << n)), int(rng.integers(0, 1 << n)),
                         QuarterPhase(int(rng.integers(0, 4))))


class TestMatrixFaithfulness:
    def test_exhaustive_single_qubit(self):
        singles = [PauliOperator(1, x, z, QuarterPhase(e))
                   for x in (0, 1) for z in (0, 1) for e in range(4)]
        for a in singles:
            for b in singles:
                assert np.array_equal(materialize(multiply(a, b)),
                                      materialize(a) @ materialize(b))

    def test_exhaustive_two_qubit_letters(self):
        import itertools
        ops = [from_letters("".join(p)) for p in itertools.product("IXYZ", repeat=2)]
        for a in ops:
            for b in ops:
                assert np.array_equal(materialize(multiply(a, b)),
                                      materialize(a) @ materialize(b))

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_sampled_larger(self, n):
        rng = np.random.default_rng(20240000 + n)
        for _ in range(100):
            a = _random_op(rng, n)
            b = _random_op(rng, n)
            assert np.array_equal(materialize(multiply(a, b)),
                                  materialize(a) @ materialize(b))
