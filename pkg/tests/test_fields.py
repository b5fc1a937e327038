"""Exact scalar arithmetic: canonical forms, context rules, squareness."""

import random
from fractions import Fraction

import pytest

from ortholag import (GF, QQ, DivisionByZero, MixedContexts, Scalar,
                      UnsupportedContext, ZeroScalar, is_square)

F3 = GF(3)
F5 = GF(5)


class TestContexts:
    def test_rationals_singleton_equality(self):
        assert QQ == QQ
        assert QQ.characteristic == 0

    def test_prime_fields_compare_by_p(self):
        assert GF(5) == GF(5)
        assert GF(5) != GF(7)
        assert GF(5) != QQ
        assert hash(GF(5)) == hash(GF(5))

    @pytest.mark.parametrize("bad", [1, 4, 6, 9, 15, 0, -3, 2.0, "5"])
    def test_composite_or_nonint_rejected(self, bad):
        with pytest.raises(UnsupportedContext):
            GF(bad)

    def test_characteristic_two_rejected(self):
        with pytest.raises(UnsupportedContext):
            GF(2)

    def test_characteristic_exposed(self):
        assert GF(7).characteristic == 7


class TestCanonicalForms:
    def test_rational_lowest_terms(self):
        s = QQ.scalar(Fraction(2, 4))
        assert s.value == Fraction(1, 2)

    def test_rational_string_parse(self):
        assert QQ.scalar("3/4").value == Fraction(3, 4)
        assert QQ.scalar("-7").value == -7

    def test_prime_field_reduction(self):
        assert F5.scalar(7).value == 2
        assert F5.scalar(-1).value == 4
        assert F5.scalar(10).value == 0

    def test_prime_field_fraction_input(self):
        # 1/3 = 2 mod 5 because 3*2 = 6 = 1
        assert F5.scalar(Fraction(1, 3)).value == 2
        assert F5.scalar("1/3").value == 2

    def test_prime_field_bad_denominator(self):
        with pytest.raises(DivisionByZero):
            F5.scalar(Fraction(1, 5))

    def test_foreign_scalar_rejected(self):
        with pytest.raises(MixedContexts):
            F5.scalar(F3.scalar(1))

    def test_uncoercible_rejected(self):
        with pytest.raises(TypeError):
            QQ.scalar(0.5)

    def test_equal_values_equal_structurally(self):
        assert F5.scalar(12) == F5.scalar(2)
        assert hash(F5.scalar(12)) == hash(F5.scalar(2))
        assert QQ.scalar("2/4") == QQ.scalar(Fraction(1, 2))


class TestArithmetic:
    def test_rational_examples(self):
        assert QQ.scalar("1/2") + QQ.scalar("1/3") == QQ.scalar("5/6")
        assert QQ.scalar(1) / QQ.scalar(3) == QQ.scalar("1/3")

    def test_prime_field_examples(self):
        assert F5.scalar(2) * F5.scalar(3) == F5.one
        assert F5.one / F5.scalar(3) == F5.scalar(2)

    def test_int_operands_coerce(self):
        s = F5.scalar(2)
        assert s + 3 == F5.zero
        assert 3 + s == F5.zero
        assert 1 - s == F5.scalar(4)
        assert 2 * s == F5.scalar(4)
        assert 1 / s == F5.scalar(3)

    def test_negation_and_bool(self):
        assert -F5.scalar(2) == F5.scalar(3)
        assert bool(F5.zero) is False
        assert bool(F5.scalar(4)) is True

    def test_mixed_contexts_raise(self):
        with pytest.raises(MixedContexts):
            F5.scalar(1) + F3.scalar(1)
        with pytest.raises(MixedContexts):
            QQ.scalar(1) * F3.scalar(1)

    def test_cross_field_equality_is_false(self):
        assert (F5.scalar(1) == F3.scalar(1)) is False
        assert F5.scalar(1) != F3.scalar(1)

    def test_division_by_zero(self):
        with pytest.raises(DivisionByZero):
            F5.one / F5.zero
        with pytest.raises(DivisionByZero):
            QQ.one / QQ.zero

    def test_division_by_zero_is_zero_division_error(self):
        assert issubclass(DivisionByZero, ZeroDivisionError)

    def test_scalars_immutable(self):
        s = F5.scalar(1)
        with pytest.raises(AttributeError):
            s.value = 3

    @pytest.mark.parametrize("field", [F3, F5, GF(7), QQ])
    def test_field_axioms_random_sweep(self, field):
        rng = random.Random(11)

        def rand():
            if field is QQ:
                return QQ.scalar(Fraction(rng.randint(-9, 9),
                                          rng.randint(1, 9)))
            return field.scalar(rng.randrange(field.p))

        for _ in range(200):
            a, b, c = rand(), rand(), rand()
            assert (a + b) + c == a + (b + c)
            assert a + b == b + a
            assert a * (b + c) == a * b + a * c
            assert (a * b) * c == a * (b * c)
            if b != field.zero:
                assert b * (a / b) == a
                assert b / b == field.one


class TestIsSquare:
    def test_rationals_unsupported(self):
        with pytest.raises(UnsupportedContext):
            is_square(QQ.scalar(4))

    def test_zero_excluded(self):
        with pytest.raises(ZeroScalar):
            is_square(F5.zero)

    def test_known_values_mod_5(self):
        ok, root = is_square(F5.scalar(4))
        assert ok and root == F5.scalar(2)
        ok, root = is_square(F5.scalar(2))
        assert not ok and root is None
        ok, root = is_square(F5.scalar(-1))
        assert ok and root == F5.scalar(2)

    @pytest.mark.parametrize("p", [3, 5, 7, 11, 13, 17])
    def test_exhaustive_against_direct_squaring(self, p):
        field = GF(p)
        squares = {(x * x) % p for x in range(1, p)}
        for v in range(1, p):
            ok, root = is_square(field.scalar(v))
            assert ok == (v in squares)
            if ok:
                assert root * root == field.scalar(v)
                # witness is the smaller of the two roots
                assert root.value == min(root.value, p - root.value)

    def test_scalar_repr_and_key(self):
        assert repr(F5.scalar(7)) == "2"
        assert F5.scalar(2).key == 2
        assert Scalar(QQ, Fraction(1, 2)).key == Fraction(1, 2)
