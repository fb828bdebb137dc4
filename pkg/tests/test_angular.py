"""Coupling-coefficient kernel against independent constructions."""

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from multipole_witness.angular import (
    HalfInt,
    SignedSqrtRational,
    clebsch_gordan,
    triangle_ok,
    wigner6j,
    wigner9j,
)

from oracles import cg_table_ladder, wigner6j_recoupling, wigner9j_contraction


half = lambda t: HalfInt(t)


class TestHalfInt:
    def test_value_and_repr(self):
        assert HalfInt(3).value == Fraction(3, 2)
        assert repr(HalfInt(3)) == "3/2"
        assert repr(HalfInt(4)) == "2"
        assert float(HalfInt(-1)) == -0.5

    def test_arithmetic(self):
        assert HalfInt(3) + HalfInt(1) == HalfInt(4)
        assert HalfInt(3) - HalfInt(4) == HalfInt(-1)
        assert -HalfInt(3) == HalfInt(-3)
        assert HalfInt(2) < HalfInt(3)

    def test_non_half_integer_rejected(self):
        with pytest.raises(ValueError):
            triangle_ok(0.3, 1, 1)


class TestSignedSqrtRational:
    def test_normalization(self):
        with pytest.raises(ValueError):
            SignedSqrtRational(1, Fraction(0))
        with pytest.raises(ValueError):
            SignedSqrtRational(0, Fraction(1, 2))
        with pytest.raises(ValueError):
            SignedSqrtRational(2, Fraction(1))

    def test_float_and_product(self):
        a = SignedSqrtRational(-1, Fraction(1, 2))
        b = SignedSqrtRational(-1, Fraction(2))
        assert float(a) == pytest.approx(-np.sqrt(0.5), abs=1e-16)
        assert float(a * b) == pytest.approx(1.0, abs=1e-15)

    def test_exact_square(self):
        assert float(SignedSqrtRational(1, Fraction(9, 4))) == 1.5


class TestTriangle:
    def test_stretched_coupling(self):
        assert triangle_ok(0.5, 0.5, 1)

    def test_exceeds_sum(self):
        assert not triangle_ok(0.5, 0.5, 2)

    def test_non_integer_perimeter(self):
        assert not triangle_ok(1, 0.5, 1)

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            triangle_ok(-1, 1, 1)


class TestClebschGordan:
    def test_stretched_state(self):
        assert float(clebsch_gordan(0.5, 0.5, 1, 0.5, 0.5, 1)) == 1.0

    def test_exact_half(self):
        value = clebsch_gordan(0.5, 0.5, 1, 0.5, -0.5, 0)
        assert value.sign == 1
        assert value.square == Fraction(1, 2)

    def test_projection_selection_rule(self):
        assert clebsch_gordan(1, 1, 1, 1, -1, 1).is_zero

    def test_triangle_selection_rule(self):
        assert clebsch_gordan(0.5, 0.5, 2, 0.5, 0.5, 1).is_zero

    def test_domain_error_on_bad_pair(self):
        with pytest.raises(ValueError):
            clebsch_gordan(0.5, 0.5, 1, 0, 0.5, 0.5)

    @pytest.mark.parametrize("tj1,tj2", [(1, 1), (2, 1), (2, 2), (3, 2), (4, 3), (4, 4)])
    def test_against_ladder_construction(self, tj1, tj2):
        table = cg_table_ladder(tj1, tj2)
        for (tm1, tm2, tj, tm), expected in table.items():
            got = float(clebsch_gordan(*(HalfInt(t) for t in (tj1, tj2, tj, tm1, tm2, tm))))
            assert got == pytest.approx(expected, abs=1e-12)

    def test_orthogonality_exact(self):
        # sum_m1 C(j1 j2 j; m1, m-m1, m) C(j1 j2 j'; m1, m-m1, m) = delta(j, j'),
        # accumulated at 128-bit precision for all j1, j2 <= 4.
        bound = Fraction(1, 2**96)
        for tj1 in range(0, 9):
            for tj2 in range(tj1, 9):
                cache = {}

                def cg128(tj, tm1, tm2, tm):
                    key = (tj, tm1, tm2, tm)
                    if key not in cache:
                        cache[key] = clebsch_gordan(
                            HalfInt(tj1), HalfInt(tj2), HalfInt(tj),
                            HalfInt(tm1), HalfInt(tm2), HalfInt(tm),
                        ).to_fraction()
                    return cache[key]

                tjs = range(abs(tj1 - tj2), tj1 + tj2 + 2, 2)
                for tja in tjs:
                    for tjb in tjs:
                        for tm in range(-min(tja, tjb), min(tja, tjb) + 2, 2):
                            total = Fraction(0)
                            for tm1 in range(-tj1, tj1 + 2, 2):
                                tm2 = tm - tm1
                                if abs(tm2) > tj2:
                                    continue
                                total += cg128(tja, tm1, tm2, tm) * cg128(tjb, tm1, tm2, tm)
                            expected = 1 if tja == tjb else 0
                            assert abs(total - expected) < bound

    @given(
        tj1=st.integers(0, 8),
        tj2=st.integers(0, 8),
        data=st.data(),
    )
    @settings(max_examples=60, deadline=None)
    def test_negation_symmetry_exact(self, tj1, tj2, data):
        # C(j1 j2 j; m1 m2 m) = (-1)^(j1+j2-j) C(j1 j2 j; -m1 -m2 -m), exactly.
        tj = data.draw(
            st.integers(abs(tj1 - tj2), tj1 + tj2).filter(
                lambda t: (t + tj1 + tj2) % 2 == 0
            ),
            label="tj",
        )
        tm1 = data.draw(st.integers(-tj1, tj1).filter(lambda t: (t + tj1) % 2 == 0), label="tm1")
        tm2 = data.draw(st.integers(-tj2, tj2).filter(lambda t: (t + tj2) % 2 == 0), label="tm2")
        tm = tm1 + tm2
        if abs(tm) > tj:
            return
        plus = clebsch_gordan(
            HalfInt(tj1), HalfInt(tj2), HalfInt(tj), HalfInt(tm1), HalfInt(tm2), HalfInt(tm)
        )
        minus = clebsch_gordan(
            HalfInt(tj1), HalfInt(tj2), HalfInt(tj), HalfInt(-tm1), HalfInt(-tm2), HalfInt(-tm)
        )
        phase = -1 if ((tj1 + tj2 - tj) // 2) % 2 else 1
        assert plus.square == minus.square
        assert plus.sign == phase * minus.sign


class TestWigner6j:
    def test_zero_argument_closed_form(self):
        # {a b c; 0 c b} = (-1)^(a+b+c) / sqrt((2b+1)(2c+1))
        for a, b, c in [(1, 0.5, 0.5), (2, 1, 1), (1, 1, 2), (1.5, 1, 0.5)]:
            if not triangle_ok(a, b, c):
                continue
            expected = (-1) ** int(a + b + c) / np.sqrt((2 * b + 1) * (2 * c + 1))
            assert float(wigner6j(a, b, c, 0, c, b)) == pytest.approx(expected, abs=1e-15)

    def test_triad_violation_is_zero(self):
        assert wigner6j(0.5, 0.5, 2, 0.5, 0.5, 1).is_zero

    def test_half_integer_spot_value(self):
        assert float(wigner6j(0.5, 0.5, 1, 0.5, 0.5, 1)) == pytest.approx(1 / 6, abs=1e-15)

    @pytest.mark.parametrize(
        "args",
        [
            (1, 1, 2, 1, 1, 2),
            (1, 2, 3, 2, 1, 2),
            (0.5, 0.5, 1, 0.5, 0.5, 1),
            (1.5, 1, 0.5, 1, 1.5, 1),
            (2, 2, 2, 2, 2, 2),
            (1.5, 1.5, 3, 1.5, 1.5, 2),
        ],
    )
    def test_against_recoupling_sum(self, args):
        doubled = tuple(int(round(2 * a)) for a in args)
        expected = wigner6j_recoupling(*doubled)
        assert float(wigner6j(*args)) == pytest.approx(expected, abs=1e-12)


class TestWigner9j:
    def test_triangle_violating_row_is_zero(self):
        assert wigner9j(1, 1, 3, 1, 1, 2, 1, 1, 2) == 0.0

    def test_corner_zero_reduces_to_6j(self):
        # {a b e; c d e; f f 0} = (-1)^(b+c+e+f) / sqrt((2e+1)(2f+1)) {a b e; d c f}
        cases = [
            (1, 1, 2, 1, 1, 2, 1, 1, 0),
            (0.5, 0.5, 1, 0.5, 0.5, 1, 1, 1, 0),
            (1.5, 1, 0.5, 1.5, 1, 0.5, 2, 2, 0),
        ]
        for a, b, e, c, d, e2, f, f2, _ in cases:
            got = wigner9j(a, b, e, c, d, e2, f, f2, 0)
            phase = (-1.0) ** int(b + c + e + f)
            expected = phase / np.sqrt((2 * e + 1) * (2 * f + 1)) * float(wigner6j(a, b, e, d, c, f))
            assert got == pytest.approx(expected, abs=1e-13)

    @pytest.mark.parametrize(
        "args",
        [
            (0.5, 0.5, 1, 0.5, 0.5, 1, 1, 1, 2),
            (1, 1, 2, 1, 1, 1, 2, 1, 1),
            (0.5, 1, 1.5, 0.5, 1, 0.5, 1, 2, 1),
            (1, 0.5, 0.5, 0.5, 1, 0.5, 0.5, 0.5, 1),
        ],
    )
    def test_against_contraction_oracle(self, args):
        doubled = tuple(int(round(2 * a)) for a in args)
        expected = wigner9j_contraction(*doubled)
        assert wigner9j(*args) == pytest.approx(expected, abs=1e-12)

    def test_transposition_invariance(self):
        rng = np.random.default_rng(7)
        for _ in range(20):
            t = rng.integers(0, 7, size=9)
            a = wigner9j(*(x / 2 for x in t))
            b = wigner9j(*(t[i] / 2 for i in (0, 3, 6, 1, 4, 7, 2, 5, 8)))
            assert a == pytest.approx(b, abs=1e-12)

    def test_row_swap_phase(self):
        # swapping two rows multiplies by (-1)^(sum of all nine arguments);
        # nonzero symbols always have an integer total.
        rng = np.random.default_rng(11)
        checked = 0
        for _ in range(4000):
            t = rng.integers(0, 7, size=9)
            a = wigner9j(*(x / 2 for x in t))
            if a == 0.0:
                continue
            swapped = wigner9j(*(t[i] / 2 for i in (3, 4, 5, 0, 1, 2, 6, 7, 8)))
            phase = -1.0 if (int(t.sum()) // 2) % 2 else 1.0
            assert swapped == pytest.approx(phase * a, abs=1e-12)
            checked += 1
            if checked >= 12:
                break
        assert checked >= 12
