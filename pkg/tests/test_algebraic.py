import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from subtiling import algebraic as A
from subtiling import polys as P


def field_from(minpoly):
    if P.degree(minpoly) == 1:
        r = -minpoly[0]
        return A.NumberField(minpoly, r, r)
    lo, hi = P.isolate_largest_real_root(minpoly)
    return A.NumberField(minpoly, lo, hi)


PHI = field_from([-1, -1, 1])


def test_char_poly_examples():
    assert A.char_poly([[1, 1], [1, 1]]) == [0, -2, 1]
    assert A.char_poly([[1, 1], [1, 0]]) == [-1, -1, 1]
    assert A.char_poly([[2, 1], [1, 2]]) == [3, -4, 1]


def test_char_poly_cayley_hamilton():
    rng = random.Random(3)
    for _ in range(10):
        m = rng.randint(2, 4)
        mat = [[rng.randint(0, 3) for _ in range(m)] for _ in range(m)]
        cp = A.char_poly(mat)
        # evaluate p(S) = 0 exactly
        acc = [[0] * m for _ in range(m)]
        power = [[int(i == j) for j in range(m)] for i in range(m)]
        for c in cp:
            for i in range(m):
                for j in range(m):
                    acc[i][j] += c * power[i][j]
            power = [[sum(mat[i][t] * power[t][j] for t in range(m))
                      for j in range(m)] for i in range(m)]
        assert all(all(v == 0 for v in row) for row in acc)


def test_perron_factor_examples():
    assert list(A.perron_factor([0, -2, 1]).minpoly) == [-2, 1]
    assert list(A.perron_factor([3, -4, 1]).minpoly) == [-3, 1]
    f = A.perron_factor([-1, -1, 1])
    assert list(f.minpoly) == [-1, -1, 1]
    ivl = f.interval()
    # the dominant root lies in the stored interval and above 1
    assert ivl.lo > 1
    assert P.eval_at([-1, -1, 1], ivl.lo) * P.eval_at([-1, -1, 1], ivl.hi) < 0
    f.ensure_width(Fraction(1, 64))
    assert Fraction(3, 2) < f.interval().lo < f.interval().hi < Fraction(17, 10)


def test_minpoly_changes_sign_across_interval():
    for cp in ([0, -2, 1], [-1, -1, 1], [-1, -1, -1, 1]):
        f = A.perron_factor(cp)
        ivl = f.interval()
        if ivl.lo == ivl.hi:
            assert P.eval_at(list(f.minpoly), ivl.lo) == 0
        else:
            s1 = P.eval_at(list(f.minpoly), ivl.lo)
            s2 = P.eval_at(list(f.minpoly), ivl.hi)
            assert s1 * s2 < 0


def test_field_arithmetic_golden_ratio():
    b = PHI.beta()
    assert b * b == b + 1
    assert 1 / b == b - 1
    assert (1 + b) + (2 - b) == 3
    assert (b * b - b - 1).is_zero()


def test_sign_examples():
    b = PHI.beta()
    assert (b * b - b - 1).sign() == 0
    assert (10 * b - 16).sign() == 1
    assert (1 - b).sign() == -1


coord = st.fractions(
    min_value=-4, max_value=4, max_denominator=8
)


@given(st.tuples(coord, coord))
@settings(max_examples=60, deadline=None)
def test_sign_antisymmetry_and_squares(coords):
    a = PHI.element(list(coords))
    if a.is_zero():
        assert a.sign() == 0
    else:
        assert a.sign() * (-a).sign() == -1
        assert (a * a).sign() == 1


@given(st.tuples(coord, coord), st.tuples(coord, coord))
@settings(max_examples=60, deadline=None)
def test_division_inverts_multiplication(ca, cb):
    a = PHI.element(list(ca))
    b = PHI.element(list(cb))
    if b.is_zero():
        with pytest.raises(ZeroDivisionError):
            a / b
    else:
        assert (a * b) / b == a


def test_degree_one_field_is_rational_arithmetic():
    f = field_from([-2, 1])
    x = f.rational(Fraction(3, 4))
    assert (x * f.beta()).as_fraction() == Fraction(3, 2)
    assert x.sign() == 1
    assert f.beta().sign() == 1


def test_is_pisot_examples():
    assert A.is_pisot(field_from([-2, 1]))
    assert A.is_pisot(PHI)
    assert not A.is_pisot(field_from([-3, -1, 1]))       # conj -1.30
    assert A.is_pisot(field_from([1, -3, 1]))            # phi^2, palindromic
    assert A.is_pisot(field_from([-1, -1, 0, 1]))        # plastic number
    assert A.is_pisot(field_from([-1, -1, -1, 1]))       # tribonacci
    # Salem polynomial: conjugates on the unit circle
    assert not A.is_pisot(field_from([1, -1, -1, -1, 1]))


def test_unit_circle_detection():
    assert A.has_root_on_unit_circle([1, -1, -1, -1, 1])
    assert not A.has_root_on_unit_circle([1, -3, 1])
    assert not A.has_root_on_unit_circle([-1, -1, 1])
    assert A.has_root_on_unit_circle([1, 1])      # x + 1
    assert not A.has_root_on_unit_circle([-2, 1])


def test_disk_count_hand_values():
    assert A.count_roots_in_open_unit_disk([0, 1]) == 1       # x
    assert A.count_roots_in_open_unit_disk([-2, 1]) == 0      # x - 2
    assert A.count_roots_in_open_unit_disk([-1, -1, 1]) == 1
    assert A.count_roots_in_open_unit_disk([-1, -1, 0, 1]) == 2


def test_disk_count_against_numpy_oracle():
    """Numerical root finding as an independent oracle; samples whose
    roots come too close to the circle are skipped."""
    rng = random.Random(2024)
    checked = 0
    while checked < 60:
        deg = rng.randint(1, 6)
        coeffs = [rng.randint(-5, 5) for _ in range(deg)] + [1]
        if coeffs[0] == 0:
            continue
        roots = np.roots(list(reversed(coeffs)))
        dist = np.abs(np.abs(roots) - 1.0)
        if dist.min() < 1e-6:
            continue
        if abs(np.polyval(list(reversed(coeffs)), -1.0)) < 1e-9:
            continue
        expected = int(np.sum(np.abs(roots) < 1.0))
        assert A.count_roots_in_open_unit_disk(coeffs) == expected, coeffs
        checked += 1


def test_interval_arithmetic():
    a = A.RatInterval(1, 2)
    b = A.RatInterval(-3, -1)
    assert (a + b).lo == -2 and (a + b).hi == 1
    assert (a * b).lo == -6 and (a * b).hi == -1
    assert a.sign() == 1 and b.sign() == -1
    assert A.RatInterval(-1, 1).sign() is None
    assert A.RatInterval(0, 0).sign() == 0
