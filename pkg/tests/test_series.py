"""Laurent series with tracked reliable windows."""

import random
from fractions import Fraction

import pytest

from qgl11.scalars import QMQI, QONE, QZERO, QScalar, qpow
from qgl11.series import (
    LaurentSeries, expand_rational, series_exp, series_invert, series_log,
    zpoly_mul,
)


def sc(n, d=1):
    return QScalar.from_fraction(Fraction(n, d))


def test_window_semantics():
    s = LaurentSeries.exact(-1, [QONE, QZERO, sc(3)], QZERO)
    assert s.hi == 1
    assert s.coeff(-1) == QONE and s.coeff(1) == sc(3)
    assert s.coeff(100) == QZERO and s.coeff(-100) == QZERO
    assert s.support() == [-1, 1]

    t = LaurentSeries(0, [QONE, QONE], QZERO, exact_below=True,
                      exact_above=False)
    assert t.known(-5) and not t.known(2)
    with pytest.raises(ValueError):
        t.coeff(2)


def test_addition_window_intersection():
    a = LaurentSeries(0, [QONE] * 4, QZERO, True, False)   # known to z^3
    b = LaurentSeries(0, [QONE] * 6, QZERO, True, False)   # known to z^5
    c = a + b
    assert c.hi == 3
    assert all(c.coeff(d) == sc(2) for d in range(4))


def test_multiplication_window_rule():
    # (1 + z + ...) * z^2, partial knowledge caps the product window
    a = LaurentSeries(0, [QONE] * 5, QZERO, True, False)
    b = LaurentSeries.exact(2, [QONE], QZERO)
    p = a * b
    assert p.lo == 2 and p.hi == 6
    assert all(p.coeff(d) == QONE for d in range(2, 7))


def test_exact_product_is_polynomial():
    # (1 - z)(1 + z + z^2) = 1 - z^3
    a = LaurentSeries.exact(0, [QONE, -QONE], QZERO)
    b = LaurentSeries.exact(0, [QONE, QONE, QONE], QZERO)
    p = a * b
    assert p.exact_above and p.support() == [0, 3]
    assert p.coeff(3) == -QONE


def test_opposite_tails_refuse_to_multiply():
    up = LaurentSeries(0, [QONE, QONE], QZERO, True, False)
    down = LaurentSeries(-1, [QONE, QONE], QZERO, False, True)
    with pytest.raises(ValueError):
        up * down


def test_shift_scale_truncate():
    s = LaurentSeries.exact(0, [QONE, sc(2)], QZERO)
    assert s.shift(3).support() == [3, 4]
    assert s.scale(QMQI).coeff(1) == sc(2) * QMQI
    t = s.truncate(0, 0)
    assert t.coeff(0) == QONE and not t.exact_above


def test_agrees_and_first_mismatch():
    a = LaurentSeries(0, [QONE, QONE, QZERO], QZERO, True, False)
    b = LaurentSeries(0, [QONE, QONE, QONE, QONE], QZERO, True, False)
    assert a.agrees(b, 0, 1)
    assert not a.agrees(b)
    assert a.first_mismatch(b, 0, 2) == 2
    assert a.first_mismatch(b, 0, 1) is None


def test_expand_rational_geometric():
    s = expand_rational((QONE,), (QONE, -QONE), 6)
    assert all(s.coeff(d) == QONE for d in range(7))
    # multiplying back by the denominator recovers the numerator
    den = LaurentSeries.exact(0, [QONE, -QONE], QZERO)
    back = s * den
    assert back.coeff(0) == QONE
    assert all(back.coeff(d) == QZERO for d in range(1, back.hi + 1))


def test_expand_rational_shifted_pole():
    # (1 - q^2 z)/(1 - z): constant 1, then (1 - q^2) forever
    s = expand_rational((QONE, -qpow(2)), (QONE, -QONE), 5)
    assert s.coeff(0) == QONE
    for d in range(1, 6):
        assert s.coeff(d) == QONE - qpow(2)
    with pytest.raises(ValueError):
        expand_rational((QONE,), (QZERO, QONE), 3)


def test_exp_log_roundtrip():
    rng = random.Random(3)
    coeffs = [QZERO] + [sc(rng.randrange(-3, 4)) for _ in range(6)]
    x = LaurentSeries(0, coeffs, QZERO, True, False)
    e = series_exp(x, 6, QONE)
    assert e.coeff(0) == QONE
    assert series_log(e, 6, QONE).agrees(x, 0, 6)


def test_exp_additivity():
    x = LaurentSeries.exact(1, [sc(1), sc(2)], QZERO)
    y = LaurentSeries.exact(1, [sc(-3), QZERO, sc(1)], QZERO)
    lhs = series_exp(x + y, 5, QONE)
    rhs = series_exp(x, 5, QONE) * series_exp(y, 5, QONE)
    assert lhs.agrees(rhs, 0, 5)


def test_exp_negative_orientation():
    x = LaurentSeries.exact(-2, [sc(3), sc(1)], QZERO)   # 3 z^-2 + z^-1
    e = series_exp(x, 4, QONE)
    assert e.hi == 0 and e.coeff(0) == QONE
    assert e.coeff(-1) == QONE
    with pytest.raises(ValueError):
        series_exp(LaurentSeries.exact(0, [QONE], QZERO), 3, QONE)


def test_invert():
    x = LaurentSeries(1, [sc(2), QONE, QONE], QZERO, True, False)
    inv = series_invert(x, 2, QONE)
    assert inv.lo == -1
    prod = x * inv
    assert prod.coeff(0) == QONE
    assert all(prod.coeff(d) == QZERO for d in range(1, prod.hi + 1))
    with pytest.raises(ValueError):
        series_invert(LaurentSeries.exact(0, [QZERO], QZERO), 2, QONE)


def test_zpoly_mul():
    # (1 + z)(1 - z) = 1 - z^2
    out = zpoly_mul([QONE, QONE], [QONE, -QONE])
    assert out == [QONE, QZERO, -QONE]
    assert zpoly_mul([], [QONE]) == []


def test_map_carries_new_zero():
    s = LaurentSeries.exact(0, [QONE, QMQI], QZERO)
    t = s.map(lambda c: c.specialize(2), Fraction(0))
    assert t.coeff(1) == Fraction(3, 2)
