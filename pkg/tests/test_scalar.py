from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from normcert.scalar import (
    INF,
    Enclosure,
    NormValue,
    compare_scaled,
    compare_sum,
    exact_root,
    format_rational,
    iroot,
    parse_exponent,
    parse_rational,
    rat_pow,
    root_enclosure,
)

rationals = st.fractions(min_value=-1000, max_value=1000, max_denominator=50)
nonneg = rationals.map(abs)


def bisect_root(x, p, lo, hi, width):
    """Plain bisection on t**p - x, kept independent of root_enclosure."""
    while hi - lo > width:
        mid = (lo + hi) / 2
        if mid**p <= x:
            lo = mid
        else:
            hi = mid
    return lo, hi


@pytest.mark.parametrize(
    "x, k, expected",
    [(F(1, 2), 3, F(1, 8)), (F(-3, 2), 2, F(9, 4)), (F(7, 5), 0, F(1))],
)
def test_rat_pow_examples(x, k, expected):
    assert rat_pow(x, k) == expected


@given(rationals, st.integers(0, 8), st.integers(0, 8))
def test_rat_pow_adds_exponents(x, a, b):
    assert rat_pow(x, a + b) == rat_pow(x, a) * rat_pow(x, b)


def test_rat_pow_rejects_negative_exponent():
    with pytest.raises(ValueError):
        rat_pow(F(2), -1)


@pytest.mark.parametrize("x, p", [(4, 2), (8, 3)])
def test_perfect_powers_collapse(x, p):
    enc = root_enclosure(x, p, F(1, 10))
    assert enc.lo == enc.hi == 2


def test_sqrt2_matches_bisection_oracle():
    w = F(1, 1000)
    enc = root_enclosure(F(2), 2, w)
    assert enc.lo**2 <= 2 <= enc.hi**2
    assert enc.width <= w
    olo, ohi = bisect_root(F(2), 2, F(1), F(2), w)
    assert max(enc.lo, olo) <= min(enc.hi, ohi)
    assert enc.lo <= F(1415, 1000) and F(1414, 1000) <= enc.hi


def test_root_enclosure_rejects_negative():
    with pytest.raises(ValueError):
        root_enclosure(F(-1), 2)


@given(nonneg, st.integers(1, 5), st.integers(1, 60))
def test_root_enclosure_brackets(x, p, bits):
    w = F(1, 2**bits)
    enc = root_enclosure(x, p, w)
    assert 0 <= enc.lo
    assert enc.lo**p <= x <= enc.hi**p
    assert enc.width <= w


@given(nonneg, st.integers(2, 4))
def test_root_enclosure_nested_under_refinement(x, p):
    coarse = root_enclosure(x, p, F(1, 2**10))
    fine = root_enclosure(x, p, F(1, 2**40))
    assert coarse.lo <= fine.lo and fine.hi <= coarse.hi


@given(st.integers(0, 10**40), st.integers(1, 7))
def test_iroot(n, p):
    r = iroot(n, p)
    assert r**p <= n < (r + 1) ** p


def test_exact_root():
    assert exact_root(F(27, 8), 3) == F(3, 2)
    assert exact_root(F(2), 2) is None


@pytest.mark.parametrize("text, value", [("3/4", F(3, 4)), ("-6/8", F(-3, 4)), ("1.25", F(5, 4)), ("−2", F(-2)), ("7", F(7))])
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@given(rationals)
def test_format_round_trip(x):
    s = format_rational(x)
    assert parse_rational(s) == x
    assert s == str(F(x.numerator, x.denominator))


def test_format_is_canonical():
    assert format_rational(F(-4, 6)) == "-2/3"
    assert format_rational(F(0)) == "0"


def test_exponent_parsing():
    assert parse_exponent("inf") is INF
    assert parse_exponent("3") == 3
    with pytest.raises(ValueError):
        parse_exponent("0")


def test_enclosure_invariant():
    with pytest.raises(ValueError):
        Enclosure(F(2), F(1))


@given(nonneg, nonneg, st.integers(1, 4), st.integers(1, 4))
def test_compare_scaled_matches_float_when_clear(a, b, ra, rb):
    x, y = NormValue(a, ra), NormValue(b, rb)
    res = compare_scaled(x, y)
    fa, fb = float(a) ** (1 / ra), float(b) ** (1 / rb)
    if abs(fa - fb) > 1e-9:
        assert res.sign == (1 if fa > fb else -1)
    if a == b and ra == rb:
        assert res.sign == 0


def test_compare_sum_sqrt2_below_two():
    # ||chi_1 + chi_2||_2 = sqrt 2 against 1 + 1
    res = compare_sum(NormValue(F(2), 2), NormValue(F(1), 2), NormValue(F(1), 2))
    assert res.sign == -1


def test_compare_scaled_with_bounds_only():
    a = NormValue(bounds=Enclosure(F(1), F(2)))
    assert compare_scaled(a, NormValue(F(3))).sign == -1
    assert compare_scaled(a, NormValue(F(3, 2))).sign is None
