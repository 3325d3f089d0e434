from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from normcert.finsupp import ZERO, FinSuppVec, PNorm, chi, pnorm_pow, supnorm
from normcert.operators import (
    MAP_NAMES,
    Antiderivative,
    BasisImage,
    Compose,
    Derivative,
    DomainMismatch,
    ExplicitFunctional,
    Identity,
    Induced,
    NonInjectiveError,
    RankOnePerturb,
    apply,
    check_involution,
    induced_inner,
    induced_norm_pow,
    induced_supnorm,
    parse_growth,
    parse_map,
    thm11_iso,
    thm13_map,
)
from normcert.polyspace import Poly
from normcert.scalar import INF, Enclosure

coeffs = st.fractions(min_value=-20, max_value=20, max_denominator=9)
vectors = st.dictionaries(st.integers(1, 15), coeffs, max_size=6).map(FinSuppVec)
seq_maps = st.sampled_from(
    [
        Identity(),
        thm13_map(),
        parse_map("thm13:g=4^n:pivot=2"),
        parse_map("shift:+7"),
        BasisImage(lambda k: chi(k) + F(k, 3) * chi(k + 1), "mix"),
        RankOnePerturb(ExplicitFunctional({1: 3, 4: F(-1, 2)}), chi(1) - chi(2)),
        Compose((thm13_map(), parse_map("shift:+3"))),
    ]
)


def test_identity():
    u = chi(1) + F(2, 3) * chi(4)
    assert Identity()(u) == u
    f = Poly([1, 2])
    assert Identity()(f) == f


def test_thm13_examples():
    T = thm13_map()
    assert T.phi(T.pivot) == 2
    assert T(chi(2)) == -chi(2)
    # u - phi(u) e with phi(chi_5) = 5
    assert T(chi(5)) == chi(5) - 5 * chi(2)


def test_thm13_growth_variants():
    T = thm13_map(lambda n: F(4) ** n, 2)
    assert T(chi(3)) == chi(3) - 64 * chi(2)
    Z = thm13_map(lambda n: F(0), 2)
    for k in range(1, 8):
        assert Z(chi(k)) == chi(k)


@given(seq_maps, vectors, vectors, coeffs)
def test_linearity(T, u, v, lam):
    assert T(u + lam * v) == T(u) + lam * T(v)


@given(st.lists(coeffs, max_size=6).map(Poly), st.lists(coeffs, max_size=6).map(Poly), coeffs)
def test_poly_map_linearity(f, g, lam):
    for T in (Derivative(), Antiderivative()):
        assert T(f + lam * g) == T(f) + lam * T(g)


def test_involution():
    T = thm13_map()
    assert check_involution(T, [chi(k) for k in range(1, 11)])
    assert check_involution(Identity(), [chi(1), chi(2) + chi(3)])
    shift = BasisImage(lambda k: chi(k + 1), "shift")
    assert not check_involution(shift, [chi(1)])


@given(vectors)
def test_thm13_is_involution_everywhere(u):
    T = thm13_map()
    assert T(T(u)) == u


def test_non_involution_is_flagged_for_other_growth():
    T = parse_map("thm13:g=4^n:pivot=2")
    assert T.phi(T.pivot) == 16
    assert not check_involution(T, [chi(1)])


def test_domain_mismatch():
    with pytest.raises(DomainMismatch):
        apply(Derivative(), chi(1))
    with pytest.raises(DomainMismatch):
        apply(thm13_map(), Poly([1]))


def test_induced_norm_examples():
    u = chi(1) - 3 * chi(4)
    assert induced_norm_pow(Identity(), u, 2) == pnorm_pow(u, 2)
    assert induced_norm_pow(thm13_map(), chi(5), 1) == 6
    assert induced_supnorm(Derivative(), Poly([0, 0, 1])) == Enclosure(F(2), F(2))
    assert induced_supnorm(Identity(), u) == supnorm(u)


def test_induced_norm_reports_non_injective():
    kill = BasisImage(lambda k: ZERO if k == 3 else chi(k), "kill-3")
    with pytest.raises(NonInjectiveError):
        induced_norm_pow(kill, chi(3), 1)
    # phi(e) = 1 collapses the pivot direction
    T = thm13_map(lambda n: F(1), 1)
    with pytest.raises(NonInjectiveError):
        Induced(T, PNorm(1)).value(chi(1))


def test_induced_inner_examples():
    assert induced_inner(Identity(), chi(1), chi(2)) == 0
    u = F(1, 2) * chi(1) - chi(3)
    assert induced_inner(Identity(), u, u) == pnorm_pow(u, 2)
    assert induced_inner(thm13_map(), chi(3), chi(3)) == 10


@given(seq_maps, vectors, vectors)
def test_induced_inner_symmetric_and_consistent(T, u, v):
    assert induced_inner(T, u, v) == induced_inner(T, v, u)
    assert induced_inner(T, u, u) == pnorm_pow(T(u), 2)


def test_thm11_iso_examples():
    same = thm11_iso(lambda k: k)
    u = chi(1) + 2 * chi(2)
    assert same(u) == u
    shift = thm11_iso(lambda k: k + 7)
    assert shift(u) == chi(8) + 2 * chi(9)
    assert pnorm_pow(shift(u), 1) == pnorm_pow(u, 1) == 3
    swap = thm11_iso({1: 2, 2: 1})
    assert swap(chi(1)) == chi(2)


def test_thm11_iso_detects_collisions():
    with pytest.raises(ValueError):
        thm11_iso(lambda k: 1, indices=[1, 2])
    squash = thm11_iso(lambda k: (k + 1) // 2)
    with pytest.raises(ValueError):
        squash(chi(1) + chi(2))


@given(vectors, st.integers(0, 20))
def test_thm11_iso_preserves_norms(u, offset):
    T = thm11_iso(lambda k: k + offset)
    for p in (1, 2, 3, 4):
        assert pnorm_pow(T(u), p) == pnorm_pow(u, p)
    assert supnorm(T(u)) == supnorm(u)


@given(st.integers(3, 300))
def test_thm13_ratio_growth(n):
    T = thm13_map()
    assert induced_norm_pow(T, chi(n), 1) == 1 + n >= n - 1


@given(vectors, vectors)
def test_induced_l2_parallelogram(u, v):
    T = thm13_map()

    def sq(w):
        return induced_norm_pow(T, w, 2)

    assert sq(u + v) + sq(u - v) == 2 * (sq(u) + sq(v))


def test_registry():
    for name in MAP_NAMES:
        parse_map(name)
    assert parse_map("shift:+7")(chi(1)) == chi(8)
    assert isinstance(parse_map("derivative"), Derivative)
    with pytest.raises(ValueError):
        parse_map("nosuch")
    assert parse_growth("n^2")(3) == 9
    assert parse_growth("2*n")(5) == 10
    assert parse_growth("0")(5) == 0


def test_induced_spec_composes():
    spec = Induced(thm13_map(), Induced(parse_map("shift:+1"), PNorm(INF)))
    assert spec.value(chi(5)).power == 5
