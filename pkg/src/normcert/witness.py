"""Witness sequences and finite-depth checkers for the proof inequalities.

Every generator is a pure function of ``n``.  Checkers compare norms
exactly (through common powers) and write one :class:`Row` per instance,
so a certificate can be re-verified by plain cross-multiplication.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterable

from .certificate import Certificate, Row
from .finsupp import FinSuppVec, chi, coordinate, pnorm_pow
from .polyspace import Poly
from .scalar import NormValue, compare_scaled, format_rational


@dataclass(frozen=True)
class SeqGen:
    """A deterministic sequence ``n -> vector`` (``n >= 1``).

    ``limit_coeff``, when set, is the coordinate the sequence settles on
    at each index (used by :func:`check_escape`).
    """

    gen: Callable[[int], FinSuppVec | Poly]
    description: str
    limit_coeff: Callable[[int], Fraction] | None = field(default=None, compare=False)

    def __call__(self, n: int):
        if n < 1:
            raise ValueError("sequences are indexed from 1")
        return self.gen(n)


def _partial_sums(coeff: Callable[[int], Fraction]) -> Callable[[int], FinSuppVec]:
    @lru_cache(maxsize=None)
    def gen(n: int) -> FinSuppVec:
        if n == 1:
            return FinSuppVec({1: coeff(1)})
        return FinSuppVec._from_clean({**gen(n - 1)._map, n: coeff(n)})

    def safe(n: int) -> FinSuppVec:
        # warm the cache bottom-up so deep n does not recurse
        for k in range(1, n + 1, 256):
            gen(k)
        return gen(n)

    return safe


def gen_thm13() -> SeqGen:
    return SeqGen(chi, "u_n = chi_n")


def _half_pow(k: int) -> Fraction:
    return Fraction(1, 2**k)


def gen_cor22(growth: str = "4^n") -> SeqGen:
    """``v_n = sum_{k<=n} 2^-k chi_k``; ``growth`` only labels the norm it is paired with."""
    return SeqGen(_partial_sums(_half_pow), f"v_n = sum_(k<=n) 2^-k chi_k (paired with g={growth})", _half_pow)


def gen_thm43() -> SeqGen:
    return SeqGen(_partial_sums(_half_pow), "u_n = sum_(k<=n) 2^-k e_k", _half_pow)


def lemma41_coeff(p: int) -> Callable[[int], Fraction]:
    """``m ** (-2/p)`` for the two exponents where it is rational."""
    if p == 1:
        return lambda m: Fraction(1, m * m)
    if p == 2:
        return lambda m: Fraction(1, m)
    raise ValueError(f"m^(-2/{p}) is irrational for p={p}; use gen_lemma41_geo instead")


def gen_lemma41(p: int) -> SeqGen:
    coeff = lemma41_coeff(p)
    return SeqGen(_partial_sums(coeff), f"u_n = sum_(m<=n) m^(-2/{p}) chi_m", coeff)


def gen_lemma41_geo(p: int) -> SeqGen:
    if p < 1:
        raise ValueError("p must be >= 1")
    return SeqGen(_partial_sums(_half_pow), "u_n = sum_(m<=n) 2^-m chi_m", _half_pow)


def gen_derivative_example() -> SeqGen:
    return SeqGen(lambda n: Poly.monomial(n, Fraction(1, n)), "f_n(t) = t^n / n")


def gen_multiples(v: FinSuppVec) -> SeqGen:
    """``s(n) = n * v``."""
    return SeqGen(lambda n: n * v, f"s_n = n * ({v})")


# --- checkers ---------------------------------------------------------------


def _params(**kw) -> dict[str, str]:
    return {k: str(v) for k, v in kw.items()}


def _row(n, cmp, holds, m=None, label=None) -> Row:
    return Row(n=n, lhs=cmp.lhs, rhs=cmp.rhs, holds=holds, m=m, label=label, power=cmp.power)


def check_ratio_divergence(
    s: SeqGen,
    norm_a,
    norm_b,
    bound: Callable[[int], Fraction],
    N: int,
    exclude: Iterable[int] = (),
    claim_id: str = "ratio-divergence",
) -> Certificate:
    """Check ``||s(n)||_B >= bound(n) * ||s(n)||_A`` for ``1 <= n <= N``."""
    exclude = frozenset(exclude)
    cert = Certificate(
        claim_id,
        _params(sequence=s.description, norm_a=norm_a.describe(), norm_b=norm_b.describe(), depth=N,
                exclude=",".join(map(str, sorted(exclude))) or "-"),
    )
    for n in range(1, N + 1):
        if n in exclude:
            continue
        x = s(n)
        cmp = compare_scaled(norm_b.value(x), norm_a.value(x), bound(n))
        cert.add(_row(n, cmp, None if cmp.sign is None else cmp.sign >= 0))
    return cert


def check_cauchy(
    s: SeqGen,
    norm,
    modulus: Callable[[int], Fraction],
    N: int,
    claim_id: str = "cauchy",
) -> Certificate:
    """Check ``||s(n) - s(m)|| <= modulus(m)`` for all ``m < n <= N``."""
    cert = Certificate(claim_id, _params(sequence=s.description, norm=norm.describe(), depth=N))
    terms = [None] + [s(n) for n in range(1, N + 1)]
    for m in range(1, N):
        bound = NormValue(Fraction(modulus(m)))
        for n in range(m + 1, N + 1):
            cmp = compare_scaled(norm.value(terms[n] - terms[m]), bound)
            cert.add(_row(n, cmp, None if cmp.sign is None else cmp.sign <= 0, m=m))
    return cert


def check_not_cauchy(s: SeqGen, norm, gap, N: int, claim_id: str = "not-cauchy") -> Certificate:
    """Check ``||s(n) - s(n-1)|| > gap`` for ``2 <= n <= N``."""
    gap = Fraction(gap)
    cert = Certificate(claim_id, _params(sequence=s.description, norm=norm.describe(), gap=gap, depth=N))
    prev = s(1)
    for n in range(2, N + 1):
        cur = s(n)
        cmp = compare_scaled(norm.value(cur - prev), NormValue(gap))
        cert.add(_row(n, cmp, None if cmp.sign is None else cmp.sign > 0, m=n - 1))
        prev = cur
    return cert


def check_separation(indices: Iterable[int], p: int, claim_id: str = "separation") -> Certificate:
    """Check ``||chi_k - chi_j||_p^p = 2`` for every pair of distinct indices."""
    indices = list(indices)
    if len(set(indices)) != len(indices):
        raise ValueError("check_separation needs pairwise distinct indices")
    cert = Certificate(claim_id, _params(p=p, indices=len(indices)))
    two = Fraction(2)
    for k, j in combinations(indices, 2):
        value = pnorm_pow(chi(k) - chi(j), p)
        cert.add(Row(n=k, m=j, lhs=format_rational(value), rhs="2", holds=value == two, power=p))
    return cert


def check_escape(s: SeqGen, N: int, S: Iterable[int] = (), claim_id: str = "escape") -> Certificate:
    """Check that coordinates of ``s`` settle on ``s.limit_coeff`` and the limit
    has a nonzero coordinate outside the finite set ``S``.

    Rows 1..N record stabilization (``coordinate(s(n), m)`` constant for
    ``m <= n <= N``); the last row, labelled ``witness``, records the
    first index outside ``S`` and its limit coefficient.
    """
    if s.limit_coeff is None:
        raise ValueError("check_escape needs a generator with a known limit coefficient")
    S = frozenset(S)
    cert = Certificate(claim_id, _params(sequence=s.description, depth=N, excluded=len(S)))
    terms = [None] + [s(n) for n in range(1, N + 1)]
    for m in range(1, N + 1):
        target = s.limit_coeff(m)
        stable = all(coordinate(terms[n], m) == target for n in range(m, N + 1))
        cert.add(Row(n=m, lhs=format_rational(coordinate(terms[N], m)), rhs=format_rational(target),
                     holds=stable, label="stable"))
    witness = 1
    while witness in S:
        witness += 1
    value = coordinate(terms[N], witness) if witness <= N else Fraction(0)
    cert.params["witness_index"] = str(witness)
    cert.params["witness_value"] = format_rational(value)
    cert.add(Row(n=witness, lhs=format_rational(value), rhs="0", holds=witness <= N and value != 0, label="witness"))
    return cert

