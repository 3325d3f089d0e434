"""Finitely supported sequences ``N -> Q`` and their p-norms.

A :class:`FinSuppVec` never stores a zero entry, so its key set is exactly
its support and two vectors are equal iff their maps are equal.  Norms are
reported as exact p-th powers (:func:`pnorm_pow`); nothing here takes a
root.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .scalar import (
    INF,
    Exponent,
    NormValue,
    as_rational,
    check_exponent,
    compare_scaled,
    format_rational,
    parse_rational,
    rat_pow,
)


def _check_index(k) -> int:
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise ValueError(f"indices are integers >= 1, got {k!r}")
    return k


class FinSuppVec:
    """Immutable finitely supported vector, iterated in increasing index order."""

    __slots__ = ("_items", "_map", "_hash")

    def __init__(self, entries: Mapping[int, object] | Iterable[tuple[int, object]] = ()):
        if isinstance(entries, Mapping):
            entries = entries.items()
        acc: dict[int, Fraction] = {}
        for k, x in entries:
            k = _check_index(k)
            acc[k] = acc.get(k, Fraction(0)) + as_rational(x)
        self._map = {k: acc[k] for k in sorted(acc) if acc[k] != 0}
        self._items = tuple(self._map.items())
        self._hash = None

    @classmethod
    def _from_clean(cls, mapping: dict[int, Fraction]) -> FinSuppVec:
        # caller guarantees: int keys >= 1, nonzero Fraction values
        v = cls.__new__(cls)
        v._map = {k: mapping[k] for k in sorted(mapping)}
        v._items = tuple(v._map.items())
        v._hash = None
        return v

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(self._map)

    def items(self) -> tuple[tuple[int, Fraction], ...]:
        return self._items

    def __getitem__(self, k: int) -> Fraction:
        return self._map.get(k, Fraction(0))

    def __iter__(self) -> Iterator[tuple[int, Fraction]]:
        return iter(self._items)

    def __len__(self) -> int:
        return len(self._items)

    def __bool__(self) -> bool:
        return bool(self._items)

    def __eq__(self, other) -> bool:
        if isinstance(other, FinSuppVec):
            return self._items == other._items
        if other == 0:
            return not self._items
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._items)
        return self._hash

    def __add__(self, other: FinSuppVec) -> FinSuppVec:
        if not isinstance(other, FinSuppVec):
            return NotImplemented
        return add(self, other)

    def __sub__(self, other: FinSuppVec) -> FinSuppVec:
        if not isinstance(other, FinSuppVec):
            return NotImplemented
        return axpy(Fraction(-1), other, self)

    def __neg__(self) -> FinSuppVec:
        return FinSuppVec._from_clean({k: -x for k, x in self._items})

    def __mul__(self, lam) -> FinSuppVec:
        if isinstance(lam, FinSuppVec):
            return NotImplemented
        return scale(lam, self)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"FinSuppVec({format_vec(self)!r})"

    def __str__(self) -> str:
        return format_vec(self)


ZERO = FinSuppVec()


def chi(k: int) -> FinSuppVec:
    """Characteristic function of the single index ``k``."""
    return FinSuppVec._from_clean({_check_index(k): Fraction(1)})


def axpy(lam, u: FinSuppVec, v: FinSuppVec) -> FinSuppVec:
    """``lam*u + v`` in one pass."""
    lam = as_rational(lam)
    if lam == 0:
        return v
    out = dict(v._map)
    neg = lam == -1
    for k, x in u._items:
        if neg and ((y := out.get(k)) is x or y == x):
            del out[k]  # exact cancellation, skip the gcd work
            continue
        y = out.get(k, 0) + lam * x
        if y:
            out[k] = y
        else:
            out.pop(k, None)
    return FinSuppVec._from_clean(out)


def add(u: FinSuppVec, v: FinSuppVec) -> FinSuppVec:
    return axpy(Fraction(1), u, v)


def scale(lam, u: FinSuppVec) -> FinSuppVec:
    lam = as_rational(lam)
    if lam == 0:
        return ZERO
    return FinSuppVec._from_clean({k: lam * x for k, x in u._items})


def linear_combination(terms: Iterable[tuple[object, FinSuppVec]]) -> FinSuppVec:
    out: dict[int, Fraction] = {}
    for lam, u in terms:
        lam = as_rational(lam)
        for k, x in u._items:
            out[k] = out.get(k, 0) + lam * x
    return FinSuppVec._from_clean({k: x for k, x in out.items() if x})


def pnorm_pow(u: FinSuppVec, p: int) -> Fraction:
    """``||u||_p ** p``, exact."""
    if isinstance(p, bool) or not isinstance(p, int) or p < 1:
        raise ValueError("pnorm_pow needs an integer p >= 1")
    # coprime num/den stay coprime under powers, so no Fraction is built per term
    return _rsum([(abs(x.numerator) ** p, x.denominator**p) for _, x in u._items])


def _rsum(pairs: list[tuple[int, int]]) -> Fraction:
    # one reduction over the common denominator instead of a gcd per term
    den = math.lcm(*(d for _, d in pairs)) if pairs else 1
    return Fraction(sum(n * (den // d) for n, d in pairs), den)


def supnorm(u: FinSuppVec) -> Fraction:
    return max((abs(x) for _, x in u._items), default=Fraction(0))


def coordinate(u: FinSuppVec, k: int) -> Fraction:
    return u[k]


def dot(u: FinSuppVec, v: FinSuppVec) -> Fraction:
    """Standard l2 inner product."""
    if len(u) > len(v):
        u, v = v, u
    return sum((x * v[k] for k, x in u._items), Fraction(0))


# --- norm specifications -------------------------------------------------


@dataclass(frozen=True)
class PNorm:
    """The basis p-norm, ``p`` a positive integer or ``INF``."""

    p: Exponent = 1

    def __post_init__(self):
        check_exponent(self.p)

    def value(self, u: FinSuppVec) -> NormValue:
        if not isinstance(u, FinSuppVec):
            raise TypeError(f"PNorm measures sequence vectors, got {type(u).__name__}")
        if self.p is INF:
            return NormValue(supnorm(u))
        return NormValue(pnorm_pow(u, self.p), self.p)

    def base(self) -> PNorm:
        return self

    def describe(self) -> str:
        return f"l{self.p}"


def norm_cmp(u, v, spec) -> int:
    """Sign of ``||u|| - ||v||`` under ``spec`` (-1, 0 or 1)."""
    result = compare_scaled(spec.value(u), spec.value(v))
    if result.sign is None:
        raise ArithmeticError(f"could not order norms: {result.lhs} vs {result.rhs}")
    return result.sign


# --- text form -------------------------------------------------------------


def format_vec(u: FinSuppVec) -> str:
    if not u:
        return "0"
    return ", ".join(f"{k}:{format_rational(x)}" for k, x in u._items)


def parse_vec(text: str) -> FinSuppVec:
    """Parse ``"k1:num/den, k2:num/den, ..."``; ``"0"`` or ``""`` is the zero vector."""
    text = text.strip()
    if text in ("", "0"):
        return ZERO
    entries = []
    for part in text.split(","):
        key, sep, val = part.partition(":")
        if not sep:
            raise ValueError(f"expected 'index:value', got {part.strip()!r}")
        entries.append((int(key), parse_rational(val)))
    return FinSuppVec(entries)
