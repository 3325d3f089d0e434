"""Linear maps on sequence vectors and polynomials, and the norms they induce.

The central construction is the rank-one perturbation ``u -> u - phi(u) e``
with ``phi(chi_n) = g(n)``.  For ``g(n) = n`` and ``e = chi_2`` one gets
``phi(e) = 2`` and the map is its own inverse, while ``||T chi_n||_1 = n + 1``
grows without bound.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence

from . import polyspace
from .finsupp import FinSuppVec, PNorm, chi, dot, linear_combination, pnorm_pow, supnorm
from .polyspace import Poly, supnorm01_enclosure
from .scalar import NormValue, as_rational


class DomainMismatch(TypeError):
    """A sequence map was applied to a polynomial or the other way round."""


class NonInjectiveError(ValueError):
    """A nonzero vector was sent to zero, so the induced function is not a norm."""


# --- functionals -----------------------------------------------------------


@dataclass(frozen=True)
class ExplicitFunctional:
    """``phi(chi_k) = values[k]``, zero off the listed indices."""

    values: Mapping[int, Fraction]

    def at(self, k: int) -> Fraction:
        return as_rational(self.values.get(k, 0))

    def __call__(self, u: FinSuppVec) -> Fraction:
        return sum((x * self.at(k) for k, x in u), Fraction(0))

    def describe(self) -> str:
        return "{" + ", ".join(f"{k}:{v}" for k, v in sorted(self.values.items())) + "}"


@dataclass(frozen=True)
class GrowthFunctional:
    """``phi(chi_k) = growth(k) * ||chi_k||_1 = growth(k)``."""

    growth: Callable[[int], Fraction]
    label: str = "g"

    def at(self, k: int) -> Fraction:
        return as_rational(self.growth(k))

    def __call__(self, u: FinSuppVec) -> Fraction:
        return sum((x * self.at(k) for k, x in u), Fraction(0))

    def describe(self) -> str:
        return self.label


# --- linear maps -----------------------------------------------------------


class LinearMap:
    """Base class; subclasses implement :meth:`_apply` for their domain."""

    domain = "seq"  # "seq", "poly", or "any"

    def __call__(self, x):
        return apply(self, x)

    def __matmul__(self, other: LinearMap) -> Compose:
        return Compose((self, other))

    def describe(self) -> str:
        return type(self).__name__.lower()

    def _apply(self, x):
        raise NotImplementedError


class Identity(LinearMap):
    domain = "any"

    def _apply(self, x):
        return x

    def __eq__(self, other):
        return isinstance(other, Identity)

    def __hash__(self):
        return hash("Identity")


@dataclass(frozen=True, eq=False)
class BasisImage(LinearMap):
    """``chi_k -> rule(k)``, extended linearly."""

    rule: Callable[[int], FinSuppVec]
    label: str = "basis-image"

    def _apply(self, u: FinSuppVec) -> FinSuppVec:
        return linear_combination((x, self.rule(k)) for k, x in u)

    def describe(self) -> str:
        return self.label


@dataclass(frozen=True, eq=False)
class Relabel(BasisImage):
    """``chi_k -> chi_{relabel(k)}``; refuses to merge two support indices."""

    relabel: Callable[[int], int] = None

    def _apply(self, u: FinSuppVec) -> FinSuppVec:
        targets = {}
        for k, x in u:
            j = self.relabel(k)
            if j in targets:
                raise ValueError(f"relabel sends both {targets[j]} and {k} to {j}")
            targets[j] = k
        return FinSuppVec((self.relabel(k), x) for k, x in u)


@dataclass(frozen=True, eq=False)
class RankOnePerturb(LinearMap):
    """``u -> u - phi(u) * pivot``."""

    phi: ExplicitFunctional | GrowthFunctional
    pivot: FinSuppVec

    def _apply(self, u: FinSuppVec) -> FinSuppVec:
        c = self.phi(u)
        if c == 0:
            return u
        return u - c * self.pivot

    def describe(self) -> str:
        return f"rank-one(phi={self.phi.describe()}, e={self.pivot})"


class Derivative(LinearMap):
    domain = "poly"

    def _apply(self, f: Poly) -> Poly:
        return polyspace.derivative(f)


class Antiderivative(LinearMap):
    domain = "poly"

    def _apply(self, f: Poly) -> Poly:
        return polyspace.antiderivative(f)


@dataclass(frozen=True, eq=False)
class Compose(LinearMap):
    """``maps[0] @ maps[1] @ ...``; the last map is applied first."""

    maps: tuple[LinearMap, ...] = field(default_factory=tuple)

    @property
    def domain(self):
        kinds = {m.domain for m in self.maps} - {"any"}
        if len(kinds) > 1:
            raise DomainMismatch(f"cannot compose maps on {sorted(kinds)}")
        return kinds.pop() if kinds else "any"

    def _apply(self, x):
        for m in reversed(self.maps):
            x = apply(m, x)
        return x

    def describe(self) -> str:
        return " o ".join(m.describe() for m in self.maps)


def apply(T: LinearMap, x):
    kind = "poly" if isinstance(x, Poly) else "seq" if isinstance(x, FinSuppVec) else None
    if kind is None:
        raise TypeError(f"cannot apply a linear map to {type(x).__name__}")
    if T.domain not in ("any", kind):
        raise DomainMismatch(f"{T.describe()} acts on {T.domain} vectors, got {kind}")
    return T._apply(x)


# --- constructions ---------------------------------------------------------


def identity_growth(n: int) -> Fraction:
    return Fraction(n)


def thm13_map(growth: Callable[[int], object] = identity_growth, pivot: int = 2, label: str | None = None) -> RankOnePerturb:
    """``u -> u - phi(u) chi_pivot`` with ``phi(chi_n) = growth(n)``.

    With the default growth ``n`` and pivot 2, ``phi(chi_2) = 2`` and the
    map is an involution.
    """
    if label is None:
        label = "n" if growth is identity_growth else getattr(growth, "__name__", "g")
    return RankOnePerturb(GrowthFunctional(growth, label), chi(pivot))


def check_involution(T: LinearMap, samples: Iterable) -> bool:
    return all(T(T(u)) == u for u in samples)


def thm11_iso(relabel: Callable[[int], int] | Mapping[int, int], indices: Iterable[int] | None = None) -> Relabel:
    """Isometric relabelling ``chi_k -> chi_{relabel(k)}``.

    A mapping is extended by the identity outside its keys.  When
    ``indices`` is given, injectivity on them is checked up front.
    """
    if isinstance(relabel, Mapping):
        table = dict(relabel)
        fn = lambda k: table.get(k, k)  # noqa: E731
    else:
        fn = relabel
    if indices is not None:
        seen = {}
        for k in indices:
            j = fn(k)
            if j in seen:
                raise ValueError(f"relabel sends both {seen[j]} and {k} to {j}")
            seen[j] = k
    return Relabel(rule=lambda k: chi(fn(k)), label="relabel", relabel=fn)


def shift_map(offset: int) -> Relabel:
    if offset < 0:
        raise ValueError("shift offset must be >= 0 so indices stay >= 1")
    iso = thm11_iso(lambda k: k + offset)
    return Relabel(rule=iso.rule, label=f"shift:+{offset}", relabel=iso.relabel)


# --- induced norms and inner products --------------------------------------


def _image_checked(T: LinearMap, u):
    w = apply(T, u)
    if u and not w:
        raise NonInjectiveError(f"{T.describe()} sends nonzero {u} to 0")
    return w


def induced_norm_pow(T: LinearMap, u: FinSuppVec, p: int) -> Fraction:
    """``||T u||_p ** p``."""
    return pnorm_pow(_image_checked(T, u), p)


def induced_supnorm(T: LinearMap, u, refinement: int = 32):
    """``||T u||_inf``: a Fraction for sequences, an Enclosure on [0,1] for polynomials."""
    w = _image_checked(T, u)
    if isinstance(w, Poly):
        return supnorm01_enclosure(w, refinement)
    return supnorm(w)


def induced_inner(T: LinearMap, u: FinSuppVec, v: FinSuppVec) -> Fraction:
    return dot(apply(T, u), apply(T, v))


@dataclass(frozen=True)
class Induced:
    """The norm ``u -> inner(T u)``."""

    map: LinearMap
    inner: object = PNorm(1)

    def value(self, x) -> NormValue:
        return self.inner.value(_image_checked(self.map, x))

    def base(self):
        return self.inner.base()

    def describe(self) -> str:
        return f"{self.inner.describe()}({self.map.describe()} .)"


# --- registry --------------------------------------------------------------

_GROWTH_FORMS = (
    (re.compile(r"^n$"), lambda m: identity_growth),
    (re.compile(r"^(-?\d+)$"), lambda m: (lambda c: (lambda n: Fraction(c)))(int(m[1]))),
    (re.compile(r"^(-?\d+)\*n$"), lambda m: (lambda c: (lambda n: Fraction(c * n)))(int(m[1]))),
    (re.compile(r"^(\d+)\^n$"), lambda m: (lambda b: (lambda n: Fraction(b) ** n))(int(m[1]))),
    (re.compile(r"^n\^(\d+)$"), lambda m: (lambda e: (lambda n: Fraction(n) ** e))(int(m[1]))),
)


def parse_growth(text: str) -> Callable[[int], Fraction]:
    """Growth rules ``n``, ``c``, ``c*n``, ``b^n`` and ``n^e``."""
    text = text.replace(" ", "")
    for pattern, build in _GROWTH_FORMS:
        m = pattern.match(text)
        if m:
            return build(m)
    raise ValueError(f"unsupported growth rule {text!r}")


def parse_map(name: str) -> LinearMap:
    """Build a map from its registry name.

    >>> parse_map("thm13:g=n:pivot=2")(chi(5)) == chi(5) - 5 * chi(2)
    True
    """
    head, *opts = name.strip().split(":")
    if head == "identity":
        return Identity()
    if head == "derivative":
        return Derivative()
    if head == "antiderivative":
        return Antiderivative()
    if head == "shift":
        if len(opts) != 1:
            raise ValueError("shift takes one option, e.g. shift:+7")
        return shift_map(int(opts[0]))
    if head == "thm13":
        kw = dict(o.split("=", 1) for o in opts)
        unknown = set(kw) - {"g", "pivot"}
        if unknown:
            raise ValueError(f"unknown thm13 options {sorted(unknown)}")
        g = kw.get("g", "n")
        return thm13_map(parse_growth(g), int(kw.get("pivot", 2)), label=g)
    raise ValueError(f"unknown map {name!r}")


MAP_NAMES: Sequence[str] = (
    "identity",
    "thm13:g=n:pivot=2",
    "thm13:g=4^n:pivot=2",
    "derivative",
    "antiderivative",
    "shift:+7",
)

