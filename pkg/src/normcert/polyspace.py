"""Polynomials with rational coefficients on the monomial basis.

Besides the formal derivative/antiderivative pair, this module bounds
``max_{[0,1]} |f|`` with rational arithmetic only: lower bounds come from
evaluating ``f`` at dyadic points, upper bounds from Bernstein
coefficients on the surviving dyadic subintervals.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable

from .finsupp import FinSuppVec
from .scalar import Enclosure, NormValue, as_rational, format_rational, parse_rational


class Poly:
    """Immutable polynomial; ``coeffs[j]`` multiplies ``t**j``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [as_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def monomial(cls, n: int, c=1) -> Poly:
        return cls([0] * n + [c])

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if other == 0:
            return not self.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("Poly", self.coeffs))

    def __add__(self, other: Poly) -> Poly:
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    def __neg__(self) -> Poly:
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other: Poly) -> Poly:
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> Poly:
        if isinstance(other, Poly):
            if not self or not other:
                return Poly()
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return Poly(out)
        lam = as_rational(other)
        return Poly([lam * c for c in self.coeffs])

    def __rmul__(self, other) -> Poly:
        return self.__mul__(other)

    def __call__(self, t) -> Fraction:
        return eval_poly(self, t)

    def __repr__(self) -> str:
        return f"Poly({format_poly(self)!r})"

    def __str__(self) -> str:
        return format_poly(self)


def eval_poly(f: Poly, t) -> Fraction:
    t = as_rational(t)
    acc = Fraction(0)
    for c in reversed(f.coeffs):
        acc = acc * t + c
    return acc


def derivative(f: Poly) -> Poly:
    return Poly([j * c for j, c in enumerate(f.coeffs)][1:])


def antiderivative(f: Poly) -> Poly:
    """The antiderivative vanishing at 0."""
    return Poly([0] + [c / (j + 1) for j, c in enumerate(f.coeffs)])


def coeff_maxnorm(f: Poly) -> Fraction:
    return max((abs(c) for c in f.coeffs), default=Fraction(0))


def coeff_vector(f: Poly) -> FinSuppVec:
    """Coefficients as a sequence vector; ``t**j`` sits at index ``j + 1``."""
    return FinSuppVec((j + 1, c) for j, c in enumerate(f.coeffs))


def one_signed(f: Poly) -> bool:
    return all(c >= 0 for c in f.coeffs) or all(c <= 0 for c in f.coeffs)


# --- sup norm on [0, 1] ----------------------------------------------------


def _shifted(coeffs: tuple[Fraction, ...], a: Fraction, h: Fraction) -> list[Fraction]:
    # coefficients of s -> f(a + h*s), by Horner over polynomials in s
    out = [Fraction(0)] * len(coeffs)
    for c in reversed(coeffs):
        for i in range(len(coeffs) - 1, 0, -1):
            out[i] = out[i] * a + out[i - 1] * h
        out[0] = out[0] * a + c
    return out


def bernstein_coefficients(f: Poly, a=0, b=1) -> list[Fraction]:
    """Bernstein coefficients of ``f`` on ``[a, b]`` (degree = f.degree)."""
    a, b = as_rational(a), as_rational(b)
    n = f.degree
    if n < 0:
        return [Fraction(0)]
    g = _shifted(f.coeffs, a, b - a)
    binom_n = [comb(n, j) for j in range(n + 1)]
    return [
        sum((Fraction(comb(i, j), binom_n[j]) * g[j] for j in range(i + 1)), Fraction(0))
        for i in range(n + 1)
    ]


def supnorm01_enclosure(f: Poly, refinement: int = 32) -> Enclosure:
    """Certified enclosure of ``max_{t in [0,1]} |f(t)|``.

    Polynomials whose coefficients share a sign attain the maximum at
    ``t = 1`` and get an exact answer.  Otherwise ``refinement`` rounds of
    dyadic bisection are run, discarding subintervals whose Bernstein
    bound cannot beat the best evaluated point.
    """
    if f.degree <= 0 or one_signed(f):
        v = abs(f(1))
        return Enclosure(v, v)
    lo = max(abs(f(0)), abs(f(1)))
    live = [(Fraction(0), Fraction(1), max(abs(c) for c in bernstein_coefficients(f)))]
    for _ in range(refinement):
        live = [box for box in live if box[2] > lo]
        if not live:
            break
        nxt = []
        for a, b, _bound in live:
            mid = (a + b) / 2
            lo = max(lo, abs(f(mid)))
            for l, r in ((a, mid), (mid, b)):
                nxt.append((l, r, max(abs(c) for c in bernstein_coefficients(f, l, r))))
        live = nxt
    hi = max([lo] + [box[2] for box in live])
    return Enclosure(lo, hi)


@dataclass(frozen=True)
class Sup01:
    """``max_{[0,1]} |f|`` on polynomials."""

    refinement: int = 32

    def value(self, f: Poly) -> NormValue:
        if not isinstance(f, Poly):
            raise TypeError(f"Sup01 measures polynomials, got {type(f).__name__}")
        enc = supnorm01_enclosure(f, self.refinement)
        if enc.is_point:
            return NormValue(enc.lo)
        return NormValue(bounds=enc)

    def base(self) -> Sup01:
        return self

    def describe(self) -> str:
        return "sup[0,1]"


@dataclass(frozen=True)
class CoeffMax:
    """Largest coefficient magnitude on the monomial basis."""

    def value(self, f: Poly) -> NormValue:
        return NormValue(coeff_maxnorm(f))

    def base(self) -> CoeffMax:
        return self

    def describe(self) -> str:
        return "coeff-max"


# --- text form -------------------------------------------------------------

_TERM = re.compile(
    r"""^(?P<coef>[0-9./]*)\s*\*?\s*
        (?:(?P<var>t)(?:\s*\^\s*(?P<exp>\d+))?)?$""",
    re.VERBOSE,
)


def format_poly(f: Poly) -> str:
    """``"a0 + a1 t + a2 t^2"``; zero coefficients are skipped."""
    if not f:
        return "0"
    parts = []
    for j, c in enumerate(f.coeffs):
        if c == 0:
            continue
        mono = "" if j == 0 else ("t" if j == 1 else f"t^{j}")
        mag = format_rational(abs(c))
        body = mag if not mono else (mono if mag == "1" else f"{mag} {mono}")
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    first_sign, first = parts[0]
    text = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


def parse_poly(text: str) -> Poly:
    """Inverse of :func:`format_poly`; ``3*t^2`` style terms are accepted too."""
    s = text.replace("−", "-").replace(" ", "")
    if not s:
        raise ValueError("empty polynomial")
    if s[0] not in "+-":
        s = "+" + s
    coeffs: dict[int, Fraction] = {}
    for sign, body in re.findall(r"([+-])([^+-]+)", s):
        m = _TERM.match(body)
        if not m or (not m["coef"] and not m["var"]):
            raise ValueError(f"cannot parse term {sign}{body!r}")
        c = parse_rational(m["coef"]) if m["coef"] else Fraction(1)
        e = 0 if not m["var"] else int(m["exp"] or 1)
        coeffs[e] = coeffs.get(e, Fraction(0)) + (-c if sign == "-" else c)
    n = max(coeffs)
    return Poly([coeffs.get(j, 0) for j in range(n + 1)])
