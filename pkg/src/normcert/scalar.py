"""Exact rational scalars, exponents, and certified root enclosures.

Rationals are :class:`fractions.Fraction` values (always reduced, positive
denominator, zero stored as ``0/1``).  Norm values that would need an
irrational root are carried as an exact power together with the root
degree (:class:`NormValue`), and only turned into an interval when two
of them have to be compared and the comparison cannot be done exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Union

Rational = Fraction

# widths tried, in order, when two irrational values must be separated
_REFINE_SCHEDULE = tuple(Fraction(1, 2 ** (8 * 2**i)) for i in range(8))
DEFAULT_WIDTH = Fraction(1, 10**30)


class _Infinity:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INF"

    def __str__(self) -> str:
        return "inf"

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()
Exponent = Union[int, _Infinity]


def check_exponent(p) -> Exponent:
    if p is INF:
        return p
    if isinstance(p, bool) or not isinstance(p, int) or p < 1:
        raise ValueError(f"exponent must be an integer >= 1 or INF, got {p!r}")
    return p


def parse_exponent(text: str) -> Exponent:
    text = text.strip().lower()
    if text in ("inf", "infinity", "oo"):
        return INF
    return check_exponent(int(text))


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return parse_rational(x)
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass a string or a Fraction")
    return Fraction(x)


def parse_rational(text: str) -> Fraction:
    """Parse ``"num/den"``, an integer, or a decimal string exactly."""
    text = text.strip().replace("−", "-")
    if not text:
        raise ValueError("empty rational literal")
    return Fraction(text)


def format_rational(x: Fraction) -> str:
    # canonical: reduced, sign on the numerator, "/1" dropped
    return str(Fraction(x))


def rat_pow(x: Fraction, k: int) -> Fraction:
    if k < 0:
        raise ValueError("rat_pow takes a natural exponent")
    result = Fraction(1)
    base = Fraction(x)
    while k:
        if k & 1:
            result *= base
        base *= base
        k >>= 1
    return result


def iroot(n: int, p: int) -> int:
    """Largest integer r with r**p <= n."""
    if n < 0:
        raise ValueError("iroot of a negative integer")
    if n < 2 or p == 1:
        return n
    r = 1 << -(-n.bit_length() // p)  # 2**ceil(bits/p) >= true root
    while True:
        s = ((p - 1) * r + n // r ** (p - 1)) // p
        if s >= r:
            break
        r = s
    while r**p > n:
        r -= 1
    while (r + 1) ** p <= n:
        r += 1
    return r


def exact_root(x: Fraction, p: int) -> Fraction | None:
    """The rational p-th root of ``x`` if there is one."""
    a, b = x.numerator, x.denominator
    ra, rb = iroot(a, p), iroot(b, p)
    if ra**p == a and rb**p == b:
        return Fraction(ra, rb)
    return None


@dataclass(frozen=True)
class Enclosure:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty enclosure [{self.lo}, {self.hi}]")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    def __contains__(self, x) -> bool:
        return self.lo <= x <= self.hi

    def __add__(self, other: Enclosure) -> Enclosure:
        return Enclosure(self.lo + other.lo, self.hi + other.hi)

    def scale(self, c: Fraction) -> Enclosure:
        if c < 0:
            raise ValueError("only nonnegative scaling is supported")
        return Enclosure(c * self.lo, c * self.hi)

    def square(self) -> Enclosure:
        if self.lo < 0:
            raise ValueError("square() expects a nonnegative enclosure")
        return Enclosure(self.lo * self.lo, self.hi * self.hi)

    def __str__(self) -> str:
        if self.is_point:
            return format_rational(self.lo)
        return f"[{format_rational(self.lo)}, {format_rational(self.hi)}]"


def root_enclosure(x, p: int, width=DEFAULT_WIDTH) -> Enclosure:
    """Enclose the real p-th root of ``x >= 0`` in an interval of the given width.

    The bounds have a power-of-two denominator; an exact rational root
    is returned as a point interval.
    """
    x, width = as_rational(x), as_rational(width)
    if x < 0:
        raise ValueError("root_enclosure needs x >= 0")
    if width <= 0:
        raise ValueError("width must be positive")
    if p < 1:
        raise ValueError("root degree must be >= 1")
    exact = exact_root(x, p)
    if exact is not None:
        return Enclosure(exact, exact)
    # smallest D = 2**k with 1/D <= width
    k = max(0, (width.denominator // width.numerator).bit_length())
    while Fraction(1, 2**k) > width:
        k += 1
    D = 2**k
    m = iroot(x.numerator * D**p // x.denominator, p)
    return Enclosure(Fraction(m, D), Fraction(m + 1, D))


@dataclass(frozen=True)
class NormValue:
    """A nonnegative real known either exactly as ``power ** (1/root)``
    or only through certified ``bounds``."""

    power: Fraction | None = None
    root: int = 1
    bounds: Enclosure | None = None

    def __post_init__(self):
        if self.power is None and self.bounds is None:
            raise ValueError("NormValue needs an exact power or bounds")
        if self.power is not None and self.power < 0:
            raise ValueError("norm powers are nonnegative")

    @classmethod
    def exact(cls, value) -> NormValue:
        return cls(power=as_rational(value), root=1)

    @property
    def is_exact(self) -> bool:
        return self.power is not None

    @property
    def is_zero(self) -> bool | None:
        if self.power is not None:
            return self.power == 0
        if self.bounds.hi == 0:
            return True
        return False if self.bounds.lo > 0 else None

    def rational(self) -> Fraction | None:
        """The value itself, when it is rational."""
        if self.power is None:
            return self.bounds.lo if self.bounds.is_point else None
        return exact_root(self.power, self.root)

    def enclose(self, width=DEFAULT_WIDTH) -> Enclosure:
        if self.power is None:
            return self.bounds
        return root_enclosure(self.power, self.root, width)

    def squared(self) -> NormValue | None:
        """Exact square when available without roots, else None."""
        if self.power is None:
            return None
        if self.root == 1:
            return NormValue(self.power * self.power)
        if self.root == 2:
            return NormValue(self.power)
        return None

    def __str__(self) -> str:
        if self.power is None:
            return str(self.bounds)
        if self.root == 1:
            return format_rational(self.power)
        return f"({format_rational(self.power)})^(1/{self.root})"


@dataclass(frozen=True)
class Comparison:
    """Outcome of comparing ``a`` against ``scale * b``.

    ``sign`` is -1, 0 or 1, or None when certified bounds could not
    separate the two sides.  ``lhs``/``rhs`` are the quantities actually
    compared (raised to ``power`` when the comparison was exact).
    """

    sign: int | None
    lhs: str
    rhs: str
    power: int = 1


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def compare_scaled(a: NormValue, b: NormValue, scale=1, width=DEFAULT_WIDTH) -> Comparison:
    """Compare ``a`` with ``scale * b`` (``scale`` rational).

    Exact values are compared through a common power; otherwise the
    enclosures are tightened until they separate or reach ``width``.
    """
    scale = as_rational(scale)
    if scale < 0:
        # scale*b <= 0 <= a, with equality only when both vanish
        az, bz = a.is_zero, b.is_zero
        if az is False or bz is False:
            sign = 1
        elif az and bz:
            sign = 0
        else:
            sign = None
        return Comparison(sign, str(a), f"{format_rational(scale)}*{b}")
    if a.is_exact and b.is_exact:
        R = lcm(a.root, b.root)
        lhs = rat_pow(a.power, R // a.root)
        rhs = rat_pow(scale, R) * rat_pow(b.power, R // b.root)
        return Comparison(_sign(lhs - rhs), format_rational(lhs), format_rational(rhs), R)
    ea = eb = None
    for w in _REFINE_SCHEDULE:
        w = max(w, width)
        ea, eb = a.enclose(w), b.enclose(w).scale(scale)
        if ea.hi < eb.lo:
            return Comparison(-1, str(ea), str(eb))
        if ea.lo > eb.hi:
            return Comparison(1, str(ea), str(eb))
        if ea.is_point and eb.is_point and ea.lo == eb.lo:
            return Comparison(0, str(ea), str(eb))
        if w == width:
            break
    return Comparison(None, str(ea), str(eb))


def compare_sum(x: NormValue, y: NormValue, z: NormValue, width=DEFAULT_WIDTH) -> Comparison:
    """Compare ``x`` with ``y + z``, exactly when all three are rational."""
    rx, ry, rz = x.rational(), y.rational(), z.rational()
    if rx is not None and ry is not None and rz is not None:
        s = ry + rz
        return Comparison(_sign(rx - s), format_rational(rx), format_rational(s))
    ex = es = None
    for w in _REFINE_SCHEDULE:
        w = max(w, width)
        ex, es = x.enclose(w), y.enclose(w) + z.enclose(w)
        if ex.hi < es.lo:
            return Comparison(-1, str(ex), str(es))
        if ex.lo > es.hi:
            return Comparison(1, str(ex), str(es))
        if w == width:
            break
    return Comparison(None, str(ex), str(es))
