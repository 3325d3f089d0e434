"""Oracles for the norm axioms, the parallelogram law, induced inner
products, and coordinate bounds ``|u_k| <= M_k ||u||``."""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .certificate import Certificate, Row
from .finsupp import FinSuppVec, coordinate
from .operators import LinearMap, NonInjectiveError, apply, induced_inner, induced_norm_pow
from .scalar import (
    DEFAULT_WIDTH,
    Enclosure,
    NormValue,
    as_rational,
    compare_scaled,
    compare_sum,
    format_rational,
)


def nonneg_multiple(u, v) -> Fraction | None:
    """``lam >= 0`` with ``v == lam * u`` (or ``u == 0``), else None."""
    if not u:
        return Fraction(0)
    if not v:
        return Fraction(0)
    if isinstance(u, FinSuppVec):
        if u.support != v.support:
            return None
        k0 = u.support[0]
        lam = v[k0] / u[k0]
        ok = lam > 0 and all(v[k] == lam * x for k, x in u)
        return lam if ok else None
    # polynomials
    if len(u.coeffs) != len(v.coeffs):
        return None
    lam = v.coeffs[-1] / u.coeffs[-1]
    return lam if lam > 0 and v == lam * u else None


def _safe_value(spec, x) -> NormValue | None:
    try:
        return spec.value(x)
    except NonInjectiveError:
        return None


def check_norm_axioms(spec, samples: Iterable[tuple], tolerance_width=DEFAULT_WIDTH,
                      claim_id: str = "norm-axioms") -> Certificate:
    """Definiteness, homogeneity and the triangle inequality on each ``(u, v, lam)``.

    Definiteness and homogeneity are exact at the power level.  The
    triangle inequality is exact when all three norms are rational,
    accepted symbolically when ``v`` is a nonnegative multiple of ``u``,
    and otherwise decided by root enclosures down to ``tolerance_width``;
    rows that stay ambiguous are recorded as undecided.
    """
    width = as_rational(tolerance_width)
    cert = Certificate(claim_id, {"norm": spec.describe(), "tolerance_width": format_rational(width)})
    for i, (u, v, lam) in enumerate(samples, start=1):
        lam = as_rational(lam)
        nu = _safe_value(spec, u)
        if nu is None:
            cert.add(Row(n=i, lhs=f"||{u}||", rhs="0", holds=False, label="definiteness"))
            continue
        zero = nu.is_zero
        cert.add(Row(n=i, lhs=str(nu), rhs="0" if not u else ">0",
                     holds=None if zero is None else zero == (not u), label="definiteness"))

        hom = compare_scaled(spec.value(lam * u), nu, abs(lam), width)
        cert.add(Row(n=i, lhs=hom.lhs, rhs=hom.rhs, holds=None if hom.sign is None else hom.sign == 0,
                     label="homogeneity", power=hom.power))

        nuv, nv = _safe_value(spec, u + v), _safe_value(spec, v)
        if nuv is None or nv is None:
            cert.add(Row(n=i, lhs="?", rhs="?", holds=False, label="triangle"))
            continue
        if nonneg_multiple(u, v) is not None:
            cert.add(Row(n=i, lhs=str(nuv), rhs=f"{nu} + {nv}", holds=True, label="triangle-equality"))
            continue
        tri = compare_sum(nuv, nu, nv, width)
        cert.add(Row(n=i, lhs=tri.lhs, rhs=tri.rhs, holds=None if tri.sign is None else tri.sign <= 0,
                     label="triangle"))
    return cert


def _squared_enclosure(value: NormValue, width) -> Enclosure:
    sq = value.squared()
    if sq is not None:
        return Enclosure(sq.power, sq.power)
    return value.enclose(width).square()


def check_parallelogram(spec, pairs: Iterable[tuple], width=DEFAULT_WIDTH,
                        claim_id: str = "parallelogram") -> Certificate:
    """``||w+z||^2 + ||w-z||^2`` against ``2(||w||^2 + ||z||^2)`` per pair.

    Exact when the squared norms are rational (p = 1, 2, inf); for other
    p a violation is certified by disjoint enclosures and anything else
    is left undecided.
    """
    width = as_rational(width)
    cert = Certificate(claim_id, {"norm": spec.describe()})
    for i, (w, z) in enumerate(pairs, start=1):
        s_plus, s_minus, s_w, s_z = (_squared_enclosure(spec.value(x), width) for x in (w + z, w - z, w, z))
        lhs = s_plus + s_minus
        rhs = (s_w + s_z).scale(Fraction(2))
        if lhs.is_point and rhs.is_point:
            holds = lhs.lo == rhs.lo
        elif lhs.hi < rhs.lo or lhs.lo > rhs.hi:
            holds = False
        else:
            holds = None
        cert.add(Row(n=i, lhs=str(lhs), rhs=str(rhs), holds=holds))
    return cert


def check_inner_consistency(T: LinearMap, samples: Iterable[tuple],
                            claim_id: str = "inner-consistency") -> Certificate:
    """Symmetry, first-slot linearity, positivity and ``(u,u) = ||Tu||_2^2``."""
    cert = Certificate(claim_id, {"map": T.describe()})

    def add(i, label, lhs, rhs, holds):
        cert.add(Row(n=i, lhs=format_rational(lhs), rhs=format_rational(rhs), holds=holds, label=label))

    for i, (u, v, lam) in enumerate(samples, start=1):
        lam = as_rational(lam)
        uv, vu = induced_inner(T, u, v), induced_inner(T, v, u)
        add(i, "symmetry", uv, vu, uv == vu)
        for w in (u, v):
            lhs = induced_inner(T, lam * u + v, w)
            rhs = lam * induced_inner(T, u, w) + induced_inner(T, v, w)
            add(i, "linearity", lhs, rhs, lhs == rhs)
        uu = induced_inner(T, u, u)
        add(i, "positivity", uu, 0, (uu > 0) if u else (uu == 0))
        try:
            npow = induced_norm_pow(T, u, 2)
        except NonInjectiveError:
            add(i, "norm-consistency", uu, 0, False)
            continue
        add(i, "norm-consistency", uu, npow, uu == npow)
    return cert


def constant_bound(c) -> Callable[[int], Fraction]:
    c = as_rational(c)
    if c <= 0:
        raise ValueError("coordinate bounds must be positive")
    return lambda k: c


def check_coordinate_bounds(spec, M: Callable[[int], Fraction], samples: Sequence[FinSuppVec],
                            indices: Iterable[int], claim_id: str = "coordinate-bounds") -> Certificate:
    """``|u_k| <= M(k) * ||u||`` for each sample ``u`` (row ``n`` = 1-based
    sample position) and each index ``k`` (row ``m``)."""
    indices = list(indices)
    cert = Certificate(claim_id, {"norm": spec.describe(), "indices": ",".join(map(str, indices))})
    for i, u in enumerate(samples, start=1):
        nu = spec.value(u)
        for k in indices:
            Mk = as_rational(M(k))
            if Mk <= 0:
                raise ValueError(f"M({k}) = {Mk} is not positive")
            cmp = compare_scaled(NormValue(abs(coordinate(u, k))), nu, Mk)
            cert.add(Row(n=i, m=k, lhs=cmp.lhs, rhs=cmp.rhs,
                         holds=None if cmp.sign is None else cmp.sign <= 0, power=cmp.power))
    return cert


def thm43_series_coord(j: int, n: int) -> Fraction:
    """``pi_j`` of the partial sum ``sum_{k<=n} 2^-k chi_k``."""
    u = FinSuppVec((k, Fraction(1, 2**k)) for k in range(1, n + 1))
    return coordinate(u, j)


def first_violation_index(cert: Certificate) -> int | None:
    row = cert.first_violation()
    return None if row is None else row.n


def image_samples(T: LinearMap, vectors: Iterable[FinSuppVec]) -> list[FinSuppVec]:
    return [apply(T, u) for u in vectors]
