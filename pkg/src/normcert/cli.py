"""Command-line front end: run the named demonstrations and emit certificates.

Exit status is 0 when every certificate has its expected outcome, 1 when
one does not (including undecided rows), and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Callable

from .axioms import (
    check_coordinate_bounds,
    check_inner_consistency,
    check_norm_axioms,
    check_parallelogram,
    constant_bound,
    thm43_series_coord,
)
from .certificate import Certificate, Row, to_csv
from .finsupp import PNorm, chi, pnorm_pow, supnorm
from .operators import Derivative, Induced, parse_map, thm13_map, thm11_iso
from .polyspace import Sup01
from .sampling import random_pairs, random_triples, random_vectors
from .scalar import INF, Exponent, format_rational, parse_exponent
from .witness import (
    check_cauchy,
    check_escape,
    check_not_cauchy,
    check_ratio_divergence,
    check_separation,
    gen_cor22,
    gen_derivative_example,
    gen_lemma41,
    gen_lemma41_geo,
    gen_thm13,
    gen_thm43,
)

DEFAULT_SEED = 20250101


@dataclass(frozen=True)
class DemoConfig:
    demo: str
    depth: int = 100
    p: Exponent = 1
    refinement: int = 32
    seed: int = DEFAULT_SEED
    format: str = "text"
    out: str | None = None

    def as_dict(self) -> dict[str, str]:
        return {
            "demo": self.demo,
            "depth": str(self.depth),
            "p": str(self.p),
            "refinement": str(self.refinement),
            "seed": str(self.seed),
            "format": self.format,
        }


@dataclass
class Outcome:
    cert: Certificate
    expect_violation: bool = False
    note: str = ""

    @property
    def ok(self) -> bool:
        if self.expect_violation:
            return self.cert.violated
        return self.cert.all_hold


@dataclass(frozen=True)
class Demo:
    name: str
    citation: str
    run: Callable[[DemoConfig], list[Outcome]]


def _finite_ps(p: Exponent) -> list[int]:
    ps = [1, 2, 3]
    if p is not INF and p not in ps:
        ps.append(p)
    return ps


# --- demo bodies -------------------------------------------------------------


def _demo_thm13(cfg: DemoConfig) -> list[Outcome]:
    T = thm13_map()
    ratio = check_ratio_divergence(gen_thm13(), PNorm(1), Induced(T, PNorm(1)),
                                   lambda n: Fraction(n - 1), cfg.depth, exclude={2}, claim_id="thm1.3/ratio")
    exact = Certificate("thm1.3/exact-ratio", {"map": "thm13:g=n:pivot=2", "depth": str(cfg.depth)})
    for n in range(1, cfg.depth + 1):
        if n == 2:
            continue
        value = pnorm_pow(T(chi(n)), 1)
        exact.add(Row(n=n, lhs=format_rational(value), rhs=str(n + 1), holds=value == n + 1))
    invol = Certificate("thm1.3/involution", {"map": "thm13:g=n:pivot=2", "seed": str(cfg.seed)})
    samples = [chi(k) for k in range(1, 11)] + random_vectors(cfg.seed, 100)
    for i, u in enumerate(samples, start=1):
        back = T(T(u))
        invol.add(Row(n=i, lhs=str(back), rhs=str(u), holds=back == u))
    return [Outcome(ratio), Outcome(exact), Outcome(invol)]


def _demo_cor22(cfg: DemoConfig) -> list[Outcome]:
    s = gen_cor22("4^n")
    induced = Induced(parse_map("thm13:g=4^n:pivot=1"), PNorm(1))
    return [
        Outcome(check_cauchy(s, PNorm(1), lambda m: Fraction(1, 2**m), cfg.depth, claim_id="cor2.2/cauchy-l1")),
        Outcome(check_not_cauchy(s, induced, 1, cfg.depth, claim_id="cor2.2/not-cauchy-induced")),
        Outcome(check_not_cauchy(s, PNorm(1), 1, cfg.depth, claim_id="cor2.2/l1-gap-contrast"),
                expect_violation=True,
                note="consecutive l1 gaps fall below 1, as they must for an l1-Cauchy sequence"),
    ]


def _demo_derivative(cfg: DemoConfig) -> list[Outcome]:
    sup = Sup01(cfg.refinement)
    cert = check_ratio_divergence(gen_derivative_example(), sup, Induced(Derivative(), sup),
                                  lambda n: Fraction(n), cfg.depth, claim_id="example-derivative/ratio")
    cert.params["restriction"] = "polynomial witnesses only"
    equal = Certificate("example-derivative/ratio-equals-n", {"depth": str(cfg.depth)})
    for row in cert.rows:
        equal.add(Row(n=row.n, lhs=row.lhs, rhs=row.rhs, holds=row.lhs == row.rhs))
    return [Outcome(cert), Outcome(equal)]


def _lemma41_setup(p: Exponent):
    if p in (1, 2):
        s = gen_lemma41(p)
        if p == 1:
            modulus = lambda m: Fraction(1, m)  # noqa: E731
        else:
            modulus = lambda m: Fraction(1, isqrt(m))  # noqa: E731
        return s, PNorm(p), modulus
    s = gen_lemma41_geo(1 if p is INF else p)
    return s, PNorm(p), lambda m: Fraction(1, 2**m)


def _demo_lemma41a(cfg: DemoConfig) -> list[Outcome]:
    s, norm, modulus = _lemma41_setup(cfg.p)
    out = [Outcome(check_cauchy(s, norm, modulus, cfg.depth, claim_id="lemma4.1a/cauchy"))]
    if cfg.p in (1, 2):
        tail = Certificate("lemma4.1a/tail-identity", {"p": str(cfg.p), "depth": str(cfg.depth)})
        N = cfg.depth
        expected = Fraction(0)
        for n in range(N - 1, 0, -1):
            expected += Fraction(1, (n + 1) ** 2)
            got = pnorm_pow(s(N) - s(n), cfg.p)
            tail.add(Row(n=n, m=N, lhs=format_rational(got), rhs=format_rational(expected), holds=got == expected))
        tail.rows.reverse()
        out.append(Outcome(tail))
    out.append(Outcome(check_escape(s, cfg.depth, range(1, cfg.depth), claim_id="lemma4.1a/escape")))
    return out


def _demo_lemma41b(cfg: DemoConfig) -> list[Outcome]:
    indices = range(1, min(cfg.depth, 50) + 1)
    return [Outcome(check_separation(indices, p, claim_id=f"lemma4.1b/p={p}")) for p in _finite_ps(cfg.p)]


def _demo_thm43(cfg: DemoConfig) -> list[Outcome]:
    N = cfg.depth
    partial = [gen_thm43()(n) for n in range(1, N + 1)]
    samples = partial + random_vectors(cfg.seed, 50)
    coords = Certificate("thm4.3/series-coordinates", {"depth": str(N)})
    for n in range(1, N + 1):
        for j in range(1, n + 1):
            got = partial[n - 1][j]
            coords.add(Row(n=n, m=j, lhs=format_rational(got), rhs=format_rational(Fraction(1, 2**j)),
                           holds=got == Fraction(1, 2**j)))
    indices = range(1, min(N, 20) + 1)
    one = constant_bound(1)
    T = thm13_map()
    images = [T(chi(n)) for n in range(1, N + 1)]
    return [
        Outcome(coords),
        Outcome(check_coordinate_bounds(PNorm(INF), one, samples, indices, claim_id="thm4.3/bound-sup")),
        Outcome(check_coordinate_bounds(PNorm(cfg.p), one, samples, indices, claim_id=f"thm4.3/bound-l{cfg.p}")),
        Outcome(check_coordinate_bounds(Induced(T, PNorm(1)), constant_bound(10), images, [2],
                                        claim_id="thm4.3/bound-fails-induced"),
                expect_violation=True,
                note="no constant bounds the second coordinate under the induced norm"),
        Outcome(check_escape(gen_thm43(), N, range(1, N), claim_id="thm4.3/escape")),
    ]


def _demo_parallelogram(cfg: DemoConfig) -> list[Outcome]:
    pairs = random_pairs(cfg.seed, 100)
    return [
        Outcome(check_parallelogram(PNorm(INF), [(chi(1), chi(2))], claim_id="parallelogram/sup"),
                expect_violation=True,
                note="the sup norm breaks the parallelogram law, so it has no inner product"),
        Outcome(check_parallelogram(PNorm(2), pairs, claim_id="parallelogram/l2")),
        Outcome(check_parallelogram(Induced(thm13_map(), PNorm(2)), pairs, claim_id="parallelogram/induced-l2")),
    ]


def _demo_axioms(cfg: DemoConfig) -> list[Outcome]:
    triples = random_triples(cfg.seed, 200)
    T = thm13_map()
    return [
        Outcome(check_norm_axioms(PNorm(cfg.p), triples, claim_id=f"axioms/l{cfg.p}")),
        Outcome(check_norm_axioms(Induced(T, PNorm(cfg.p)), triples, claim_id=f"axioms/induced-l{cfg.p}")),
        Outcome(check_inner_consistency(T, triples, claim_id="axioms/inner-induced")),
    ]


def _demo_thm11(cfg: DemoConfig) -> list[Outcome]:
    vectors = random_vectors(cfg.seed, 100)
    iso = thm11_iso(lambda k: k + 7)
    out = []
    for p in _finite_ps(cfg.p) + [INF]:
        cert = Certificate(f"thm1.1-isometry/l{p}", {"map": "shift:+7", "p": str(p)})
        for i, u in enumerate(vectors, start=1):
            if p is INF:
                a, b = supnorm(iso(u)), supnorm(u)
            else:
                a, b = pnorm_pow(iso(u), p), pnorm_pow(u, p)
            cert.add(Row(n=i, lhs=format_rational(a), rhs=format_rational(b), holds=a == b,
                         power=1 if p is INF else p))
        out.append(Outcome(cert))
    return out


REGISTRY: dict[str, Demo] = {
    d.name: d
    for d in (
        Demo("thm1.3", "proof of Theorem 1.3", _demo_thm13),
        Demo("cor2.2", "Cauchy sequences not preserved by a non-equivalent norm", _demo_cor22),
        Demo("example-derivative", "derivative operator, ratio n", _demo_derivative),
        Demo("lemma4.1a", "Cauchy-but-escaping sequence", _demo_lemma41a),
        Demo("lemma4.1b", "characteristic functions at mutual distance 2^(1/p)", _demo_lemma41b),
        Demo("thm4.3", "continuous coordinates and the escaping series", _demo_thm43),
        Demo("parallelogram", "sup norm is not induced by an inner product", _demo_parallelogram),
        Demo("axioms", "norm axioms for basis and induced norms", _demo_axioms),
        Demo("thm1.1-isometry", "relabelling indices preserves every p-norm", _demo_thm11),
    )
}


def list_demos() -> str:
    return "\n".join(f"{d.name} — {d.citation}" for d in REGISTRY.values()) + "\n"


def run_demo(cfg: DemoConfig) -> list[Outcome]:
    if cfg.demo not in REGISTRY:
        raise KeyError(cfg.demo)
    if cfg.depth < 2:
        raise ValueError("depth must be >= 2")
    outcomes = REGISTRY[cfg.demo].run(cfg)
    for o in outcomes:
        o.cert.params["demo"] = cfg.demo
        o.cert.params["expected"] = "violation" if o.expect_violation else "all-hold"
        if o.note:
            o.cert.params["note"] = o.note
    return outcomes


# --- rendering ---------------------------------------------------------------


def render_text(outcomes: list[Outcome]) -> str:
    lines = []
    for o in outcomes:
        status = "ok" if o.ok else "FAIL"
        line = f"[{status}] {o.cert.claim_id}: {o.cert.verdict} ({len(o.cert.rows)} rows)"
        if o.expect_violation:
            line += " (expected violation)"
        lines.append(line)
        if o.expect_violation and o.ok:
            row = o.cert.first_violation()
            lines.append(f"    violation at n={row.n}: {row.lhs} vs {row.rhs}; {o.note}")
    return "\n".join(lines) + "\n"


def render(outcomes: list[Outcome], configs: list[DemoConfig], fmt: str) -> str:
    if fmt == "json":
        doc = {
            "config": {k: v for k, v in configs[0].as_dict().items() if k != "demo"}
            | {"demos": [c.demo for c in configs]},
            "demos": [o.cert.to_dict() for o in outcomes],
        }
        return json.dumps(doc, indent=2, sort_keys=False) + "\n"
    if fmt == "csv":
        return to_csv([o.cert for o in outcomes])
    return render_text(outcomes)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="normcert", description=__doc__.splitlines()[0])
    target = parser.add_mutually_exclusive_group()
    target.add_argument("--demo", help="demo id (see --list)")
    target.add_argument("--all", action="store_true", help="run every demo in registry order")
    target.add_argument("--list", action="store_true", help="list demo ids and exit")
    parser.add_argument("--depth", type=int, default=100)
    parser.add_argument("--p", default="1", help="positive integer or 'inf'")
    parser.add_argument("--refine", type=int, default=32, help="subdivision rounds for sup-norm enclosures")
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED)
    parser.add_argument("--format", choices=("text", "json", "csv"), default="text")
    parser.add_argument("--out", help="output path (default: stdout)")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2

    if args.list:
        sys.stdout.write(list_demos())
        return 0
    if not args.demo and not args.all:
        parser.print_usage(sys.stderr)
        sys.stderr.write("normcert: one of --demo, --all or --list is required\n")
        return 2
    if args.demo and args.demo not in REGISTRY:
        sys.stderr.write(f"normcert: unknown demo {args.demo!r}; known demos:\n{list_demos()}")
        return 2
    try:
        p = parse_exponent(args.p)
    except ValueError:
        sys.stderr.write(f"normcert: bad --p {args.p!r}\n")
        return 2
    if args.depth < 2:
        sys.stderr.write("normcert: --depth must be >= 2\n")
        return 2
    if args.refine < 0:
        sys.stderr.write("normcert: --refine must be >= 0\n")
        return 2

    names = list(REGISTRY) if args.all else [args.demo]
    configs = [DemoConfig(name, args.depth, p, args.refine, args.seed, args.format, args.out) for name in names]
    outcomes: list[Outcome] = []
    for cfg in configs:
        outcomes.extend(run_demo(cfg))

    text = render(outcomes, configs, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if all(o.ok for o in outcomes) else 1


if __name__ == "__main__":
    sys.exit(main())
