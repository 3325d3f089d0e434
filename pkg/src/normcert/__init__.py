"""Exact finite-support sequence spaces, induced norms, and certified
checks of norm inequalities."""

from .certificate import Certificate, Row
from .finsupp import ZERO, FinSuppVec, PNorm, add, chi, coordinate, norm_cmp, pnorm_pow, scale, supnorm
from .operators import Induced, thm11_iso, thm13_map
from .polyspace import Poly, Sup01, supnorm01_enclosure
from .scalar import INF, Enclosure, NormValue, rat_pow, root_enclosure

__all__ = [
    "Certificate",
    "Enclosure",
    "FinSuppVec",
    "INF",
    "Induced",
    "NormValue",
    "PNorm",
    "Poly",
    "Row",
    "Sup01",
    "ZERO",
    "add",
    "chi",
    "coordinate",
    "norm_cmp",
    "pnorm_pow",
    "rat_pow",
    "root_enclosure",
    "scale",
    "supnorm",
    "supnorm01_enclosure",
    "thm11_iso",
    "thm13_map",
]
