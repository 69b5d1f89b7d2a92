"""Exact decision procedures for calibration-free immersions of 4-manifolds.

Invariant-level arithmetic for closed oriented smooth 4-manifolds: connected
sums over a catalog of building blocks, Gauss-class bookkeeping in the
oriented Grassmannians G(3,7) and G(4,8), intersection numbers with the
(co)associative and Cayley loci, and the obstruction chain for contracting
the Gauss map.  All arithmetic is exact (``fractions.Fraction``).
"""

from fractions import Fraction as Rational

from .algebra import (
    FgAbelianGroup,
    HurewiczReport,
    has_p_power_torsion,
    hurewicz_injectivity,
    in_serre_class,
)
from .manifolds import (
    CATALOG,
    Catalog,
    CharClassStatus,
    InvalidManifoldError,
    ManifoldClass,
    catalog_lookup,
    char_class_status,
    connected_sum,
    multi_sum,
)
from .verdicts import (
    ObstructionLedger,
    Verdict,
    cayley_free_embedding,
    chi_vanishing_g2_target,
    coassociative_free_immersion,
    full_report,
    gauss_contractibility,
    parallelizable,
)

__all__ = [
    "Rational",
    "FgAbelianGroup",
    "HurewiczReport",
    "has_p_power_torsion",
    "in_serre_class",
    "hurewicz_injectivity",
    "CATALOG",
    "Catalog",
    "CharClassStatus",
    "InvalidManifoldError",
    "ManifoldClass",
    "catalog_lookup",
    "char_class_status",
    "connected_sum",
    "multi_sum",
    "ObstructionLedger",
    "Verdict",
    "cayley_free_embedding",
    "chi_vanishing_g2_target",
    "coassociative_free_immersion",
    "full_report",
    "gauss_contractibility",
    "parallelizable",
]
