"""Bicrossed-product Hopf algebras from exact group factorizations.

Construction and exact verification of the Hopf algebras k^Gamma # kF built
from an exact factorization G = F.Gamma, their Drinfeld doubles and
quasitriangular structures, the classification of fusion subcategories of
module categories of (twisted) doubles by subgroup/bicharacter triples, and
an obstruction pipeline that certifies when such a Hopf algebra admits no
quasitriangular structure at all.
"""
from .config import DEFAULT_CONFIG, ToolConfig
from .cyclotomic import CycScalar, cyclotomic_polynomial

__version__ = "0.1.0"

__all__ = [
    "CycScalar",
    "cyclotomic_polynomial",
    "ToolConfig",
    "DEFAULT_CONFIG",
    "__version__",
]
