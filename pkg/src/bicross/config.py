"""Tunable limits and tolerances shared across the toolkit."""
from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class ToolConfig:
    """Caps and tolerances.  All exact checks are exact; the tolerances only
    govern numeric eigenvalue clustering and character matching, where the
    quantities being separated differ by at least a root-of-unity gap."""

    element_cap: int = 10_000        # refuse groups larger than this
    exhaustive_dim: int = 200        # exhaustive axiom checks up to this dim
    sample_triples: int = 10_000     # random triples beyond exhaustive_dim
    seed: int = 0                    # RNG seed for sampled verification
    eig_tol: float = 1e-9            # eigenvalue clustering tolerance
    char_tol: float = 1e-6           # character matching tolerance
    invert_coord_cap: int = 4096     # max coordinates for minpoly inversion
    solve_dim_cap: int = 16          # max Hopf dim for generic antipode solve
    bichar_ab_cap: int = 64          # |K1ab|*|K2ab| cap for bicharacter search
    decompose_dim_cap: int = 150     # dense regular-module splitting cap
    exact_char_dim: int = 48         # exact idempotent/character recovery cap
    direct_decompose_cap: int = 128  # cross-check induced catalogs up to this dim


DEFAULT_CONFIG = ToolConfig()
