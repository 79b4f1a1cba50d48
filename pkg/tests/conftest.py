"""Shared fixtures: groups, factorizations, and the standard small algebras."""
import pytest

from bicross import perm, stock
from bicross.factorization import ExactFactorization, derive_matched_pair
from bicross.hopf import build_bicrossed_product


@pytest.fixture(scope="session")
def s3():
    return stock.symmetric(3)


@pytest.fixture(scope="session")
def s4():
    return stock.symmetric(4)


@pytest.fixture(scope="session")
def s3_c2_a3(s3):
    """S3 = C2 . A3 (F = <(1 2)>, Gamma = A3)."""
    F = s3.subgroup([s3.index[perm.parse_cycles("(1 2)", 3)]])
    Gam = s3.subgroup([s3.index[perm.parse_cycles("(1 2 3)", 3)]])
    return ExactFactorization(s3, F, Gam)


@pytest.fixture(scope="session")
def h6(s3_c2_a3):
    """k^{A3} # k<(1 2)>, the dimension-6 bicrossed product from S3."""
    return build_bicrossed_product(derive_matched_pair(s3_c2_a3))


@pytest.fixture(scope="session")
def h6_flip(s3_c2_a3):
    """k^{C2} # kA3 from the flipped reading of the same factorization."""
    return build_bicrossed_product(derive_matched_pair(s3_c2_a3.flipped()))


@pytest.fixture(scope="session")
def s4_c4_s3(s4):
    """S4 = S3 . C4 with F = Stab(4) and Gamma = <(1 2 3 4)>."""
    F = s4.subgroup([s4.index[perm.parse_cycles("(1 2)", 4)],
                     s4.index[perm.parse_cycles("(1 2 3)", 4)]])
    Gam = s4.subgroup([s4.index[perm.parse_cycles("(1 2 3 4)", 4)]])
    return ExactFactorization(s4, F, Gam)


@pytest.fixture(scope="session")
def h24(s4_c4_s3):
    """k^{C4} # kS3, dimension 24."""
    return build_bicrossed_product(derive_matched_pair(s4_c4_s3))
