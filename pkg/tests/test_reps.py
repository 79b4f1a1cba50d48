"""Decomposition engine and irrep catalogs, checked against an independent
class-sum eigenvalue oracle and classical character tables."""
from fractions import Fraction

import numpy as np
import pytest

from bicross import stock
from bicross.cyclotomic import CycScalar, root_mono
from bicross.double import drinfeld_double
from bicross.factorization import ExactFactorization, derive_matched_pair
from bicross.hopf import function_algebra, group_algebra
from bicross.reps import (AlgebraTable, OmegaCocycle, algebra_from_hopf,
                          beta_from_omega, check_two_cocycle,
                          crossed_product_irreps, decompose_semisimple,
                          double_irreps, twisted_group_algebra)

from . import oracles
from .test_factorization import cyclic_square_with_sigma

ONE = root_mono(1, 0)

KNOWN_DEGREES = {
    "S3": (1, 1, 2),
    "S4": (1, 1, 2, 3, 3),
    "A4": (1, 1, 1, 3),
    "D4": (1, 1, 1, 1, 2),
    "Q8": (1, 1, 1, 1, 2),
    "A5": (1, 3, 3, 4, 5),
}


@pytest.mark.parametrize("maker,key", [
    (lambda: stock.symmetric(3), "S3"),
    (lambda: stock.symmetric(4), "S4"),
    (lambda: stock.alternating(4), "A4"),
    (lambda: stock.dihedral(4), "D4"),
    (lambda: stock.quaternion(), "Q8"),
    (lambda: stock.alternating(5), "A5"),
])
def test_group_algebra_degrees_match_oracle_and_tables(maker, key):
    G = maker()
    cat = decompose_semisimple(algebra_from_hopf(group_algebra(G)),
                               characters=False)
    assert cat.ok, cat.failures
    assert cat.degrees() == KNOWN_DEGREES[key]
    assert tuple(oracles.irrep_degrees_by_center(G)) == KNOWN_DEGREES[key]


def test_commutative_algebras_split_into_lines(s3):
    cat = decompose_semisimple(algebra_from_hopf(function_algebra(s3)))
    assert cat.ok and cat.degrees() == (1,) * 6
    assert cat.exact_idempotents is not None    # the six delta functions
    # kC6 needs zeta_6 for its idempotents even though the structure constants
    # are rational, so the recovery field must be supplied by the caller
    cat = decompose_semisimple(algebra_from_hopf(group_algebra(stock.cyclic(6))),
                               exact_order=6)
    assert cat.ok and cat.degrees() == (1,) * 6
    assert cat.exact_idempotents is not None
    assert cat.checks.get("exact-characters") == 6


def test_exact_certification_in_a_supplied_splitting_field():
    A4 = stock.alternating(4)
    cat = decompose_semisimple(algebra_from_hopf(group_algebra(A4)),
                               exact_order=A4.exponent)
    assert cat.ok, cat.failures
    assert cat.degrees() == (1, 1, 1, 3)
    assert cat.checks.get("exact-idempotent-identities") == 4
    # the two nontrivial lines carry complex-conjugate cubic characters
    lines = [e for e in cat.entries if e.degree == 1]
    vals = [e.exact_character[idx]
            for e in lines for idx in range(12)
            if e.exact_character[idx] not in (0, 1)]
    z3 = root_mono(3, 1)
    assert vals and all(v == z3 or v == z3 * z3 for v in vals)
    assert any(v == z3 for v in vals) and any(v == z3 * z3 for v in vals)


def test_exact_characters_reproduce_the_s3_table(s3):
    # basis order is the sorted element order: e,(23),(12),(123),(132),(13)
    cat = decompose_semisimple(algebra_from_hopf(group_algebra(s3)))
    assert cat.ok, cat.failures
    tabs = {e.degree: e.exact_character for e in cat.entries}
    triv = [CycScalar.rational(1, 6)] * 6
    sign = [CycScalar.rational(q, 6) for q in (1, -1, -1, 1, 1, -1)]
    std = [CycScalar.rational(q, 6) for q in (2, 0, 0, -1, -1, 0)]
    deg1 = [e.exact_character for e in cat.entries if e.degree == 1]
    assert any(c == triv for c in deg1) and any(c == sign for c in deg1)
    assert tabs[2] == std


def test_seeds_and_failures_are_reported_for_non_semisimple_input():
    # k[x]/x^2 is local, not semisimple: the regular module does not split
    mul = {(0, 0): {0: ONE}, (0, 1): {1: ONE}, (1, 0): {1: ONE}, (1, 1): {}}
    tab = AlgebraTable("k[x]/x^2", 2, 1, mul, {0: ONE})
    cat = decompose_semisimple(tab)
    assert not cat.ok
    assert "perfect square" in cat.failures[0]


def test_dimension_cap_is_enforced():
    G = stock.symmetric(5)
    with pytest.raises(ValueError, match="cap"):
        decompose_semisimple(
            AlgebraTable("big", 200, 1, {}, {0: ONE}))
    # S5 itself (dim 120) is inside the cap
    cat = decompose_semisimple(algebra_from_hopf(group_algebra(G)),
                               characters=False)
    assert cat.degrees() == (1, 1, 4, 4, 5, 5, 6)


def test_nondegenerate_twisted_klein_four_is_a_matrix_block():
    V = stock.klein_four()
    coords = {0: (0, 0)}
    for i in range(1, 4):
        coords[i] = (1, 0) if i == 1 else ((0, 1) if i == 2 else (1, 1))
    beta = np.zeros((4, 4), dtype=np.int64)
    for i in range(4):
        for j in range(4):
            beta[i, j] = coords[i][0] * coords[j][1] % 2
    assert check_two_cocycle(V, beta, 2) == []
    cat = decompose_semisimple(twisted_group_algebra(V, beta, 2))
    assert cat.ok and cat.degrees() == (2,)


def test_twisted_group_algebra_rejects_bad_cocycle():
    V = stock.klein_four()
    bad = np.zeros((4, 4), dtype=np.int64)
    bad[1, 2] = 1   # breaks the cocycle law (and nothing compensates)
    with pytest.raises(ValueError, match="2-cocycle|normalized"):
        twisted_group_algebra(V, bad, 2)


# -- 3-cocycles and twisted doubles ----------------------------------------------

def omega_on_c2() -> OmegaCocycle:
    c2 = stock.cyclic(2)
    w = np.zeros((2, 2, 2), dtype=np.int64)
    w[1, 1, 1] = 1          # omega(g,g,g) = -1: the nontrivial class in H^3(C2)
    return OmegaCocycle(c2, 2, w)


def test_omega_validation():
    om = omega_on_c2()
    assert om.validate() == []
    assert not om.is_trivial
    assert OmegaCocycle.trivial(stock.symmetric(3)).validate() == []
    bad = OmegaCocycle(stock.cyclic(2), 2,
                       np.array([[[0, 0], [0, 1]], [[0, 0], [0, 0]]]))
    assert any("normalized" in p for p in bad.validate())
    w = np.zeros((3, 3, 3), dtype=np.int64)
    w[1, 1, 1] = 1
    bad2 = OmegaCocycle(stock.cyclic(3), 3, w)
    assert any("3-cocycle law" in p for p in bad2.validate())


def test_beta_from_omega_on_c2():
    om = omega_on_c2()
    cz, beta = beta_from_omega(om, 0)
    assert cz == (0, 1) and not beta.any()          # normalized at the identity
    cz, beta = beta_from_omega(om, 1)
    assert beta[1, 1] == 1                          # u_g^2 = -1
    assert check_two_cocycle(stock.cyclic(2), beta, 2) == []


def test_twisted_double_of_c2():
    om = omega_on_c2()
    cat = double_irreps(stock.cyclic(2), om)
    assert cat.ok, cat.failures
    assert cat.degrees() == (1, 1, 1, 1)
    # the twisted sector has u_g^2 = -1, so its characters take values ±i
    vals = [e.exact_character[1] for e in cat.entries if e.class_rep == 1]
    assert len(vals) == 2
    assert any(v == root_mono(4, 1) for v in vals)
    assert any(v == root_mono(4, 3) for v in vals)


def test_rejects_invalid_omega():
    w = np.zeros((3, 3, 3), dtype=np.int64)
    w[1, 1, 1] = 1
    with pytest.raises(ValueError, match="3-cocycle"):
        double_irreps(stock.cyclic(3), OmegaCocycle(stock.cyclic(3), 3, w))


# -- double catalogs ---------------------------------------------------------------

def test_double_irreps_s3_and_direct_decomposition_agree(s3):
    cat = double_irreps(s3)
    assert cat.ok, cat.failures
    assert len(cat.entries) == 8
    assert cat.degrees() == (1, 1, 2, 2, 2, 2, 3, 3)
    direct = decompose_semisimple(
        algebra_from_hopf(drinfeld_double(group_algebra(s3))), characters=False)
    assert direct.ok, direct.failures
    assert direct.degrees() == cat.degrees()


def test_double_irreps_s4(s4):
    cat = double_irreps(s4)
    assert cat.ok, cat.failures
    assert len(cat.entries) == 21
    assert sum(d * d for d in cat.degrees()) == 576
    assert cat.degrees() == (1, 1, 2) + (3,) * 6 + (6,) * 9 + (8,) * 3


def test_double_irreps_s5_without_materializing_the_double():
    cat = double_irreps(stock.symmetric(5))
    assert cat.ok, cat.failures
    assert len(cat.entries) == 39
    assert sum(d * d for d in cat.degrees()) == 14400


def test_double_irreps_abelian():
    cat = double_irreps(stock.cyclic(4))
    assert cat.ok and cat.degrees() == (1,) * 16


def test_double_of_bicrossed_product_has_group_double_spectrum(s3, h6):
    # For a split bicrossed product of S3, the double's degree multiset agrees
    # with the double of the group itself (same representation category).
    direct = decompose_semisimple(algebra_from_hopf(drinfeld_double(h6)),
                                  characters=False)
    assert direct.ok, direct.failures
    assert direct.degrees() == double_irreps(s3).degrees()


# -- bicrossed-product catalogs ---------------------------------------------------

def test_crossed_product_irreps_h6(s3_c2_a3):
    cat = crossed_product_irreps(derive_matched_pair(s3_c2_a3))
    assert cat.ok, cat.failures
    assert cat.degrees() == (1, 1, 2)
    assert cat.checks.get("direct-cross-check") == 1
    labels = " ".join(e.label for e in cat.entries)
    assert "(1 2 3)" in labels      # the nontrivial orbit is {(123),(132)}


def test_crossed_product_with_gamma_trivial_recovers_group_irreps():
    G = stock.symmetric(3)
    triv = G.subgroup(())
    full = G.subgroup(tuple(range(G.order)))
    mp = derive_matched_pair(ExactFactorization(G, full, triv))
    cat = crossed_product_irreps(mp)
    assert cat.ok and cat.degrees() == (1, 1, 2)


def test_crossed_product_c5_s4_divisibility():
    s5 = stock.symmetric(5)
    F = s5.subgroup((s5.elements.index((1, 0, 2, 3, 4)),
                     s5.elements.index((1, 2, 3, 0, 4))))
    Gam = s5.subgroup((s5.elements.index((1, 2, 3, 4, 0)),))
    mp = derive_matched_pair(ExactFactorization(s5, F, Gam))
    cat = crossed_product_irreps(mp)
    assert cat.ok, cat.failures
    assert cat.degrees() == (1, 1, 2, 3, 3, 4, 4, 8)
    assert sum(d * d for d in cat.degrees()) == 120
    assert all(24 % d == 0 for d in cat.degrees())
    assert cat.checks.get("direct-cross-check") == 1
    # the order-6 stabilizer of the 5-cycle orbit is nonabelian (degrees 1,1,2)
    s = next(t for t in range(5) if (mp.act_r[t] != t).any())
    stab = tuple(x for x in range(24) if mp.act_r[s, x] == s)
    assert len(stab) == 6
    Sgrp, _ = mp.Fgroup.subgroup_to_group(stab, "stab")
    assert not Sgrp.is_abelian


def test_crossed_product_with_nontrivial_sigma_is_consistent():
    mp, coc = cyclic_square_with_sigma(4)
    cat = crossed_product_irreps(mp, coc)
    assert cat.ok, cat.failures
    assert cat.degrees() == (1,) * 16       # sigma is symmetric: commutative
    assert cat.checks.get("direct-cross-check") == 1
