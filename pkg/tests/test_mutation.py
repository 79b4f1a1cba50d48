"""Tamper detection: the verifiers catch every single-entry corruption.

Each test draws 100 seeded single-entry mutations of a verified artifact and
requires the matching verifier to flag all of them:

* action tables  -> verify_matched_pair   (product law checks every cell
  against the parent Cayley table, so detection is structural);
* cocycle exponent tables -> validate_cocycles  (the laws are linear in the
  exponents, so a tampered table is valid only if the one-point table is
  itself a cocycle pair, which normalization and the law instances exclude);
* the canonical R-matrix of a double -> verify_qt, applied to the parsed
  serialized form so the verifier reads exactly the tampered table.
"""
from fractions import Fraction

import numpy as np
import pytest

from bicross import io
from bicross.cyclotomic import CycScalar
from bicross.double import drinfeld_double, verify_qt
from bicross.factorization import (CocyclePair, derive_matched_pair,
                                   validate_cocycles, verify_matched_pair)

N_MUTATIONS = 100


def test_action_table_mutations_all_detected(s4_c4_s3):
    caught = 0
    for seed in range(N_MUTATIONS):
        rng = np.random.default_rng(seed)
        mp = derive_matched_pair(s4_c4_s3)
        tab, n = ((mp.act_l, mp.nF) if rng.integers(2) == 0
                  else (mp.act_r, mp.nG))
        j = int(rng.integers(tab.shape[0]))
        i = int(rng.integers(tab.shape[1]))
        tab[j, i] = (int(tab[j, i]) + int(rng.integers(1, n))) % n
        if verify_matched_pair(mp):
            caught += 1
    assert caught == N_MUTATIONS


def test_cocycle_table_mutations_all_detected(s4_c4_s3):
    mp = derive_matched_pair(s4_c4_s3)
    caught = 0
    for seed in range(N_MUTATIONS):
        rng = np.random.default_rng(1000 + seed)
        order = int(rng.choice([2, 3, 4, 5, 6]))
        coc = CocyclePair.trivial(mp, order)
        sigma, tau = coc.sigma.copy(), coc.tau.copy()
        tab = sigma if rng.integers(2) == 0 else tau
        idx = tuple(int(rng.integers(s)) for s in tab.shape)
        tab[idx] = int(rng.integers(1, order))
        if validate_cocycles(mp, CocyclePair(order, sigma, tau)):
            caught += 1
    assert caught == N_MUTATIONS


@pytest.fixture(scope="module")
def double_dump(h6):
    D = drinfeld_double(h6)
    text = io.write_hopf(D)
    base = io.parse_hopf(text)
    # the parsed form carries only the R-matrix table, so verify_qt reads
    # exactly what we tamper with below
    assert base.rmatrix_factored is None
    assert verify_qt(base).ok
    return text


def test_rmatrix_mutations_all_detected(double_dump):
    caught = 0
    for seed in range(N_MUTATIONS):
        rng = np.random.default_rng(2000 + seed)
        back = io.parse_hopf(double_dump)
        i = int(rng.integers(back.dim))
        j = int(rng.integers(back.dim))
        delta = CycScalar.rational(Fraction(int(rng.choice([1, -1, 2, 3]))),
                                   back.order)
        old = back.rmatrix.get((i, j), CycScalar.zero(back.order))
        back.rmatrix[(i, j)] = old + delta
        if not verify_qt(back).ok:
            caught += 1
    assert caught == N_MUTATIONS
