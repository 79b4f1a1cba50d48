"""Fusion-subcategory classifier vs. the tensor-closure oracle.

Two independent routes compute the same lattice:

* the classifier enumerates (K1, K2, B) triples by pure group/cocycle
  arithmetic and maps each to an object set through the character
  condition pi(h) = B(g,h) deg pi;
* the oracle never looks at triples: it builds explicit induced-module
  matrices for the double, evaluates verified central idempotents on
  tensor products, and closes seed sets under duals and constituents.

The keystone test checks the two lattices coincide object-for-object on
every one of the 2^8 seed subsets for the double of S3.
"""
import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bicross import stock
from bicross.fusion import (Bicharacter, FusionSubcategory, Triple,
                            centralize_each_other,
                            enumerate_invariant_bicharacters, enumerate_triples,
                            equal_order_filter, fusion_multiplicity_table,
                            oracle_fixed_points, round_trip_subgroups,
                            tensor_closure_oracle, triple_to_objects)
from bicross.reps import OmegaCocycle, double_irreps

# ---------------------------------------------------------------------------
# frozen data for G = S3 (element order: e, (2 3), (1 2), (1 2 3), (1 3 2),
# (1 3); A3 = {0, 3, 4})

A3 = (0, 3, 4)

# the three conjugation-invariant pairings A3 x A3 -> mu_3, as exponent
# tables B(x,y) = zeta_3^e[ix*3+iy] over the sorted subgroup (e, c, c^2):
# rows/columns indexed by (e, c, c2), the nontrivial ones are the pairings
# (c^i, c^j) -> zeta_3^(ij) and its inverse
S3_BICHAR_EXPS = [
    (0, 0, 0, 0, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 1, 2, 0, 2, 1),
    (0, 0, 0, 0, 2, 1, 0, 1, 2),
]

# (K1, K2, B order, B exponent table, dimension) for all eight triples
S3_TRIPLES = [
    ((0,), (0,), 1, (0,), 6),
    ((0,), A3, 1, (0, 0, 0), 2),
    ((0,), (0, 1, 2, 3, 4, 5), 1, (0,) * 6, 1),
    (A3, (0,), 1, (0, 0, 0), 18),
    (A3, A3, 3, S3_BICHAR_EXPS[0], 6),
    (A3, A3, 3, S3_BICHAR_EXPS[1], 6),
    (A3, A3, 3, S3_BICHAR_EXPS[2], 6),
    ((0, 1, 2, 3, 4, 5), (0,), 1, (0,) * 6, 36),
]

# object sets selected by each triple, keyed as above.  The catalog for
# D(kS3) lists, in order: ((), pi0) ((), pi1) ((), pi2) ((2 3), pi0)
# ((2 3), pi1) ((1 2 3), pi0) ((1 2 3), pi1) ((1 2 3), pi2) with degrees
# 1 1 2 3 3 2 2 2.  The identity-sector lines pi0/pi1 are the trivial and
# sign characters of S3, pi2 the two-dimensional representation.
S3_TRIPLE_OBJECTS = {
    S3_TRIPLES[0][:4]: {"((), pi0)", "((), pi1)", "((), pi2)"},
    S3_TRIPLES[1][:4]: {"((), pi0)", "((), pi1)"},
    S3_TRIPLES[2][:4]: {"((), pi0)"},
    S3_TRIPLES[3][:4]: {"((), pi0)", "((), pi1)", "((), pi2)",
                        "((1 2 3), pi0)", "((1 2 3), pi1)", "((1 2 3), pi2)"},
    S3_TRIPLES[4][:4]: {"((), pi0)", "((), pi1)", "((1 2 3), pi1)"},
    S3_TRIPLES[5][:4]: {"((), pi0)", "((), pi1)", "((1 2 3), pi2)"},
    S3_TRIPLES[6][:4]: {"((), pi0)", "((), pi1)", "((1 2 3), pi0)"},
    S3_TRIPLES[7][:4]: {"((), pi0)", "((), pi1)", "((), pi2)",
                        "((2 3), pi0)", "((2 3), pi1)",
                        "((1 2 3), pi0)", "((1 2 3), pi1)", "((1 2 3), pi2)"},
}


@pytest.fixture(scope="module")
def s3_cat(s3):
    return double_irreps(s3)


@pytest.fixture(scope="module")
def s3_tab(s3, s3_cat):
    return fusion_multiplicity_table(s3, s3_cat)


@pytest.fixture(scope="module")
def s4_cat(s4):
    return double_irreps(s4)


# ---------------------------------------------------------------------------
# centralizing pairs and bicharacters


def test_centralizing_pair_detection(s3):
    assert centralize_each_other(s3, (0,), A3)
    assert centralize_each_other(s3, A3, A3)          # A3 is abelian
    assert not centralize_each_other(s3, A3, tuple(range(6)))


def test_bicharacter_enumeration_rejects_bad_subgroup_pairs(s3):
    two = tuple(sorted(s3.subgroup([1])))             # <(2 3)> is not normal
    with pytest.raises(ValueError, match="normal"):
        enumerate_invariant_bicharacters(s3, two, A3)
    with pytest.raises(ValueError, match="centralize"):
        enumerate_invariant_bicharacters(s3, A3, tuple(range(6)))


def test_s3_invariant_bicharacters_are_exactly_three(s3):
    got = enumerate_invariant_bicharacters(s3, A3, A3)
    assert [(b.order, b.exps) for b in got] == \
        [(3, exps) for exps in S3_BICHAR_EXPS]


def test_s3_bicharacter_laws_hold_independently(s3):
    """Re-verify multiplicativity and conjugation-invariance from scratch."""
    cay, inv = s3.cayley, s3.inv
    pos = {x: i for i, x in enumerate(A3)}
    for exps in S3_BICHAR_EXPS:
        def b(x, y):
            return exps[pos[x] * 3 + pos[y]]
        for x in A3:
            for y in A3:
                for z in A3:
                    assert b(x, int(cay[y, z])) % 3 == (b(x, y) + b(x, z)) % 3
                    assert b(int(cay[x, y]), z) % 3 == (b(x, z) + b(y, z)) % 3
        for g in range(6):
            for a in A3:
                for h in A3:
                    ag = int(cay[cay[inv[g], a], g])      # g^-1 a g
                    hg = int(cay[cay[g, h], inv[g]])      # g h g^-1
                    assert b(ag, h) == b(a, hg)


def test_one_sided_trivial_subgroup_gives_unique_empty_pairing(s3):
    got = enumerate_invariant_bicharacters(s3, (0,), A3)
    assert len(got) == 1 and not any(got[0].exps)


# ---------------------------------------------------------------------------
# triples


def test_s3_triples_are_exactly_the_frozen_eight(s3):
    got = enumerate_triples(s3)
    assert [(t.K1, t.K2, t.B.order, t.B.exps, t.dimension) for t in got] == \
        S3_TRIPLES
    assert sorted(t.dimension for t in got) == [1, 2, 6, 6, 6, 6, 18, 36]


def test_triple_validation_enforces_the_dimension_law(s3):
    with pytest.raises(ValueError, match="dimension"):
        Triple(s3, (0,), A3, Bicharacter(1, (0, 0, 0)), 5)
    with pytest.raises(ValueError, match="shape"):
        Triple(s3, (0,), A3, Bicharacter(1, (0,)), 2)


def test_equal_order_filter_s3(s3):
    kept = equal_order_filter(enumerate_triples(s3))
    assert [(len(t.K1), len(t.K2)) for t in kept] == [(1, 1), (3, 3), (3, 3),
                                                      (3, 3)]
    # dimension |G| exactly when the orders agree
    assert all(t.dimension == 6 for t in kept)


def test_s5_triples_force_trivial_pairs():
    s5 = stock.symmetric(5)
    triples = enumerate_triples(s5)
    assert [(len(t.K1), len(t.K2)) for t in triples] == \
        [(1, 1), (1, 60), (1, 120), (60, 1), (120, 1)]
    assert all(t.is_trivial_b() for t in triples)
    kept = equal_order_filter(triples)
    assert len(kept) == 1 and kept[0].dimension == 120


# ---------------------------------------------------------------------------
# objects of a triple and the subgroup round trip


def test_triple_objects_match_the_frozen_sets(s3, s3_cat):
    for triple in enumerate_triples(s3):
        sub = triple_to_objects(s3, None, triple, s3_cat)
        key = (triple.K1, triple.K2, triple.B.order, triple.B.exps)
        assert sub.objectLabels == frozenset(S3_TRIPLE_OBJECTS[key])
        assert sub.dimension == triple.dimension


def test_round_trip_recovers_the_subgroup_pair(s3, s3_cat):
    for triple in enumerate_triples(s3):
        sub = triple_to_objects(s3, None, triple, s3_cat)
        k1, k2 = round_trip_subgroups(s3, None, sub, s3_cat)
        assert k1 == triple.K1 and k2 == triple.K2


def test_sum_of_squared_degrees_reproduces_the_dimension(s3, s3_cat):
    degree = {e.label: e.degree for e in s3_cat.entries}
    for triple in enumerate_triples(s3):
        sub = triple_to_objects(s3, None, triple, s3_cat)
        assert sum(degree[l] ** 2 for l in sub.objectLabels) == sub.dimension


# ---------------------------------------------------------------------------
# the tensor-closure oracle


def test_tensor_table_builds_with_all_self_checks(s3_tab):
    assert s3_tab.ok, s3_tab.failures
    assert s3_tab.checks == {"module-built": 8, "idempotent-orthogonality": 64,
                             "tensor-pair": 36, "duals": 8}
    assert s3_tab.unit_index == 0
    assert s3_tab.dual == tuple(range(8))     # every simple is self-dual
    assert s3_tab.degrees == (1, 1, 2, 3, 3, 2, 2, 2)


def test_identity_sector_fusion_matches_s3_character_theory(s3_tab):
    """Inflated S3 representations multiply like S3 representations:
    sign x sign = trivial, sign x std = std, std x std = 1 + sign + std."""
    N = s3_tab.N
    for c in range(8):
        assert list(N[0, c]) == [1 if d == c else 0 for d in range(8)]
    assert list(N[1, 1]) == [1, 0, 0, 0, 0, 0, 0, 0]
    assert list(N[1, 2]) == [0, 0, 1, 0, 0, 0, 0, 0]
    assert list(N[2, 2]) == [1, 1, 1, 0, 0, 0, 0, 0]


def test_multiplicity_table_global_constraints(s3_tab):
    N, deg = s3_tab.N, s3_tab.degrees
    for c1 in range(8):
        for c2 in range(8):
            assert (N[c1, c2] == N[c2, c1]).all()
            assert sum(int(N[c1, c2, c]) * deg[c]
                       for c in range(8)) == deg[c1] * deg[c2]
            # unit multiplicity detects the dual pairing
            assert int(N[c1, c2, 0]) == (1 if c2 == s3_tab.dual[c1] else 0)


def test_transposition_sector_tensor_square_stays_off_that_sector(s3_tab):
    """Products of transpositions land in {e} or among 3-cycles, so the
    tensor square of a transposition-sector object has no transposition-
    sector constituents."""
    for c in (3, 4):
        row = s3_tab.N[c, c]
        assert row[3] == 0 and row[4] == 0
        assert int(row[0]) == 1


def test_unit_seed_closes_to_the_trivial_subcategory(s3, s3_cat, s3_tab):
    sub = tensor_closure_oracle(s3, None, [0], s3_cat, s3_tab)
    assert sub.objectLabels == frozenset({"((), pi0)"})
    assert sub.dimension == 1


def test_transposition_seed_closes_to_everything(s3, s3_cat, s3_tab):
    """A label whose group part lies in no proper normal subgroup generates
    the whole category."""
    sub = tensor_closure_oracle(s3, None, ["((2 3), pi0)"], s3_cat, s3_tab)
    assert len(sub.object_indices) == 8 and sub.dimension == 36


def test_every_seed_subset_closes_onto_the_triple_image(s3, s3_cat, s3_tab):
    """Keystone: closures of all 2^8 seed sets give exactly the eight
    subcategories found by the triple classification."""
    triple_sets = sorted(
        triple_to_objects(s3, None, t, s3_cat).object_indices
        for t in enumerate_triples(s3))
    closures = set()
    for r in range(9):
        for seed in itertools.combinations(range(8), r):
            closures.add(
                tensor_closure_oracle(s3, None, seed, s3_cat,
                                      s3_tab).object_indices)
    assert sorted(closures) == triple_sets


def test_oracle_fixed_points_match_the_triple_image(s3, s3_cat, s3_tab):
    triple_sets = sorted(
        triple_to_objects(s3, None, t, s3_cat).object_indices
        for t in enumerate_triples(s3))
    fps = oracle_fixed_points(s3, s3_cat, s3_tab)
    assert sorted(f.object_indices for f in fps) == triple_sets


@settings(max_examples=60, deadline=None)
@given(seed=st.sets(st.integers(min_value=0, max_value=7), max_size=8))
def test_closures_are_monotone_idempotent_fixed_points(seed):
    G = _S3_CACHE["group"]
    cat, tab, known = (_S3_CACHE["cat"], _S3_CACHE["tab"], _S3_CACHE["sets"])
    sub = tensor_closure_oracle(G, None, sorted(seed), cat, tab)
    assert seed <= set(sub.object_indices)
    again = tensor_closure_oracle(G, None, sub.object_indices, cat, tab)
    assert again.object_indices == sub.object_indices
    assert sub.object_indices in known


def _build_s3_cache():
    G = stock.symmetric(3)
    cat = double_irreps(G)
    tab = fusion_multiplicity_table(G, cat)
    sets = {triple_to_objects(G, None, t, cat).object_indices
            for t in enumerate_triples(G)}
    return {"group": G, "cat": cat, "tab": tab, "sets": sets}


_S3_CACHE = _build_s3_cache()


# ---------------------------------------------------------------------------
# S4: the Klein subgroup carries a nontrivial pairing


S4_NONTRIVIAL_KLEIN_EXPS = (0, 0, 0, 0, 0, 0, 1, 1, 0, 1, 0, 1, 0, 1, 1, 0)


def test_s4_klein_bicharacters(s4):
    v4 = next(N for N in s4.normal_subgroups if len(N) == 4)
    got = enumerate_invariant_bicharacters(s4, v4, v4)
    assert [(b.order, b.exps) for b in got] == [
        (2, (0,) * 16), (2, S4_NONTRIVIAL_KLEIN_EXPS)]


def test_s4_triples(s4):
    triples = enumerate_triples(s4)
    assert [(len(t.K1), len(t.K2), t.dimension) for t in triples] == [
        (1, 1, 24), (1, 4, 6), (1, 12, 2), (1, 24, 1), (4, 1, 96),
        (4, 4, 24), (4, 4, 24), (12, 1, 288), (24, 1, 576)]
    assert sum(not t.is_trivial_b() for t in triples) == 1
    kept = equal_order_filter(triples)
    assert [(len(t.K1), len(t.K2)) for t in kept] == [(1, 1), (4, 4), (4, 4)]
    assert all(t.dimension == 24 for t in kept)


def test_s4_oracle_agrees_with_the_classification(s4, s4_cat):
    tab = fusion_multiplicity_table(s4, s4_cat)
    assert tab.ok, tab.failures
    triples = enumerate_triples(s4)
    subs = [triple_to_objects(s4, None, t, s4_cat) for t in triples]
    for t, sub in zip(triples, subs):
        assert round_trip_subgroups(s4, None, sub, s4_cat) == (t.K1, t.K2)
    triple_sets = sorted(s.object_indices for s in subs)
    fps = oracle_fixed_points(s4, s4_cat, tab)
    assert sorted(f.object_indices for f in fps) == triple_sets


# ---------------------------------------------------------------------------
# a cocycle-twisted case: the order-two group with the nontrivial 3-cocycle


@pytest.fixture(scope="module")
def twisted_c2():
    import numpy as np
    G = stock.cyclic(2)
    w = np.zeros((2, 2, 2), dtype=np.int64)
    w[1, 1, 1] = 1
    return G, OmegaCocycle(group=G, order=2, table=w)


def test_twisted_c2_triples_pick_fourth_roots(twisted_c2):
    """On the full pair (C2, C2) the pairing law forces B(g,g)^2 = -1, so
    exactly the two fourth roots +-i occur."""
    G, omega = twisted_c2
    triples = enumerate_triples(G, omega)
    assert [(t.K1, t.K2, t.B.order, t.B.exps, t.dimension) for t in triples] \
        == [((0,), (0,), 2, (0,), 2),
            ((0,), (0, 1), 4, (0, 0), 1),
            ((0, 1), (0,), 4, (0, 0), 4),
            ((0, 1), (0, 1), 4, (0, 0, 0, 1), 2),
            ((0, 1), (0, 1), 4, (0, 0, 0, 3), 2)]


def test_twisted_c2_objects_pair_with_the_twisted_sector(twisted_c2):
    G, omega = twisted_c2
    cat = double_irreps(G, omega)
    want = {(0, 0, 0, 1): {"((), pi0)", "((1 2), pi0)"},
            (0, 0, 0, 3): {"((), pi0)", "((1 2), pi1)"}}
    for triple in enumerate_triples(G, omega):
        sub = triple_to_objects(G, omega, triple, cat)
        assert sub.dimension == triple.dimension
        if len(triple.K1) == 2 and len(triple.K2) == 2:
            assert sub.objectLabels == frozenset(want[triple.B.exps])
        k1, k2 = round_trip_subgroups(G, omega, sub, cat)
        assert k1 == triple.K1 and k2 == triple.K2


def test_oracle_refuses_a_nontrivial_twist(twisted_c2):
    G, omega = twisted_c2
    with pytest.raises(ValueError, match="untwisted|trivial"):
        tensor_closure_oracle(G, omega, [0])
