"""Independent brute-force oracles used to cross-check library results.

Everything here recomputes from first principles (tuple composition, dense
linear algebra on the regular representation) without touching the library's
own Cayley-table machinery beyond reading off the element list.
"""
from __future__ import annotations

import numpy as np

from bicross import perm


def naive_closure(degree, gens):
    """Set-based closure, no numpy."""
    elems = {perm.identity(degree)}
    changed = True
    while changed:
        changed = False
        for a in list(elems):
            for g in gens:
                c = perm.compose(g, a)
                if c not in elems:
                    elems.add(c)
                    changed = True
    return elems


def brute_conjugacy_classes(G):
    """Classes via direct tuple conjugation, as frozensets of indices."""
    elems = G.elements
    out, seen = [], set()
    for i, x in enumerate(elems):
        if i in seen:
            continue
        cls = set()
        for g in elems:
            y = perm.compose(perm.compose(g, x), perm.invert(g))
            cls.add(G.index[y])
        seen |= cls
        out.append(frozenset(cls))
    return out


def brute_centralizer(G, i):
    x = G.elements[i]
    return {j for j, g in enumerate(G.elements)
            if perm.compose(g, x) == perm.compose(x, g)}


def brute_is_normal(G, S):
    Sset = {G.elements[i] for i in S}
    for g in G.elements:
        for x in list(Sset):
            if perm.compose(perm.compose(g, x), perm.invert(g)) not in Sset:
                return False
    return True


def regular_rep_matrix(G, i):
    n = G.order
    M = np.zeros((n, n))
    for h in range(n):
        M[G.mul(i, h), h] = 1.0
    return M


def irrep_degrees_by_center(G, seed=0, tol=1e-8):
    """Irreducible degree multiset from eigenvalue multiplicities of a random
    central element of the group algebra in the regular representation.

    A central element acts on each isotypic block (of dimension d_i^2) by a
    scalar, and random class coefficients separate the blocks.
    """
    rng = np.random.default_rng(seed)
    n = G.order
    z = np.zeros((n, n))
    for cls in G.conjugacy_classes:
        c = rng.normal()
        for g in cls:
            z += c * regular_rep_matrix(G, g)
    ev = np.linalg.eigvals(z)
    clusters: list[list] = []
    for v in ev:
        for c in clusters:
            if abs(v - c[0]) < 1e-6:
                c[1] += 1
                break
        else:
            clusters.append([v, 1])
    degs = []
    for _, m in clusters:
        d = round(m ** 0.5)
        assert d * d == m, f"non-square multiplicity {m}"
        degs.append(d)
    degs.sort()
    assert sum(d * d for d in degs) == n
    return degs
