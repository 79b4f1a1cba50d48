"""Ready-made groups for experiments and tests."""
from __future__ import annotations

import numpy as np

from . import perm
from .groups import FiniteGroup, regular_permutation_group


def cyclic(n: int) -> FiniteGroup:
    if n == 1:
        return FiniteGroup("C1", 1, [(0,)])
    rot = tuple((i + 1) % n for i in range(n))
    return FiniteGroup.from_generators(f"C{n}", n, [rot])


def dihedral(n: int) -> FiniteGroup:
    """Symmetries of the regular n-gon, order 2n (n >= 3)."""
    rot = tuple((i + 1) % n for i in range(n))
    flip = tuple((-i) % n for i in range(n))
    return FiniteGroup.from_generators(f"D{n}", n, [rot, flip])


def symmetric(n: int) -> FiniteGroup:
    if n == 1:
        return FiniteGroup("S1", 1, [(0,)])
    gens = [perm.from_cycles([(0, 1)], n)]
    if n > 2:
        gens.append(perm.from_cycles([tuple(range(n))], n))
    return FiniteGroup.from_generators(f"S{n}", n, gens)


def alternating(n: int) -> FiniteGroup:
    if n <= 2:
        return FiniteGroup(f"A{n}", max(n, 1), [perm.identity(max(n, 1))])
    gens = [perm.from_cycles([(i, i + 1, i + 2)], n) for i in range(n - 2)]
    return FiniteGroup.from_generators(f"A{n}", n, gens)


def klein_four() -> FiniteGroup:
    a = perm.from_cycles([(0, 1), (2, 3)], 4)
    b = perm.from_cycles([(0, 2), (1, 3)], 4)
    return FiniteGroup.from_generators("V4", 4, [a, b])


def generalized_quaternion(order: int) -> FiniteGroup:
    """Q_{4m}: <a, b | a^{2m}=1, b^2=a^m, b a b^{-1} = a^{-1}>, via regular action."""
    if order % 4:
        raise ValueError("generalized quaternion groups have order divisible by 4")
    m2 = order // 2  # order of a
    m = m2 // 2

    def idx(i, j):  # element a^i b^j
        return i + m2 * j

    table = np.empty((order, order), dtype=np.int32)
    for i in range(m2):
        for j in range(2):
            for k in range(m2):
                for l in range(2):
                    if j == 0:
                        r, s = (i + k) % m2, l
                    else:
                        # b a^k = a^{-k} b;  b^2 = a^m
                        if l == 0:
                            r, s = (i - k) % m2, 1
                        else:
                            r, s = (i - k + m) % m2, 0
                    table[idx(i, j), idx(k, l)] = idx(r, s)
    return regular_permutation_group(f"Q{order}", table)


def quaternion() -> FiniteGroup:
    return generalized_quaternion(8)


def special_linear_2_3() -> FiniteGroup:
    """SL(2,3) of order 24, acting on the 8 nonzero vectors of F_3^2."""
    pts = [(x, y) for x in range(3) for y in range(3) if (x, y) != (0, 0)]
    pidx = {v: i for i, v in enumerate(pts)}

    def mat_perm(a, b, c, d):
        return tuple(pidx[((a * x + b * y) % 3, (c * x + d * y) % 3)] for x, y in pts)

    gens = [mat_perm(1, 1, 0, 1), mat_perm(1, 0, 1, 1)]
    return FiniteGroup.from_generators("SL(2,3)", 8, gens)


def stock_groups(max_order: int = 24) -> list[FiniteGroup]:
    """The catalogue used by the sweep experiments: cyclic, dihedral, symmetric,
    alternating, quaternion and SL(2,3) members up to the given order."""
    out: list[FiniteGroup] = []
    out += [cyclic(n) for n in range(2, max_order + 1)]
    out += [dihedral(n) for n in range(3, max_order // 2 + 1)]
    for g in (symmetric(3), symmetric(4), alternating(4), klein_four(),
              quaternion(), generalized_quaternion(16), special_linear_2_3()):
        if g.order <= max_order:
            out.append(g)
    return out
