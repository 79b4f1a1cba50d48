"""Finite permutation groups with precomputed multiplication tables.

Elements are permutation image tuples, sorted lexicographically, so index 0 is
always the identity.  All structural queries (classes, centralizers, subgroup
lattice, normal subgroups, socle, quotients) work on integer indices against
the Cayley table and are vectorized with numpy where it matters.
"""
from __future__ import annotations

import math
from functools import cached_property

import numpy as np

from . import perm
from .config import DEFAULT_CONFIG

Subgroup = tuple  # sorted tuple[int, ...] of element indices


class FiniteGroup:
    def __init__(self, name: str, degree: int, elements):
        self.name = name
        self.degree = degree
        self.elements: list[perm.Perm] = sorted(set(map(tuple, elements)))
        n = len(self.elements)
        for g in self.elements:
            if len(g) != degree or sorted(g) != list(range(degree)):
                raise ValueError(f"not a permutation of degree {degree}: {g}")
        E = np.array(self.elements, dtype=np.int32)
        self.index: dict[perm.Perm, int] = {g: i for i, g in enumerate(self.elements)}
        self.cayley = np.empty((n, n), dtype=np.int32)
        lookup = {E[i].tobytes(): i for i in range(n)}
        for i in range(n):
            prod = E[i][E]  # row j = elements[i] o elements[j]
            try:
                self.cayley[i] = [lookup[row.tobytes()] for row in prod]
            except KeyError:
                raise ValueError(f"element set of {name!r} is not closed under composition")
        self.inv = np.empty(n, dtype=np.int32)
        for i in range(n):
            j = int(np.where(self.cayley[i] == 0)[0][0])
            self.inv[i] = j
        if self.elements[0] != perm.identity(degree):
            raise ValueError("identity permutation missing")

    # -- construction --------------------------------------------------------
    @staticmethod
    def from_generators(name: str, degree: int, gens, cap: int = DEFAULT_CONFIG.element_cap) -> "FiniteGroup":
        gens = [tuple(g) for g in gens]
        elems = {perm.identity(degree)}
        frontier = list(elems)
        while frontier:
            new = []
            for x in frontier:
                for g in gens:
                    y = perm.compose(g, x)
                    if y not in elems:
                        elems.add(y)
                        new.append(y)
                        if len(elems) > cap:
                            raise ValueError(f"group exceeds element cap {cap}")
            frontier = new
        return FiniteGroup(name, degree, elems)

    @property
    def order(self) -> int:
        return len(self.elements)

    def mul(self, i: int, j: int) -> int:
        return int(self.cayley[i, j])

    def inverse(self, i: int) -> int:
        return int(self.inv[i])

    def conjugate(self, g: int, x: int) -> int:
        """g x g^{-1}."""
        return int(self.cayley[self.cayley[g, x], self.inv[g]])

    def element_order(self, i: int) -> int:
        k, acc = 1, i
        while acc != 0:
            acc = int(self.cayley[i, acc])
            k += 1
        return k

    @cached_property
    def exponent(self) -> int:
        return math.lcm(*(self.element_order(i) for i in range(self.order)))

    @cached_property
    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.cayley, self.cayley.T))

    # -- conjugacy ------------------------------------------------------------
    @cached_property
    def conjugacy_classes(self) -> list[tuple[int, ...]]:
        """Partition of indices, each class sorted, ordered by smallest member
        (so the identity class comes first)."""
        n = self.order
        seen = np.zeros(n, dtype=bool)
        out = []
        for x in range(n):
            if seen[x]:
                continue
            cls = np.unique(self.cayley[self.cayley[:, x], self.inv])
            seen[cls] = True
            out.append(tuple(int(c) for c in cls))
        return out

    def class_of(self, x: int) -> tuple[int, ...]:
        return tuple(int(c) for c in np.unique(self.cayley[self.cayley[:, x], self.inv]))

    def centralizer(self, x: int) -> Subgroup:
        mask = self.cayley[:, x] == self.cayley[x, :]
        return tuple(int(i) for i in np.where(mask)[0])

    def centralizer_of_set(self, S) -> Subgroup:
        mask = np.ones(self.order, dtype=bool)
        for x in S:
            mask &= self.cayley[:, x] == self.cayley[x, :]
        return tuple(int(i) for i in np.where(mask)[0])

    @cached_property
    def center(self) -> Subgroup:
        return self.centralizer_of_set(range(self.order))

    def commute(self, x: int, y: int) -> bool:
        return self.cayley[x, y] == self.cayley[y, x]

    # -- subgroups --------------------------------------------------------------
    def subgroup(self, gens) -> Subgroup:
        """Closure of ``gens`` (indices) as a sorted index tuple."""
        S = np.unique(np.array([0, *gens], dtype=np.int32))
        while True:
            P = np.unique(self.cayley[np.ix_(S, S)])
            if len(P) == len(S):
                return tuple(int(i) for i in S)
            S = P

    def is_subgroup(self, S) -> bool:
        S = tuple(sorted(S))
        return S == self.subgroup(S)

    @cached_property
    def all_subgroups(self) -> list[Subgroup]:
        """Every subgroup, found by breadth-first extension; sorted by
        (order, elements)."""
        trivial = (0,)
        found = {trivial}
        queue = [trivial]
        while queue:
            H = queue.pop()
            covered = np.zeros(self.order, dtype=bool)
            covered[list(H)] = True
            for g in range(self.order):
                if covered[g]:
                    continue
                covered[self.cayley[list(H), g]] = True  # coset H*g gives same join
                K = self.subgroup(H + (g,))
                if K not in found:
                    found.add(K)
                    queue.append(K)
        return sorted(found, key=lambda S: (len(S), S))

    def is_normal(self, S) -> bool:
        Sset = frozenset(S)
        arr = np.fromiter(Sset, dtype=np.int32)
        for g in range(self.order):
            conj = self.cayley[self.cayley[g, arr], self.inv[g]]
            if not all(int(c) in Sset for c in conj):
                return False
        return True

    def normal_closure(self, S) -> Subgroup:
        gens = set()
        arr = np.fromiter(set(S), dtype=np.int32)
        for g in range(self.order):
            gens.update(int(c) for c in self.cayley[self.cayley[g, arr], self.inv[g]])
        return self.subgroup(gens)

    @cached_property
    def normal_subgroups(self) -> list[Subgroup]:
        """All normal subgroups: joins of normal closures of conjugacy classes."""
        atoms = {self.normal_closure([cls[0]]) for cls in self.conjugacy_classes}
        found = {(0,)} | atoms
        queue = list(atoms)
        while queue:
            N = queue.pop()
            for M in list(found):
                J = self.subgroup(set(N) | set(M))
                if J not in found:
                    found.add(J)
                    queue.append(J)
        return sorted(found, key=lambda S: (len(S), S))

    def has_normal_subgroup_of_index(self, k: int) -> Subgroup | None:
        if self.order % k:
            return None
        want = self.order // k
        for N in self.normal_subgroups:
            if len(N) == want:
                return N
        return None

    @cached_property
    def minimal_normal_subgroups(self) -> list[Subgroup]:
        nontrivial = [N for N in self.normal_subgroups if 1 < len(N)]
        return [N for N in nontrivial
                if not any(set(M) < set(N) for M in nontrivial if M != N)]

    @cached_property
    def socle(self) -> Subgroup:
        gens: set[int] = set()
        for N in self.minimal_normal_subgroups:
            gens.update(N)
        return self.subgroup(gens) if gens else (0,)

    @cached_property
    def is_simple(self) -> bool:
        return self.order > 1 and len(self.normal_subgroups) == 2

    @cached_property
    def is_almost_simple(self) -> bool:
        """Socle is nonabelian simple and self-centralizing."""
        soc = self.socle
        if len(soc) <= 1:
            return False
        socg, _ = self.subgroup_to_group(soc, "socle")
        if socg.is_abelian or not socg.is_simple:
            return False
        return self.centralizer_of_set(soc) == (0,)

    # -- derived structures -----------------------------------------------------
    def subgroup_to_group(self, S, name: str) -> tuple["FiniteGroup", np.ndarray]:
        """Subgroup as a standalone group plus the map new index -> parent index."""
        grp = FiniteGroup(name, self.degree, [self.elements[i] for i in S])
        to_parent = np.array([self.index[g] for g in grp.elements], dtype=np.int32)
        return grp, to_parent

    def left_cosets(self, S) -> list[tuple[int, ...]]:
        arr = np.array(sorted(S), dtype=np.int32)
        seen = np.zeros(self.order, dtype=bool)
        out = []
        for r in range(self.order):
            if seen[r]:
                continue
            cos = np.unique(self.cayley[r, arr])
            seen[cos] = True
            out.append(tuple(int(c) for c in cos))
        return out

    def quotient(self, N, name: str | None = None) -> tuple["FiniteGroup", np.ndarray]:
        """Quotient by a normal subgroup: (group acting on cosets, projection)."""
        if not self.is_normal(N):
            raise ValueError("quotient by a non-normal subgroup")
        cosets = self.left_cosets(N)
        cid = {}
        for c, cos in enumerate(cosets):
            for g in cos:
                cid[g] = c
        k = len(cosets)
        reps = [cos[0] for cos in cosets]
        perms = []
        for cos in cosets:
            r = cos[0]
            perms.append(tuple(cid[int(self.cayley[r, reps[c]])] for c in range(k)))
        qname = name or f"{self.name}/N{len(N)}"
        grp = FiniteGroup(qname, k, perms)
        proj = np.array([grp.index[perms[cid[g]]] for g in range(self.order)],
                        dtype=np.int32)
        return grp, proj

    @cached_property
    def commutator_subgroup(self) -> Subgroup:
        n = self.order
        gens = set()
        for g in range(n):
            a = self.cayley[self.inv[g], self.inv]  # g^{-1} h^{-1} over all h
            b = self.cayley[g, np.arange(n)]        # g h over all h
            gens.update(int(x) for x in self.cayley[a, b])
        return self.subgroup(gens)

    def abelianization(self) -> tuple["FiniteGroup", np.ndarray]:
        return self.quotient(self.commutator_subgroup, name=f"{self.name}^ab")

    def irrep_count_upper_bound(self) -> int:
        return len(self.conjugacy_classes)

    def describe(self) -> str:
        return f"{self.name}: order {self.order}, degree {self.degree}"

    def __repr__(self):
        return f"FiniteGroup({self.name!r}, order={self.order})"


def direct_product(A: FiniteGroup, B: FiniteGroup, name: str | None = None) -> FiniteGroup:
    d = A.degree
    elems = [tuple(a) + tuple(p + d for p in b) for a in A.elements for b in B.elements]
    return FiniteGroup(name or f"{A.name}x{B.name}", d + B.degree, elems)


def regular_permutation_group(name: str, table: np.ndarray) -> FiniteGroup:
    """Group from an abstract multiplication table, via its left regular action."""
    n = table.shape[0]
    elems = [tuple(int(table[g, x]) for x in range(n)) for g in range(n)]
    return FiniteGroup(name, n, elems)
