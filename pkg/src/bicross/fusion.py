"""Fusion subcategories of the (twisted) double of a finite group.

Full fusion subcategories of the module category of the double are classified
by triples (K1, K2, B): normal subgroups K1, K2 that centralize each other
elementwise, and a G-invariant (twisted) bicharacter B : K1 x K2 -> roots of
unity.  The subcategory attached to (K1, K2, B) has dimension |K1| * [G : K2]
and its simple objects are the pairs (g, pi) with g a class representative
lying in K1 and pi an irreducible (twisted) character of the centralizer of g
satisfying pi(h) = B(g, h) deg pi for every h in K2.

Bicharacters are enumerated by assigning root-of-unity exponents to generator
pairs, extending to the full K1 x K2 table through the (twisted) bicharacter
laws with consistency checking, and then verifying every law and the
G-invariance identity exhaustively on the completed table.

For the untwisted double an independent tensor-closure oracle is provided.
It builds explicit matrices for each simple module (induced from centralizer
irreducibles, themselves extracted as matrices from the regular
representation), forms the matrix of each central idempotent of the double on
every tensor product of simples, verifies those matrices are idempotent and
orthogonal, and reads multiplicities off their traces.  Closing seed sets
under unit, duals, and tensor constituents then recovers fusion subcategories
with no reference to the triple classification.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from .config import DEFAULT_CONFIG, ToolConfig
from .cyclotomic import CycScalar, root_mono
from .groups import FiniteGroup
from .perm import format_cycles
from .reps import (IrrepCatalog, OmegaCocycle, decompose_semisimple,
                   double_irreps, twisted_group_algebra)

ABELIANIZATION_CAP = 64      # |K1^ab| * |K2^ab| bound for bicharacter search
ASSIGNMENT_CAP = 65536       # bound on generator-pair value assignments
TOL = 1e-6


# -- triples ------------------------------------------------------------------------

@dataclass(frozen=True)
class Bicharacter:
    """Exponent table of B : K1 x K2 -> mu_order, row-major over sorted K1, K2."""
    order: int
    exps: tuple

    def table(self, nrows: int) -> np.ndarray:
        return np.array(self.exps, dtype=np.int64).reshape(nrows, -1)


@dataclass(frozen=True)
class Triple:
    """A fusion-subcategory datum (K1, K2, B) for the double of ``group``."""
    group: FiniteGroup
    K1: tuple
    K2: tuple
    B: Bicharacter
    dimension: int

    def __post_init__(self):
        expect = len(self.K1) * self.group.order // len(self.K2)
        if self.dimension != expect:
            raise ValueError(f"dimension {self.dimension} != |K1|[G:K2] = {expect}")
        if len(self.B.exps) != len(self.K1) * len(self.K2):
            raise ValueError("B table shape does not match |K1| x |K2|")

    def b_exp(self, a: int, h: int) -> int:
        """Exponent of B(a, h) for parent indices a in K1, h in K2."""
        return self.B.exps[self.K1.index(a) * len(self.K2) + self.K2.index(h)]

    def is_trivial_b(self) -> bool:
        return not any(self.B.exps)

    def describe(self) -> str:
        g1 = ",".join(format_cycles(self.group.elements[x])
                      for x in _generating_set(self.group, self.K1)) or "e"
        g2 = ",".join(format_cycles(self.group.elements[x])
                      for x in _generating_set(self.group, self.K2)) or "e"
        b = "1" if self.is_trivial_b() else f"exps{list(self.B.exps)}@{self.B.order}"
        return f"C(<{g1}>, <{g2}>, {b}) dim {self.dimension}"


@dataclass(frozen=True)
class FusionSubcategory:
    """A set of simple objects of the double, closed as a fusion subcategory."""
    objectLabels: frozenset
    object_indices: tuple       # positions in the originating irrep catalog
    dimension: int
    name: str = ""


def centralize_each_other(G: FiniteGroup, K1, K2) -> bool:
    return all(G.commute(a, b) for a in K1 for b in K2)


def _generating_set(G: FiniteGroup, K) -> tuple:
    """Small (greedy) generating set of the subgroup K, identity excluded."""
    gens: list[int] = []
    cur = {0}
    for x in K:
        if x not in cur:
            gens.append(x)
            cur = set(G.subgroup(gens))
            if len(cur) == len(K):
                break
    return tuple(gens)


def _subgroup_exponent(G: FiniteGroup, K) -> int:
    return math.lcm(*(G.element_order(x) for x in K))


def _abelianization_size(G: FiniteGroup, K) -> int:
    cay, inv = G.cayley, G.inv
    comms = {int(cay[cay[a, b], cay[inv[a], inv[b]]]) for a in K for b in K}
    return len(K) // len(G.subgroup(sorted(comms)))


def _beta_raw(omega: OmegaCocycle, a: int, x: int, y: int) -> int:
    """Exponent of beta_a(x, y) = w(a,x,y) w(x,y,a) / w(x,a,y) at arbitrary
    group elements (a 2-cocycle only when x, y centralize a)."""
    w = omega.table
    return int((w[a, x, y] + w[x, y, a] - w[x, a, y]) % omega.order)


def enumerate_invariant_bicharacters(G: FiniteGroup, K1, K2,
                                     omega: OmegaCocycle | None = None,
                                     ) -> list[Bicharacter]:
    """All G-invariant (twisted) bicharacters on K1 x K2, as exponent tables.

    Candidates are generated from value assignments on generator pairs,
    extended by the bicharacter laws (twisted by beta when a 3-cocycle is
    given) with conflict detection, and finally verified exhaustively:
    both product laws on all triples and the invariance identity over every
    conjugator in G."""
    K1, K2 = tuple(sorted(K1)), tuple(sorted(K2))
    if not G.is_normal(K1) or not G.is_normal(K2):
        raise ValueError("K1 and K2 must be normal subgroups")
    if not centralize_each_other(G, K1, K2):
        raise ValueError("K1 and K2 must centralize each other elementwise")
    trivial_w = omega is None or omega.is_trivial
    ab = _abelianization_size(G, K1) * _abelianization_size(G, K2)
    if ab > ABELIANIZATION_CAP:
        raise ValueError(f"bicharacter search is capped at |K1^ab|*|K2^ab| <= "
                         f"{ABELIANIZATION_CAP}; got {ab}")
    e1, e2 = _subgroup_exponent(G, K1), _subgroup_exponent(G, K2)
    L = math.gcd(e1, e2) if trivial_w else omega.order * math.lcm(e1, e2)
    scale = 0 if trivial_w else L // omega.order
    gens1, gens2 = _generating_set(G, K1), _generating_set(G, K2)
    npairs = len(gens1) * len(gens2)
    if npairs and L ** npairs > ASSIGNMENT_CAP:
        raise ValueError(f"bicharacter assignment space {L}^{npairs} exceeds "
                         f"the cap {ASSIGNMENT_CAP}")

    cay, inv = G.cayley, G.inv
    pos1 = {x: i for i, x in enumerate(K1)}
    pos2 = {y: j for j, y in enumerate(K2)}

    def bx(x, y, z):        # beta_x(y, z) for x in K1, y, z in K2, scaled to L
        return 0 if trivial_w else scale * _beta_raw(omega, x, y, z)

    def by(y, t, x):        # beta_y(t, x) for y in K2, t, x in K1, scaled to L
        return 0 if trivial_w else scale * _beta_raw(omega, y, t, x)

    def extend_row(x, gen_vals) -> np.ndarray | None:
        """B(x, -) over K2 from values on gens2, via
        B(x, yh) = B(x,y) + B(x,h) - beta_x(y,h); None on conflict."""
        val = {0: 0}
        for h, v in zip(gens2, gen_vals):
            if val.setdefault(h, v) != v:
                return None
        grew = True
        while grew:
            grew = False
            for y in list(val):
                for h in gens2:
                    z = int(cay[y, h])
                    cand = (val[y] + val[h] - bx(x, y, h)) % L
                    if z in val:
                        if val[z] != cand:
                            return None
                    else:
                        val[z] = cand
                        grew = True
        return np.array([val[y] for y in K2], dtype=np.int64)

    def extend_table(gen_rows) -> np.ndarray | None:
        """All rows from generator rows, via
        B(tg, y) = B(t,y) + B(g,y) + beta_y(t,g); None on conflict."""
        rows = {0: np.zeros(len(K2), dtype=np.int64)}
        for g1, r in zip(gens1, gen_rows):
            if g1 in rows and (rows[g1] != r).any():
                return None
            rows[g1] = r
        grew = True
        while grew:
            grew = False
            for t in list(rows):
                for g1 in gens1:
                    z = int(cay[t, g1])
                    twist = np.array([by(y, t, g1) for y in K2], dtype=np.int64)
                    cand = (rows[t] + rows[g1] + twist) % L
                    if z in rows:
                        if (rows[z] != cand).any():
                            return None
                    else:
                        rows[z] = cand
                        grew = True
        return np.stack([rows[x] for x in K1])

    def laws_hold(T: np.ndarray) -> bool:
        for x in K1:
            i = pos1[x]
            for y in K2:
                for z in K2:
                    lhs = T[i, pos2[int(cay[y, z])]]
                    if lhs != (T[i, pos2[y]] + T[i, pos2[z]] - bx(x, y, z)) % L:
                        return False
        for t in K1:
            for x in K1:
                i = pos1[int(cay[t, x])]
                for y in K2:
                    j = pos2[y]
                    if T[i, j] != (T[pos1[t], j] + T[pos1[x], j] + by(y, t, x)) % L:
                        return False
        for x in range(G.order):
            xi = int(inv[x])
            for a in K1:
                arow = pos1[int(cay[cay[xi, a], x])]       # x^-1 a x
                for h in K2:
                    hcol = pos2[int(cay[cay[x, h], xi])]   # x h x^-1
                    xh = int(cay[x, h])
                    rhs = (T[pos1[a], hcol]
                           + (0 if trivial_w
                              else scale * (_beta_raw(omega, a, x, h)
                                            + _beta_raw(omega, a, xh, xi)
                                            - _beta_raw(omega, a, x, xi)))) % L
                    if T[arow, pos2[h]] != rhs:
                        return False
        return True

    found: dict[bytes, np.ndarray] = {}
    for combo in itertools.product(range(L), repeat=npairs):
        gen_rows = []
        ok = True
        for i1 in range(len(gens1)):
            row = extend_row(gens1[i1],
                             combo[i1 * len(gens2):(i1 + 1) * len(gens2)])
            if row is None:
                ok = False
                break
            gen_rows.append(row)
        if not ok:
            continue
        T = extend_table(gen_rows)
        if T is None or not laws_hold(T):
            continue
        found.setdefault(T.tobytes(), T)
    tables = sorted(found.values(), key=lambda t: tuple(t.flat))
    return [Bicharacter(L, tuple(int(v) for v in t.flat)) for t in tables]


def enumerate_triples(G: FiniteGroup,
                      omega: OmegaCocycle | None = None) -> list[Triple]:
    """Every (K1, K2, B) over pairs of centralizing normal subgroups."""
    if omega is not None:
        problems = omega.validate()
        if problems:
            raise ValueError("invalid 3-cocycle: " + "; ".join(problems))
    out = []
    normals = G.normal_subgroups
    for K1 in normals:
        for K2 in normals:
            if not centralize_each_other(G, K1, K2):
                continue
            for B in enumerate_invariant_bicharacters(G, K1, K2, omega):
                out.append(Triple(G, K1, K2, B,
                                  len(K1) * G.order // len(K2)))
    return out


def equal_order_filter(triples: list[Triple]) -> list[Triple]:
    """The sublist with |K1| = |K2| — equivalently dimension |G|."""
    return [t for t in triples if len(t.K1) == len(t.K2)]


# -- objects of a triple ------------------------------------------------------------

def triple_to_objects(G: FiniteGroup, omega: OmegaCocycle | None,
                      triple: Triple, catalog: IrrepCatalog | None = None,
                      config: ToolConfig = DEFAULT_CONFIG) -> FusionSubcategory:
    """Simple objects (g, pi) of the subcategory of ``triple``: class
    representative g in K1 and pi(h) = B(g, h) deg pi for all h in K2.
    Verifies the dimension count |K1|*[G:K2] exactly."""
    if catalog is None:
        catalog = double_irreps(G, omega, config)
    K1set = set(triple.K1)
    L = triple.B.order
    indices, labels, total = [], [], 0
    for ci, e in enumerate(catalog.entries):
        g = e.class_rep
        if g not in K1set:
            continue
        index = G.order // len(e.domain)
        degpi = e.degree // index
        dom_pos = {h: loc for loc, h in enumerate(e.domain)}
        keep = True
        for h in triple.K2:
            if h not in dom_pos:
                raise ValueError(f"K2 element {h} does not centralize the "
                                 f"class representative {g}")
            b = triple.b_exp(g, h)
            if e.exact_character is not None:
                if not (e.exact_character[dom_pos[h]]
                        == root_mono(L, b) * CycScalar.rational(degpi)):
                    keep = False
                    break
            else:
                target = degpi * np.exp(2j * np.pi * b / L)
                if abs(complex(e.character[dom_pos[h]]) - target) > TOL:
                    keep = False
                    break
        if keep:
            indices.append(ci)
            labels.append(e.label)
            total += e.degree ** 2
    if total != triple.dimension:
        raise RuntimeError(f"object scan for {triple.describe()} collected "
                           f"dimension {total}; the classification predicts "
                           f"{triple.dimension}")
    return FusionSubcategory(frozenset(labels), tuple(indices), total,
                             name=triple.describe())


def round_trip_subgroups(G: FiniteGroup, omega: OmegaCocycle | None,
                         sub: FusionSubcategory,
                         catalog: IrrepCatalog) -> tuple[tuple, tuple]:
    """Recover (K1, K2) from an object set: K1 is the union of the classes of
    occurring g; K2 the intersection of kernels of pi over objects (e, pi)."""
    K1: set[int] = {0}
    for ci in sub.object_indices:
        K1.update(G.class_of(catalog.entries[ci].class_rep))
    K1t = tuple(sorted(K1))
    if not G.is_subgroup(K1t):
        raise RuntimeError("recovered K1 is not a subgroup: the object set is "
                           "not a fusion subcategory")
    K2: set[int] = set(range(G.order))
    for ci in sub.object_indices:
        e = catalog.entries[ci]
        if e.class_rep != 0:
            continue
        deg = e.degree
        if e.exact_character is not None:
            ker = {h for loc, h in enumerate(e.domain)
                   if e.exact_character[loc] == deg}
        else:
            ker = {h for loc, h in enumerate(e.domain)
                   if abs(complex(e.character[loc]) - deg) < TOL}
        K2 &= ker
    return K1t, tuple(sorted(K2))


# -- tensor-closure oracle (untwisted double) ---------------------------------------

@dataclass
class TensorReport:
    """Fusion multiplicities N[c1, c2, c3] of the untwisted double, computed
    from explicit module matrices, with the self-checks that were run."""
    name: str
    N: np.ndarray
    unit_index: int
    dual: tuple
    degrees: tuple
    checks: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def add(self, check, count=1):
        self.checks[check] = self.checks.get(check, 0) + count

    def fail(self, msg):
        if len(self.failures) < 30:
            self.failures.append(msg)


def _dense_left_stack(tab) -> np.ndarray:
    n = tab.dim
    L = np.zeros((n, n, n), dtype=complex)
    for (i, j), row in tab.mul.items():
        for k, c in row.items():
            L[i, k, j] += complex(c)
    return L


def _dense_right_stack(tab) -> np.ndarray:
    n = tab.dim
    R = np.zeros((n, n, n), dtype=complex)
    for (j, i), row in tab.mul.items():
        for k, c in row.items():
            R[i, k, j] += complex(c)
    return R


def _pi_matrix_stacks(tab, sub: IrrepCatalog, config: ToolConfig) -> list:
    """Explicit irreducible representation matrices of a group-element-based
    algebra, one (n, d, d) stack per catalog entry, extracted from the left
    regular representation and re-verified as algebra homomorphisms."""
    n = tab.dim
    L = _dense_left_stack(tab)
    R = _dense_right_stack(tab)
    stacks = []
    for ci, entry in enumerate(sub.entries):
        d = entry.degree
        if d == 1:
            stacks.append(np.asarray(entry.character,
                                     dtype=complex).reshape(n, 1, 1))
            continue
        P = sub.projectors[ci]
        mats = None
        for attempt in range(4):
            rng = np.random.default_rng(config.seed + 17 * ci + attempt)
            z = rng.standard_normal(n) + 1j * rng.standard_normal(n)
            # eigenspaces of a right multiplication are left ideals, so the
            # chosen cluster carries a copy of the left module structure
            A = P @ np.einsum("i,ikj->kj", z, R) @ P
            lam, vecs = np.linalg.eig(A)
            scale = max(1.0, float(np.abs(lam).max()))
            nonzero = [i for i in range(n) if abs(lam[i]) > 1e-8 * scale]
            clusters: list[list[int]] = []
            for i in nonzero:
                for cl in clusters:
                    if abs(lam[cl[0]] - lam[i]) < 1e-6 * scale:
                        cl.append(i)
                        break
                else:
                    clusters.append([i])
            good = [cl for cl in clusters if len(cl) == d]
            if not good or len(good) != len(clusters):
                continue
            B = vecs[:, good[0]]
            mats = np.einsum("pk,ikj,jq->ipq", np.linalg.pinv(B), L, B)
            if _homomorphism_violation(tab, mats) is None:
                break
            mats = None
        if mats is None:
            raise RuntimeError(f"could not extract irreducible matrices for "
                               f"{tab.name} block {ci}")
        stacks.append(mats)
    return stacks


def _homomorphism_violation(tab, mats) -> tuple | None:
    """First (i, j) where mats[i] @ mats[j] != sum of structure constants."""
    n = tab.dim
    d = mats.shape[1]
    for i in range(n):
        for j in range(n):
            rhs = np.zeros((d, d), dtype=complex)
            for k, c in tab.mul.get((i, j), {}).items():
                rhs += complex(c) * mats[k]
            if np.abs(mats[i] @ mats[j] - rhs).max() > 1e-6:
                return (i, j)
    return None


def _transversal(G: FiniteGroup, C) -> tuple[list, np.ndarray]:
    """Left-coset representatives of C and the map element -> coset index."""
    coset_of = np.full(G.order, -1, dtype=np.int64)
    reps = []
    for u in range(G.order):
        if coset_of[u] < 0:
            j = len(reps)
            reps.append(u)
            for c in C:
                coset_of[G.cayley[u, c]] = j
    return reps, coset_of


def fusion_multiplicity_table(G: FiniteGroup,
                              catalog: IrrepCatalog | None = None,
                              config: ToolConfig = DEFAULT_CONFIG) -> TensorReport:
    """Tensor multiplicities of the untwisted double from explicit matrices.

    Every simple module V_(g,pi) is realized by concrete matrices: the module
    induced from pi along the centralizer of g, with basis (coset, pi-vector)
    and a grading vector recording which delta function acts as the identity
    on each basis vector.  The central idempotent of the double attached to
    each (class, pi) is expanded as an explicit linear combination of basis
    elements; its matrix on every V (idempotent, orthogonal: checked) and on
    every V tensor W (idempotent: checked) is formed, and the multiplicity of
    each simple in V tensor W is trace / degree (integrality: checked)."""
    if catalog is None:
        catalog = double_irreps(G, None, config)
    k = len(catalog.entries)
    n = G.order
    cay, inv = G.cayley, G.inv
    rep = TensorReport(f"tensor[{G.name}]",
                       np.zeros((k, k, k), dtype=np.int64), -1, (),
                       tuple(e.degree for e in catalog.entries))

    # rebuild the per-class decompositions (deterministic: same seeds) and
    # extract pi matrices; induce to modules of the double
    modules = []          # per entry: (typ vector, SX stack (n, d, d))
    idem_terms = []       # per entry: {(a, x): coefficient}
    ci = 0
    for cls in G.conjugacy_classes:
        g = cls[0]
        C = G.centralizer(g)
        Cgrp, to_parent = G.subgroup_to_group(C, name=f"C{g}")
        tga = twisted_group_algebra(Cgrp, None, 1, name=f"k[C({g})]")
        sub = decompose_semisimple(tga, config)
        if not sub.ok:
            rep.failures.extend(sub.failures)
            return rep
        stacks = _pi_matrix_stacks(tga, sub, config)
        reps_, coset_of = _transversal(G, C)
        r = len(reps_)
        cpos = {int(h): loc for loc, h in enumerate(to_parent)}
        for pi_i, pi_entry in enumerate(sub.entries):
            entry = catalog.entries[ci]
            if entry.class_rep != g or entry.degree != r * pi_entry.degree:
                rep.fail(f"catalog entry {ci} does not match the rebuilt "
                         f"class data for class of {g}")
                return rep
            dpi = pi_entry.degree
            d = r * dpi
            pis = stacks[pi_i]
            typ = np.zeros(d, dtype=np.int64)
            SX = np.zeros((n, d, d), dtype=complex)
            for j, t in enumerate(reps_):
                typ[j * dpi:(j + 1) * dpi] = cay[cay[t, g], inv[t]]
            for x in range(n):
                for j, t in enumerate(reps_):
                    u = int(cay[x, t])
                    j2 = int(coset_of[u])
                    c = int(cay[inv[reps_[j2]], u])
                    SX[x, j2 * dpi:(j2 + 1) * dpi,
                       j * dpi:(j + 1) * dpi] = pis[cpos[c]]
            if np.abs(SX[0] - np.eye(d)).max() > TOL:
                rep.fail(f"induced module {entry.label}: identity does not "
                         f"act as the identity matrix")
                return rep
            rng = np.random.default_rng(config.seed + ci)
            for x, y in rng.integers(0, n, size=(min(60, n * n), 2)):
                if np.abs(SX[x] @ SX[y] - SX[cay[x, y]]).max() > TOL:
                    rep.fail(f"induced module {entry.label}: matrices are not "
                             f"multiplicative at ({x},{y})")
                    return rep
            rep.add("module-built")
            terms: dict[tuple, complex] = {}
            coef = dpi / len(C)
            for t in reps_:
                a = int(cay[cay[t, g], inv[t]])
                for loc, c in enumerate(to_parent):
                    x = int(cay[cay[t, c], inv[t]])
                    chi = complex(pi_entry.character[cpos[int(inv[c])]])
                    terms[(a, x)] = terms.get((a, x), 0.0) + coef * chi
            idem_terms.append(terms)
            modules.append((typ, SX))
            ci += 1

    # masks: for each module, delta-function projectors by graded type
    masks = []
    for typ, SX in modules:
        masks.append({int(v): (typ == v).astype(complex) for v in set(typ.tolist())})

    def idem_matrix(c: int, typ, SX, mask) -> np.ndarray:
        d = SX.shape[1]
        E = np.zeros((d, d), dtype=complex)
        for (a, x), co in idem_terms[c].items():
            m = mask.get(a)
            if m is not None:
                E += co * (m[:, None] * SX[x])
        return E

    # orthogonality of the idempotents across all simples pins every
    # convention (coefficients, conjugation direction, grading)
    for c in range(k):
        for c2 in range(k):
            typ, SX = modules[c2]
            E = idem_matrix(c, typ, SX, masks[c2])
            want = np.eye(SX.shape[1]) if c == c2 else 0.0
            if np.abs(E - want).max() > 1e-5:
                rep.fail(f"central idempotent {c} does not act as "
                         f"{'identity' if c == c2 else 'zero'} on simple {c2}")
                return rep
    rep.add("idempotent-orthogonality", k * k)

    unit_candidates = [ci for ci, e in enumerate(catalog.entries)
                       if e.class_rep == 0 and e.degree == 1
                       and np.abs(np.asarray(e.character) - 1).max() < TOL]
    if len(unit_candidates) != 1:
        rep.fail(f"expected exactly one unit object, found {unit_candidates}")
        return rep
    rep.unit_index = unit_candidates[0]

    # tensor products: multiplicity of simple c in V ⊗ W from the trace of the
    # explicitly-built idempotent matrix
    class_members = [sorted(mask) for mask in masks]
    for c1 in range(k):
        typ1, SX1 = modules[c1]
        d1 = SX1.shape[1]
        for c2 in range(c1, k):
            typ2, SX2 = modules[c2]
            d2 = SX2.shape[1]
            consumed = 0
            for c in range(k):
                E = np.zeros((d1 * d2, d1 * d2), dtype=complex)
                for (a, x), co in idem_terms[c].items():
                    vs = [v for v in class_members[c1]
                          if int(cay[a, inv[v]]) in masks[c2]]
                    if not vs:
                        continue
                    M1 = np.stack([masks[c1][v][:, None] * SX1[x] for v in vs])
                    M2 = np.stack([masks[c2][int(cay[a, inv[v]])][:, None] * SX2[x]
                                   for v in vs])
                    E += co * np.einsum("vab,vcd->acbd", M1, M2).reshape(d1 * d2,
                                                                         d1 * d2)
                if np.abs(E @ E - E).max() > 1e-5:
                    rep.fail(f"idempotent {c} is not idempotent on "
                             f"{c1} ⊗ {c2}")
                    return rep
                tr = E.trace().real / rep.degrees[c]
                m = round(tr)
                if abs(tr - m) > 1e-5 or m < 0 or abs(E.trace().imag) > 1e-5:
                    rep.fail(f"multiplicity of {c} in {c1} ⊗ {c2} is not a "
                             f"nonnegative integer: {tr}")
                    return rep
                rep.N[c1, c2, c] = rep.N[c2, c1, c] = m
                consumed += m * rep.degrees[c]
            if consumed != d1 * d2:
                rep.fail(f"{c1} ⊗ {c2}: multiplicities consume {consumed} of "
                         f"{d1 * d2} dimensions")
                return rep
            rep.add("tensor-pair")

    dual = []
    for c in range(k):
        cands = [c2 for c2 in range(k) if rep.N[c, c2, rep.unit_index]]
        if len(cands) != 1 or rep.N[c, cands[0], rep.unit_index] != 1:
            rep.fail(f"simple {c} does not have a unique dual")
            return rep
        dual.append(cands[0])
    if any(dual[dual[c]] != c for c in range(k)):
        rep.fail("duality is not an involution")
        return rep
    rep.dual = tuple(dual)
    rep.add("duals", k)
    return rep


def tensor_closure_oracle(G: FiniteGroup, omega: OmegaCocycle | None,
                          seed_objects, catalog: IrrepCatalog | None = None,
                          table: TensorReport | None = None,
                          config: ToolConfig = DEFAULT_CONFIG) -> FusionSubcategory:
    """Smallest object set containing the seeds and the unit, closed under
    duals and tensor constituents.  Seeds may be catalog indices or labels.
    Defined for the untwisted double only: twisted tensor decompositions need
    associator data that the algebra-level machinery does not carry, so
    twisted runs report triples without an oracle cross-check."""
    if omega is not None and not omega.is_trivial:
        raise ValueError("tensor-closure oracle supports only the untwisted "
                         "double (omega must be trivial)")
    if catalog is None:
        catalog = double_irreps(G, None, config)
    if table is None:
        table = fusion_multiplicity_table(G, catalog, config)
    if not table.ok:
        raise RuntimeError("fusion multiplicity table failed self-checks: "
                           + "; ".join(table.failures))
    by_label = {e.label: ci for ci, e in enumerate(catalog.entries)}
    S = {table.unit_index}
    for s in seed_objects:
        S.add(by_label[s] if isinstance(s, str) else int(s))
    while True:
        grown = set(S)
        for c in S:
            grown.add(table.dual[c])
        for c1 in S:
            for c2 in S:
                grown.update(np.nonzero(table.N[c1, c2])[0].tolist())
        if grown == S:
            break
        S = grown
    indices = tuple(sorted(S))
    labels = frozenset(catalog.entries[ci].label for ci in indices)
    dim = sum(catalog.entries[ci].degree ** 2 for ci in indices)
    return FusionSubcategory(labels, indices, dim, name="closure")


def oracle_fixed_points(G: FiniteGroup, catalog: IrrepCatalog | None = None,
                        table: TensorReport | None = None,
                        config: ToolConfig = DEFAULT_CONFIG) -> list[FusionSubcategory]:
    """All tensor-closed object sets, generated as closures of single objects
    followed by joins (closed unions), avoiding the 2^k seed sweep."""
    if catalog is None:
        catalog = double_irreps(G, None, config)
    if table is None:
        table = fusion_multiplicity_table(G, catalog, config)
    subs: dict[tuple, FusionSubcategory] = {}
    frontier = []
    for ci in range(len(catalog.entries)):
        sub = tensor_closure_oracle(G, None, [ci], catalog, table, config)
        if sub.object_indices not in subs:
            subs[sub.object_indices] = sub
            frontier.append(sub)
    while frontier:
        nxt = []
        for a in frontier:
            for b in list(subs.values()):
                joined = tensor_closure_oracle(
                    G, None, set(a.object_indices) | set(b.object_indices),
                    catalog, table, config)
                if joined.object_indices not in subs:
                    subs[joined.object_indices] = joined
                    nxt.append(joined)
        frontier = nxt
    return sorted(subs.values(), key=lambda s: (s.dimension, s.object_indices))
