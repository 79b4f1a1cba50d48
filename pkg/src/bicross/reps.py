"""Decomposition of finite-dimensional semisimple algebras into irreducibles.

The engine splits the left regular module numerically: the center is the
nullspace of the positive semidefinite operator sum (L_k - R_k)^H (L_k - R_k),
a random central element is diagonalized, and eigenvalue clusters of size d^2
recover the matrix blocks.  Everything numeric is then revalidated: degrees
must be exact integers with sum of squares equal to the dimension, two seeds
must agree, and for algebras over Q or an imaginary quadratic cyclotomic field
the central idempotents are reconstructed as exact vectors and re-proven
idempotent, orthogonal, complete, and central by exact arithmetic.

On top of the engine sit the structured catalogs: irreducibles of a bicrossed
product k^Gamma #_sigma kF via orbits and twisted stabilizer algebras, and
irreducibles of the (twisted) double of a finite group via conjugacy classes
and twisted centralizer algebras.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .config import DEFAULT_CONFIG, ToolConfig
from .cyclotomic import CycScalar, cyclotomic_polynomial, root_mono
from .factorization import CocyclePair, MatchedPair
from .groups import FiniteGroup
from .hopf import (HopfAlgebraData, build_bicrossed_product, vec_add_into,
                   vec_equal)
from .perm import format_cycles

Vec = dict


# -- plain structure-constant algebras -------------------------------------------

@dataclass(frozen=True)
class AlgebraTable:
    """An associative unital algebra by structure constants over Q(zeta_order)."""
    name: str
    dim: int
    order: int
    mul: dict          # (i, j) -> {k: CycScalar}
    unit: dict         # Vec

    def mul_vec(self, u: Vec, v: Vec) -> Vec:
        out: Vec = {}
        for i, a in u.items():
            for j, b in v.items():
                ab = a * b
                if ab.is_zero():
                    continue
                for k, c in self.mul.get((i, j), {}).items():
                    vec_add_into(out, k, ab * c)
        return {k: c for k, c in out.items() if not c.is_zero()}


def algebra_from_hopf(H: HopfAlgebraData) -> AlgebraTable:
    return AlgebraTable(H.name, H.dim, H.order, H.materialized_mul(), dict(H.unit))


def check_two_cocycle(group: FiniteGroup, beta: np.ndarray, order: int) -> list[str]:
    """Normalization and the 2-cocycle law, vectorized over all triples."""
    n = group.order
    problems = []
    if beta.shape != (n, n):
        return [f"beta table has shape {beta.shape}, expected {(n, n)}"]
    b = np.asarray(beta, dtype=np.int64) % order
    if b[0, :].any() or b[:, 0].any():
        problems.append("beta is not normalized at the identity")
    cay = group.cayley
    lhs = (b[:, :, None] + b[cay, :]) % order
    rhs = (b[None, :, :] + b[np.arange(n)[:, None, None], cay[None, :, :]]) % order
    if (lhs != rhs).any():
        x, y, z = map(int, np.argwhere(lhs != rhs)[0])
        problems.append(f"2-cocycle law fails at triple ({x},{y},{z})")
    return problems


def twisted_group_algebra(group: FiniteGroup, beta: np.ndarray | None,
                          order: int = 1, name: str | None = None) -> AlgebraTable:
    """Basis u_g with u_g u_h = zeta^beta(g,h) u_{gh}; beta None means trivial.

    The declared scalar field is Q(zeta_L) with L = order * exponent of the
    group: u_g^ord(g) is a power of zeta_order, so every eigenvalue of u_g is
    an (ord(g)*order)-th root of unity, and characters and idempotent
    coordinates live in that field even when the structure constants are
    rational."""
    n = group.order
    if beta is None:
        beta = np.zeros((n, n), dtype=np.int64)
        order = 1
    problems = check_two_cocycle(group, beta, order)
    if problems:
        raise ValueError(f"invalid 2-cocycle on {group.name}: " + "; ".join(problems))
    L = order * group.exponent
    step = L // order
    mul = {(i, j): {int(group.cayley[i, j]): root_mono(L, int(beta[i, j]) * step)}
           for i in range(n) for j in range(n)}
    return AlgebraTable(name or f"k_beta[{group.name}]", n, L, mul,
                        {0: root_mono(L, 0)})


# -- 3-cocycles -------------------------------------------------------------------

@dataclass(frozen=True)
class OmegaCocycle:
    """A normalized 3-cocycle on a group, as exponents of zeta_order."""
    group: FiniteGroup
    order: int
    table: np.ndarray  # [n, n, n] int exponents

    @classmethod
    def trivial(cls, group: FiniteGroup) -> "OmegaCocycle":
        return cls(group, 1, np.zeros((group.order,) * 3, dtype=np.int64))

    @property
    def is_trivial(self) -> bool:
        return not (np.asarray(self.table) % self.order).any()

    def validate(self) -> list[str]:
        n = self.group.order
        w = np.asarray(self.table, dtype=np.int64) % self.order
        problems = []
        if w.shape != (n, n, n):
            return [f"omega table has shape {w.shape}, expected {(n, n, n)}"]
        if w[0].any() or w[:, 0].any() or w[:, :, 0].any():
            problems.append("omega is not normalized at the identity")
        # omega(b,c,d) + omega(a,bc,d) + omega(a,b,c) == omega(ab,c,d) + omega(a,b,cd),
        # evaluated one a-slice at a time to keep the n^4 tensor off the heap
        cay = self.group.cayley
        for a in range(n):
            wa = w[a]
            lhs = (w + wa[cay] + wa[:, :, None]) % self.order
            rhs = (w[cay[a]] + wa[:, cay]) % self.order
            if (lhs != rhs).any():
                b, c, d = map(int, np.argwhere(lhs != rhs)[0])
                problems.append(f"3-cocycle law fails at ({a},{b},{c},{d})")
                break
        return problems


def beta_from_omega(omega: OmegaCocycle, g: int) -> tuple[tuple, np.ndarray]:
    """The 2-cocycle beta_g(x,y) = omega(g,x,y) omega(x,y,g) / omega(x,g,y) on
    the centralizer of g; returns (centralizer elements, exponent table)."""
    G = omega.group
    cz = G.centralizer(g)
    w = np.asarray(omega.table, dtype=np.int64)
    c = np.array(cz)
    beta = (w[g][np.ix_(c, c)] + w[np.ix_(c, c)][:, :, g]
            - w[c][:, g, :][:, c]) % omega.order
    return cz, beta


# -- the decomposition engine -----------------------------------------------------

@dataclass
class IrrepEntry:
    label: str
    degree: int
    character: np.ndarray | None = None       # numeric, over the algebra basis
    exact_character: list | None = None       # CycScalar, when recovered
    class_rep: int | None = None              # parent-group element (doubles)
    domain: tuple | None = None               # parent indices the character lives on


@dataclass
class IrrepCatalog:
    name: str
    algebra_dim: int
    entries: list = field(default_factory=list)
    seeds: tuple = ()
    checks: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)
    exact_idempotents: list | None = None      # list of Vec over CycScalar
    projectors: list | None = None             # numeric isotypic projectors

    @property
    def ok(self) -> bool:
        return not self.failures

    def degrees(self) -> tuple:
        return tuple(sorted(e.degree for e in self.entries))

    def add(self, check, count=1):
        self.checks[check] = self.checks.get(check, 0) + count

    def fail(self, msg):
        if len(self.failures) < 30:
            self.failures.append(msg)

    def summary(self) -> str:
        state = "ok" if self.ok else f"{len(self.failures)} FAILURES"
        return (f"{self.name}: dim {self.algebra_dim}, {len(self.entries)} "
                f"irreducibles, degrees {list(self.degrees())} [{state}]")


def _cluster(values: np.ndarray, tol: float) -> list[list[int]]:
    """Greedy nearest-center clustering (conjugate eigenvalues interleave under
    lexicographic sorting, so adjacency in sorted order is not usable)."""
    centers: list[complex] = []
    members: list[list[int]] = []
    for idx in np.argsort(values.real, kind="stable"):
        v = values[idx]
        best, bestd = -1, tol
        for c, ctr in enumerate(centers):
            d = abs(v - ctr)
            if d < bestd:
                best, bestd = c, d
        if best < 0:
            centers.append(v)
            members.append([int(idx)])
        else:
            m = members[best]
            m.append(int(idx))
            centers[best] = (centers[best] * (len(m) - 1) + v) / len(m)
    return members


def _recover_scalar(value: complex, order: int, tol: float) -> CycScalar | None:
    """Exact scalar from a float, for fields of degree <= 2 over Q."""
    zeta = complex(np.exp(2j * np.pi / order)) if order > 1 else 1.0 + 0j
    if order <= 2 or abs(zeta.imag) < 1e-12:
        b = Fraction(0)
        a = Fraction(value.real).limit_denominator(10 ** 6)
    else:
        bf = value.imag / zeta.imag
        b = Fraction(bf).limit_denominator(10 ** 6)
        a = Fraction(value.real - bf * zeta.real).limit_denominator(10 ** 6)
    approx = float(a) + float(b) * zeta
    if abs(approx - value) > tol:
        return None
    out = CycScalar.rational(a, order)
    if b:
        out = out + CycScalar(order, {1 % order: b})
    return out


def decompose_semisimple(tab: AlgebraTable, config: ToolConfig = DEFAULT_CONFIG,
                         characters: bool = True,
                         exact_order: int | None = None) -> IrrepCatalog:
    """Split a finite-dimensional semisimple algebra into matrix blocks.

    ``characters=False`` computes the degree multiset only.  Exact
    revalidation of the central idempotents runs when ``characters`` is on and
    the recovery field Q(zeta_M) has degree <= 2 over Q, where M defaults to
    the declared field of the structure constants; pass ``exact_order`` when
    the splitting field is strictly larger (idempotent coordinates may need
    roots of unity that the structure constants do not)."""
    n = tab.dim
    if n > config.decompose_dim_cap:
        raise ValueError(f"{tab.name}: dim {n} exceeds the dense splitting cap "
                         f"{config.decompose_dim_cap}")
    cat = IrrepCatalog(tab.name, n, seeds=(config.seed, config.seed + 1))

    L = np.zeros((n, n, n), dtype=complex)
    R = np.zeros((n, n, n), dtype=complex)
    for (i, j), row in tab.mul.items():
        for k, c in row.items():
            z = complex(c)
            L[i, k, j] += z
            R[j, k, i] += z
    D = L - R
    M = np.einsum("ikj,ikl->jl", D.conj(), D)
    evals, evecs = np.linalg.eigh(M)
    scale = max(float(evals[-1]), 1.0)
    center_dim = int(np.count_nonzero(evals < np.sqrt(config.eig_tol) * scale))
    if center_dim == 0:
        cat.fail("no central elements found (not a unital algebra over the basis?)")
        return cat
    C = evecs[:, :center_dim]
    cat.add("center-dim", center_dim)

    degree_sets = []
    first_clusters = None
    first_Lz = None
    for seed in cat.seeds:
        rng = np.random.default_rng(seed)
        z = C @ (rng.standard_normal(center_dim) + 1j * rng.standard_normal(center_dim))
        Lz = np.einsum("i,ikj->kj", z, L)
        lam = np.linalg.eigvals(Lz)
        tol = max(1.0, float(np.abs(lam).max())) * 1e-6
        clusters = _cluster(lam, tol)
        degrees = []
        for m in clusters:
            d = math.isqrt(len(m))
            if d * d != len(m):
                cat.fail(f"seed {seed}: eigenvalue cluster of size {len(m)} is not "
                         f"a perfect square — non-semisimple input or tolerance "
                         f"failure")
                return cat
            degrees.append(d)
        degree_sets.append(sorted(degrees))
        if first_clusters is None:
            first_clusters = [(complex(np.mean(lam[m])), math.isqrt(len(m)))
                              for m in clusters]
            first_Lz = Lz
    if degree_sets[0] != degree_sets[1]:
        cat.fail(f"seeds disagree on the degree multiset: {degree_sets}")
        return cat
    if sum(d * d for d in degree_sets[0]) != n:
        cat.fail(f"sum of squared degrees {sum(d*d for d in degree_sets[0])} != dim {n}")
        return cat
    cat.add("seeds-agree")
    cat.add("sum-of-squares")

    # central projectors as Lagrange interpolants of the random central element
    order = sorted(range(len(first_clusters)),
                   key=lambda c: (first_clusters[c][1],
                                  round(first_clusters[c][0].real, 6),
                                  round(first_clusters[c][0].imag, 6)))
    centers = [first_clusters[c][0] for c in order]
    degs = [first_clusters[c][1] for c in order]
    eye = np.eye(n, dtype=complex)
    projectors = []
    for ci, lam_c in enumerate(centers):
        P = eye
        for cj, lam_d in enumerate(centers):
            if cj != ci:
                P = P @ (first_Lz - lam_d * eye) / (lam_c - lam_d)
        projectors.append(P)
    resid = max(float(np.abs(P @ P - P).max()) for P in projectors)
    total = sum(projectors)
    resid = max(resid, float(np.abs(total - eye).max()))
    if resid > config.char_tol:
        cat.fail(f"central projectors fail idempotency/completeness numerically "
                 f"(residual {resid:.2e})")
        return cat
    cat.add("projectors", len(projectors))
    cat.projectors = projectors

    for ci, P in enumerate(projectors):
        entry = IrrepEntry(label=f"pi{ci}", degree=degs[ci])
        if characters:
            entry.character = np.einsum("kj,mjk->m", P, L) / degs[ci]
        cat.entries.append(entry)

    # exact revalidation where the recovery field has degree <= 2 over Q
    M = tab.order if exact_order is None else exact_order
    phi = len(cyclotomic_polynomial(M)) - 1 if M >= 1 else 3
    if characters and phi <= 2 and n <= config.exact_char_dim:
        unit = np.zeros(n, dtype=complex)
        for i, c in tab.unit.items():
            unit[i] = complex(c)
        exact = []
        for P in projectors:
            coords = P @ unit
            e: Vec = {}
            good = True
            for i in range(n):
                if abs(coords[i]) < 1e-12:
                    continue
                s = _recover_scalar(complex(coords[i]), M, config.char_tol)
                if s is None:
                    good = False
                    break
                e[i] = s
            if not good:
                cat.fail("central idempotent coordinates are not recoverable "
                         "as exact scalars")
                exact = None
                break
            exact.append(e)
        if exact is not None:
            _exact_idempotent_checks(tab, exact, cat)
            cat.exact_idempotents = exact
            if characters and cat.ok:
                trace = _trace_vector(tab)
                for ci, e in enumerate(exact):
                    d = degs[ci]
                    chars = []
                    for m in range(n):
                        u = tab.mul_vec(e, {m: root_mono(tab.order, 0)})
                        t = CycScalar.zero(tab.order)
                        for i, c in u.items():
                            t = t + c * trace[i]
                        chars.append(t / CycScalar.rational(Fraction(d), tab.order))
                    ent = cat.entries[ci]
                    ent.exact_character = chars
                    num = np.array([complex(cv) for cv in chars])
                    if (ent.character is not None
                            and float(np.abs(num - ent.character).max()) > config.char_tol):
                        cat.fail(f"exact and numeric characters disagree for pi{ci}")
                cat.add("exact-characters", len(exact))
    return cat


def _trace_vector(tab: AlgebraTable) -> list:
    """trace of left multiplication by each basis element, exact."""
    tr = [CycScalar.zero(tab.order) for _ in range(tab.dim)]
    for (i, j), row in tab.mul.items():
        c = row.get(j)
        if c is not None:
            tr[i] = tr[i] + c
    return tr


def _exact_idempotent_checks(tab: AlgebraTable, exact: list, cat: IrrepCatalog):
    zero: Vec = {}
    one = tab.unit
    total: Vec = {}
    for ei in exact:
        for k, c in ei.items():
            vec_add_into(total, k, c)
    if not vec_equal(total, one):
        cat.fail("exact central idempotents do not sum to 1")
    for a, ea in enumerate(exact):
        if not vec_equal(tab.mul_vec(ea, ea), ea):
            cat.fail(f"exact idempotent {a} fails e*e = e")
        for b in range(a + 1, len(exact)):
            if not vec_equal(tab.mul_vec(ea, exact[b]), zero):
                cat.fail(f"exact idempotents {a},{b} are not orthogonal")
    one_s = root_mono(tab.order, 0)
    for a, ea in enumerate(exact):
        for k in range(tab.dim):
            bk = {k: one_s}
            if not vec_equal(tab.mul_vec(ea, bk), tab.mul_vec(bk, ea)):
                cat.fail(f"exact idempotent {a} is not central (witness basis {k})")
                return
    cat.add("exact-idempotent-identities", len(exact))


# -- catalogs for bicrossed products ----------------------------------------------

def crossed_product_irreps(mp: MatchedPair, coc: CocyclePair | None = None,
                           config: ToolConfig = DEFAULT_CONFIG) -> IrrepCatalog:
    """Irreducibles of k^Gamma #_sigma kF via F-orbits on Gamma and twisted
    stabilizer algebras; degree of the entry at (orbit of s, rho) is
    [F : F^s] * deg rho.  Cross-checked against direct decomposition of the
    full algebra when its dimension is within the cap."""
    nF, nG = mp.nF, mp.nG
    order = coc.order if coc is not None else 1
    sigma = (coc.sigma if coc is not None
             else np.zeros((nG, nF, nF), dtype=np.int64))
    cat = IrrepCatalog(f"irreps[k^Gamma#kF of {mp.fact.group.name}]", nF * nG,
                       seeds=(config.seed, config.seed + 1))

    seen = np.zeros(nG, dtype=bool)
    Fgroup = mp.Fgroup
    for s in range(nG):
        if seen[s]:
            continue
        # one sweep is the whole orbit: (s <| x) <| y = s <| (xy)
        orbit = sorted(set(int(mp.act_r[s, x]) for x in range(nF)))
        for t in orbit:
            seen[t] = True
        stab = tuple(x for x in range(nF) if int(mp.act_r[s, x]) == s)
        Sgrp, to_parent = Fgroup.subgroup_to_group(stab, name=f"F^{s}")
        beta = np.zeros((len(stab), len(stab)), dtype=np.int64)
        for a, xa in enumerate(to_parent):
            for b, xb in enumerate(to_parent):
                beta[a, b] = sigma[s, xa, xb] % order if order > 1 else 0
        tga = twisted_group_algebra(Sgrp, beta if order > 1 else None, order,
                                    name=f"k_sigma[F^{s}]")
        sub = decompose_semisimple(tga, config)
        if not sub.ok:
            cat.failures.extend(f"orbit of {s}: {m}" for m in sub.failures)
            return cat
        index = nF // len(stab)
        if index != len(orbit):
            cat.fail(f"orbit size {len(orbit)} != index of the stabilizer {index}")
        slabel = format_cycles(mp.fact.group.elements[mp.Gidx[s]])
        for e in sub.entries:
            cat.entries.append(IrrepEntry(
                label=f"(orbit {slabel}, {e.label})",
                degree=index * e.degree))
    if sum(e.degree ** 2 for e in cat.entries) != nF * nG:
        cat.fail(f"sum of squared degrees != {nF * nG}")
    cat.add("sum-of-squares")
    bad = [e.degree for e in cat.entries if nF % e.degree != 0]
    if bad:
        cat.fail(f"degrees {bad} do not divide |F| = {nF}")
    cat.add("degree-divides-F", len(cat.entries))

    if nF * nG <= config.direct_decompose_cap:
        H = build_bicrossed_product(mp, coc, check=False)
        direct = decompose_semisimple(algebra_from_hopf(H), config,
                                      characters=False)
        if not direct.ok:
            cat.failures.extend(f"direct: {m}" for m in direct.failures)
        elif direct.degrees() != cat.degrees():
            cat.fail(f"induced degrees {list(cat.degrees())} != direct "
                     f"decomposition {list(direct.degrees())}")
        else:
            cat.add("direct-cross-check")
    return cat


# -- catalogs for (twisted) doubles of groups --------------------------------------

def double_irreps(G: FiniteGroup, omega: OmegaCocycle | None = None,
                  config: ToolConfig = DEFAULT_CONFIG) -> IrrepCatalog:
    """Irreducibles of the (twisted) double of G: for each conjugacy class
    representative g, the irreducibles pi of the beta_g-twisted group algebra
    of the centralizer C_G(g), with degree [G : C_G(g)] * deg pi.  Characters
    are kept on the centralizer elements for downstream object selection."""
    if omega is not None:
        problems = omega.validate()
        if problems:
            raise ValueError(f"invalid 3-cocycle: " + "; ".join(problems))
    cat = IrrepCatalog(f"double-irreps[{G.name}]", G.order ** 2,
                       seeds=(config.seed, config.seed + 1))
    for cls in G.conjugacy_classes:
        g = cls[0]
        if omega is not None and not omega.is_trivial:
            cz, beta = beta_from_omega(omega, g)
            order = omega.order
        else:
            cz, beta, order = G.centralizer(g), None, 1
        Cgrp, to_parent = G.subgroup_to_group(cz, name=f"C({format_cycles(G.elements[g])})")
        tga = twisted_group_algebra(Cgrp, beta, order,
                                    name=f"k_beta[C_{G.name}({g})]")
        sub = decompose_semisimple(tga, config)
        if not sub.ok:
            cat.failures.extend(f"class of {g}: {m}" for m in sub.failures)
            return cat
        index = G.order // len(cz)
        glabel = format_cycles(G.elements[g])
        for e in sub.entries:
            cat.entries.append(IrrepEntry(
                label=f"({glabel}, {e.label})",
                degree=index * e.degree,
                character=e.character,
                exact_character=e.exact_character,
                class_rep=g,
                domain=tuple(int(t) for t in to_parent)))
    if sum(e.degree ** 2 for e in cat.entries) != G.order ** 2:
        cat.fail(f"sum of squared degrees != |G|^2 = {G.order ** 2}")
    cat.add("sum-of-squares")
    return cat
