"""Exact factorizations G = F.Gamma and their matched-pair actions.

Every g in G writes uniquely as g = x * s with x in F, s in Gamma.  Moving an
F-element past a Gamma-element defines the two actions

    s * x  =  (s |> x) * (s <| x),      s |> x in F,   s <| x in Gamma,

stored as position tables ``act_l`` (the F-part) and ``act_r`` (the
Gamma-part).  A pair of root-of-unity valued cocycles (sigma on F x F indexed
by Gamma, tau on Gamma x Gamma indexed by F) deforms the multiplication and
comultiplication of the associated bicrossed-product Hopf algebra; the
validator checks the two 2-cocycle laws, the joint compatibility law, and
normalization, all as integer exponent arithmetic.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .groups import FiniteGroup


@dataclass(frozen=True)
class ExactFactorization:
    group: FiniteGroup
    F: tuple       # sorted parent element indices
    Gamma: tuple   # sorted parent element indices

    def __post_init__(self):
        G = self.group
        object.__setattr__(self, "F", tuple(sorted(self.F)))
        object.__setattr__(self, "Gamma", tuple(sorted(self.Gamma)))
        if not G.is_subgroup(self.F):
            raise ValueError("F is not a subgroup")
        if not G.is_subgroup(self.Gamma):
            raise ValueError("Gamma is not a subgroup")
        if set(self.F) & set(self.Gamma) != {0}:
            raise ValueError("F and Gamma intersect nontrivially")
        if len(self.F) * len(self.Gamma) != G.order:
            raise ValueError(
                f"|F| * |Gamma| = {len(self.F)}*{len(self.Gamma)} != |G| = {G.order}")

    @property
    def is_proper(self) -> bool:
        return 1 < len(self.F) < self.group.order and 1 < len(self.Gamma) < self.group.order

    def flipped(self) -> "ExactFactorization":
        """The same factorization read as G = Gamma.F."""
        return ExactFactorization(self.group, self.Gamma, self.F)

    def describe(self) -> str:
        return (f"{self.group.name} = F.Gamma with |F|={len(self.F)}, "
                f"|Gamma|={len(self.Gamma)}")


def find_exact_factorizations(G: FiniteGroup, proper: bool = True) -> list[ExactFactorization]:
    subs = G.all_subgroups
    out = []
    for A in subs:
        for B in subs:
            if len(A) * len(B) != G.order:
                continue
            if set(A) & set(B) != {0}:
                continue
            f = ExactFactorization(G, A, B)
            if not proper or f.is_proper:
                out.append(f)
    return out


class MatchedPair:
    """Position tables for the actions induced by an exact factorization.

    Positions index the sorted member lists ``Fidx`` / ``Gidx``; the parent
    group is only consulted through precomputed tables, so downstream code
    never mixes up parent indices and positions.
    """

    def __init__(self, fact: ExactFactorization):
        self.fact = fact
        G = fact.group
        self.Fidx = np.array(fact.F, dtype=np.int32)
        self.Gidx = np.array(fact.Gamma, dtype=np.int32)
        self.nF = len(self.Fidx)
        self.nG = len(self.Gidx)
        posF = {int(p): i for i, p in enumerate(self.Fidx)}
        posG = {int(p): i for i, p in enumerate(self.Gidx)}

        # multiplication and inversion within each factor, by position
        self.mulF = np.array([[posF[int(G.cayley[a, b])] for b in self.Fidx]
                              for a in self.Fidx], dtype=np.int32)
        self.mulG = np.array([[posG[int(G.cayley[a, b])] for b in self.Gidx]
                              for a in self.Gidx], dtype=np.int32)
        self.invF = np.array([posF[int(G.inv[a])] for a in self.Fidx], dtype=np.int32)
        self.invG = np.array([posG[int(G.inv[a])] for a in self.Gidx], dtype=np.int32)

        # unique decomposition g = x*s: parent index -> (F position, Gamma position)
        self.decomp = np.empty((G.order, 2), dtype=np.int32)
        seen = np.zeros(G.order, dtype=bool)
        for i, x in enumerate(self.Fidx):
            for j, s in enumerate(self.Gidx):
                g = int(G.cayley[x, s])
                if seen[g]:
                    raise ValueError("decomposition not unique; factorization invalid")
                seen[g] = True
                self.decomp[g] = (i, j)
        assert seen.all()

        # actions: s * x = (s |> x) * (s <| x)
        self.act_l = np.empty((self.nG, self.nF), dtype=np.int32)
        self.act_r = np.empty((self.nG, self.nF), dtype=np.int32)
        for j, s in enumerate(self.Gidx):
            prod = G.cayley[s, self.Fidx]          # s*x over F positions
            self.act_l[j] = self.decomp[prod, 0]
            self.act_r[j] = self.decomp[prod, 1]

        self.Fgroup, f_to_parent = G.subgroup_to_group(fact.F, f"{G.name}.F")
        self.Ggroup, g_to_parent = G.subgroup_to_group(fact.Gamma, f"{G.name}.Gamma")
        assert np.array_equal(f_to_parent, self.Fidx)
        assert np.array_equal(g_to_parent, self.Gidx)

    def describe(self) -> str:
        return self.fact.describe()


def derive_matched_pair(fact: ExactFactorization) -> MatchedPair:
    return MatchedPair(fact)


def verify_matched_pair(mp: MatchedPair) -> list[str]:
    """All matched-pair laws, exhaustively.  Returns human-readable violations
    (empty when the tables are consistent)."""
    G = mp.fact.group
    bad = []
    nF, nG = mp.nF, mp.nG
    idF = int(np.where(mp.Fidx == 0)[0][0])
    idG = int(np.where(mp.Gidx == 0)[0][0])

    # product law: s*x == (s|>x)*(s<|x) in the parent group
    for j in range(nG):
        for i in range(nF):
            lhs = G.cayley[mp.Gidx[j], mp.Fidx[i]]
            rhs = G.cayley[mp.Fidx[mp.act_l[j, i]], mp.Gidx[mp.act_r[j, i]]]
            if lhs != rhs:
                bad.append(f"product law fails at s={j}, x={i}")

    # identity laws
    if not np.array_equal(mp.act_l[idG], np.arange(nF)):
        bad.append("e |> x != x for some x")
    if not (mp.act_r[idG] == idG).all():
        bad.append("e <| x != e for some x")
    if not (mp.act_l[:, idF] == idF).all():
        bad.append("s |> e != e for some s")
    if not np.array_equal(mp.act_r[:, idF], np.arange(nG)):
        bad.append("s <| e != s for some s")

    # each s acts bijectively on F, each x acts bijectively on Gamma
    for j in range(nG):
        if len(set(mp.act_l[j].tolist())) != nF:
            bad.append(f"s={j} does not permute F")
    for i in range(nF):
        if len(set(mp.act_r[:, i].tolist())) != nG:
            bad.append(f"x={i} does not permute Gamma")

    # compatibility: s |> (xy) = (s|>x) * ((s<|x)|>y)  and  s <| (xy) = (s<|x) <| y
    for j in range(nG):
        for i in range(nF):
            for k in range(nF):
                xy = mp.mulF[i, k]
                sx_l, sx_r = mp.act_l[j, i], mp.act_r[j, i]
                if mp.act_l[j, xy] != mp.mulF[sx_l, mp.act_l[sx_r, k]]:
                    bad.append(f"left action fails composition at s={j}, x={i}, y={k}")
                if mp.act_r[j, xy] != mp.act_r[sx_r, k]:
                    bad.append(f"right action fails composition at s={j}, x={i}, y={k}")

    # compatibility: (ts) |> x = t |> (s|>x)  and  (ts) <| x = (t <| (s|>x)) * (s<|x)
    for j in range(nG):
        for jj in range(nG):
            ts = mp.mulG[j, jj]
            for i in range(nF):
                sx = mp.act_l[jj, i]
                if mp.act_l[ts, i] != mp.act_l[j, sx]:
                    bad.append(f"left action fails at t={j}, s={jj}, x={i}")
                if mp.act_r[ts, i] != mp.mulG[mp.act_r[j, sx], mp.act_r[jj, i]]:
                    bad.append(f"right action fails at t={j}, s={jj}, x={i}")
    return bad


@dataclass
class CocyclePair:
    """Root-of-unity valued cocycle data as integer exponents modulo ``order``.

    ``sigma[g, x, y]`` is the exponent of sigma_g(x, y) (g a Gamma position,
    x, y F positions); ``tau[x, s, t]`` the exponent of tau_x(s, t)."""

    order: int
    sigma: np.ndarray
    tau: np.ndarray

    @staticmethod
    def trivial(mp: MatchedPair, order: int = 1) -> "CocyclePair":
        return CocyclePair(order,
                           np.zeros((mp.nG, mp.nF, mp.nF), dtype=np.int64),
                           np.zeros((mp.nF, mp.nG, mp.nG), dtype=np.int64))

    @property
    def is_trivial(self) -> bool:
        return not self.sigma.any() and not self.tau.any()


def validate_cocycles(mp: MatchedPair, coc: CocyclePair) -> list[str]:
    """Normalization, both 2-cocycle laws, and the joint compatibility law
    that makes comultiplication an algebra map.  Exponent arithmetic mod N."""
    bad = []
    N = coc.order
    nF, nG = mp.nF, mp.nG
    idF = int(np.where(mp.Fidx == 0)[0][0])
    idG = int(np.where(mp.Gidx == 0)[0][0])
    sig, tau = coc.sigma % N, coc.tau % N

    if sig.shape != (nG, nF, nF):
        return [f"sigma has shape {sig.shape}, expected {(nG, nF, nF)}"]
    if tau.shape != (nF, nG, nG):
        return [f"tau has shape {tau.shape}, expected {(nF, nG, nG)}"]

    if sig[idG].any():
        bad.append("sigma_e is not identically 1")
    if tau[idF].any():
        bad.append("tau_e is not identically 1")
    if sig[:, idF, :].any() or sig[:, :, idF].any():
        bad.append("sigma_g(x, e) or sigma_g(e, x) differs from 1")
    if tau[:, idG, :].any() or tau[:, :, idG].any():
        bad.append("tau_x(s, e) or tau_x(e, s) differs from 1")

    # sigma 2-cocycle: sigma_{g<|x}(y,z) + sigma_g(x, yz) == sigma_g(x,y) + sigma_g(xy, z)
    for g in range(nG):
        for x in range(nF):
            gx = mp.act_r[g, x]
            for y in range(nF):
                xy = mp.mulF[x, y]
                for z in range(nF):
                    lhs = (sig[gx, y, z] + sig[g, x, mp.mulF[y, z]]) % N
                    rhs = (sig[g, x, y] + sig[g, xy, z]) % N
                    if lhs != rhs:
                        bad.append(f"sigma cocycle law fails at g={g}, x={x}, y={y}, z={z}")

    # tau 2-cocycle: tau_x(uv, t) + tau_{t|>x}(u,v) == tau_x(u, vt) + tau_x(v, t)
    for x in range(nF):
        for t in range(nG):
            tx = mp.act_l[t, x]
            for u in range(nG):
                for v in range(nG):
                    lhs = (tau[x, mp.mulG[u, v], t] + tau[tx, u, v]) % N
                    rhs = (tau[x, u, mp.mulG[v, t]] + tau[x, v, t]) % N
                    if lhs != rhs:
                        bad.append(f"tau cocycle law fails at x={x}, t={t}, u={u}, v={v}")

    # joint law: sigma_{ts}(x,y) + tau_{xy}(t,s)
    #   == tau_x(t,s) + tau_y(t<|(s|>x), s<|x) + sigma_t(s|>x, (s<|x)|>y) + sigma_s(x,y)
    for t in range(nG):
        for s in range(nG):
            ts = mp.mulG[t, s]
            for x in range(nF):
                sx_l, sx_r = mp.act_l[s, x], mp.act_r[s, x]
                t_sx = mp.act_r[t, sx_l]
                for y in range(nF):
                    lhs = (sig[ts, x, y] + tau[mp.mulF[x, y], t, s]) % N
                    rhs = (tau[x, t, s] + tau[y, t_sx, sx_r]
                           + sig[t, sx_l, mp.act_l[sx_r, y]] + sig[s, x, y]) % N
                    if lhs != rhs:
                        bad.append(f"joint law fails at t={t}, s={s}, x={x}, y={y}")
    return bad
