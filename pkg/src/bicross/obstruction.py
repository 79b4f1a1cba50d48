"""Verdicts on the existence of quasitriangular structures for bicrossed
products built from an exact factorization G = F.Gamma.

For H = k^Gamma # kF the pipeline runs an ordered sequence of recorded,
individually re-executable steps:

0. instance validation — the factorization must be proper (both factors
   nontrivial); simplicity / almost-simplicity of G is recorded because it
   forces the outcome of the next step.
1. equal-order survey — a quasitriangular structure on H realizes Rep H as
   a fusion subcategory of dimension |G| inside the modules of the
   (twisted) double of G, and those are classified by triples (K1, K2, B)
   with |K1| = |K2|.
2. per-triple divisibility — every simple H-module has dimension dividing
   |F|, so a surviving triple whose category contains a simple object of
   dimension not dividing |F| is eliminated.
3. closing arguments, run when the trivial triple is the only equal-order
   candidate (Rep H would then be equivalent to Rep G, forcing H to be a
   twist of the group algebra kG):
   - quotient obstruction: H has the Hopf quotient H ->> kF, twisting
     preserves quotients, and every Hopf quotient of kG is k[G/N]; so G
     must have a normal subgroup of index |F|;
   - degree divisibility: a twist leaves the simple-module dimensions of
     kG unchanged, so every irreducible degree of G — and, by lying-over,
     of its socle — must divide |F|.

The verdict is NoQT exactly when a contradiction fires: either every
candidate triple is eliminated, or the trivial triple is the unique
candidate and a closing argument rules it out.  Inconclusive never claims
that a quasitriangular structure exists; deciding existence would require
an R-matrix search, which this tool does not perform.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .config import DEFAULT_CONFIG, ToolConfig
from .factorization import ExactFactorization
from .fusion import Triple, enumerate_triples, equal_order_filter, \
    triple_to_objects
from .groups import FiniteGroup
from .hopf import group_algebra
from .reps import IrrepCatalog, OmegaCocycle, algebra_from_hopf, \
    decompose_semisimple, double_irreps

VERDICT_NO_QT = "NoQT"
VERDICT_INCONCLUSIVE = "Inconclusive"
VERDICT_OUT_OF_SCOPE = "OutOfScope"


@dataclass(frozen=True)
class StepRecord:
    """One pipeline step: the operation it ran, with what arguments, whether
    its criterion fired, and the evidence.  The rationale states the
    mathematical justification in full, so the record stands alone."""
    name: str
    inputs: dict
    succeeded: bool
    rationale: str
    witnesses: dict

    def to_json_obj(self) -> dict:
        return {"name": self.name, "inputs": self.inputs,
                "outcome": self.succeeded, "rationale": self.rationale,
                "witnesses": self.witnesses}

    def summary(self) -> str:
        return f"[{'fired' if self.succeeded else 'no'}] {self.name}"


@dataclass
class ObstructionReport:
    verdict: str
    instance: dict
    trace: list[StepRecord] = field(default_factory=list)

    def add(self, rec: StepRecord) -> StepRecord:
        self.trace.append(rec)
        return rec

    def to_json_obj(self) -> dict:
        return {"verdict": self.verdict, "instance": self.instance,
                "steps": [r.to_json_obj() for r in self.trace]}

    def to_text(self) -> str:
        lines = [f"verdict: {self.verdict}"]
        inst = ", ".join(f"{k}={v}" for k, v in self.instance.items())
        lines.append(f"instance: {inst}")
        for i, rec in enumerate(self.trace, start=1):
            lines.append(f"step {i}: {rec.summary()}")
            for k, v in rec.inputs.items():
                lines.append(f"    in  {k} = {v}")
            for k, v in rec.witnesses.items():
                lines.append(f"    out {k} = {v}")
            lines.append(f"    why {rec.rationale}")
        if self.verdict == VERDICT_INCONCLUSIVE:
            lines.append("note: the recorded checks do not rule out a "
                         "quasitriangular structure; no existence claim "
                         "is made.")
        return "\n".join(lines)


def _trivial_triple(t: Triple) -> bool:
    return t.K1 == (0,) and t.K2 == (0,)


def check_equal_order_triples(G: FiniteGroup, omega: OmegaCocycle | None,
                              f_order: int,
                              triples: list[Triple] | None = None,
                              ) -> StepRecord:
    """Fires when the trivial triple is the only one with |K1| = |K2|."""
    if triples is None:
        triples = enumerate_triples(G, omega)
    survivors = equal_order_filter(triples)
    only_trivial = len(survivors) == 1 and _trivial_triple(survivors[0])
    return StepRecord(
        name="equal-order-triples",
        inputs={"group": G.name, "f_order": f_order,
                "omega": "trivial" if omega is None or omega.is_trivial
                else f"order-{omega.order} cocycle"},
        succeeded=only_trivial,
        rationale=(
            "A quasitriangular structure on H = k^Gamma # kF realizes Rep H "
            "as a fusion subcategory of dimension |G| inside the modules of "
            "the double of G; such subcategories correspond to triples "
            "(K1, K2, B) of centralizing normal subgroups with an invariant "
            "pairing, and have dimension |G| exactly when |K1| = |K2|.  If "
            "only the trivial triple qualifies, Rep H would have to be "
            "equivalent to Rep G."),
        witnesses={"survivors": [t.describe() for t in survivors],
                   "survivor_count": len(survivors),
                   "only_trivial": only_trivial})


def check_triple_divisibility(G: FiniteGroup, omega: OmegaCocycle | None,
                              triple: Triple, f_order: int,
                              catalog: IrrepCatalog | None = None,
                              config: ToolConfig = DEFAULT_CONFIG,
                              ) -> StepRecord:
    """Fires (eliminating the triple) when some simple object of the triple
    category has dimension not dividing |F|."""
    if catalog is None:
        catalog = double_irreps(G, omega, config=config)
    sub = triple_to_objects(G, omega, triple, catalog, config=config)
    degree = {e.label: e.degree for e in catalog.entries}
    violations = sorted((degree[lab], lab) for lab in sub.objectLabels
                        if f_order % degree[lab] != 0)
    return StepRecord(
        name="triple-divisibility",
        inputs={"group": G.name, "triple": triple.describe(),
                "f_order": f_order},
        succeeded=bool(violations),
        rationale=(
            "Simple modules of the crossed product H = k^Gamma # kF are "
            "induced from stabilizer subgroups of F, so their dimensions "
            "divide |F|.  A fusion equivalence between Rep H and the triple "
            "category would force every simple dimension of the latter to "
            "divide |F|; a violating object eliminates the triple."),
        witnesses={"object_dimensions":
                   sorted(degree[lab] for lab in sub.objectLabels),
                   "violations": [f"{lab} has dimension {d}, not a divisor "
                                  f"of {f_order}" for d, lab in violations],
                   "eliminated": bool(violations)})


def check_quotient_obstruction(G: FiniteGroup, f_order: int) -> StepRecord:
    """Fires when G has no normal subgroup of index |F|."""
    witness = G.has_normal_subgroup_of_index(f_order)
    return StepRecord(
        name="quotient-obstruction",
        inputs={"group": G.name, "f_order": f_order},
        succeeded=witness is None,
        rationale=(
            "H = k^Gamma # kF surjects onto kF as a Hopf algebra.  Were H a "
            "twist of kG, the twisted quotient would persist, and every "
            "Hopf-algebra quotient of a group algebra kG is k[G/N] for a "
            "normal subgroup N; hence G would need a normal subgroup of "
            "index |F|."),
        witnesses={"normal_subgroup_indices":
                   sorted({G.order // len(N) for N in G.normal_subgroups}),
                   "index_sought": f_order,
                   "witness_subgroup_order":
                   None if witness is None else len(witness)})


def check_degree_divisibility(G: FiniteGroup, socle, f_order: int,
                              config: ToolConfig = DEFAULT_CONFIG,
                              ) -> StepRecord:
    """Fires when some irreducible degree of G, or of the socle subgroup,
    fails to divide |F|."""
    g_cat = decompose_semisimple(algebra_from_hopf(group_algebra(G)),
                                 config=config, characters=False)
    if not g_cat.ok:
        raise RuntimeError(f"decomposition of k[{G.name}] failed: "
                           f"{g_cat.failures}")
    g_degrees = g_cat.degrees()
    socle = tuple(sorted(socle))
    socle_degrees: tuple | None = None
    if 1 < len(socle) < G.order:
        S, _ = G.subgroup_to_group(socle, f"socle({G.name})")
        s_cat = decompose_semisimple(algebra_from_hopf(group_algebra(S)),
                                     config=config, characters=False)
        if not s_cat.ok:
            raise RuntimeError(f"decomposition of k[{S.name}] failed: "
                               f"{s_cat.failures}")
        socle_degrees = s_cat.degrees()
    violations = [f"irreducible degree {d} of {G.name} does not divide "
                  f"{f_order}" for d in g_degrees if f_order % d != 0]
    if socle_degrees is not None:
        violations += [f"irreducible degree {d} of the socle does not "
                       f"divide {f_order}"
                       for d in socle_degrees if f_order % d != 0]
    return StepRecord(
        name="degree-divisibility",
        inputs={"group": G.name, "socle_order": len(socle),
                "f_order": f_order},
        succeeded=bool(violations),
        rationale=(
            "Simple H-module dimensions divide |F|, and a twist leaves the "
            "simple-module dimensions of kG unchanged; so were H a twist of "
            "kG, every irreducible degree of G would divide |F|.  Degrees "
            "of a normal subgroup divide degrees of simple G-modules lying "
            "over them, so the socle's degrees must divide |F| too."),
        witnesses={"group_degrees": list(g_degrees),
                   "socle_degrees":
                   None if socle_degrees is None else list(socle_degrees),
                   "violations": violations})


def run_pipeline(G: FiniteGroup, F, Gamma,
                 omega: OmegaCocycle | None = None,
                 config: ToolConfig = DEFAULT_CONFIG,
                 catalog: IrrepCatalog | None = None) -> ObstructionReport:
    """Run the full obstruction pipeline on H = k^Gamma # kF.

    F and Gamma are subgroups of G given as sorted element-index tuples;
    they must form an exact factorization (validated, raising ValueError
    otherwise).  A non-proper factorization yields verdict OutOfScope.
    The verdict is NoQT only when a recorded contradiction fires; it is
    never a claim that a quasitriangular structure exists.

    catalog, if given, must be double_irreps(G, omega) computed with the
    same group and cocycle; surveys over many factorizations of one group
    pass it to avoid recomputation."""
    fact = ExactFactorization(G, F, Gamma)
    f_order = len(fact.F)
    omega_desc = ("trivial" if omega is None or omega.is_trivial
                  else f"order-{omega.order} cocycle")
    report = ObstructionReport(
        verdict=VERDICT_INCONCLUSIVE,
        instance={"group": G.name, "group_order": G.order,
                  "f_order": f_order, "gamma_order": len(fact.Gamma),
                  "omega": omega_desc})

    socle = G.socle
    simple, almost = G.is_simple, G.is_almost_simple
    report.add(StepRecord(
        name="instance-validation",
        inputs={"group": G.name, "f_order": f_order,
                "gamma_order": len(fact.Gamma), "omega": omega_desc},
        succeeded=fact.is_proper,
        rationale=(
            "Only proper factorizations (both factors nontrivial) are in "
            "scope: otherwise H is a group algebra or a function algebra "
            "and the question changes character.  Simplicity or "
            "almost-simplicity forces every nontrivial normal subgroup to "
            "contain the nonabelian socle, so no pair of nontrivial "
            "centralizing normal subgroups can exist."),
        witnesses={"proper": fact.is_proper, "simple": simple,
                   "almost_simple": almost, "socle_order": len(socle)}))
    if not fact.is_proper:
        report.verdict = VERDICT_OUT_OF_SCOPE
        return report

    triples = enumerate_triples(G, omega)
    survivors = equal_order_filter(triples)
    equal_order = report.add(check_equal_order_triples(
        G, omega, f_order, triples=triples))

    if catalog is None:
        catalog = double_irreps(G, omega, config=config)
    remaining: list[Triple] = []
    for t in survivors:
        rec = report.add(check_triple_divisibility(
            G, omega, t, f_order, catalog=catalog, config=config))
        if not rec.succeeded:
            remaining.append(t)

    closing_fired = False
    if equal_order.succeeded:
        quotient = report.add(check_quotient_obstruction(G, f_order))
        degrees = report.add(check_degree_divisibility(
            G, socle, f_order, config=config))
        closing_fired = quotient.succeeded or degrees.succeeded

    all_eliminated = not remaining
    fired = all_eliminated or closing_fired
    report.add(StepRecord(
        name="contradiction",
        inputs={"group": G.name, "f_order": f_order},
        succeeded=fired,
        rationale=(
            "A quasitriangular structure would require some surviving "
            "candidate category for Rep H.  The contradiction fires when "
            "every candidate triple has been eliminated, or when the "
            "trivial triple is the unique candidate and a closing argument "
            "rules out Rep H being Rep G."),
        witnesses={"candidates_remaining": [t.describe() for t in remaining],
                   "all_candidates_eliminated": all_eliminated,
                   "closing_argument_fired": closing_fired}))
    report.verdict = VERDICT_NO_QT if fired else VERDICT_INCONCLUSIVE
    return report
