"""Command-line front end.

Subcommands: ``factorize``, ``build``, ``irreps``, ``double``, ``fusion``,
``obstruct``.  Groups and cocycles come from the text formats in
:mod:`bicross.io`; subgroups are selected on the command line as
comma-separated generator lists in cycle notation (``--f "(1 2),(3 4)"``).
Every run header records the tool version, the seed, and a sha256 digest
of each input file; ``--format machine`` emits one JSON document with the
same content and exact scalars.  Exit status is 0 exactly when no
validation failure occurred.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import replace

import numpy as np

from . import __version__, io
from .config import DEFAULT_CONFIG
from .factorization import (CocyclePair, ExactFactorization,
                            derive_matched_pair, find_exact_factorizations,
                            validate_cocycles)
from .fusion import (enumerate_triples, fusion_multiplicity_table,
                     oracle_fixed_points, triple_to_objects)
from .hopf import build_bicrossed_product, verify_hopf_axioms
from .obstruction import run_pipeline
from .perm import format_cycles, parse_cycles
from .reps import crossed_product_irreps, double_irreps

ORACLE_ORDER_CAP = 24


class CliError(Exception):
    """A validation failure that should become a nonzero exit status."""


def _config(args):
    cfg = DEFAULT_CONFIG
    if getattr(args, "seed", None) is not None:
        cfg = replace(cfg, seed=args.seed)
    if getattr(args, "cap", None) is not None:
        cfg = replace(cfg, element_cap=args.cap)
    return cfg


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}") from None


class Run:
    """Collects header data, text lines, and the machine document."""

    def __init__(self, command: str, args):
        self.args = args
        self.inputs: list[tuple[str, str]] = []
        self.lines: list[str] = []
        self.doc: dict = {"command": command, "version": __version__,
                          "seed": _config(args).seed, "inputs": []}

    def load(self, path: str) -> str:
        text = _read(path)
        self.inputs.append((path, io.sha256_hex(text)))
        self.doc["inputs"].append({"path": path,
                                   "sha256": io.sha256_hex(text)})
        return text

    def header(self) -> list[str]:
        head = [f"# bicross {__version__}", f"# seed {self.doc['seed']}"]
        head += [f"# input {path} sha256 {digest}"
                 for path, digest in self.inputs]
        return head

    def emit(self) -> None:
        if self.args.format == "machine":
            out = json.dumps(self.doc, indent=1, sort_keys=True) + "\n"
        else:
            out = "\n".join(self.header() + self.lines) + "\n"
        if self.args.out:
            with open(self.args.out, "w", encoding="utf-8") as fh:
                fh.write(out)
        else:
            sys.stdout.write(out)


def _load_group(run: Run, args):
    return io.parse_group(run.load(args.group_file),
                          cap=getattr(args, "cap", None))


def _resolve_subgroup(G, spec: str, flag: str):
    gens = []
    for part in spec.split(","):
        part = part.strip()
        if part in ("", "e", "()"):
            continue
        try:
            p = parse_cycles(part, G.degree)
        except Exception as exc:
            raise CliError(f"{flag}: bad cycle notation {part!r}: {exc}") \
                from None
        if p not in G.index:
            raise CliError(f"{flag}: permutation {part} is not an element "
                           f"of {G.name}")
        gens.append(G.index[p])
    return G.subgroup(gens)


def _generators(G, sub) -> str:
    gens, have = [], {0}
    for x in sub:
        if x not in have:
            gens.append(x)
            have = set(G.subgroup(gens))
            if len(have) == len(sub):
                break
    return ", ".join(format_cycles(G.elements[x]) for x in gens) or "()"


def _load_omega(run: Run, args, G):
    if not getattr(args, "omega", None):
        return None
    return io.parse_omega(run.load(args.omega), G)


def _load_cocycles(run: Run, args, mp):
    if not getattr(args, "sigma", None) and not getattr(args, "tau", None):
        return None
    parts = {}
    for flag in ("sigma", "tau"):
        path = getattr(args, flag, None)
        if path:
            kind, order, rows = io.parse_cocycle(run.load(path))
            if kind != flag:
                raise CliError(f"--{flag} file declares 'cocycle {kind}'")
            parts[flag] = (order, rows)
    order = 1
    for o, _ in parts.values():
        order = order * o // math.gcd(order, o)
    sigma_shape = (mp.nG, mp.nF, mp.nF)
    tau_shape = (mp.nF, mp.nG, mp.nG)
    sigma = np.zeros(sigma_shape, dtype=np.int64)
    tau = np.zeros(tau_shape, dtype=np.int64)
    if "sigma" in parts:
        o, rows = parts["sigma"]
        sigma = io.cocycle_table(sigma_shape, o, rows) * (order // o)
    if "tau" in parts:
        o, rows = parts["tau"]
        tau = io.cocycle_table(tau_shape, o, rows) * (order // o)
    coc = CocyclePair(order, sigma, tau)
    problems = validate_cocycles(mp, coc)
    if problems:
        raise CliError("cocycle validation failed: "
                       + "; ".join(problems[:5]))
    return coc


def _matched_pair(G, args):
    F = _resolve_subgroup(G, args.f, "--f")
    Gamma = _resolve_subgroup(G, args.gamma, "--gamma")
    try:
        fact = ExactFactorization(G, F, Gamma)
    except ValueError as exc:
        raise CliError(f"not an exact factorization: {exc}") from None
    return derive_matched_pair(fact)


# ---------------------------------------------------------------------------
# subcommands


def cmd_factorize(args) -> int:
    run = Run("factorize", args)
    G = _load_group(run, args)
    facts = find_exact_factorizations(G, proper=args.proper)
    run.lines.append(f"group {G.name} of order {G.order}: "
                     f"{len(facts)} exact factorizations"
                     + (" (proper only)" if args.proper else ""))
    payload = []
    for n, fact in enumerate(facts, start=1):
        run.lines += [
            f"factorization {n}: |F| = {len(fact.F)}, "
            f"|Gamma| = {len(fact.Gamma)}",
            f"  F generators: {_generators(G, fact.F)}",
            f"  Gamma generators: {_generators(G, fact.Gamma)}"]
        payload.append({"f_order": len(fact.F),
                        "gamma_order": len(fact.Gamma),
                        "f_generators": _generators(G, fact.F),
                        "gamma_generators": _generators(G, fact.Gamma)})
    run.doc["factorizations"] = payload
    run.emit()
    return 0


def cmd_build(args) -> int:
    run = Run("build", args)
    G = _load_group(run, args)
    mp = _matched_pair(G, args)
    coc = _load_cocycles(run, args, mp)
    H = build_bicrossed_product(mp, coc)
    report = verify_hopf_axioms(H, config=_config(args))
    run.lines.append(f"hopf {H.name}: dimension {H.dim}, scalars in the "
                     f"cyclotomic field of order {H.order}")
    run.lines.append(report.summary())
    run.lines += [f"FAIL {msg}" for msg in report.failures]
    run.doc["hopf"] = io.hopf_json(H)
    run.doc["axioms"] = {"ok": report.ok, "checks": dict(report.checks),
                         "failures": list(report.failures)}
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(io.write_hopf(H))
        run.lines.append(f"dump written to {args.out}")
        args.out = None
    run.emit()
    return 0 if report.ok else 1


def cmd_irreps(args) -> int:
    run = Run("irreps", args)
    G = _load_group(run, args)
    mp = _matched_pair(G, args)
    coc = _load_cocycles(run, args, mp)
    cat = crossed_product_irreps(mp, coc, config=_config(args))
    run.lines.append(cat.summary())
    for e in cat.entries:
        run.lines.append(f"  degree {e.degree}  {e.label}")
    total = sum(e.degree ** 2 for e in cat.entries)
    divides = all(mp.nF % e.degree == 0 for e in cat.entries)
    run.lines.append(f"sum of squared degrees: {total}")
    run.lines.append(f"every degree divides |F| = {mp.nF}: "
                     f"{'yes' if divides else 'NO'}")
    run.lines += [f"FAIL {m}" for m in cat.failures]
    run.doc["irreps"] = [{"label": e.label, "degree": e.degree}
                         for e in cat.entries]
    run.doc["checks"] = dict(cat.checks)
    run.doc["failures"] = list(cat.failures)
    run.emit()
    return 0 if cat.ok else 1


def cmd_double(args) -> int:
    run = Run("double", args)
    G = _load_group(run, args)
    omega = _load_omega(run, args, G)
    cat = double_irreps(G, omega, config=_config(args))
    run.lines.append(cat.summary())
    for e in cat.entries:
        run.lines.append(f"  degree {e.degree}  {e.label}")
    run.lines.append(f"sum of squared degrees: "
                     f"{sum(e.degree ** 2 for e in cat.entries)} "
                     f"(|G|^2 = {G.order ** 2})")
    run.lines += [f"FAIL {m}" for m in cat.failures]
    run.doc["irreps"] = [{"label": e.label, "degree": e.degree}
                         for e in cat.entries]
    run.doc["failures"] = list(cat.failures)
    run.emit()
    return 0 if cat.ok else 1


def cmd_fusion(args) -> int:
    run = Run("fusion", args)
    G = _load_group(run, args)
    omega = _load_omega(run, args, G)
    cfg = _config(args)
    triples = enumerate_triples(G, omega)
    catalog = double_irreps(G, omega, config=cfg)
    run.lines.append(f"{len(triples)} fusion subcategories for the double "
                     f"of {G.name}"
                     + ("" if omega is None else " (twisted)"))
    payload = []
    for n, t in enumerate(triples, start=1):
        sub = triple_to_objects(G, omega, t, catalog, config=cfg)
        labels = sorted(sub.objectLabels)
        run.lines += [
            f"triple {n}: dimension {t.dimension}",
            f"  K1: order {len(t.K1)}, generators {_generators(G, t.K1)}",
            f"  K2: order {len(t.K2)}, generators {_generators(G, t.K2)}",
            f"  B: order {t.B.order}, exponents {list(t.B.exps)}",
            f"  objects: {' | '.join(labels)}"]
        payload.append({"dimension": t.dimension,
                        "k1_order": len(t.K1), "k2_order": len(t.K2),
                        "b_order": t.B.order, "b_exponents": list(t.B.exps),
                        "objects": labels})
    run.doc["triples"] = payload
    ok = True
    if (omega is None or omega.is_trivial) and G.order <= ORACLE_ORDER_CAP:
        table = fusion_multiplicity_table(G, catalog, config=cfg)
        if table.ok:
            fixed = oracle_fixed_points(G, catalog, table, config=cfg)
            triple_sets = sorted(
                tuple(sorted(triple_to_objects(G, omega, t, catalog,
                                               config=cfg).object_indices))
                for t in triples)
            oracle_sets = sorted(tuple(sorted(f.object_indices))
                                 for f in fixed)
            match = oracle_sets == triple_sets
            run.lines.append(
                f"tensor-closure oracle: {len(fixed)} fixed points, "
                f"{'matching' if match else 'MISMATCH with'} the "
                f"classification")
            run.doc["oracle"] = {"fixed_points": len(fixed), "match": match}
            ok = ok and match
        else:
            run.lines += [f"FAIL {m}" for m in table.failures]
            ok = False
    elif omega is not None and not omega.is_trivial:
        run.lines.append("tensor-closure oracle: unavailable for a "
                         "nontrivial 3-cocycle; triples reported without "
                         "independent cross-check")
        run.doc["oracle"] = {"available": False}
    run.emit()
    return 0 if ok else 1


def cmd_obstruct(args) -> int:
    run = Run("obstruct", args)
    G = _load_group(run, args)
    omega = _load_omega(run, args, G)
    F = _resolve_subgroup(G, args.f, "--f")
    Gamma = _resolve_subgroup(G, args.gamma, "--gamma")
    try:
        report = run_pipeline(G, F, Gamma, omega, config=_config(args))
    except ValueError as exc:
        raise CliError(f"not an exact factorization: {exc}") from None
    run.lines += report.to_text().splitlines()
    run.doc["report"] = report.to_json_obj()
    run.emit()
    return 0


# ---------------------------------------------------------------------------
# argument parsing


def _parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="bicross",
        description="Bicrossed-product Hopf algebras from exact group "
                    "factorizations: construction, exact verification, "
                    "double spectra, fusion subcategories, and "
                    "quasitriangularity obstructions.")
    top.add_argument("--version", action="version",
                     version=f"bicross {__version__}")
    sub = top.add_subparsers(dest="command", required=True)

    def common(p, subgroups=False, cocycles=False, omega=False):
        p.add_argument("group_file", help="group definition file")
        p.add_argument("--seed", type=int, default=None,
                       help="seed for the decomposition engine")
        p.add_argument("--cap", type=int, default=None,
                       help="element cap when closing generator sets")
        p.add_argument("--out", default=None,
                       help="write the report here instead of stdout")
        p.add_argument("--format", choices=("text", "machine"),
                       default="text", help="report format")
        if subgroups:
            p.add_argument("--f", required=True,
                           help="generators of F (comma-separated cycles)")
            p.add_argument("--gamma", required=True,
                           help="generators of Gamma")
        if cocycles:
            p.add_argument("--sigma", default=None,
                           help="cocycle file for sigma")
            p.add_argument("--tau", default=None,
                           help="cocycle file for tau")
        if omega:
            p.add_argument("--omega", default=None, help="3-cocycle file")

    p = sub.add_parser("factorize", help="list exact factorizations")
    common(p)
    p.add_argument("--proper", action="store_true",
                   help="only factorizations with both factors proper")
    p.set_defaults(fn=cmd_factorize)

    p = sub.add_parser("build",
                       help="build k^Gamma # kF and verify the axioms")
    common(p, subgroups=True, cocycles=True)
    p.set_defaults(fn=cmd_build)

    p = sub.add_parser("irreps",
                       help="irreducible degrees of k^Gamma # kF")
    common(p, subgroups=True, cocycles=True)
    p.set_defaults(fn=cmd_irreps)

    p = sub.add_parser("double",
                       help="simple modules of the (twisted) double of G")
    common(p, omega=True)
    p.set_defaults(fn=cmd_double)

    p = sub.add_parser("fusion",
                       help="fusion subcategories of the double of G")
    common(p, omega=True)
    p.set_defaults(fn=cmd_fusion)

    p = sub.add_parser("obstruct",
                       help="quasitriangularity obstruction pipeline")
    common(p, subgroups=True, omega=True)
    p.set_defaults(fn=cmd_obstruct)
    return top


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        return args.fn(args)
    except (CliError, io.ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
