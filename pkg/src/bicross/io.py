"""Text file formats with exact scalars, and digests for run headers.

Four formats, all line-oriented, whitespace-tokenized, with ``#`` starting
a comment line:

* group file:    ``group <name>``, ``degree <n>``, one ``gen <cycles>``
                 line per generator in 1-based cycle notation;
* cocycle file:  ``cocycle sigma`` or ``cocycle tau``, ``order <N>``, then
                 ``<i> <j> <k> <e>`` lines giving the exponent e of
                 zeta_N at that index triple (omitted entries are 0);
* omega file:    ``omega``, ``order <N>``, then ``<a> <b> <c> <e>`` lines
                 over 0-based group element indices (omitted entries 0);
                 identity normalization and the 3-cocycle law are checked
                 on load;
* hopf dump:     header ``hopf <name> dim <d> cyclotomic <N>`` followed by
                 sparse structure-constant lines; writing is canonical, so
                 dump -> load -> dump is byte-identical.

Scalars in Q(zeta_N) serialize exactly: a ``+``-joined list of monomials
``<rational>p<power>`` (for example ``-1/2p3`` is -(1/2) zeta_N^3 and
``1p0+1p2`` is 1 + zeta_N^2).  Machine-readable documents carry the same
monomials as (rational-string, power) pairs.  Floats appear nowhere.
"""
from __future__ import annotations

import hashlib
from fractions import Fraction

import numpy as np

from .cyclotomic import CycScalar
from .groups import FiniteGroup
from .hopf import HopfAlgebraData
from .perm import format_cycles, parse_cycles
from .reps import OmegaCocycle


class ParseError(ValueError):
    """A file-format violation, carrying the 1-based line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def sha256_hex(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()


# ---------------------------------------------------------------------------
# exact scalars


def format_scalar(s: CycScalar) -> str:
    if not s.terms:
        return "0p0"
    return "+".join(f"{q}p{k}" for k, q in sorted(s.terms.items()))


def parse_scalar(text: str, order: int) -> CycScalar:
    terms: dict[int, Fraction] = {}
    for mono in text.split("+"):
        rational, _, power = mono.partition("p")
        if not power:
            raise ValueError(f"malformed scalar monomial {mono!r}")
        q, k = Fraction(rational), int(power)
        if q:
            terms[k % order] = terms.get(k % order, Fraction(0)) + q
    return CycScalar(order, terms)


def scalar_json(s: CycScalar) -> list:
    """The same monomials as (rational-string, power) pairs."""
    return [[str(q), k] for k, q in sorted(s.terms.items())]


# ---------------------------------------------------------------------------
# tokenized reading


def _content_lines(text: str):
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield line_no, line


# ---------------------------------------------------------------------------
# group files


def write_group(G: FiniteGroup, generators=None) -> str:
    """Render a group file; generators default to a small generating set."""
    if generators is None:
        generators = []
        have = {0}
        for x in range(G.order):
            if x not in have:
                generators.append(x)
                have = set(G.subgroup(generators))
                if len(have) == G.order:
                    break
    lines = [f"group {G.name}", f"degree {G.degree}"]
    lines += [f"gen {format_cycles(G.elements[x])}" for x in generators]
    return "\n".join(lines) + "\n"


def parse_group(text: str, cap: int | None = None) -> FiniteGroup:
    name, degree, gens = None, None, []
    for line_no, line in _content_lines(text):
        tokens = line.split(maxsplit=1)
        key = tokens[0]
        rest = tokens[1] if len(tokens) > 1 else ""
        if key == "group":
            if not rest:
                raise ParseError(line_no, "group line needs a name")
            name = rest
        elif key == "degree":
            try:
                degree = int(rest)
            except ValueError:
                raise ParseError(line_no, f"bad degree {rest!r}") from None
        elif key == "gen":
            if degree is None:
                raise ParseError(line_no, "gen before degree")
            try:
                gens.append(parse_cycles(rest, degree))
            except Exception as exc:
                raise ParseError(line_no, f"bad generator: {exc}") from None
        else:
            raise ParseError(line_no, f"unknown directive {key!r}")
    if name is None or degree is None:
        raise ParseError(1, "missing group or degree line")
    kwargs = {} if cap is None else {"cap": cap}
    return FiniteGroup.from_generators(name, degree, gens, **kwargs)


# ---------------------------------------------------------------------------
# exponent-table files (2-cocycle pair components and 3-cocycles)


def _parse_exponent_file(text: str, head_key: str):
    """Common shape: a header line, an ``order N`` line, then index/exponent
    rows.  Returns (header remainder, order, [(indices, exponent)])."""
    header, order, rows = None, None, []
    for line_no, line in _content_lines(text):
        tokens = line.split()
        if header is None:
            if tokens[0] != head_key:
                raise ParseError(line_no, f"expected {head_key!r} header, "
                                          f"got {tokens[0]!r}")
            header = tokens[1:]
            continue
        if tokens[0] == "order":
            try:
                order = int(tokens[1])
            except (IndexError, ValueError):
                raise ParseError(line_no, "bad order line") from None
            if order < 1:
                raise ParseError(line_no, "order must be positive")
            continue
        if order is None:
            raise ParseError(line_no, "entries before the order line")
        if len(tokens) != 4:
            raise ParseError(line_no, "expected four fields: i j k exponent")
        try:
            i, j, k, e = (int(t) for t in tokens)
        except ValueError:
            raise ParseError(line_no, "non-integer field") from None
        rows.append(((i, j, k), e, line_no))
    if header is None:
        raise ParseError(1, f"missing {head_key!r} header")
    if order is None:
        raise ParseError(1, "missing order line")
    return header, order, rows


def _fill_table(shape, rows, order):
    table = np.zeros(shape, dtype=np.int64)
    for (i, j, k), e, line_no in rows:
        for axis, idx in enumerate((i, j, k)):
            if not 0 <= idx < shape[axis]:
                raise ParseError(line_no,
                                 f"index {idx} out of range for axis of "
                                 f"size {shape[axis]}")
        if not 0 <= e < order:
            raise ParseError(line_no,
                             f"exponent {e} outside [0, {order})")
        table[i, j, k] = e
    return table


def write_cocycle(kind: str, order: int, table: np.ndarray) -> str:
    if kind not in ("sigma", "tau"):
        raise ValueError("kind must be 'sigma' or 'tau'")
    lines = [f"cocycle {kind}", f"order {order}"]
    for idx in sorted(zip(*np.nonzero(np.asarray(table) % order))):
        i, j, k = (int(t) for t in idx)
        lines.append(f"{i} {j} {k} {int(table[i, j, k]) % order}")
    return "\n".join(lines) + "\n"


def parse_cocycle(text: str) -> tuple[str, int, list]:
    """Parse a sigma/tau file down to (kind, order, sparse rows); the table
    shape depends on the matched pair, so the caller assembles it with
    cocycle_table."""
    header, order, rows = _parse_exponent_file(text, "cocycle")
    if len(header) != 1 or header[0] not in ("sigma", "tau"):
        raise ParseError(1, "header must be 'cocycle sigma' or 'cocycle tau'")
    return header[0], order, rows


def cocycle_table(shape, order: int, rows) -> np.ndarray:
    return _fill_table(shape, rows, order)


def write_omega(omega: OmegaCocycle) -> str:
    lines = ["omega", f"order {omega.order}"]
    table = np.asarray(omega.table) % omega.order
    for idx in sorted(zip(*np.nonzero(table))):
        a, b, c = (int(t) for t in idx)
        lines.append(f"{a} {b} {c} {int(table[a, b, c])}")
    return "\n".join(lines) + "\n"


def parse_omega(text: str, group: FiniteGroup) -> OmegaCocycle:
    header, order, rows = _parse_exponent_file(text, "omega")
    if header:
        raise ParseError(1, "omega header takes no arguments")
    n = group.order
    table = _fill_table((n, n, n), rows, order)
    omega = OmegaCocycle(group=group, order=order, table=table)
    problems = omega.validate()
    if problems:
        raise ValueError("invalid 3-cocycle: " + "; ".join(problems))
    return omega


# ---------------------------------------------------------------------------
# Hopf algebra dumps


def write_hopf(H: HopfAlgebraData) -> str:
    """Canonical text dump of all structure constants (and the R-matrix when
    present).  Requires a materializable multiplication table, so this is
    for desk-size algebras."""
    name = "_".join(H.name.split())
    lines = [f"hopf {name} dim {H.dim} cyclotomic {H.order}"]
    default_labels = [f"b{i}" for i in range(H.dim)]
    if H.labels != default_labels:
        lines += [f"label {i} {lab}" for i, lab in enumerate(H.labels)]
    for i, c in sorted(H.unit.items()):
        lines.append(f"unit {i} {format_scalar(c)}")
    for i, c in sorted(H.counit.items()):
        lines.append(f"counit {i} {format_scalar(c)}")
    mul = H.materialized_mul()
    for (i, j) in sorted(mul):
        for k, c in sorted(mul[(i, j)].items()):
            if not c.is_zero():
                lines.append(f"mul {i} {j} {k} {format_scalar(c)}")
    for i in sorted(H.comul):
        for (j, k), c in sorted(H.comul[i].items()):
            if not c.is_zero():
                lines.append(f"comul {i} {j} {k} {format_scalar(c)}")
    for j in sorted(H.antipode):
        for i, c in sorted(H.antipode[j].items()):
            if not c.is_zero():
                lines.append(f"antipode {j} {i} {format_scalar(c)}")
    if H.rmatrix is not None:
        for (i, j), c in sorted(H.rmatrix.items()):
            if not c.is_zero():
                lines.append(f"rmatrix {i} {j} {format_scalar(c)}")
    return "\n".join(lines) + "\n"


def parse_hopf(text: str) -> HopfAlgebraData:
    name = dim = order = None
    labels: dict[int, str] = {}
    unit: dict = {}
    counit: dict = {}
    mul: dict = {}
    comul: dict = {}
    antipode: dict = {}
    rmatrix: dict = {}

    def scalar(tok, line_no):
        try:
            return parse_scalar(tok, order)
        except ValueError as exc:
            raise ParseError(line_no, str(exc)) from None

    def index(tok, line_no):
        try:
            i = int(tok)
        except ValueError:
            raise ParseError(line_no, f"bad index {tok!r}") from None
        if not 0 <= i < dim:
            raise ParseError(line_no, f"index {i} out of range")
        return i

    for line_no, line in _content_lines(text):
        tokens = line.split()
        if name is None:
            if (len(tokens) != 6 or tokens[0] != "hopf"
                    or tokens[2] != "dim" or tokens[4] != "cyclotomic"):
                raise ParseError(line_no, "expected header "
                                 "'hopf <name> dim <d> cyclotomic <N>'")
            name = tokens[1]
            try:
                dim, order = int(tokens[3]), int(tokens[5])
            except ValueError:
                raise ParseError(line_no, "bad dim or cyclotomic") from None
            continue
        key = tokens[0]
        if key == "label":
            labels[index(tokens[1], line_no)] = line.split(maxsplit=2)[2]
        elif key == "unit" and len(tokens) == 3:
            unit[index(tokens[1], line_no)] = scalar(tokens[2], line_no)
        elif key == "counit" and len(tokens) == 3:
            counit[index(tokens[1], line_no)] = scalar(tokens[2], line_no)
        elif key == "mul" and len(tokens) == 5:
            i, j, k = (index(t, line_no) for t in tokens[1:4])
            mul.setdefault((i, j), {})[k] = scalar(tokens[4], line_no)
        elif key == "comul" and len(tokens) == 5:
            i, j, k = (index(t, line_no) for t in tokens[1:4])
            comul.setdefault(i, {})[(j, k)] = scalar(tokens[4], line_no)
        elif key == "antipode" and len(tokens) == 4:
            j, i = index(tokens[1], line_no), index(tokens[2], line_no)
            antipode.setdefault(j, {})[i] = scalar(tokens[3], line_no)
        elif key == "rmatrix" and len(tokens) == 4:
            i, j = index(tokens[1], line_no), index(tokens[2], line_no)
            rmatrix[(i, j)] = scalar(tokens[3], line_no)
        else:
            raise ParseError(line_no, f"unrecognized line {line!r}")
    if name is None:
        raise ParseError(1, "missing hopf header")
    label_list = [labels.get(i, f"b{i}") for i in range(dim)]
    return HopfAlgebraData(name, dim, order, mul=mul, comul=comul,
                           unit=unit, counit=counit, antipode=antipode,
                           labels=label_list,
                           rmatrix=rmatrix if rmatrix else None)


def hopf_json(H: HopfAlgebraData) -> dict:
    """The dump's content as a JSON-ready document with exact scalars."""
    mul = H.materialized_mul()
    doc = {
        "name": "_".join(H.name.split()), "dim": H.dim,
        "cyclotomic": H.order, "labels": list(H.labels),
        "unit": [[i, scalar_json(c)] for i, c in sorted(H.unit.items())],
        "counit": [[i, scalar_json(c)] for i, c in sorted(H.counit.items())],
        "mul": [[i, j, k, scalar_json(c)] for (i, j) in sorted(mul)
                for k, c in sorted(mul[(i, j)].items()) if not c.is_zero()],
        "comul": [[i, j, k, scalar_json(c)] for i in sorted(H.comul)
                  for (j, k), c in sorted(H.comul[i].items())
                  if not c.is_zero()],
        "antipode": [[j, i, scalar_json(c)] for j in sorted(H.antipode)
                     for i, c in sorted(H.antipode[j].items())
                     if not c.is_zero()],
    }
    if H.rmatrix is not None:
        doc["rmatrix"] = [[i, j, scalar_json(c)]
                          for (i, j), c in sorted(H.rmatrix.items())
                          if not c.is_zero()]
    return doc
