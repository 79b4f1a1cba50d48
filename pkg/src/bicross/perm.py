"""Permutations as image tuples on {0..n-1}, with 1-based cycle notation I/O.

Composition applies the right factor first: (compose(g, h))(p) == g(h(p)).
"""
from __future__ import annotations

import re

Perm = tuple  # tuple[int, ...]


def identity(degree: int) -> Perm:
    return tuple(range(degree))


def compose(g: Perm, h: Perm) -> Perm:
    return tuple(g[h[p]] for p in range(len(h)))


def invert(g: Perm) -> Perm:
    out = [0] * len(g)
    for p, q in enumerate(g):
        out[q] = p
    return tuple(out)


def perm_order(g: Perm) -> int:
    k, acc, e = 1, g, identity(len(g))
    while acc != e:
        acc = compose(g, acc)
        k += 1
    return k


def from_cycles(cycles: list[tuple[int, ...]], degree: int) -> Perm:
    """Build a permutation from 0-based cycles."""
    img = list(range(degree))
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            if not 0 <= a < degree:
                raise ValueError(f"point {a} out of range for degree {degree}")
            img[a] = b
    return tuple(img)


def parse_cycles(text: str, degree: int | None = None) -> Perm:
    """Parse 1-based cycle notation like ``(1 2 3)(4 5)``; ``()`` is identity."""
    text = text.strip()
    if not re.fullmatch(r"(\(\s*(\d+[\s,]*)*\))+", text):
        raise ValueError(f"malformed cycle notation: {text!r}")
    cycles = []
    for body in re.findall(r"\(([^()]*)\)", text):
        pts = [int(t) for t in re.split(r"[\s,]+", body.strip()) if t]
        if any(p < 1 for p in pts):
            raise ValueError(f"cycle points are 1-based, got {pts}")
        if len(set(pts)) != len(pts):
            raise ValueError(f"repeated point in cycle: {body!r}")
        if pts:
            cycles.append(tuple(p - 1 for p in pts))
    need = 1 + max((max(c) for c in cycles), default=-1)
    if degree is None:
        degree = need
    elif need > degree:
        raise ValueError(f"cycle uses point {need} beyond degree {degree}")
    seen: set[int] = set()
    for c in cycles:
        if seen & set(c):
            raise ValueError(f"cycles are not disjoint in {text!r}")
        seen |= set(c)
    return from_cycles(cycles, degree)


def to_cycles(g: Perm) -> list[tuple[int, ...]]:
    """Decompose into 0-based cycles of length >= 2, each starting at its
    smallest point, sorted by that point."""
    seen = [False] * len(g)
    out = []
    for start in range(len(g)):
        if seen[start] or g[start] == start:
            seen[start] = True
            continue
        cyc, p = [], start
        while not seen[p]:
            seen[p] = True
            cyc.append(p)
            p = g[p]
        out.append(tuple(cyc))
    return out


def format_cycles(g: Perm) -> str:
    cycles = to_cycles(g)
    if not cycles:
        return "()"
    return "".join("(" + " ".join(str(p + 1) for p in c) + ")" for c in cycles)
