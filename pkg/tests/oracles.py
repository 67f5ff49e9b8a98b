"""Independent brute-force oracles the fast implementations are checked against."""

from __future__ import annotations

import itertools

from symprs.gf2 import BitMat, BitVec, rank
from symprs.graph import Graph
from symprs.srs import SRS
from symprs.symplectic import SympSpace, standard_space


def all_srs_on_space(g: Graph, space: SympSpace) -> list[SRS]:
    """Every decoration family on g into the given space, by backtracking.

    Pairing constraints are checked as each node is placed; the span
    condition only at the leaves. Exponential in nodes and dim, fine for
    the 4-node sweeps it exists for.
    """
    found: list[SRS] = []
    deco: list[BitVec] = []

    def place(p: int):
        if p == g.n:
            m = BitMat(space.dim, (v.bits for v in deco))
            if rank(m) == space.dim:
                found.append(SRS(g, space, tuple(deco)))
            return
        for bits in range(1 << space.dim):
            v = BitVec(space.dim, bits)
            if all(space.form(v, deco[q]) == (1 if g.has_edge(p, q) else 0) for q in range(p)):
                deco.append(v)
                place(p + 1)
                deco.pop()

    place(0)
    return found


def all_srs(g: Graph) -> list[SRS]:
    """Every SRS on g, over one model space per type of dim <= node count."""
    out: list[SRS] = []
    for dim in range(g.n + 1):
        for n in range(dim // 2 + 1):
            out.extend(all_srs_on_space(g, standard_space(n, dim - 2 * n)))
    return out


def span_of(vectors: list[BitVec], dim: int) -> set[BitVec]:
    span = {BitVec.zero(dim)}
    for v in vectors:
        span |= {w ^ v for w in span}
    return span


def subsets(items):
    for r in range(len(items) + 1):
        yield from itertools.combinations(items, r)
