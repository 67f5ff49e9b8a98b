"""Symplectic root systems: graph decorations by vectors over GF(2).

An SRS on a graph assigns to every node a vector in a symplectic GF(2)
space so that two decorations pair to 1 exactly when their nodes are
adjacent, and the decorations span the space. Every graph admits one:
take the adjacency matrix itself as the Gram matrix and the standard
basis as decorations. That one is minimal (decorations form a basis),
it is unique up to isomorphism, and every other SRS on the graph is a
quotient of it by a subspace of the radical. This module implements the
objects, the minimal construction, restriction to induced subgraphs,
quotients, the classification by radical subspaces, and the coclique
bound n <= |nodes| - (max coclique size) that restriction forces.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .gf2 import (
    BitMat,
    BitVec,
    echelon_basis,
    inverse,
    kernel_basis,
    rank,
    row_reduce,
    solve_mat,
    subspaces,
)
from .graph import Graph, graph_to_json, induced_subgraph, max_coclique, parse_graph
from .symplectic import SpaceType, SympSpace

__all__ = [
    "SRSError",
    "SRS",
    "SympMap",
    "validate_srs",
    "minimal_srs",
    "restrict",
    "quotient",
    "enumerate_quotients",
    "radical_subspaces",
    "srs_isomorphic",
    "universal_map",
    "CocliqueReport",
    "coclique_bound_check",
    "srs_to_json",
    "srs_from_json",
    "MAX_QUOTIENT_RADICAL_DIM",
]

MAX_QUOTIENT_RADICAL_DIM = 12


class SRSError(ValueError):
    """A decoration family violating the SRS axioms, with the first culprit."""


@dataclass(frozen=True)
class SRS:
    """A validated symplectic root system.

    ``deco[p]`` is the vector decorating node p. Construction re-checks
    the axioms, so every reachable instance satisfies them; prefer the
    module functions over building instances by hand.
    """

    graph: Graph
    space: SympSpace
    deco: tuple[BitVec, ...]

    def __post_init__(self):
        g, space, deco = self.graph, self.space, self.deco
        if len(deco) != g.n:
            raise SRSError(f"{len(deco)} decorations for {g.n} nodes")
        for p, v in enumerate(deco):
            if v.dim != space.dim:
                raise SRSError(f"decoration of node {p} has dimension {v.dim}, space has {space.dim}")
        for p in range(g.n):
            for q in range(p + 1, g.n):
                expected = 1 if g.has_edge(p, q) else 0
                if space.form(deco[p], deco[q]) != expected:
                    raise SRSError(
                        f"nodes ({p}, {q}): pairing {1 - expected} but adjacency {expected}"
                    )
        if rank(self.deco_matrix()) != space.dim:
            raise SRSError("decorations do not span the space")

    def deco_matrix(self) -> BitMat:
        """Decorations as rows (node count x dim)."""
        return BitMat(self.space.dim, (v.bits for v in self.deco))

    @property
    def type(self) -> SpaceType:
        return self.space.type

    @property
    def is_minimal(self) -> bool:
        # decorations always span, so they form a basis iff counts agree
        return self.graph.n == self.space.dim

    def __repr__(self) -> str:
        n, k = self.type
        return f"SRS(nodes={self.graph.n}, type=({n},{k}), minimal={self.is_minimal})"


@dataclass(frozen=True)
class SympMap:
    """A linear map that respects the forms, with kernel inside the radical."""

    src: SympSpace
    dst: SympSpace
    matrix: BitMat

    def __post_init__(self):
        if self.matrix.shape != (self.dst.dim, self.src.dim):
            raise ValueError(f"matrix shape {self.matrix.shape} != {(self.dst.dim, self.src.dim)}")
        if self.matrix.transpose() @ self.dst.gram @ self.matrix != self.src.gram:
            raise ValueError("map does not preserve the forms")
        for v in kernel_basis(self.matrix):
            if not (self.src.gram @ v).is_zero():
                raise ValueError("kernel not contained in the radical")

    def __call__(self, v: BitVec) -> BitVec:
        return self.matrix @ v

    @property
    def is_isomorphism(self) -> bool:
        return self.src.dim == self.dst.dim and rank(self.matrix) == self.src.dim


def validate_srs(graph: Graph, space: SympSpace, deco: Sequence[BitVec]) -> SRS:
    """Check the axioms and return the SRS; raises SRSError otherwise."""
    return SRS(graph, space, tuple(deco))


def minimal_srs(g: Graph) -> SRS:
    """The minimal SRS: adjacency matrix as Gram, standard basis as decorations."""
    space = SympSpace(g.adjacency())
    return SRS(g, space, tuple(BitVec.basis(g.n, p) for p in range(g.n)) if g.n else ())


def restrict(s: SRS, nodes: Sequence[int]) -> SRS:
    """The SRS induced on a node subset.

    Decorations of the kept nodes span some subspace W; the result lives
    on W re-coordinatized by its canonical echelon basis, so restricting
    a minimal SRS of a graph to the support of a smaller minimal SRS
    reproduces it on the nose, not just up to isomorphism.
    """
    sub_graph = induced_subgraph(s.graph, nodes)
    vecs = [s.deco[v] for v in nodes]
    basis = echelon_basis(vecs, dim=s.space.dim)
    m = len(basis)
    pivots = [b.support()[0] for b in basis]
    gram = BitMat.from_rows(
        [[s.space.form(basis[i], basis[j]) for j in range(m)] for i in range(m)], ncols=m
    ) if m else BitMat.zeros(0, 0)
    sub_space = SympSpace(gram)
    new_deco = tuple(BitVec.from_bits([v[p] for p in pivots]) for v in vecs)
    return SRS(sub_graph, sub_space, new_deco)


def quotient(s: SRS, u_basis: Sequence[BitVec]) -> tuple[SRS, SympMap]:
    """Quotient by a subspace of the radical, with the projection witness.

    Coordinates are the non-pivot positions of the echelon basis of U, so
    the quotient of a quotient stays deterministic.
    """
    for u in u_basis:
        if u.dim != s.space.dim:
            raise SRSError(f"subspace vector dimension {u.dim} != {s.space.dim}")
        if not (s.space.gram @ u).is_zero():
            raise SRSError(f"subspace vector {u} not in the radical")
    basis = echelon_basis(list(u_basis), dim=s.space.dim)
    pivots = [b.support()[0] for b in basis]
    keep = [j for j in range(s.space.dim) if j not in pivots]

    def project(v: BitVec) -> BitVec:
        bits = v.bits
        for b, p in zip(basis, pivots):
            if (bits >> p) & 1:
                bits ^= b.bits
        return BitVec.from_bits([(bits >> j) & 1 for j in keep])

    gram = BitMat.from_rows(
        [[s.space.gram.entry(a, b) for b in keep] for a in keep], ncols=len(keep)
    ) if keep else BitMat.zeros(0, 0)
    quot_space = SympSpace(gram)
    proj = SympMap(
        s.space,
        quot_space,
        BitMat.from_cols([project(BitVec.basis(s.space.dim, j)) for j in range(s.space.dim)], nrows=len(keep)),
    )
    quot = SRS(s.graph, quot_space, tuple(project(v) for v in s.deco))
    return quot, proj


def radical_subspaces(s: SRS) -> list[tuple[BitVec, ...]]:
    """All subspaces of the radical, as bases in space coordinates.

    Deterministic: subspace dimension ascending (so quotient types come
    out grouped), then the fixed order of echelon-basis enumeration.
    """
    rad = s.space.radical
    k = len(rad)
    if k > MAX_QUOTIENT_RADICAL_DIM:
        raise SRSError(f"radical dimension {k} exceeds the cap of {MAX_QUOTIENT_RADICAL_DIM}")
    out = []
    for sub in subspaces(k):
        vecs = []
        for coeff in sub:
            v = BitVec.zero(s.space.dim)
            for i in coeff.support():
                v = v ^ rad[i]
            vecs.append(v)
        out.append(tuple(vecs))
    return out


def enumerate_quotients(g: Graph) -> list[SRS]:
    """Every SRS on g up to isomorphism: one quotient per radical subspace.

    The first entry (zero subspace) is the minimal SRS itself. Subspaces of
    the radical biject with isomorphism classes, so entries are pairwise
    non-isomorphic; they are grouped by type since a quotient by an
    r-dimensional subspace has type (n, k - r). Subspace counts grow fast
    (Galois numbers), so radicals beyond dimension 12 are rejected.
    """
    minimal = minimal_srs(g)
    return [quotient(minimal, u)[0] for u in radical_subspaces(minimal)]


def srs_isomorphic(a: SRS, b: SRS) -> SympMap | None:
    """The unique decoration-compatible isomorphism, or None.

    Both systems must live on the same graph (same node indexing); graphs
    that merely look alike after relabeling are a different question and
    are reported as an error, not as non-isomorphic.
    """
    if a.graph != b.graph:
        raise SRSError("systems live on different graphs")
    cols_a = BitMat.from_cols(list(a.deco), nrows=a.space.dim)
    cols_b = BitMat.from_cols(list(b.deco), nrows=b.space.dim)
    if a.graph.n == 0:
        if a.space.dim == 0 and b.space.dim == 0:
            return SympMap(a.space, b.space, BitMat.zeros(0, 0))
        return None
    transposed = solve_mat(cols_a.transpose(), cols_b.transpose())
    if transposed is None:
        return None
    m = transposed.transpose()
    if a.space.dim != b.space.dim or rank(m) != a.space.dim:
        return None
    assert m.transpose() @ b.space.gram @ m == a.space.gram, "decoration-compatible map broke the form"
    return SympMap(a.space, b.space, m)


def universal_map(a: SRS, b: SRS) -> SympMap:
    """The unique surjection from a minimal SRS onto any SRS on the same graph.

    Sends each decoration of ``a`` to the matching one of ``b``; an
    isomorphism exactly when ``b`` is minimal too.
    """
    if a.graph != b.graph:
        raise SRSError("systems live on different graphs")
    if not a.is_minimal:
        raise SRSError("source is not minimal")
    if a.graph.n == 0:
        return SympMap(a.space, b.space, BitMat.zeros(0, 0))
    inv = inverse(BitMat.from_cols(list(a.deco), nrows=a.space.dim))
    assert inv is not None
    m = BitMat.from_cols(list(b.deco), nrows=b.space.dim) @ inv
    assert rank(m) == b.space.dim, "universal map not surjective"
    return SympMap(a.space, b.space, m)


@dataclass(frozen=True)
class CocliqueReport:
    """The coclique bound n <= nodes - gamma for a graph's minimal SRS."""

    n: int
    gamma: int
    bound: int
    holds: bool
    witness: tuple[int, ...]


def coclique_bound_check(g: Graph) -> CocliqueReport:
    n = SympSpace(g.adjacency()).type.n
    witness = max_coclique(g)
    gamma = len(witness)
    bound = g.n - gamma
    return CocliqueReport(n, gamma, bound, n <= bound, witness)


def srs_to_json(s: SRS) -> dict:
    n, k = s.type
    return {
        "graph": graph_to_json(s.graph),
        "dim": s.space.dim,
        "gram": s.space.gram.to_strings(),
        "type": [n, k],
        "deco": {str(p): str(v) for p, v in enumerate(s.deco)},
        "minimal": s.is_minimal,
    }


def srs_from_json(payload: dict) -> SRS:
    """Rebuild and re-validate; declared type and minimality must agree."""
    import json as _json

    try:
        graph = parse_graph(_json.dumps(payload["graph"]))
        gram_rows = payload["gram"]
        dim = int(payload["dim"])
        deco_map = payload["deco"]
    except (KeyError, TypeError) as exc:
        raise SRSError(f"malformed SRS JSON: {exc}") from exc
    if len(gram_rows) != dim:
        raise SRSError(f"gram has {len(gram_rows)} rows, dim is {dim}")
    space = SympSpace(BitMat.from_rows(list(gram_rows), ncols=dim) if dim else BitMat.zeros(0, 0))
    deco = []
    for p in range(graph.n):
        key = str(p)
        if key not in deco_map:
            raise SRSError(f"missing decoration for node {p}")
        deco.append(BitVec.from_string(deco_map[key]))
    s = SRS(graph, space, tuple(deco))
    declared_type = tuple(payload.get("type", s.type))
    if declared_type != tuple(s.type):
        raise SRSError(f"declared type {declared_type} != computed {tuple(s.type)}")
    if "minimal" in payload and bool(payload["minimal"]) != s.is_minimal:
        raise SRSError("declared minimality flag is wrong")
    return s
