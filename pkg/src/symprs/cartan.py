"""Root systems, their mod-2 shadows, and the Weyl action on them.

A Cartan datum (integer Cartan matrix plus symmetrizer) determines the
pairing (a_i, a_j) = d_i C_ij. Its parity graph has an edge wherever that
pairing is odd; the minimal SRS on the parity graph then carries a
representation of the Weyl group by symplectic matrices, under which
reducing a root's simple-root coordinates mod 2 intertwines the two
actions. For the simply laced families the parity graph is the diagram
itself, and the minimal SRS admits the explicit decorations built here,
one family at a time, inside a standard space of the appropriate type.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .gf2 import BitMat, BitVec, echelon_basis, inverse
from .graph import Graph, automorphisms, dynkin_graph
from .srs import SRS, minimal_srs, radical_subspaces
from .symplectic import standard_space

__all__ = [
    "CartanDatum",
    "cartan_datum",
    "roots",
    "parity_graph",
    "ade_srs",
    "ade_table",
    "WeylRep",
    "weyl_rep",
    "weyl_orbit",
    "group_order",
    "automorphism_action_on_quotients",
    "MAX_ROOTS",
    "MAX_GROUP_ORDER_BFS",
]

MAX_ROOTS = 10_000
MAX_GROUP_ORDER_BFS = 1_000_000


@dataclass(frozen=True)
class CartanDatum:
    """An integer Cartan matrix with a fixed symmetrizer.

    ``matrix[i][j]`` is C_ij, ``d[i]`` the symmetrizer entry; the pairing
    (a_i, a_j) = d_i C_ij must come out symmetric.
    """

    matrix: tuple[tuple[int, ...], ...]
    d: tuple[int, ...]

    def __post_init__(self):
        c = self.matrix
        n = len(c)
        if len(self.d) != n or any(len(row) != n for row in c):
            raise ValueError("matrix and symmetrizer sizes disagree")
        for i in range(n):
            if c[i][i] != 2:
                raise ValueError(f"diagonal entry C[{i}][{i}] = {c[i][i]} != 2")
            if self.d[i] < 1:
                raise ValueError(f"symmetrizer entry d[{i}] = {self.d[i]} < 1")
        for i in range(n):
            for j in range(n):
                if i != j and c[i][j] > 0:
                    raise ValueError(f"off-diagonal entry C[{i}][{j}] = {c[i][j]} > 0")
                if (c[i][j] == 0) != (c[j][i] == 0):
                    raise ValueError(f"zero pattern asymmetric at ({i}, {j})")
                if self.d[i] * c[i][j] != self.d[j] * c[j][i]:
                    raise ValueError(f"symmetrizer fails at ({i}, {j})")

    @property
    def rank(self) -> int:
        return len(self.matrix)

    def pairing(self, i: int, j: int) -> int:
        return self.d[i] * self.matrix[i][j]


def _chain_matrix(rank: int) -> list[list[int]]:
    c = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
    for i in range(rank - 1):
        c[i][i + 1] = c[i + 1][i] = -1
    return c


def cartan_datum(family: str, rank: int) -> CartanDatum:
    """The datum of a finite-type family, nodes numbered as in dynkin_graph.

    Simply laced families take d = 1 everywhere and C = 2I - adjacency.
    B_n makes the last root short, C_n makes it long, F4 shortens the last
    two, G2 lengthens the second; the double (triple) bond sits at the end
    of the chain in each case.
    """
    if family in ("A", "D", "E"):
        g = dynkin_graph(family, rank)
        c = [
            [2 if i == j else (-1 if g.has_edge(i, j) else 0) for j in range(rank)]
            for i in range(rank)
        ]
        return CartanDatum(tuple(map(tuple, c)), (1,) * rank)
    if family == "B":
        dynkin_graph(family, rank)  # range check
        c = _chain_matrix(rank)
        c[rank - 1][rank - 2] = -2
        return CartanDatum(tuple(map(tuple, c)), (2,) * (rank - 1) + (1,))
    if family == "C":
        dynkin_graph(family, rank)
        c = _chain_matrix(rank)
        c[rank - 2][rank - 1] = -2
        return CartanDatum(tuple(map(tuple, c)), (1,) * (rank - 1) + (2,))
    if family == "F":
        dynkin_graph(family, rank)
        c = _chain_matrix(4)
        c[2][1] = -2
        return CartanDatum(tuple(map(tuple, c)), (2, 2, 1, 1))
    if family == "G":
        dynkin_graph(family, rank)
        return CartanDatum(((2, -3), (-1, 2)), (1, 3))
    raise ValueError(f"unknown family {family!r}")


def roots(c: CartanDatum) -> list[tuple[int, ...]]:
    """All roots in simple-root coordinates, closed under simple reflections.

    Sorted lexicographically; raises if the closure exceeds MAX_ROOTS,
    which only happens for data outside finite type.
    """
    n = c.rank
    seen = set()
    queue = deque(tuple(1 if j == i else 0 for j in range(n)) for i in range(n))
    seen.update(queue)
    while queue:
        beta = queue.popleft()
        for i in range(n):
            coeff = sum(c.matrix[i][j] * beta[j] for j in range(n))
            image = beta[:i] + (beta[i] - coeff,) + beta[i + 1 :]
            if image not in seen:
                if len(seen) >= MAX_ROOTS:
                    raise RuntimeError(f"root closure exceeds {MAX_ROOTS}; not finite type?")
                seen.add(image)
                queue.append(image)
    return sorted(seen)


def parity_graph(c: CartanDatum) -> Graph:
    """Edge i-j wherever the pairing (a_i, a_j) is odd."""
    n = c.rank
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if c.pairing(i, j) % 2])


# Explicit minimal decorations for the simply laced diagrams. Vectors are
# written over symbolic coordinates ("x", i), ("y", i) with i >= 1 and
# ("z", j), materialized in a standard space at the end; the even-path
# core G(2m) is shared by every family.


def _core(m: int) -> list[frozenset]:
    if m == 0:
        return []
    if m == 1:
        return [frozenset({("x", 1)}), frozenset({("y", 1)})]
    flipped = [
        frozenset(("y" if kind == "x" else "x", i) for kind, i in v) for v in _core(m - 1)
    ]
    head = frozenset({("x", m), ("x", m - 1)})
    tail = frozenset({("y", m), ("y", m - 1)})
    return [head, *flipped, tail]


def _materialize(symbolic: Sequence[frozenset], n: int, k: int) -> tuple[BitVec, ...]:
    offset = {"x": 0, "y": n, "z": 2 * n}
    out = []
    for v in symbolic:
        bits = 0
        for kind, i in v:
            bits |= 1 << (offset[kind] + i - 1)
        out.append(BitVec(2 * n + k, bits))
    return tuple(out)


def ade_srs(family: str, rank: int) -> SRS:
    """The minimal SRS of a simply laced diagram with its classical
    decorations, laid out in a standard space.

    Isomorphic to minimal_srs(dynkin_graph(family, rank)) via the change
    of basis sending node decorations to the standard basis; building it
    directly keeps the published coordinates on each node.
    """
    if family not in ("A", "D", "E"):
        raise ValueError(f"classical decorations exist for A/D/E only, not {family!r}")
    g = dynkin_graph(family, rank)
    if family == "A":
        m = rank // 2
        if rank % 2 == 0:
            deco = _materialize(_core(m), m, 0)
        elif rank == 1:
            deco = _materialize([frozenset({("z", 1)})], 0, 1)
        else:
            first = frozenset({("z", 1), ("y", m)})
            deco = _materialize([first, *_core(m)], m, 1)
        space = standard_space(m, rank % 2)
    elif family == "D":
        m = (rank - 1) // 2 if rank % 2 else (rank - 2) // 2
        core = _core(m)
        if rank % 2:
            extra = [frozenset({("z", 1), ("x", m), ("x", m - 1)})]
            space = standard_space(m, 1)
        else:
            extra = [frozenset({("z", 1), ("y", m)}), frozenset({("z", 2), ("y", m)})]
            space = standard_space(m, 2)
        deco = _materialize([*core, *extra], m, space.dim - 2 * m)
    else:  # E
        if rank == 6:
            symbolic = [
                *_core(2),
                frozenset({("y", 3), ("y", 2)}),
                frozenset({("x", 3), ("x", 2), ("x", 1)}),
            ]
            space = standard_space(3, 0)
            deco = _materialize(symbolic, 3, 0)
        elif rank == 7:
            symbolic = [*_core(3), frozenset({("z", 1), ("y", 3), ("y", 2), ("y", 1)})]
            space = standard_space(3, 1)
            deco = _materialize(symbolic, 3, 1)
        else:
            symbolic = [
                *_core(3),
                frozenset({("y", 4), ("y", 3)}),
                frozenset({("x", 4), ("x", 3), ("x", 2)}),
            ]
            space = standard_space(4, 0)
            deco = _materialize(symbolic, 4, 0)
    return SRS(g, space, deco)


def ade_table(family: str, rank: int) -> dict[tuple[int, int], int]:
    """Isomorphism classes of SRS on a simply laced diagram, counted by type."""
    if family not in ("A", "D", "E"):
        raise ValueError(f"the class table is for A/D/E diagrams, not {family!r}")
    s = minimal_srs(dynkin_graph(family, rank))
    table: dict[tuple[int, int], int] = {}
    for basis in radical_subspaces(s):
        n, k = s.type
        key = (n, k - len(basis))
        table[key] = table.get(key, 0) + 1
    return table


@dataclass(frozen=True)
class WeylRep:
    """The Weyl group acting symplectically on the parity graph's SRS.

    ``generators[i]`` is the matrix of the i-th simple reflection on the
    minimal SRS of the parity graph; ``root_images`` maps each root to its
    mod-2 coordinate vector. Opposite roots always collide, so the map is
    2-to-1 at best; ``faithful_on_roots`` says whether it is exactly
    2-to-1, with ``collision_count`` the number of further identified
    pairs beyond that.
    """

    datum: CartanDatum
    srs: SRS
    generators: tuple[BitMat, ...]
    root_images: dict[tuple[int, ...], BitVec]
    faithful_on_roots: bool
    collision_count: int


def weyl_rep(c: CartanDatum) -> WeylRep:
    n = c.rank
    s = minimal_srs(parity_graph(c))
    gens = []
    for alpha in range(n):
        rows = list(BitMat.identity(n).rows)
        for j in range(n):
            rows[alpha] ^= (c.matrix[alpha][j] & 1) << j
        gens.append(BitMat(n, rows))
    all_roots = roots(c)
    images = {beta: BitVec.from_bits([b & 1 for b in beta]) for beta in all_roots}
    distinct = len(set(images.values()))
    pairs = len(all_roots) // 2
    return WeylRep(c, s, tuple(gens), images, distinct == pairs, pairs - distinct)


def weyl_orbit(rep: WeylRep, v: BitVec) -> list[BitVec]:
    """Orbit of one vector under the generated matrix group, sorted."""
    seen = {v}
    queue = deque([v])
    while queue:
        w = queue.popleft()
        for m in rep.generators:
            image = m @ w
            if image not in seen:
                seen.add(image)
                queue.append(image)
    return sorted(seen, key=lambda u: u.bits)


def group_order(
    generators: Iterable[BitMat], cap: int = MAX_GROUP_ORDER_BFS, method: str = "bfs"
) -> int:
    """Order of the matrix group the generators produce.

    ``method="bfs"`` enumerates elements outright and raises past ``cap``;
    ``method="chain"`` runs a deterministic stabilizer chain on vectors
    and handles orders far beyond enumeration (the cap is ignored).
    """
    gens = list(generators)
    if method == "chain":
        return _stabilizer_chain_order(gens)
    if method != "bfs":
        raise ValueError(f"unknown method {method!r}")
    if not gens:
        return 1
    identity = BitMat.identity(gens[0].ncols)
    seen = {identity}
    queue = deque([identity])
    while queue:
        m = queue.popleft()
        for g in gens:
            image = g @ m
            if image not in seen:
                if len(seen) >= cap:
                    raise RuntimeError(f"group exceeds enumeration cap {cap}")
                seen.add(image)
                queue.append(image)
    return len(seen)


def _stabilizer_chain_order(gen_list: list[BitMat]) -> int:
    """Order via a base and strong generating set on F_2 vector points.

    Schreier-Sims with sifting. Level i acts with every strong generator
    stored at levels >= i (those fix the first i base points); verifying a
    level means checking that all its Schreier generators sift to the
    identity through the deeper chain, and any residue that survives is
    installed where it got stuck, after which the levels between are
    re-verified deepest first. Iteration orders are fixed throughout, so
    the chain and the result are deterministic.
    """
    if not gen_list:
        return 1
    dim = gen_list[0].ncols
    if dim > 16:
        raise ValueError("stabilizer chain scans all vectors; dimension capped at 16")
    identity = BitMat.identity(dim)
    external = sorted({g for g in gen_list if g != identity}, key=lambda m: m.rows)
    points: list[BitVec] = []
    own: list[list[BitMat]] = []  # generators first seen stuck at each level
    forward: list[dict[BitVec, BitMat]] = []  # orbit point -> coset representative
    backward: list[dict[BitVec, BitMat]] = []  # orbit point -> representative inverse

    def moved_point(m: BitMat) -> BitVec:
        for bits in range(1, 1 << dim):
            v = BitVec(dim, bits)
            if m @ v != v:
                return v
        raise AssertionError("identity was filtered out")

    def acting(i: int) -> list[BitMat]:
        return [g for lvl in range(i, len(points)) for g in own[lvl]]

    def rebuild(i: int, gens: list[BitMat]) -> list[BitVec]:
        inverses = {id(s): inverse(s) for s in gens}
        forward[i] = {points[i]: identity}
        backward[i] = {points[i]: identity}
        order_found = [points[i]]
        queue = deque(order_found)
        while queue:
            v = queue.popleft()
            for s in gens:
                w = s @ v
                if w not in forward[i]:
                    forward[i][w] = s @ forward[i][v]
                    back = inverses[id(s)]
                    assert back is not None
                    backward[i][w] = backward[i][v] @ back
                    order_found.append(w)
                    queue.append(w)
        return order_found

    def sift(m: BitMat, start: int) -> tuple[BitMat, int]:
        for i in range(start, len(points)):
            w = m @ points[i]
            back = backward[i].get(w)
            if back is None:
                return m, i
            m = back @ m
        return m, len(points)

    def install(idx: int, m: BitMat):
        if idx == len(points):
            points.append(moved_point(m))
            own.append([])
            forward.append({})
            backward.append({})
        own[idx].append(m)

    def verify(i: int):
        # pre: levels deeper than i are complete; only they get touched.
        gens = acting(i)
        orbit = rebuild(i, gens)
        for v in orbit:
            rep = forward[i][v]
            for s in gens:
                schreier = backward[i][s @ v] @ (s @ rep)
                residue, j = sift(schreier, i + 1)
                if residue != identity:
                    install(j, residue)
                    for level in range(j, i, -1):
                        verify(level)

    for g in external:
        residue, j = sift(g, 0)
        if residue != identity:
            install(j, residue)
            for level in range(j, -1, -1):
                verify(level)
    order = 1
    for trans in forward:
        order *= len(trans)
    return order


def automorphism_action_on_quotients(g: Graph) -> list[tuple[int, ...]]:
    """How each graph automorphism permutes the SRS classes on g.

    Classes are indexed as in enumerate_quotients (one per radical
    subspace); an automorphism acts on the minimal SRS by permuting
    coordinates, hence on radical subspaces, hence on classes. Rows are
    aligned with automorphisms(g).
    """
    s = minimal_srs(g)
    subs = radical_subspaces(s)
    canon = [tuple(echelon_basis(list(sub), g.n)) for sub in subs]
    index = {c: i for i, c in enumerate(canon)}
    actions = []
    for perm in automorphisms(g):
        inv = [0] * g.n
        for j, image in enumerate(perm):
            inv[image] = j
        # Row i of the action has its bit at the preimage of i, so that
        # basis vector p maps to basis vector perm[p]. Permuting nodes
        # preserves adjacency, hence is symplectic and fixes the radical
        # setwise.
        act = BitMat(g.n, tuple(1 << inv[i] for i in range(g.n)))
        actions.append(
            tuple(index[tuple(echelon_basis([act @ u for u in sub], g.n))] for sub in subs)
        )
    return actions
