"""Exact linear algebra over GF(2) on bit-packed rows.

Vectors and matrix rows are Python ints used as bitsets: bit ``i`` holds
coordinate ``i``, XOR is vector addition, and AND + popcount parity is the
dot product, so every row operation touches whole machine words at once.
All elimination routines pivot on the lowest-index row and column first,
which makes every derived object (echelon form, kernel basis, particular
solutions) deterministic and reproducible across runs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

__all__ = [
    "BitVec",
    "BitMat",
    "RowEchelon",
    "rank",
    "row_reduce",
    "kernel_basis",
    "solve",
    "solve_mat",
    "inverse",
    "echelon_basis",
    "block_diag",
    "subspaces",
]


class BitVec:
    """An immutable vector over GF(2) with a fixed dimension.

    The string form lists coordinate 0 first: ``str(BitVec.from_string("1001"))``
    round-trips, and ``v[i]`` is the i-th bit.
    """

    __slots__ = ("dim", "bits")

    def __init__(self, dim: int, bits: int = 0):
        if dim < 0:
            raise ValueError(f"negative dimension {dim}")
        if bits < 0 or bits >> dim:
            raise ValueError(f"bits 0x{bits:x} out of range for dimension {dim}")
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "bits", bits)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("BitVec is immutable")

    @classmethod
    def zero(cls, dim: int) -> "BitVec":
        return cls(dim, 0)

    @classmethod
    def basis(cls, dim: int, i: int) -> "BitVec":
        """The i-th standard basis vector."""
        if not 0 <= i < dim:
            raise ValueError(f"basis index {i} out of range for dimension {dim}")
        return cls(dim, 1 << i)

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> "BitVec":
        entries = list(bits)
        value = 0
        for i, b in enumerate(entries):
            if b not in (0, 1):
                raise ValueError(f"entry {b!r} is not a bit")
            value |= b << i
        return cls(len(entries), value)

    @classmethod
    def from_string(cls, text: str) -> "BitVec":
        """Parse the wire form: '1001' means coordinates 0 and 3 are set."""
        if not all(c in "01" for c in text):
            raise ValueError(f"not a bit string: {text!r}")
        return cls(len(text), int(text[::-1], 2) if text else 0)

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.dim:
            raise IndexError(i)
        return (self.bits >> i) & 1

    def __iter__(self) -> Iterator[int]:
        return ((self.bits >> i) & 1 for i in range(self.dim))

    def __len__(self) -> int:
        return self.dim

    def __xor__(self, other: "BitVec") -> "BitVec":
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch {self.dim} != {other.dim}")
        return BitVec(self.dim, self.bits ^ other.bits)

    __add__ = __xor__

    def dot(self, other: "BitVec") -> int:
        """Standard dot product mod 2."""
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch {self.dim} != {other.dim}")
        return (self.bits & other.bits).bit_count() & 1

    def weight(self) -> int:
        return self.bits.bit_count()

    def support(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.dim) if (self.bits >> i) & 1)

    def is_zero(self) -> bool:
        return self.bits == 0

    def pad(self, dim: int) -> "BitVec":
        """Reinterpret in a larger space, new coordinates zero."""
        if dim < self.dim:
            raise ValueError(f"cannot pad dimension {self.dim} down to {dim}")
        return BitVec(dim, self.bits)

    def take(self, dim: int) -> "BitVec":
        """Truncate to the first ``dim`` coordinates."""
        if dim > self.dim:
            raise ValueError(f"cannot take {dim} coordinates from dimension {self.dim}")
        return BitVec(dim, self.bits & ((1 << dim) - 1))

    def __str__(self) -> str:
        return "".join("1" if (self.bits >> i) & 1 else "0" for i in range(self.dim))

    def __repr__(self) -> str:
        return f"BitVec({str(self)!r})" if self.dim else "BitVec(0)"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitVec):
            return NotImplemented
        return self.dim == other.dim and self.bits == other.bits

    def __hash__(self) -> int:
        return hash((self.dim, self.bits))


class BitMat:
    """An immutable matrix over GF(2), stored as one int bitset per row."""

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, ncols: int, rows: Iterable[int]):
        row_tuple = tuple(rows)
        if ncols < 0:
            raise ValueError(f"negative column count {ncols}")
        for r in row_tuple:
            if r < 0 or r >> ncols:
                raise ValueError(f"row 0x{r:x} out of range for {ncols} columns")
        object.__setattr__(self, "nrows", len(row_tuple))
        object.__setattr__(self, "ncols", ncols)
        object.__setattr__(self, "rows", row_tuple)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("BitMat is immutable")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int] | str | BitVec], ncols: int | None = None) -> "BitMat":
        vecs = [r if isinstance(r, BitVec)
                else BitVec.from_string(r) if isinstance(r, str)
                else BitVec.from_bits(r)
                for r in rows]
        if ncols is None:
            if not vecs:
                raise ValueError("cannot infer column count from zero rows")
            ncols = vecs[0].dim
        if any(v.dim != ncols for v in vecs):
            raise ValueError("ragged rows")
        return cls(ncols, (v.bits for v in vecs))

    @classmethod
    def from_cols(cls, cols: Sequence[BitVec], nrows: int | None = None) -> "BitMat":
        if nrows is None:
            if not cols:
                raise ValueError("cannot infer row count from zero columns")
            nrows = cols[0].dim
        if any(c.dim != nrows for c in cols):
            raise ValueError("ragged columns")
        rows = [0] * nrows
        for j, c in enumerate(cols):
            for i in c.support():
                rows[i] |= 1 << j
        return cls(len(cols), rows)

    @classmethod
    def identity(cls, n: int) -> "BitMat":
        return cls(n, (1 << i for i in range(n)))

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "BitMat":
        return cls(ncols, (0,) * nrows)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def entry(self, i: int, j: int) -> int:
        if not (0 <= i < self.nrows and 0 <= j < self.ncols):
            raise IndexError((i, j))
        return (self.rows[i] >> j) & 1

    def row(self, i: int) -> BitVec:
        return BitVec(self.ncols, self.rows[i])

    def col(self, j: int) -> BitVec:
        if not 0 <= j < self.ncols:
            raise IndexError(j)
        bits = 0
        for i, r in enumerate(self.rows):
            bits |= ((r >> j) & 1) << i
        return BitVec(self.nrows, bits)

    def row_vecs(self) -> list[BitVec]:
        return [BitVec(self.ncols, r) for r in self.rows]

    def col_vecs(self) -> list[BitVec]:
        return [self.col(j) for j in range(self.ncols)]

    def transpose(self) -> "BitMat":
        return BitMat.from_cols(self.row_vecs(), nrows=self.ncols) if self.nrows else BitMat.zeros(self.ncols, 0)

    def __xor__(self, other: "BitMat") -> "BitMat":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} != {other.shape}")
        return BitMat(self.ncols, (a ^ b for a, b in zip(self.rows, other.rows)))

    __add__ = __xor__

    def __matmul__(self, other: "BitMat | BitVec") -> "BitMat | BitVec":
        if isinstance(other, BitVec):
            if other.dim != self.ncols:
                raise ValueError(f"dimension mismatch {self.ncols} != {other.dim}")
            bits = 0
            for i, r in enumerate(self.rows):
                bits |= ((r & other.bits).bit_count() & 1) << i
            return BitVec(self.nrows, bits)
        if other.nrows != self.ncols:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        out = []
        for r in self.rows:
            acc = 0
            rem = r
            while rem:
                j = (rem & -rem).bit_length() - 1
                acc ^= other.rows[j]
                rem &= rem - 1
            out.append(acc)
        return BitMat(other.ncols, out)

    def is_symmetric(self) -> bool:
        return self.nrows == self.ncols and all(
            self.entry(i, j) == self.entry(j, i) for i in range(self.nrows) for j in range(i)
        )

    def is_zero(self) -> bool:
        return not any(self.rows)

    def diagonal(self) -> BitVec:
        n = min(self.nrows, self.ncols)
        bits = 0
        for i in range(n):
            bits |= ((self.rows[i] >> i) & 1) << i
        return BitVec(n, bits)

    def to_strings(self) -> list[str]:
        """Rows in wire form, one bit string per row."""
        return [str(self.row(i)) for i in range(self.nrows)]

    def __str__(self) -> str:
        return "\n".join(self.to_strings())

    def __repr__(self) -> str:
        return f"BitMat({self.nrows}x{self.ncols})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitMat):
            return NotImplemented
        return self.ncols == other.ncols and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.ncols, self.rows))


@dataclass(frozen=True)
class RowEchelon:
    """Result of Gaussian elimination: ``transform @ original == rref``.

    ``pivots`` lists the pivot column of each leading row in increasing
    order; ``transform`` is square and invertible.
    """

    rref: BitMat
    pivots: tuple[int, ...]
    transform: BitMat

    @property
    def rank(self) -> int:
        return len(self.pivots)


def row_reduce(m: BitMat) -> RowEchelon:
    """Reduced row echelon form with lowest-index pivoting.

    Scans columns left to right, picks the first available row as pivot,
    and clears the pivot column everywhere else, so the result is the
    unique RREF reached by a fixed elimination order.
    """
    work = list(m.rows)
    trans = [1 << i for i in range(m.nrows)]
    pivots: list[int] = []
    r = 0
    for c in range(m.ncols):
        pivot = next((i for i in range(r, m.nrows) if (work[i] >> c) & 1), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        trans[r], trans[pivot] = trans[pivot], trans[r]
        for i in range(m.nrows):
            if i != r and (work[i] >> c) & 1:
                work[i] ^= work[r]
                trans[i] ^= trans[r]
        pivots.append(c)
        r += 1
    return RowEchelon(BitMat(m.ncols, work), tuple(pivots), BitMat(m.nrows, trans))


def rank(m: BitMat) -> int:
    return row_reduce(m).rank


def kernel_basis(m: BitMat) -> list[BitVec]:
    """Basis of the right kernel {v : m @ v = 0}, one vector per free column.

    Free columns are visited in increasing index order and each basis vector
    has a 1 in exactly one free position, so the output is canonical.
    """
    ech = row_reduce(m)
    pivot_set = set(ech.pivots)
    basis = []
    for f in range(m.ncols):
        if f in pivot_set:
            continue
        bits = 1 << f
        for r, p in enumerate(ech.pivots):
            if (ech.rref.rows[r] >> f) & 1:
                bits |= 1 << p
        basis.append(BitVec(m.ncols, bits))
    return basis


def solve(m: BitMat, b: BitVec) -> BitVec | None:
    """A particular solution of ``m @ x = b``, or None if inconsistent.

    Free variables are set to zero, so the solution is deterministic.
    Dimension mismatches are contract violations and raise.
    """
    if b.dim != m.nrows:
        raise ValueError(f"rhs dimension {b.dim} != row count {m.nrows}")
    ech = row_reduce(m)
    y = ech.transform @ b
    if y.bits >> ech.rank:
        return None
    bits = 0
    for r, p in enumerate(ech.pivots):
        bits |= ((y.bits >> r) & 1) << p
    return BitVec(m.ncols, bits)


def solve_mat(m: BitMat, b: BitMat) -> BitMat | None:
    """Solve ``m @ X = b`` column by column; None if any column fails."""
    if b.nrows != m.nrows:
        raise ValueError(f"rhs rows {b.nrows} != lhs rows {m.nrows}")
    cols = []
    for j in range(b.ncols):
        x = solve(m, b.col(j))
        if x is None:
            return None
        cols.append(x)
    return BitMat.from_cols(cols, nrows=m.ncols)


def inverse(m: BitMat) -> BitMat | None:
    """Two-sided inverse of a square matrix, or None if singular."""
    if m.nrows != m.ncols:
        raise ValueError(f"not square: {m.shape}")
    ech = row_reduce(m)
    if ech.rank != m.nrows:
        return None
    return ech.transform


def echelon_basis(vectors: Sequence[BitVec], dim: int | None = None) -> list[BitVec]:
    """Canonical (reduced-echelon) basis of the span of ``vectors``."""
    if dim is None:
        if not vectors:
            raise ValueError("cannot infer dimension from zero vectors")
        dim = vectors[0].dim
    ech = row_reduce(BitMat.from_rows(list(vectors), ncols=dim) if vectors else BitMat.zeros(0, dim))
    return [ech.rref.row(i) for i in range(ech.rank)]


def block_diag(a: BitMat, b: BitMat) -> BitMat:
    """Block-diagonal sum, ``a`` occupying the low coordinate indices."""
    rows = list(a.rows)
    rows.extend(r << a.ncols for r in b.rows)
    return BitMat(a.ncols + b.ncols, rows)


def subspaces(dim: int) -> Iterator[tuple[BitVec, ...]]:
    """Every subspace of GF(2)^dim as a tuple of reduced-echelon basis rows.

    Deterministic order: dimension ascending, pivot columns lexicographic,
    then free entries counting up in binary. The zero subspace is the empty
    tuple. Subspace counts grow as Galois numbers (dim 6 already gives
    2825), so callers should keep dim small.
    """
    for r in range(dim + 1):
        for pivots in itertools.combinations(range(dim), r):
            pivot_set = set(pivots)
            free = [[j for j in range(p + 1, dim) if j not in pivot_set] for p in pivots]
            nfree = sum(len(f) for f in free)
            for mask in range(1 << nfree):
                rows = []
                k = 0
                for i, p in enumerate(pivots):
                    bits = 1 << p
                    for j in free[i]:
                        bits |= ((mask >> k) & 1) << j
                        k += 1
                    rows.append(BitVec(dim, bits))
                yield tuple(rows)
