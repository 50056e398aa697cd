"""Bit-packed linear algebra over GF(2).

Vectors are dim-bit integers (bit j = coordinate j) and matrices are
square tuples of row integers.  The convention is row-vector action
throughout: row i of a matrix is the image of the i-th standard basis
vector under v -> v*M.  All values are immutable and hashable, so they
can be shared freely and used as set keys during group enumeration.

Rank and kernels use word-wide XOR elimination; matrices above 64
columns are repacked into numpy uint64 words so elimination stays
vectorised.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import ExprimError

__all__ = [
    "GF2Vector",
    "GF2Matrix",
    "JordanType",
    "Echelon",
    "rank",
    "kernel_basis",
    "fixed_space_dim",
    "inverse",
    "tensor",
    "exterior_power",
    "involution_jordan_type",
    "tensor_jordan_involutions",
    "realize_jordan_type",
]


def bits_of(x: int):
    """Yield the set bit positions of x, lowest first."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


@dataclass(frozen=True)
class GF2Vector:
    """A vector in GF(2)^dim, packed into an int (bit j = coordinate j)."""

    dim: int
    bits: int

    def __post_init__(self):
        if self.dim < 1:
            raise ExprimError("vector dimension must be >= 1")
        if self.bits >> self.dim:
            raise ExprimError("vector has bits beyond its dimension")

    @classmethod
    def from01(cls, s: str) -> "GF2Vector":
        bits = 0
        for j, c in enumerate(s):
            if c == "1":
                bits |= 1 << j
            elif c != "0":
                raise ExprimError(f"bad vector character {c!r}")
        return cls(len(s), bits)

    def to01(self) -> str:
        return "".join("1" if (self.bits >> j) & 1 else "0" for j in range(self.dim))

    def weight(self) -> int:
        return self.bits.bit_count()

    def __xor__(self, other: "GF2Vector") -> "GF2Vector":
        if self.dim != other.dim:
            raise ExprimError("dimension mismatch")
        return GF2Vector(self.dim, self.bits ^ other.bits)

    def apply(self, m: "GF2Matrix") -> "GF2Vector":
        return GF2Vector(m.dim, mul_vec(self.bits, m.rows))


def mul_vec(v: int, rows: Sequence[int]) -> int:
    """Image of the packed vector v under the matrix with the given rows."""
    acc = 0
    while v:
        low = v & -v
        acc ^= rows[low.bit_length() - 1]
        v ^= low
    return acc


def _mul_rows(arows: Sequence[int], brows: Sequence[int]) -> tuple:
    return tuple(mul_vec(a, brows) for a in arows)


@dataclass(frozen=True)
class GF2Matrix:
    """A square matrix over GF(2); rows[i] is the packed image of e_i."""

    dim: int
    rows: tuple

    def __post_init__(self):
        if self.dim < 1:
            raise ExprimError("matrix dimension must be >= 1")
        if len(self.rows) != self.dim:
            raise ExprimError("row count does not match dimension")
        mask = (1 << self.dim) - 1
        for r in self.rows:
            if r & ~mask:
                raise ExprimError("row has bits beyond the dimension")

    @classmethod
    def identity(cls, dim: int) -> "GF2Matrix":
        return cls(dim, tuple(1 << i for i in range(dim)))

    @classmethod
    def zero(cls, dim: int) -> "GF2Matrix":
        return cls(dim, (0,) * dim)

    @classmethod
    def from_rows01(cls, rows: Iterable[str]) -> "GF2Matrix":
        packed = tuple(GF2Vector.from01(r).bits for r in rows)
        return cls(len(packed), packed)

    def row(self, i: int) -> GF2Vector:
        return GF2Vector(self.dim, self.rows[i])

    def __mul__(self, other: "GF2Matrix") -> "GF2Matrix":
        if self.dim != other.dim:
            raise ExprimError("dimension mismatch")
        return GF2Matrix(self.dim, _mul_rows(self.rows, other.rows))

    def __add__(self, other: "GF2Matrix") -> "GF2Matrix":
        if self.dim != other.dim:
            raise ExprimError("dimension mismatch")
        return GF2Matrix(self.dim, tuple(a ^ b for a, b in zip(self.rows, other.rows)))

    def __pow__(self, n: int) -> "GF2Matrix":
        if n < 0:
            return inverse(self) ** (-n)
        result = GF2Matrix.identity(self.dim)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def transpose(self) -> "GF2Matrix":
        d = self.dim
        out = [0] * d
        for i, r in enumerate(self.rows):
            for j in bits_of(r):
                out[j] |= 1 << i
        return GF2Matrix(d, tuple(out))

    def is_identity(self) -> bool:
        return all(r == (1 << i) for i, r in enumerate(self.rows))

    def order(self, cap: int = 1 << 20) -> int:
        """Multiplicative order, bounded by cap iterations."""
        x = self
        n = 1
        while not x.is_identity():
            x = x * self
            n += 1
            if n > cap:
                raise ExprimError("order exceeds iteration cap")
        return n

    def to_numpy(self) -> np.ndarray:
        a = np.zeros((self.dim, self.dim), dtype=np.uint8)
        for i, r in enumerate(self.rows):
            for j in bits_of(r):
                a[i, j] = 1
        return a


class Echelon:
    """Incremental echelonised basis of a subspace of GF(2)^dim.

    Rows are kept pivot-reduced (each stored row's leading bit is unique
    and cleared from every other row), so membership tests and basis
    extraction are deterministic.
    """

    def __init__(self, dim: int):
        self.dim = dim
        self.pivot_row: dict[int, int] = {}

    def reduce(self, v: int) -> int:
        while v:
            p = v.bit_length() - 1
            row = self.pivot_row.get(p)
            if row is None:
                return v
            v ^= row
        return 0

    def add(self, v: int) -> bool:
        """Insert v; returns True if it enlarged the subspace."""
        v = self.reduce(v)
        if v == 0:
            return False
        p = v.bit_length() - 1
        for q, row in self.pivot_row.items():
            if (row >> p) & 1:
                self.pivot_row[q] = row ^ v
        self.pivot_row[p] = v
        return True

    def __contains__(self, v: int) -> bool:
        return self.reduce(v) == 0

    def __len__(self) -> int:
        return len(self.pivot_row)

    def basis(self) -> list:
        """Basis rows sorted by pivot position, highest pivot first."""
        return [self.pivot_row[p] for p in sorted(self.pivot_row, reverse=True)]

    def spans_all(self) -> bool:
        return len(self.pivot_row) == self.dim


_PACKED_THRESHOLD = 64


def _rank_packed(rows: Sequence[int], dim: int) -> int:
    """Rank via numpy uint64-word elimination, for wide matrices."""
    nwords = (dim + 63) // 64
    nbytes = nwords * 8
    m = np.frombuffer(
        b"".join(r.to_bytes(nbytes, "little") for r in rows), dtype=np.uint64
    ).reshape(len(rows), nwords).copy()
    nrows = len(rows)
    r = 0
    for col in range(dim):
        if r == nrows:
            break
        w, b = divmod(col, 64)
        colbits = (m[r:, w] >> np.uint64(b)) & np.uint64(1)
        nz = np.nonzero(colbits)[0]
        if nz.size == 0:
            continue
        p = r + int(nz[0])
        if p != r:
            m[[r, p]] = m[[p, r]]
        hit = r + 1 + np.nonzero((m[r + 1:, w] >> np.uint64(b)) & np.uint64(1))[0]
        if hit.size:
            m[hit] ^= m[r]
        r += 1
    return r


def rank_rows(rows: Sequence[int], dim: int) -> int:
    """Rank of a (not necessarily square) list of packed rows."""
    if dim > _PACKED_THRESHOLD and len(rows) > 32:
        return _rank_packed(rows, dim)
    ech = Echelon(dim)
    n = 0
    for r in rows:
        if ech.add(r):
            n += 1
    return n


def rank(m: GF2Matrix) -> int:
    return rank_rows(m.rows, m.dim)


def kernel_basis(m: GF2Matrix) -> list:
    """Basis of the left kernel {v : v*M = 0}, as GF2Vectors."""
    return [GF2Vector(m.dim, b) for b in kernel_rows(m.rows, m.dim)]


def kernel_rows(rows: Sequence[int], dim: int) -> list:
    """Left-kernel basis (packed ints) of the map given by the rows.

    Works for k x d maps: rows has k entries of d bits; the kernel lives
    in GF(2)^k.  Augmented elimination: carry e_i alongside row i.
    """
    pivots: dict[int, tuple[int, int]] = {}  # leading bit -> (row, combination)
    kernel = []
    for i, r in enumerate(rows):
        comb = 1 << i
        while r:
            p = r.bit_length() - 1
            hit = pivots.get(p)
            if hit is None:
                break
            r ^= hit[0]
            comb ^= hit[1]
        if r == 0:
            kernel.append(comb)
        else:
            pivots[r.bit_length() - 1] = (r, comb)
    return kernel


def fixed_space_dim(x: GF2Matrix) -> int:
    """dim C_V(x): the dimension of the 1-eigenspace of x."""
    xi = x + GF2Matrix.identity(x.dim)
    return x.dim - rank(xi)


def fixed_space_basis(x: GF2Matrix) -> list:
    """Packed basis vectors of the 1-eigenspace of x."""
    xi = x + GF2Matrix.identity(x.dim)
    return kernel_rows(xi.rows, xi.dim)


def inverse(m: GF2Matrix) -> GF2Matrix:
    """Matrix inverse; raises if singular."""
    d = m.dim
    work = list(m.rows)
    aug = [1 << i for i in range(d)]
    r = 0
    for col in range(d):
        p = None
        for i in range(r, d):
            if (work[i] >> col) & 1:
                p = i
                break
        if p is None:
            raise ExprimError("matrix is singular")
        work[r], work[p] = work[p], work[r]
        aug[r], aug[p] = aug[p], aug[r]
        for i in range(d):
            if i != r and ((work[i] >> col) & 1):
                work[i] ^= work[r]
                aug[i] ^= aug[r]
        r += 1
    return GF2Matrix(d, tuple(aug))


def tensor(a: GF2Matrix, b: GF2Matrix) -> GF2Matrix:
    """Kronecker product, basis (i, j) -> i*dim(b) + j (left factor major)."""
    db = b.dim
    rows = []
    for ra in a.rows:
        for rb in b.rows:
            out = 0
            v = ra
            while v:
                low = v & -v
                out ^= rb << ((low.bit_length() - 1) * db)
                v ^= low
            rows.append(out)
    return GF2Matrix(a.dim * db, tuple(rows))


def _subsets(n: int, k: int) -> list:
    """All k-subsets of range(n) in lexicographic order."""
    out = []
    idx = list(range(k))
    while True:
        out.append(tuple(idx))
        for i in reversed(range(k)):
            if idx[i] != i + n - k:
                break
        else:
            return out
        idx[i] += 1
        for j in range(i + 1, k):
            idx[j] = idx[j - 1] + 1


def exterior_power(m: GF2Matrix, k: int) -> GF2Matrix:
    """k-th exterior power; basis = k-subsets in lexicographic order.

    Entry (S, T) is det of the S x T submatrix (char 2: the permanent).
    """
    subs = _subsets(m.dim, k)
    pos = {s: i for i, s in enumerate(subs)}
    a = m.to_numpy()
    rows = []
    for s in subs:
        sub = a[list(s), :]
        out = 0
        for t in subs:
            # permanent over GF(2) by expansion; k stays tiny here
            out ^= _det2(sub[:, list(t)]) << pos[t]
        rows.append(out)
    return GF2Matrix(len(subs), tuple(rows))


def _det2(a: np.ndarray) -> int:
    m = a.copy()
    n = m.shape[0]
    for c in range(n):
        p = None
        for r in range(c, n):
            if m[r, c]:
                p = r
                break
        if p is None:
            return 0
        if p != c:
            m[[c, p]] = m[[p, c]]
        for r in range(c + 1, n):
            if m[r, c]:
                m[r] ^= m[c]
    return 1


@dataclass(frozen=True)
class JordanType:
    """Multiset of Jordan block sizes, stored largest first."""

    blocks: tuple

    def __post_init__(self):
        if tuple(sorted(self.blocks, reverse=True)) != self.blocks:
            raise ExprimError("blocks must be sorted descending")
        if any(b < 1 for b in self.blocks):
            raise ExprimError("block sizes must be positive")

    @classmethod
    def involution(cls, j2: int, j1: int) -> "JordanType":
        return cls((2,) * j2 + (1,) * j1)

    @property
    def dim(self) -> int:
        return sum(self.blocks)

    @property
    def fixed_dim(self) -> int:
        """Fixed-space dimension of a unipotent element: one per block."""
        return len(self.blocks)

    def count(self, size: int) -> int:
        return sum(1 for b in self.blocks if b == size)

    def __str__(self) -> str:
        from collections import Counter

        c = Counter(self.blocks)
        return "(" + ",".join(
            f"J{s}^{c[s]}" if c[s] > 1 else f"J{s}" for s in sorted(c, reverse=True)
        ) + ")"


def involution_jordan_type(x: GF2Matrix) -> JordanType:
    """Jordan type of an involution in characteristic 2.

    An involution x has (x+I)^2 = 0, so its Jordan form is determined by
    r = rank(x+I) alone: r blocks J_2 and dim-2r blocks J_1.
    """
    if x.is_identity():
        raise ExprimError("identity is not an involution")
    if not (x * x).is_identity():
        raise ExprimError("matrix is not an involution")
    return _involution_type_unchecked(x)


def _involution_type_unchecked(x: GF2Matrix) -> JordanType:
    r = rank(x + GF2Matrix.identity(x.dim))
    return JordanType.involution(r, x.dim - 2 * r)


def realize_jordan_type(jt: JordanType) -> GF2Matrix:
    """A block-diagonal matrix with the given J_1/J_2 block structure."""
    if any(b > 2 for b in jt.blocks):
        raise ExprimError("only block sizes 1 and 2 are supported")
    d = jt.dim
    rows = []
    i = 0
    for b in jt.blocks:
        if b == 1:
            rows.append(1 << i)
            i += 1
        else:
            rows.append(1 << i)
            rows.append((1 << i) | (1 << (i + 1)))
            i += 2
    return GF2Matrix(d, tuple(rows))


def transpose_rows(rows: Sequence[int], width: int) -> list:
    """Bit-transpose of a k x width packed map; returns width ints of k bits."""
    out = [0] * width
    for i, r in enumerate(rows):
        for j in bits_of(r):
            out[j] |= 1 << i
    return out


def section_matrix(action_rows: Sequence[int], ambient: int,
                   sub_basis: Sequence[int], quot_out: Sequence[int]) -> GF2Matrix:
    """Matrix of an induced action on span(sub_basis)/span(quot_out).

    Both spans must be invariant under the action; coordinates come from a
    pivot-reduced echelon basis of the section, sorted by pivot, so the
    result is deterministic.
    """
    ech_out = Echelon(ambient)
    for v in quot_out:
        ech_out.add(v)
    canon = Echelon(ambient)
    for v in sub_basis:
        canon.add(ech_out.reduce(v))
    basis = sorted(canon.basis(), key=lambda v: v.bit_length())
    pivots = [v.bit_length() - 1 for v in basis]
    d = len(basis)

    def coords(w: int) -> int:
        w = ech_out.reduce(w)
        out = 0
        for k in range(d - 1, -1, -1):
            if (w >> pivots[k]) & 1:
                out |= 1 << k
                w ^= basis[k]
        if w:
            raise ExprimError("image left the section; spans are not invariant")
        return out

    return GF2Matrix(d, tuple(coords(mul_vec(b, action_rows)) for b in basis))


def _spot_check_involution(x: GF2Matrix, trials: int = 8) -> bool:
    """Probabilistic x*x == I test on random vectors (for big tensors)."""
    import random

    rng = random.Random(0xE1)
    mask = (1 << x.dim) - 1
    for _ in range(trials):
        v = rng.getrandbits(x.dim) & mask
        if mul_vec(mul_vec(v, x.rows), x.rows) != v:
            return False
    return True


def tensor_jordan_involutions(factors: Sequence[JordanType]) -> JordanType:
    """Jordan type of the tensor product of involution (or identity) factors.

    Builds explicit matrices for each factor, tensors them, and reads the
    type off rank(x+I).  Identity factors (all blocks J_1) are allowed.
    """
    if not factors:
        raise ExprimError("at least one factor required")
    for jt in factors:
        if any(b > 2 for b in jt.blocks):
            raise ExprimError("factors must have block sizes 1 or 2")
    mats = [realize_jordan_type(jt) for jt in factors]
    prod = mats[0]
    for m in mats[1:]:
        prod = tensor(prod, m)
    if prod.is_identity():
        return JordanType((1,) * prod.dim)
    if prod.dim <= 512:
        if not (prod * prod).is_identity():
            raise ExprimError("tensor product is not an involution")
    elif not _spot_check_involution(prod):
        raise ExprimError("tensor product is not an involution")
    return _involution_type_unchecked(prod)
