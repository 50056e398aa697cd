"""Orbits on nonzero vectors, block systems, and the extreme-primitivity test.

A nonzero vector is indexed by its bit pattern read as an integer, so the
orbit structure lives in flat arrays of size 2^d.  The image table of a
generator over the whole space comes from linearity: images over a
subcube extend by one XOR per added basis vector, which numpy vectorises.

Primitivity of a transitive orbit action uses the classical minimal-block
computation: for a fixed base point and every other point, the smallest
congruence identifying the two is grown by union-find under generator
images; the action is primitive iff every such congruence is universal.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .errors import DimensionTooLarge, ExprimError, ResourceLimit
from .gf2 import GF2Vector
from .groups import MatrixGroup
from .meataxe import is_irreducible

__all__ = [
    "OrbitDecomposition",
    "EPVerdict",
    "OrbitReport",
    "orbits_on_nonzero",
    "is_primitive_on_orbit",
    "is_extremely_primitive",
    "blocks_oracle",
    "is_two_transitive_orbit",
    "image_table",
    "group_image_tables",
]

MAX_DIM = 26
MAX_BLOCK_POINTS = 1 << 16


def image_table(rows: Sequence[int], dim: int) -> np.ndarray:
    """Image of every vector 0..2^d-1 under the matrix with the given rows."""
    dtype = np.uint32 if dim <= 26 else np.uint64
    img = np.zeros(1 << dim, dtype=dtype)
    for i in range(dim):
        img[1 << i:1 << (i + 1)] = img[:1 << i] ^ dtype(rows[i])
    return img


def group_image_tables(G: MatrixGroup) -> list:
    return [image_table(g.rows, G.dim) for g in G.generators]


@dataclass
class OrbitDecomposition:
    """Partition of the nonzero vectors into group orbits.

    orbit_of[v] is the orbit label of the vector with bit pattern v (the
    zero vector gets -1); labels are assigned in increasing order of the
    least vector index in the orbit, which is also the representative.
    """

    dim: int
    orbit_of: np.ndarray
    sizes: list
    representatives: list

    def points(self, label: int) -> np.ndarray:
        return np.nonzero(self.orbit_of == label)[0]


def orbits_on_nonzero(G: MatrixGroup, tables: Optional[list] = None) -> OrbitDecomposition:
    """Exact orbit partition of the 2^d - 1 nonzero vectors under G."""
    d = G.dim
    if d > MAX_DIM:
        raise DimensionTooLarge(f"orbit enumeration supports d <= {MAX_DIM}")
    tables = group_image_tables(G) if tables is None else tables
    n = 1 << d
    orbit_of = np.full(n, -1, dtype=np.int32)
    sizes = []
    reps = []
    label = 0
    for start in range(1, n):
        if orbit_of[start] != -1:
            continue
        orbit_of[start] = label
        frontier = np.array([start], dtype=np.int64)
        size = 1
        while frontier.size:
            nxt = []
            for t in tables:
                img = t[frontier]
                fresh = img[orbit_of[img] == -1]
                if fresh.size:
                    fresh = np.unique(fresh)
                    fresh = fresh[orbit_of[fresh] == -1]  # unique may still repeat across tables
                    orbit_of[fresh] = label
                    nxt.append(fresh)
            if nxt:
                frontier = np.concatenate(nxt)
                size += frontier.size
            else:
                frontier = np.empty(0, dtype=np.int64)
        sizes.append(int(size))
        reps.append(start)
        label += 1
    if sum(sizes) != n - 1:
        raise ExprimError("orbit sizes do not sum to 2^d - 1")
    return OrbitDecomposition(d, orbit_of, sizes, reps)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    p = 2
    while p * p <= n:
        if n % p == 0:
            return False
        p += 1 if p == 2 else 2
    return True


@dataclass(frozen=True)
class BlockResult:
    primitive: bool
    block: Optional[tuple] = None  # vector indices of a nontrivial block


def _local_generators(points: np.ndarray, tables: Sequence[np.ndarray]) -> list:
    pos = np.full(int(tables[0].shape[0]), -1, dtype=np.int64)
    pos[points] = np.arange(points.size)
    out = []
    for t in tables:
        lg = pos[t[points]]
        if (lg < 0).any():
            raise ExprimError("orbit is not invariant under the generators")
        out.append(lg)
    return out


def is_primitive_on_orbit(G: MatrixGroup, points, tables: Optional[list] = None) -> BlockResult:
    """Primitivity of the (transitive) action of G on an orbit.

    points: the orbit's vector indices (as from OrbitDecomposition.points).
    Orbits of size 1 or prime size are primitive without a block search.
    Returns a minimal nontrivial block through the base pair when
    imprimitive.
    """
    points = np.asarray(sorted(int(p) for p in points), dtype=np.int64)
    n = points.size
    if n == 1 or _is_prime(n):
        return BlockResult(True, None)
    if n > MAX_BLOCK_POINTS:
        raise ResourceLimit(
            f"block search on {n} points exceeds the {MAX_BLOCK_POINTS}-point desk scale"
        )
    tables = group_image_tables(G) if tables is None else tables
    lgens = _local_generators(points, tables)
    lgens_l = [lg.tolist() for lg in lgens]
    for beta in range(1, n):
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        stack = [(0, beta)]
        merged = 1
        parent[find(beta)] = find(0)
        while stack:
            u, v = stack.pop()
            for lg in lgens_l:
                ru, rv = find(lg[u]), find(lg[v])
                if ru != rv:
                    parent[rv] = ru
                    merged += 1
                    stack.append((ru, rv))
        if merged < n - 1:
            root0 = find(0)
            block = tuple(int(points[i]) for i in range(n) if find(i) == root0)
            return BlockResult(False, block)
    return BlockResult(True, None)


def blocks_oracle(points, tables: Sequence[np.ndarray]) -> BlockResult:
    """Independent primitivity oracle by naive partition refinement.

    For every non-base point, start from the partition gluing only the
    base pair and repeatedly merge classes that some generator maps across
    two classes, until the partition is a congruence.  Quadratic; meant
    for orbits of at most a few dozen points.
    """
    points = sorted(int(p) for p in points)
    n = len(points)
    if n == 1:
        return BlockResult(True, None)
    pos = {p: i for i, p in enumerate(points)}
    lgens = [[pos[int(t[p])] for p in points] for t in tables]
    for beta in range(1, n):
        cls = list(range(n))
        cls[beta] = 0
        changed = True
        while changed:
            changed = False
            for lg in lgens:
                img_class = {}
                remap = {}
                for i in range(n):
                    c, ic = cls[i], cls[lg[i]]
                    c = remap.get(c, c)
                    ic = remap.get(ic, ic)
                    if c in img_class and img_class[c] != ic:
                        old = img_class[c]
                        remap[max(old, ic)] = min(old, ic)
                        for k in list(img_class):
                            if img_class[k] == max(old, ic):
                                img_class[k] = min(old, ic)
                        changed = True
                    else:
                        img_class[c] = ic
                if remap:
                    full = {}
                    def res(x):
                        while x in remap:
                            x = remap[x]
                        return x
                    cls = [res(c) for c in cls]
        classes = {}
        for i, c in enumerate(cls):
            classes.setdefault(c, []).append(i)
        if len(classes) > 1:
            for members in classes.values():
                if 0 in members:
                    return BlockResult(False, tuple(points[i] for i in members))
    return BlockResult(True, None)


def is_two_transitive_orbit(points, tables: Sequence[np.ndarray]) -> bool:
    """Whether the orbit action is 2-transitive (single orbit on ordered pairs)."""
    points = sorted(int(p) for p in points)
    n = len(points)
    if n < 2:
        return False
    pos = {p: i for i, p in enumerate(points)}
    lgens = [[pos[int(t[p])] for p in points] for t in tables]
    start = (0, 1)
    seen = {start}
    stack = [start]
    while stack:
        u, v = stack.pop()
        for lg in lgens:
            w = (lg[u], lg[v])
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n * (n - 1)


@dataclass(frozen=True)
class OrbitReport:
    size: int
    primitive: bool
    stabiliser_order: Optional[int]
    block_size: Optional[int] = None


@dataclass(frozen=True)
class EPVerdict:
    """Outcome of the extreme-primitivity decision for V:H."""

    is_ep: bool
    reason: str  # not-irreducible | imprimitive-orbit | all-orbits-primitive
    orbit_label: Optional[int] = None
    block_size: Optional[int] = None
    per_orbit: tuple = ()


def is_extremely_primitive(G: MatrixGroup, seed: Optional[int] = None) -> EPVerdict:
    """Decide extreme primitivity of the affine group V:G on V = GF(2)^d.

    Checks irreducibility of G (primitivity of V:G), then primitivity of
    the G-action on every orbit of nonzero vectors; short-circuits on the
    first imprimitive orbit.
    """
    if G.dim > MAX_DIM:
        raise DimensionTooLarge(f"EP check supports d <= {MAX_DIM}")
    irr, _ = is_irreducible(list(G.generators), seed=seed)
    if not irr:
        return EPVerdict(False, "not-irreducible")
    tables = group_image_tables(G)
    dec = orbits_on_nonzero(G, tables=tables)
    reports = []
    for label, size in enumerate(dec.sizes):
        pts = dec.points(label)
        res = is_primitive_on_orbit(G, pts, tables=tables)
        stab = G.order // size if G.order else None
        reports.append(OrbitReport(size, res.primitive, stab,
                                   len(res.block) if res.block else None))
        if not res.primitive:
            return EPVerdict(False, "imprimitive-orbit", orbit_label=label,
                             block_size=len(res.block), per_orbit=tuple(reports))
    return EPVerdict(True, "all-orbits-primitive", per_orbit=tuple(reports))
