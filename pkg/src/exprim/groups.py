"""Matrix groups over GF(2): construction, enumeration, class data, alpha values.

A MatrixGroup is a finite subgroup of GL_d(2) given by generators.  Exact
orders come from breadth-first closure over products; the heavy closure
kernel is batched through numpy (rows stay bit-packed in uint32 words, a
product costs d^2 word operations per element instead of d^3).

Builders cover every family needed by the bundled corpus: natural
classical groups (GL, Sp, Omega/O in both types), fully deleted
permutation modules, and semilinear Z_r.Z_e subgroups of GammaL_1(2^d).
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .errors import CapExceeded, ExprimError
from .gf2 import (
    Echelon,
    GF2Matrix,
    bits_of,
    inverse,
    kernel_rows,
    mul_vec,
    rank,
    section_matrix,
)

__all__ = [
    "MatrixGroup",
    "ClassRecord",
    "ClassData",
    "DEFAULT_CAP",
    "default_cap",
    "group_order",
    "enumerate_group",
    "prime_order_class_data",
    "alpha_bruteforce",
    "build_classical",
    "build_deleted_perm_module",
    "build_semilinear",
    "semilinear_report",
    "perm_matrix_group",
    "PRIMITIVE_POLY",
]

DEFAULT_CAP = 1 << 26


def default_cap() -> int:
    env = os.environ.get("EXPRIM_CAP")
    return int(env) if env else DEFAULT_CAP


@dataclass
class MatrixGroup:
    """A subgroup of GL_d(2) given by generator matrices.

    order is None until computed or declared; order_declared marks orders
    taken from bundled constants rather than enumeration.
    """

    dim: int
    generators: tuple
    order: Optional[int] = None
    name: Optional[str] = None
    order_declared: bool = False
    _elements: Optional[list] = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        if not self.generators:
            raise ExprimError("a matrix group needs at least one generator")
        self.generators = tuple(self.generators)
        for g in self.generators:
            if g.dim != self.dim:
                raise ExprimError("generator dimension mismatch")
            if rank(g) != self.dim:
                raise ExprimError("generators must be invertible")

    def generator_arrays(self) -> list:
        """Generators as packed uint32 row arrays (for batched kernels)."""
        return [np.array(g.rows, dtype=np.uint32) for g in self.generators]


def _batch_mul(elems: np.ndarray, grows: np.ndarray, dim: int) -> np.ndarray:
    """Multiply a batch of packed matrices (n, dim) by one matrix on the right."""
    out = np.zeros_like(elems)
    for j in range(dim):
        mask = ((elems >> np.uint32(j)) & np.uint32(1)).astype(np.uint32)
        out ^= mask * grows[j]
    return out


def _closure_packed(G: MatrixGroup, cap: int, materialize: bool):
    """BFS closure of the generators; returns (count, elements or None).

    Elements are returned as a (n, dim) uint32 array in a deterministic
    (BFS, generator-order) enumeration order starting at the identity.
    """
    d = G.dim
    gens = G.generator_arrays()
    ident = np.array([1 << i for i in range(d)], dtype=np.uint32)
    rowbytes = d * 4
    seen = {ident.tobytes()}
    layers = [ident.reshape(1, d)]
    frontier = layers[0]
    total = 1
    while frontier.size:
        new_rows = []
        for grows in gens:
            prod = _batch_mul(frontier, grows, d)
            buf = prod.tobytes()
            for i in range(prod.shape[0]):
                key = buf[i * rowbytes:(i + 1) * rowbytes]
                if key not in seen:
                    seen.add(key)
                    new_rows.append(np.frombuffer(key, dtype=np.uint32))
        total += len(new_rows)
        if total > cap:
            raise CapExceeded(f"group closure exceeded cap {cap}")
        frontier = np.array(new_rows, dtype=np.uint32) if new_rows else np.empty((0, d), np.uint32)
        if materialize and frontier.size:
            layers.append(frontier)
    if materialize:
        return total, np.concatenate(layers, axis=0)
    return total, None


def group_order(G: MatrixGroup, cap: Optional[int] = None) -> int:
    """Exact order by BFS closure; stores the result on the group record.

    Raises CapExceeded if the closure outgrows the cap; a declared order
    on the record is validated against the enumeration when one runs.
    """
    cap = default_cap() if cap is None else cap
    if G.order is not None and not G.order_declared:
        return G.order
    n, _ = _closure_packed(G, cap, materialize=False)
    if G.order is not None and G.order != n:
        raise ExprimError(
            f"declared order {G.order} contradicts enumerated order {n}"
        )
    G.order = n
    G.order_declared = False
    return n


def enumerate_group(G: MatrixGroup, cap: Optional[int] = None) -> list:
    """All elements as GF2Matrix, deterministic order; cached on the group."""
    cap = default_cap() if cap is None else cap
    if G._elements is not None:
        return G._elements
    n, arr = _closure_packed(G, cap, materialize=True)
    elems = [GF2Matrix(G.dim, tuple(int(x) for x in row)) for row in arr]
    if G.order is not None and G.order != n:
        raise ExprimError(
            f"declared order {G.order} contradicts enumerated order {n}"
        )
    G.order = n
    G.order_declared = False
    G._elements = elems
    return elems


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
class ClassRecord:
    label: str
    order: int
    size: int
    fix_dim: int


@dataclass(frozen=True)
class ClassData:
    """Prime-order conjugacy class records plus a 2-power order bound."""

    dim: int
    records: tuple
    h_exp: Fraction

    def __post_init__(self):
        for r in self.records:
            if not _is_prime(r.order):
                raise ExprimError(f"class {r.label}: element order {r.order} is not prime")
            if not (0 <= r.fix_dim <= self.dim):
                raise ExprimError(f"class {r.label}: fixdim out of range")
            if r.size < 1:
                raise ExprimError(f"class {r.label}: empty class")


def prime_order_class_data(G: MatrixGroup, cap: Optional[int] = None) -> ClassData:
    """Conjugacy classes of prime-order elements, by full enumeration.

    Classes are found by conjugation closure under the generators; sizes
    and fixed-space dimensions are exact.
    """
    from .gf2 import fixed_space_dim

    elems = enumerate_group(G, cap)
    order = len(elems)
    ginv = [inverse(g) for g in G.generators]
    elem_orders = {}
    for e in elems:
        elem_orders[e.rows] = e.order()
    records = []
    assigned = set()
    counter = {}
    for e in elems:
        if e.rows in assigned:
            continue
        o = elem_orders[e.rows]
        if not _is_prime(o):
            continue
        # conjugation closure from e
        cls = {e.rows}
        stack = [e]
        while stack:
            x = stack.pop()
            for g, gi in zip(G.generators, ginv):
                y = gi * x * g
                if y.rows not in cls:
                    cls.add(y.rows)
                    stack.append(y)
        assigned |= cls
        counter[o] = counter.get(o, 0) + 1
        label = f"{o}{chr(ord('a') + counter[o] - 1)}"
        records.append(ClassRecord(label, o, len(cls), fixed_space_dim(e)))
    h_exp = Fraction((order - 1).bit_length() if order > 1 else 0)
    return ClassData(G.dim, tuple(records), h_exp)


def _closure_contains_all(gens: Sequence[GF2Matrix], target_order: int, cap: int) -> bool:
    """True iff the closure of gens has exactly target_order elements."""
    seen = {GF2Matrix.identity(gens[0].dim).rows}
    frontier = [GF2Matrix.identity(gens[0].dim)]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y.rows not in seen:
                    seen.add(y.rows)
                    if len(seen) > min(cap, target_order):
                        return False
                    nxt.append(y)
        frontier = nxt
    return len(seen) == target_order


def alpha_bruteforce(G: MatrixGroup, x: GF2Matrix, cap: Optional[int] = None):
    """Minimal size of a generating subset of the class of x; None if no
    subset of the class generates.

    Exhaustive search over k-subsets of x^G with the first element pinned
    to x (valid by conjugacy).  Intended for small simple groups.
    """
    cap = default_cap() if cap is None else cap
    if not _is_prime(x.order()):
        raise ExprimError("alpha is defined for prime-order elements only")
    elems = enumerate_group(G, cap)
    order = len(elems)
    ginv = [inverse(g) for g in G.generators]
    cls = {x.rows: x}
    stack = [x]
    while stack:
        y = stack.pop()
        for g, gi in zip(G.generators, ginv):
            z = gi * y * g
            if z.rows not in cls:
                cls[z.rows] = z
                stack.append(z)
    cl = [cls[k] for k in sorted(cls)]
    if not _closure_contains_all(cl, order, cap):
        return None
    if _closure_contains_all([x], order, cap):
        return 1
    for s2 in cl:
        if _closure_contains_all([x, s2], order, cap):
            return 2
    n = len(cl)
    for i in range(n):
        for j in range(i, n):
            if _closure_contains_all([x, cl[i], cl[j]], order, cap):
                return 3
    # classes needing alpha > 3 do not occur at the sizes this search targets
    for k in range(4, n + 1):
        from itertools import combinations

        for combo in combinations(range(n), k - 1):
            if _closure_contains_all([x] + [cl[i] for i in combo], order, cap):
                return k
    return None


# ---------------------------------------------------------------------------
# permutation helpers


def check_perm(p: Sequence[int], n: int):
    if sorted(p) != list(range(n)):
        raise ExprimError("not a permutation")


def perm_matrix(p: Sequence[int]) -> GF2Matrix:
    """Permutation matrix: e_i -> e_{p(i)} (0-based images)."""
    n = len(p)
    check_perm(p, n)
    return GF2Matrix(n, tuple(1 << p[i] for i in range(n)))


def perm_matrix_group(perms: Sequence[Sequence[int]], name: Optional[str] = None,
                      order: Optional[int] = None, order_declared: bool = False) -> MatrixGroup:
    mats = tuple(perm_matrix(p) for p in perms)
    return MatrixGroup(mats[0].dim, mats, order=order, name=name,
                       order_declared=order_declared)


# ---------------------------------------------------------------------------
# classical group builders

_GL_ORDER_CACHE = {}


def gl_order(d: int) -> int:
    if d not in _GL_ORDER_CACHE:
        n = 1
        for i in range(d):
            n *= (1 << d) - (1 << i)
        _GL_ORDER_CACHE[d] = n
    return _GL_ORDER_CACHE[d]


def sp_order(m: int) -> int:
    n = 1 << (m * m)
    for i in range(1, m + 1):
        n *= (1 << (2 * i)) - 1
    return n


def omega_order(m: int, eps: int) -> int:
    n = 1 << (m * (m - 1))
    n *= (1 << m) - eps
    for i in range(1, m):
        n *= (1 << (2 * i)) - 1
    return n


def _cycle_matrix(d: int) -> GF2Matrix:
    return GF2Matrix(d, tuple(1 << ((i + 1) % d) for i in range(d)))


def _transvection_e(d: int, i: int, j: int) -> GF2Matrix:
    """Elementary transvection: e_i -> e_i + e_j."""
    rows = [1 << k for k in range(d)]
    rows[i] |= 1 << j
    return GF2Matrix(d, tuple(rows))


def _symplectic_gram(m: int) -> list:
    """Gram rows for the form with B(e_i, f_i) = 1; basis e_1..e_m, f_1..f_m."""
    d = 2 * m
    rows = [0] * d
    for i in range(m):
        rows[i] = 1 << (m + i)
        rows[m + i] = 1 << i
    return rows


def preserves_form(g: GF2Matrix, gram: Sequence[int]) -> bool:
    """Row-vector convention: g preserves B iff g * Gram * g^T = Gram."""
    d = g.dim
    gt = g.transpose()
    prod = _mul = g.rows
    step1 = tuple(mul_vec(r, gram) for r in g.rows)
    step2 = tuple(mul_vec(r, gt.rows) for r in step1)
    return step2 == tuple(gram)


def _sp_generators(m: int) -> list:
    """Simple-root subgroup generators of Sp_2m(2) (provably generating)."""
    d = 2 * m
    gens = []
    for i in range(m - 1):
        # e_{i+1} += e_i ; f_i += f_{i+1}
        rows = [1 << k for k in range(d)]
        rows[i + 1] |= 1 << i
        rows[m + i] |= 1 << (m + i + 1)
        gens.append(GF2Matrix(d, tuple(rows)))
        # e_i += e_{i+1} ; f_{i+1} += f_i
        rows = [1 << k for k in range(d)]
        rows[i] |= 1 << (i + 1)
        rows[m + i + 1] |= 1 << (m + i)
        gens.append(GF2Matrix(d, tuple(rows)))
    # long-root transvections in e_m and f_m
    rows = [1 << k for k in range(d)]
    rows[2 * m - 1] |= 1 << (m - 1)
    gens.append(GF2Matrix(d, tuple(rows)))
    rows = [1 << k for k in range(d)]
    rows[m - 1] |= 1 << (2 * m - 1)
    gens.append(GF2Matrix(d, tuple(rows)))
    return gens


def quadratic_form_value(v: int, m: int, eps: int) -> int:
    """Q(v) for the standard form of type eps on GF(2)^{2m}.

    Plus type: sum of x_{e_i} x_{f_i}.  Minus type: same on the first m-1
    hyperbolic pairs, with x_{e_m}^2 + x_{e_m} x_{f_m} + x_{f_m}^2 on the
    last pair.
    """
    q = 0
    for i in range(m):
        a = (v >> i) & 1
        b = (v >> (m + i)) & 1
        q ^= a & b
    if eps == -1:
        a = (v >> (m - 1)) & 1
        b = (v >> (2 * m - 1)) & 1
        q ^= a ^ b
    return q


def _reflection(v: int, gram: Sequence[int], d: int) -> GF2Matrix:
    """Orthogonal transvection r_v: x -> x + B(x, v) v (needs Q(v) = 1)."""
    rows = []
    for i in range(d):
        e = 1 << i
        b = (mul_vec(e, gram) & v).bit_count() & 1
        rows.append(e ^ (v if b else 0))
    return GF2Matrix(d, tuple(rows))


def _orthogonal_gens(m: int, eps: int, full: bool) -> list:
    """Generators of O (full=True) or Omega (full=False) of type eps.

    O is generated by the reflections in all anisotropic vectors
    (Dieudonne; fails only for O_4^+(2), where the builder refuses).
    Omega is generated by the pairwise products r_1 r_i, since the Dickson
    invariant of a product of reflections is its length mod 2.
    """
    d = 2 * m
    gram = _symplectic_gram(m)
    vecs = [v for v in range(1, 1 << d) if quadratic_form_value(v, m, eps) == 1]
    refs = [_reflection(v, gram, d) for v in vecs]
    if full:
        return refs
    return [refs[0] * r for r in refs[1:]]


def build_classical(family: str, dim: int, validate: bool = True) -> MatrixGroup:
    """Standard generators for gl, sp, omega+/-, o+/- in the given dimension.

    Orders are validated by enumeration wherever that is cheap (gl d<=4,
    sp d<=6, orthogonal d<=6); beyond that the recipes are the provable
    ones (elementary + cycle for GL, simple-root subgroups for Sp,
    reflection products for the orthogonal groups).
    """
    if family == "gl":
        if dim < 2:
            raise ExprimError("gl needs dim >= 2")
        gens = [_cycle_matrix(dim), _transvection_e(dim, 0, 1)]
        G = MatrixGroup(dim, tuple(gens), name=f"L{dim}(2)")
        if validate and dim <= 4:
            if group_order(G) != gl_order(dim):
                raise ExprimError("gl generator validation failed")
        else:
            G.order = gl_order(dim)
            G.order_declared = True
        return G
    if family == "sp":
        if dim < 2 or dim % 2:
            raise ExprimError("sp needs even dim >= 2")
        m = dim // 2
        gens = _sp_generators(m)
        gram = _symplectic_gram(m)
        for g in gens:
            if not preserves_form(g, gram):
                raise ExprimError("symplectic generator does not preserve the form")
        G = MatrixGroup(dim, tuple(gens), name=f"Sp{dim}(2)")
        if validate and dim <= 6:
            if group_order(G) != sp_order(m):
                raise ExprimError("sp generator validation failed")
        else:
            G.order = sp_order(m)
            G.order_declared = True
        return G
    if family in ("omega+", "omega-", "o+", "o-"):
        if dim < 4 or dim % 2:
            raise ExprimError("orthogonal families need even dim >= 4")
        eps = 1 if family.endswith("+") else -1
        full = family in ("o+", "o-")
        m = dim // 2
        if dim == 4 and eps == 1:
            raise ExprimError("O_4^+(2) is not generated by reflections; unsupported")
        gens = _orthogonal_gens(m, eps, full)
        ename = "+" if eps == 1 else "-"
        name = (f"O{dim}{ename}(2)" if full else f"Omega{dim}{ename}(2)")
        expected = omega_order(m, eps) * (2 if full else 1)
        G = MatrixGroup(dim, tuple(gens), name=name)
        if validate and dim <= 6:
            if group_order(G) != expected:
                raise ExprimError("orthogonal generator validation failed")
        else:
            G.order = expected
            G.order_declared = True
        return G
    raise ExprimError(f"unknown classical family {family!r}")


# ---------------------------------------------------------------------------
# fully deleted permutation module


def build_deleted_perm_module(perms: Sequence[Sequence[int]],
                              name: Optional[str] = None,
                              order: Optional[int] = None,
                              order_declared: bool = False) -> MatrixGroup:
    """Action on (sum-zero subspace)/(all-ones line if n is even) over GF(2).

    dim = n-1 for odd n, n-2 for even n.  Matrices are written in an
    echelonised basis of the section.
    """
    n = len(perms[0])
    if n < 3:
        raise ExprimError("need at least 3 points")
    for p in perms:
        check_perm(p, n)
        if len(p) != n:
            raise ExprimError("permutation degrees differ")
    # sum-zero basis: b_i = e_i + e_{n-1}, i = 0..n-2
    sub = [(1 << i) | (1 << (n - 1)) for i in range(n - 1)]
    quot_out = [(1 << n) - 1] if n % 2 == 0 else []
    mats = []
    for p in perms:
        prows = [1 << p[i] for i in range(n)]
        mats.append(section_matrix(prows, n, sub, quot_out))
    d = n - 1 - len(quot_out)
    return MatrixGroup(d, tuple(mats), name=name, order=order,
                       order_declared=order_declared)


# ---------------------------------------------------------------------------
# semilinear groups inside GammaL_1(2^d)

# lexicographically least primitive polynomial of each degree (bitmask,
# bit i = coefficient of t^i); cross-checked against brute-force
# primitivity testing in the test suite
PRIMITIVE_POLY = {
    2: 0b111, 3: 0b1011, 4: 0b10011, 5: 0b100101, 6: 0b1000011,
    7: 0b10000011, 8: 0b100011101, 9: 0b1000010001, 10: 0b10000001001,
    11: 0b100000000101, 12: 0b1000001010011, 13: 0b10000000011011,
    14: 0b100000000101011, 15: 0b1000000000000011, 16: 0b10000000000101101,
    17: 0b100000000000001001, 18: 0b1000000000000100111,
    19: 0b10000000000000100111, 20: 0b100000000000000001001,
    21: 0b1000000000000000000101, 22: 0b10000000000000000000011,
    23: 0b100000000000000000100001, 24: 0b1000000000000000000011011,
}


def field_mul(a: int, b: int, mod: int, d: int) -> int:
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if (a >> d) & 1:
            a ^= mod
    return r


def field_pow(a: int, n: int, mod: int, d: int) -> int:
    r = 1
    while n:
        if n & 1:
            r = field_mul(r, a, mod, d)
        a = field_mul(a, a, mod, d)
        n >>= 1
    return r


def semilinear_report(d: int, r: int, e: int) -> dict:
    """Validity data for Z_r.Z_e <= GammaL_1(2^d): ppd and primality checks."""
    q = (1 << d) - 1
    rep = {
        "divides": q % r == 0,
        "prime": _is_prime(r),
        "ppd": q % r == 0 and all(((1 << i) - 1) % r != 0 for i in range(1, d)),
        "e_divides_d": d % e == 0,
    }
    return rep


def prune_generators(G: MatrixGroup, cap: Optional[int] = None) -> MatrixGroup:
    """Smallest prefix-greedy generating subset with the same (enumerated) order.

    Only for enumerable groups; used when freezing corpus files so the
    bundled generator sets stay small.
    """
    cap = default_cap() if cap is None else cap
    order = group_order(G, cap)
    gens = list(G.generators)
    keep: list[GF2Matrix] = []
    for i, g in enumerate(gens):
        keep.append(g)
        if _closure_contains_all(keep, order, cap):
            # greedily drop earlier ones that are no longer needed
            j = 0
            while j < len(keep) - 1:
                trial = keep[:j] + keep[j + 1:]
                if trial and _closure_contains_all(trial, order, cap):
                    keep = trial
                else:
                    j += 1
            return MatrixGroup(G.dim, tuple(keep), order=order, name=G.name)
    raise ExprimError("generators do not generate the recorded order")


def build_semilinear(d: int, r: int, e: int) -> MatrixGroup:
    """Z_r.Z_e inside GammaL_1(2^d) <= GL_d(2): multiplication by an element
    of multiplicative order r plus the field automorphism x -> x^(2^(d/e)).

    Errors on e not dividing d or r not dividing 2^d - 1.  Primality and
    the primitive-prime-divisor condition are reported (semilinear_report),
    not enforced, so composite-r controls such as Z_15.Z_4 can be built.
    """
    if d < 2 or d > 24:
        raise ExprimError("semilinear builder supports 2 <= d <= 24")
    if d % e:
        raise ExprimError(f"e = {e} does not divide d = {d}")
    q = (1 << d) - 1
    if q % r:
        raise ExprimError(f"r = {r} does not divide 2^{d} - 1 = {q}")
    mod = PRIMITIVE_POLY[d]
    t = 0b10
    zeta = field_pow(t, q // r, mod, d)
    mult_rows = tuple(field_mul(field_pow(t, i, mod, d), zeta, mod, d) for i in range(d))
    gens = [GF2Matrix(d, mult_rows)]
    if e > 1:
        k = d // e
        frob_rows = tuple(field_pow(field_pow(t, i, mod, d), 1 << k, mod, d)
                          for i in range(d))
        gens.append(GF2Matrix(d, frob_rows))
    G = MatrixGroup(d, tuple(gens), name=f"Z{r}.Z{e} in GammaL1(2^{d})")
    if r * e <= 1 << 16:
        if group_order(G) != r * e:
            raise ExprimError("semilinear order validation failed")
    return G
