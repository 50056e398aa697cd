"""Module-theoretic computations: spinning, irreducibility, chopping.

The irreducibility test is the usual randomized one: pick random sums of
short words in the generators until a singular element theta of the
group algebra turns up, spin every vector of its null space, and spin one
null-space vector of theta-transpose in the dual module (Norton's
criterion).  The randomized search is seeded and budgeted; for dim <= 14
an exhausted budget falls back to spinning every nonzero vector, which
decides irreducibility unconditionally.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import ExprimError, ResourceLimit
from .gf2 import (
    Echelon,
    GF2Matrix,
    GF2Vector,
    kernel_rows,
    mul_vec,
    section_matrix,
    transpose_rows,
)

__all__ = ["spin", "is_irreducible", "chop", "Constituent", "irreducible_exhaustive"]

WORD_LENGTH = 8
CANDIDATE_BUDGET = 512
NULLITY_CAP = 6
EXHAUSTIVE_DIM = 14


def default_seed() -> int:
    env = os.environ.get("EXPRIM_SEED")
    return int(env) if env else 1


def _gen_rows(gens: Sequence[GF2Matrix]) -> list:
    if not gens:
        raise ExprimError("at least one generator required")
    d = gens[0].dim
    for g in gens:
        if g.dim != d:
            raise ExprimError("generator dimension mismatch")
    return [g.rows for g in gens]


def _spin_echelon(gen_rows: Sequence[tuple], dim: int, start: int) -> Echelon:
    ech = Echelon(dim)
    ech.add(start)
    queue = [ech.pivot_row[start.bit_length() - 1]]
    while queue:
        v = queue.pop()
        for rows in gen_rows:
            w = ech.reduce(mul_vec(v, rows))
            if w:
                ech.add(w)
                queue.append(ech.pivot_row[w.bit_length() - 1])
            if ech.spans_all():
                return ech
    return ech


def spin(gens: Sequence[GF2Matrix], v) -> list:
    """Echelonised basis of the smallest subspace containing v and closed
    under the generators.  v may be a GF2Vector or a packed int."""
    gen_rows = _gen_rows(gens)
    dim = gens[0].dim
    bits = v.bits if isinstance(v, GF2Vector) else int(v)
    if bits == 0:
        raise ExprimError("cannot spin the zero vector")
    ech = _spin_echelon(gen_rows, dim, bits)
    basis = sorted(ech.basis(), key=lambda x: x.bit_length())
    # closure property: every generator keeps the span invariant
    for b in basis:
        for rows in gen_rows:
            assert mul_vec(b, rows) in ech, "spin closure violated"
    return [GF2Vector(dim, b) for b in basis]


def irreducible_exhaustive(gens: Sequence[GF2Matrix]):
    """Decide irreducibility by spinning every nonzero vector.

    Independent oracle for small dimensions; returns (bool, witness).
    """
    gen_rows = _gen_rows(gens)
    dim = gens[0].dim
    for v in range(1, 1 << dim):
        ech = _spin_echelon(gen_rows, dim, v)
        if not ech.spans_all():
            basis = sorted(ech.basis(), key=lambda x: x.bit_length())
            return False, [GF2Vector(dim, b) for b in basis]
    return True, None


def _dual_rows(gen_rows: Sequence[tuple], dim: int) -> list:
    """Generator row sets for the dual module (transposed generators)."""
    return [tuple(transpose_rows(rows, dim)) for rows in gen_rows]


def _random_theta(rng: random.Random, gen_rows: Sequence[tuple], dim: int,
                  max_len: int) -> list:
    """A random sum of two or three short generator words, as row list."""
    nterms = rng.choice((2, 2, 3))
    acc = [0] * dim
    for _ in range(nterms):
        length = rng.randint(1, max_len)
        word = list(GF2Matrix.identity(dim).rows)
        for _ in range(length):
            rows = gen_rows[rng.randrange(len(gen_rows))]
            word = [mul_vec(r, rows) for r in word]
        acc = [a ^ w for a, w in zip(acc, word)]
    if rng.random() < 0.25:
        acc = [a ^ (1 << i) for i, a in enumerate(acc)]
    return acc


def is_irreducible(gens: Sequence[GF2Matrix], seed: Optional[int] = None):
    """(irreducible?, witness): witness is a proper invariant subspace basis
    when reducible, None when irreducible.

    The boolean is seed-independent; the witness may vary with the seed.
    Raises ResourceLimit when dim > 14 and the randomized budget runs out.
    """
    gen_rows = _gen_rows(gens)
    dim = gens[0].dim
    if dim == 1:
        return True, None
    rng = random.Random(default_seed() if seed is None else seed)
    dual = _dual_rows(gen_rows, dim)
    for max_len in (WORD_LENGTH, 2 * WORD_LENGTH):
        for _ in range(CANDIDATE_BUDGET):
            theta = _random_theta(rng, gen_rows, dim, max_len)
            ker = kernel_rows(theta, dim)
            if not ker or len(ker) > NULLITY_CAP:
                continue
            # every nonzero vector of ker(theta) must spin to the full module
            span = _all_combinations(ker)
            proper = None
            for v in span:
                ech = _spin_echelon(gen_rows, dim, v)
                if not ech.spans_all():
                    proper = ech
                    break
            if proper is not None:
                basis = sorted(proper.basis(), key=lambda x: x.bit_length())
                return False, [GF2Vector(dim, b) for b in basis]
            tker = kernel_rows(transpose_rows(theta, dim), dim)
            # nullity(theta^T) = nullity(theta) > 0
            u = tker[0]
            dech = _spin_echelon(dual, dim, u)
            if dech.spans_all():
                return True, None
            # the dual submodule's annihilator is a proper invariant subspace
            dual_basis = dech.basis()
            ann = kernel_rows(transpose_rows(dual_basis, dim), dim)
            wit = Echelon(dim)
            for v in ann:
                wit.add(v)
            basis = sorted(wit.basis(), key=lambda x: x.bit_length())
            for b in basis:
                for rows in gen_rows:
                    assert mul_vec(b, rows) in wit, "annihilator not invariant"
            return False, [GF2Vector(dim, b) for b in basis]
    if dim <= EXHAUSTIVE_DIM:
        return irreducible_exhaustive(gens)
    raise ResourceLimit(
        f"irreducibility search budget exhausted at dim {dim} "
        f"({2 * CANDIDATE_BUDGET} candidates)"
    )


def _all_combinations(basis: Sequence[int]) -> list:
    """All nonzero vectors of the span of the given independent rows."""
    span = [0]
    for b in basis:
        span += [s ^ b for s in span]
    return span[1:]


@dataclass(frozen=True)
class Constituent:
    """An irreducible composition factor: its dimension and acting matrices."""

    dim: int
    gens: tuple


def chop(gens: Sequence[GF2Matrix], seed: Optional[int] = None) -> list:
    """Composition factors with multiplicity, sorted by dimension.

    Recursive split along is_irreducible witnesses; constituent matrices
    are written in echelonised bases, so the output is deterministic for a
    fixed seed.
    """
    gen_rows = _gen_rows(gens)
    dim = gens[0].dim
    irr, witness = is_irreducible(gens, seed=seed)
    if irr:
        return [Constituent(dim, tuple(gens))]
    wbasis = [w.bits for w in witness]
    sub_gens = [section_matrix(rows, dim, wbasis, []) for rows in gen_rows]
    full = [1 << i for i in range(dim)]
    quot_gens = [section_matrix(rows, dim, full, wbasis) for rows in gen_rows]
    pieces = chop(sub_gens, seed=seed) + chop(quot_gens, seed=seed)
    pieces.sort(key=lambda c: c.dim)
    if sum(c.dim for c in pieces) != dim:
        raise ExprimError("constituent dimensions do not sum to the module dimension")
    return pieces
