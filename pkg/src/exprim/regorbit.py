"""Regular-orbit certification and the counting/alpha bounds.

Four routes to the same question (does H have an orbit on V with trivial
point stabilisers?) at different scales:

  * regular_orbit_exact: orbit enumeration, needs |H| and d <= 26;
  * fixed_space_cover: the complementary sweep marking every 1-eigenspace
    of every prime-order element (no regular orbit iff the union covers V);
  * counting_bound: the class-size/fixed-dim sum certificate, exact
    integer arithmetic on supplied class data;
  * alpha_criterion: the generation-number form of the same sum, for
    groups far beyond enumeration, evaluated by the exact power-sum engine.

Plus the not-EP corollary: a regular orbit of a group of non-prime order
rules out extreme primitivity (the trivial stabiliser is non-maximal).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .action import orbits_on_nonzero
from .bounds import PowerSumProblem, compare_power_sums
from .errors import ExprimError
from .gf2 import GF2Vector, fixed_space_basis
from .groups import ClassData, MatrixGroup, enumerate_group, group_order

__all__ = [
    "regular_orbit_exact",
    "fixed_space_cover",
    "counting_bound",
    "alpha_criterion",
    "not_ep_from_regular_orbit",
]


def regular_orbit_exact(G: MatrixGroup, cap: Optional[int] = None):
    """(exists, witness): whether some orbit on nonzero vectors has size |G|.

    Needs the group order; computes it by enumeration if absent.
    """
    if G.order is None or G.order_declared:
        group_order(G, cap)
    dec = orbits_on_nonzero(G)
    for label, size in enumerate(dec.sizes):
        if size == G.order:
            return True, GF2Vector(G.dim, dec.representatives[label])
    return False, None


def _span_points(basis: Sequence[int]) -> np.ndarray:
    pts = np.zeros(1, dtype=np.int64)
    for b in basis:
        pts = np.concatenate([pts, pts ^ b])
    return pts


def fixed_space_cover(G: MatrixGroup, cap: Optional[int] = None) -> bool:
    """True iff every nonzero vector is fixed by some prime-order element.

    Marks C_V(x) for every prime-order x by enumerating the kernel span of
    x+I; the total work is the sum of 2^fixdim over elements, which stays
    far below |G| * 2^d.
    """
    from .groups import _is_prime

    elems = enumerate_group(G, cap)
    d = G.dim
    covered = np.zeros(1 << d, dtype=bool)
    covered[0] = True
    remaining = (1 << d) - 1
    for x in elems:
        if x.is_identity() or not _is_prime(x.order()):
            continue
        basis = fixed_space_basis(x)
        if not basis:
            continue
        pts = _span_points(basis)
        fresh = pts[~covered[pts]]
        if fresh.size:
            covered[fresh] = True
            remaining -= fresh.size
            if remaining == 0:
                return True
    return remaining == 0


def counting_bound(data: ClassData, d: int) -> str:
    """'regular-orbit-certified' iff 2^d > sum over classes of size * 2^fixdim.

    Exact integer arithmetic; monotone in d for fixed class data.
    """
    total = sum(r.size << r.fix_dim for r in data.records)
    return "regular-orbit-certified" if (1 << d) > total else "inconclusive"


def alpha_criterion(h_exp: Fraction, profile: Sequence, d: int,
                    special: Sequence = ()) -> str:
    """Certify a regular orbit from generation numbers alone.

    profile: (alpha_bound, class_count_exponent) pairs; each contributes a
    term 2^(class_count_exponent + (1 - 1/alpha) d), where the class-count
    exponent defaults to h_exp when given as None.  special: (count,
    alpha) pairs with exact integer counts (transvection-style classes).
    Certified iff 2^d strictly exceeds the resulting sum, decided exactly.
    """
    terms = []
    for alpha, cexp in profile:
        if alpha < 2:
            raise ExprimError("alpha bounds must be at least 2")
        cexp = h_exp if cexp is None else Fraction(cexp)
        terms.append((1, cexp + (1 - Fraction(1, alpha)) * d))
    for count, alpha in special:
        if alpha < 2:
            raise ExprimError("alpha bounds must be at least 2")
        terms.append((int(count), (1 - Fraction(1, alpha)) * d))
    problem = PowerSumProblem(Fraction(d), tuple(terms))
    verdict = compare_power_sums(problem)
    return "regular-orbit-certified" if verdict == "holds" else "inconclusive"


def not_ep_from_regular_orbit(G: MatrixGroup, almost_simple: bool = False,
                              cap: Optional[int] = None) -> str:
    """'not-EP' when G has a regular orbit and the trivial subgroup is
    non-maximal (|G| not prime); otherwise 'no-conclusion'.

    The guard matters: a cyclic group of prime order has regular orbits
    and is still extremely primitive.  For almost simple G the guard is
    automatic.
    """
    from .groups import _is_prime

    exists, _ = regular_orbit_exact(G, cap)
    if not exists:
        return "no-conclusion"
    if almost_simple or not _is_prime(G.order):
        return "not-EP"
    return "no-conclusion"
