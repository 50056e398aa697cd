"""Type-A Weyl orbit sizes for 0/1 weights and the dimension floor check.

The Weyl group of A_ell is Sym_{ell+1}; the stabiliser of a 0/1 weight is
the parabolic generated by the simple transpositions at its zero
positions, a direct product of symmetric groups indexed by the maximal
zero runs.  Orbit size is therefore (ell+1)! divided by the product of
(run length + 1)! over maximal zero runs, in exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import Sequence

from .errors import ExprimError

__all__ = ["Weight", "weyl_orbit_size", "unitary_dim_floor_check", "FloorReport"]


@dataclass(frozen=True)
class Weight:
    """A 0/1 (2-restricted) weight for A_ell: coefficients c_1..c_ell."""

    ell: int
    coeffs: tuple

    def __post_init__(self):
        if self.ell < 1:
            raise ExprimError("rank must be at least 1")
        if len(self.coeffs) != self.ell:
            raise ExprimError("coefficient count must equal the rank")
        if any(c not in (0, 1) for c in self.coeffs):
            raise ExprimError("coefficients must be 0 or 1")

    @classmethod
    def fundamental(cls, ell: int, i: int) -> "Weight":
        return cls(ell, tuple(1 if j == i - 1 else 0 for j in range(ell)))

    @classmethod
    def from_bits(cls, ell: int, bits: str) -> "Weight":
        if len(bits) != ell or any(c not in "01" for c in bits):
            raise ExprimError("expected an ell-character 0/1 string")
        return cls(ell, tuple(int(c) for c in bits))

    def is_trivial(self) -> bool:
        return not any(self.coeffs)

    def is_symmetric(self) -> bool:
        """Invariance under the diagram flip c_i = c_{ell+1-i}."""
        return self.coeffs == self.coeffs[::-1]

    def orthogonal_tail_ok(self) -> bool:
        """The type-D constraint c_{ell-1} = c_ell (validation flag only)."""
        return self.ell < 2 or self.coeffs[-2] == self.coeffs[-1]


def weyl_orbit_size(w: Weight) -> int:
    """|W : W_lambda| for W = Sym_{ell+1}, exact."""
    if w.is_trivial():
        raise ExprimError("the trivial weight has no meaningful orbit")
    size = factorial(w.ell + 1)
    run = 0
    for c in list(w.coeffs) + [1]:
        if c == 0:
            run += 1
        else:
            if run:
                size //= factorial(run + 1)
            run = 0
    return size


def weyl_orbit_bruteforce(w: Weight) -> int:
    """Oracle: enumerate the Sym_{ell+1}-orbit of the weight realized in
    permutation coordinates (lambda_i = e_1 + ... + e_i).  Usable for
    ell <= 7 or so."""
    from itertools import permutations

    n = w.ell + 1
    vec = [0] * n
    for i, c in enumerate(w.coeffs, start=1):
        if c:
            for j in range(i):
                vec[j] += 1
    return len({tuple(vec[p] for p in perm) for perm in permutations(range(n))})


@dataclass(frozen=True)
class FloorReport:
    ell: int
    minimal_k: int
    floor: int
    floor_formula_ok: bool      # floor equals ell (ell^2-1)(ell-2)/4
    k_values: tuple             # (k, orbit lower bound) pairs scanned
    sweep_checked: bool         # exhaustive symmetric-weight sweep ran
    sweep_ok: bool
    exceptions: tuple           # symmetric weights exempt from the floor

    @property
    def ok(self) -> bool:
        return (self.minimal_k == 2 and self.floor_formula_ok
                and (self.sweep_ok or not self.sweep_checked))


def _sym_weight_floor_value(ell: int, k: int) -> int:
    return factorial(ell + 1) // (factorial(k) ** 2 * factorial(ell - 2 * k + 1))


def unitary_dim_floor_check(ell: int, sweep_limit: int = 13) -> FloorReport:
    """Verify the symmetric-weight dimension floor at rank ell >= 9.

    Scans 2 <= k < (ell+1)/2 for the minimal stabiliser-bound value
    (ell+1)!/(k! k! (ell-2k+1)!), checks the minimum sits at k = 2 and
    equals ell (ell^2-1)(ell-2)/4, and (for ell <= sweep_limit) checks
    exhaustively that every nontrivial symmetric 0/1 weight other than the
    two exempt shapes has Weyl orbit size at least that floor.
    """
    if ell < 9:
        raise ExprimError("floor check applies for rank >= 9")
    ks = []
    for k in range(2, (ell + 1) // 2 + (0 if (ell + 1) % 2 == 0 else 1)):
        if 2 * k >= ell + 1:
            break
        ks.append((k, _sym_weight_floor_value(ell, k)))
    best_k, floor = min(ks, key=lambda t: (t[1], t[0]))
    formula = ell * (ell ** 2 - 1) * (ell - 2) // 4
    report_exceptions = []
    sweep_checked = ell <= sweep_limit
    sweep_ok = True
    if sweep_checked:
        half = (ell + 1) // 2
        for mask in range(1, 1 << half):
            coeffs = [0] * ell
            for i in range(half):
                if (mask >> i) & 1:
                    coeffs[i] = 1
                    coeffs[ell - 1 - i] = 1
            w = Weight(ell, tuple(coeffs))
            if w.is_trivial():
                continue
            # exempt shapes: the adjoint weight c_1 = c_ell = 1 (alone) and,
            # for odd rank, the middle fundamental weight
            adjoint = sum(coeffs) == 2 and coeffs[0] == 1 and coeffs[-1] == 1
            middle = (ell % 2 == 1 and sum(coeffs) == 1
                      and coeffs[(ell - 1) // 2] == 1)
            size = weyl_orbit_size(w)
            if adjoint or middle:
                report_exceptions.append((w.coeffs, size))
                continue
            if size < floor:
                sweep_ok = False
                report_exceptions.append((w.coeffs, size))
    return FloorReport(ell, best_k, floor, floor == formula, tuple(ks),
                       sweep_checked, sweep_ok, tuple(report_exceptions))
