"""Exact certification of strict inequalities between sums of powers of two.

compare_power_sums decides 2^lhs > sum of c_i * 2^(e_i) with rational
exponents, exactly: exponents go to a common denominator L, both sides
are reduced modulo the relation x^L = 2 for x = 2^(1/L) (x^L - 2 is the
minimal polynomial, so the reduced slot vector is zero iff the sides are
equal), and otherwise the sign of the difference is found by integer
interval bounds on the L-th roots at escalating precision, which must
terminate because the value is nonzero.

The catalog pins every displayed inequality of the classification's
symplectic/orthogonal/unitary/E8 analysis to a named entry; tail
certification turns "holds for all l >= l0" claims into polynomial
positivity checks (Sturm sequences over the rationals).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .errors import ExprimError

__all__ = [
    "PowerSumProblem",
    "BoundReport",
    "compare_power_sums",
    "certify_named_bound",
    "tail_certify",
    "catalog_names",
    "catalog_entry",
    "Poly",
    "RatFunc",
]


# ---------------------------------------------------------------------------
# exact comparison engine


@dataclass(frozen=True)
class PowerSumProblem:
    """Strict inequality 2^lhs_exp > sum of coeff * 2^exp over rhs_terms."""

    lhs_exp: Fraction
    rhs_terms: tuple  # of (coeff: positive int, exp: Fraction)

    def __post_init__(self):
        object.__setattr__(self, "lhs_exp", Fraction(self.lhs_exp))
        terms = tuple((int(c), Fraction(e)) for c, e in self.rhs_terms)
        for c, _ in terms:
            if c <= 0:
                raise ExprimError("term coefficients must be positive")
        object.__setattr__(self, "rhs_terms", terms)


def iroot(n: int, k: int) -> int:
    """floor(n^(1/k)) by integer Newton iteration.

    Seeded from a float estimate of the root's mantissa; a bare power-of-two
    seed would make Newton crawl linearly at rate (1 - 1/k) for large k.
    """
    if n < 0 or k < 1:
        raise ExprimError("iroot needs n >= 0, k >= 1")
    if n == 0 or k == 1:
        return n
    bl = n.bit_length()
    e = bl / k  # n < 2^bl, so 2^e overestimates the root
    mant = 2.0 ** (e - int(e))
    x = int(mant * (1 << 60)) + 1
    shift = int(e) - 60
    x = (x << shift) if shift >= 0 else (x >> -shift)
    x += (x >> 40) + 4  # absorb float rounding; keep the seed above the root
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    while x ** k > n:
        x -= 1
    while (x + 1) ** k <= n:
        x += 1
    return x


def _slot_vector(p: PowerSumProblem):
    """Reduce lhs - rhs modulo x^L = 2 (x = 2^(1/L)); returns (slots, L).

    slots maps residue r in [0, L) to an exact integer coefficient of
    2^(r/L); the represented value is sum slots[r] * 2^(r/L), equal to
    2^lhs - sum c_i 2^(e_i) up to the positive factor 2^shift.
    """
    L = p.lhs_exp.denominator
    for _, e in p.rhs_terms:
        L = L * e.denominator // math.gcd(L, e.denominator)
    nums = [p.lhs_exp * L] + [e * L for _, e in p.rhs_terms]
    nums = [int(x) for x in nums]
    shift = min(nums)
    slots: dict[int, int] = {}
    for sgn_coeff, num in zip([1] + [-c for c, _ in p.rhs_terms], nums):
        q, r = divmod(num - shift, L)
        slots[r] = slots.get(r, 0) + sgn_coeff * (1 << q)
    return {r: v for r, v in slots.items() if v}, L


def power_sum_interval_sign(slots: dict, L: int, bits: int) -> int:
    """Sign of sum slots[r] * 2^(r/L) from precision-`bits` root intervals.

    Returns +1, -1, or 0 when the interval still straddles zero.
    """
    lo = 0
    hi = 0
    for r, v in slots.items():
        k = iroot(1 << (bits * L + r), L)  # floor(2^bits * 2^(r/L))
        if v >= 0:
            lo += v * k
            hi += v * (k + 1)
        else:
            lo += v * (k + 1)
            hi += v * k
    if lo > 0:
        return 1
    if hi < 0:
        return -1
    return 0


def compare_power_sums(p: PowerSumProblem) -> str:
    """'holds' iff 2^lhs strictly exceeds the right-hand sum; total and exact."""
    if not p.rhs_terms:
        return "holds"
    slots, L = _slot_vector(p)
    if not slots:
        return "fails"  # exact equality, so not strictly greater
    if L == 1:
        v = slots[0]
        return "holds" if v > 0 else "fails"
    bits = 64
    while True:
        s = power_sum_interval_sign(slots, L, bits)
        if s > 0:
            return "holds"
        if s < 0:
            return "fails"
        bits *= 2
        if bits > 1 << 20:
            raise ExprimError("interval escalation runaway; slots nonzero yet unseparated")


# ---------------------------------------------------------------------------
# polynomials over Q and positivity on a ray (for tail certification)


@dataclass(frozen=True)
class Poly:
    """Polynomial over Fraction, coeffs low degree first, normalized."""

    coeffs: tuple

    def __post_init__(self):
        cs = [Fraction(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def const(cls, c) -> "Poly":
        return cls((Fraction(c),))

    @classmethod
    def x(cls) -> "Poly":
        return cls((Fraction(0), Fraction(1)))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, o: "Poly") -> "Poly":
        n = max(len(self.coeffs), len(o.coeffs))
        a = list(self.coeffs) + [Fraction(0)] * (n - len(self.coeffs))
        b = list(o.coeffs) + [Fraction(0)] * (n - len(o.coeffs))
        return Poly(tuple(x + y for x, y in zip(a, b)))

    def __sub__(self, o: "Poly") -> "Poly":
        return self + (-o)

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coeffs))

    def __mul__(self, o: "Poly") -> "Poly":
        if self.is_zero() or o.is_zero():
            return Poly(())
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(o.coeffs):
                out[i + j] += a * b
        return Poly(tuple(out))

    def scale(self, c) -> "Poly":
        return Poly(tuple(Fraction(c) * a for a in self.coeffs))

    def derivative(self) -> "Poly":
        return Poly(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def __call__(self, x) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def divmod(self, o: "Poly"):
        if o.is_zero():
            raise ExprimError("polynomial division by zero")
        rem = list(self.coeffs)
        q = [Fraction(0)] * max(0, len(rem) - len(o.coeffs) + 1)
        dlc = o.coeffs[-1]
        while len(rem) >= len(o.coeffs) and any(c != 0 for c in rem):
            while rem and rem[-1] == 0:
                rem.pop()
            if len(rem) < len(o.coeffs):
                break
            f = rem[-1] / dlc
            k = len(rem) - len(o.coeffs)
            q[k] = f
            for i, c in enumerate(o.coeffs):
                rem[k + i] -= f * c
            rem.pop()
        return Poly(tuple(q)), Poly(tuple(rem))


def _poly_gcd(a: Poly, b: Poly) -> Poly:
    while not b.is_zero():
        _, r = a.divmod(b)
        a, b = b, r
    if a.is_zero():
        return a
    return a.scale(1 / a.coeffs[-1])


def _sign_variations(signs: Sequence[int]) -> int:
    signs = [s for s in signs if s != 0]
    return sum(1 for x, y in zip(signs, signs[1:]) if x * y < 0)


def count_roots_beyond(p: Poly, a: Fraction) -> int:
    """Number of distinct real roots of p in the open ray (a, inf); Sturm."""
    if p.is_zero():
        raise ExprimError("zero polynomial has no root count")
    g = _poly_gcd(p, p.derivative()) if p.degree >= 2 else Poly.const(1)
    sf = p if g.degree < 1 else p.divmod(g)[0]
    # deflate any root exactly at a so the interval stays open
    while not sf.is_zero() and sf(a) == 0 and sf.degree >= 1:
        sf, _ = sf.divmod(Poly((-Fraction(a), Fraction(1))))
    if sf.degree < 1:
        return 0
    chain = [sf, sf.derivative()]
    while chain[-1].degree >= 1:
        _, r = chain[-2].divmod(chain[-1])
        if r.is_zero():
            break
        chain.append(-r)
    def sgn(x: Fraction) -> int:
        return (x > 0) - (x < 0)
    at_a = [sgn(q(a)) for q in chain]
    at_inf = [sgn(q.coeffs[-1]) if not q.is_zero() else 0 for q in chain]
    return _sign_variations(at_a) - _sign_variations(at_inf)


def poly_nonneg_on_ray(p: Poly, a: Fraction) -> bool:
    """Sufficient check that p >= 0 on [a, inf): value, leading sign, no
    root beyond a.  Conservative: may return False for polynomials with
    even-order touches beyond a."""
    if p.is_zero():
        return True
    if p(a) < 0:
        return False
    if p.degree == 0:
        return p.coeffs[0] >= 0
    if p.coeffs[-1] < 0:
        return False
    return count_roots_beyond(p, a) == 0


@dataclass(frozen=True)
class RatFunc:
    """Rational function num/den over Q in one variable."""

    num: Poly
    den: Poly = field(default_factory=lambda: Poly.const(1))

    @classmethod
    def const(cls, c) -> "RatFunc":
        return cls(Poly.const(c))

    @classmethod
    def x(cls) -> "RatFunc":
        return cls(Poly.x())

    def __add__(self, o: "RatFunc") -> "RatFunc":
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    def __sub__(self, o: "RatFunc") -> "RatFunc":
        return RatFunc(self.num * o.den - o.num * self.den, self.den * o.den)

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den)

    def __mul__(self, o: "RatFunc") -> "RatFunc":
        return RatFunc(self.num * o.num, self.den * o.den)

    def __call__(self, x) -> Fraction:
        d = self.den(x)
        if d == 0:
            raise ExprimError("rational function pole")
        return self.num(x) / d

    def ge_on_ray(self, c, a) -> bool:
        """self >= c on [a, inf), requiring den > 0 there."""
        a = Fraction(a)
        if not poly_nonneg_on_ray(self.den, a) or self.den(a) == 0:
            return False
        return poly_nonneg_on_ray(self.num - self.den.scale(c), a)

    def nondecreasing_on_ray(self, a) -> bool:
        a = Fraction(a)
        if not poly_nonneg_on_ray(self.den, a) or self.den(a) == 0:
            return False
        p = self.num.derivative() * self.den - self.num * self.den.derivative()
        return poly_nonneg_on_ray(p, a)


def _rf(num_coeffs, den_coeffs=(1,)) -> RatFunc:
    return RatFunc(Poly(tuple(num_coeffs)), Poly(tuple(den_coeffs)))


# ---------------------------------------------------------------------------
# the catalog


@dataclass(frozen=True)
class TailTerm:
    exp: RatFunc       # exponent as a function of the entry parameter
    coeff_log2: RatFunc  # log2ceil of the coefficient (0 for coefficient 1)
    d_coeff: Optional[RatFunc] = None  # coefficient of d, for threshold entries


@dataclass(frozen=True)
class TailBranch:
    start_min: int      # least parameter value this branch is valid from
    parity: Optional[int]  # None, 0 (even) or 1 (odd)
    lhs: RatFunc
    terms: tuple        # of TailTerm
    k_count: int        # bound on the number of concrete terms


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    parameter: str  # 'ell' or 'd'
    domain: Callable[[int], bool]
    domain_text: str
    build: Callable[[int], PowerSumProblem]
    claimed: Callable[[int], Optional[str]]  # the source's verdict, if stated
    claim_text: str
    tail: tuple = ()  # TailBranch objects; empty = no polynomial form


def _binom(n: int, k: int) -> int:
    return math.comb(n, k)


def _ceil_frac(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


def _e8_build(d: int) -> PowerSumProblem:
    return PowerSumProblem(Fraction(d), ((1, 248 + Fraction(10, 11) * d),))


def _uni_terms(ell: int, d) -> tuple:
    d = Fraction(d)
    return ((1, (ell + 1) ** 2 + (1 - Fraction(1, ell + 1)) * d),)


def _symp1_terms(ell: int, d) -> tuple:
    d = Fraction(d)
    return (
        (1, ell * (2 * ell + 1) + (1 - Fraction(1, ell + 3)) * d),
        ((1 << (2 * ell)) - 1, (1 - Fraction(1, 2 * ell + 1)) * d),
    )


def _ort1_terms(ell: int, d) -> tuple:
    d = Fraction(d)
    return (
        (1, ell * (2 * ell - 1) + 1 + (1 - Fraction(1, ell + 3)) * d),
        ((1 << (ell - 1)) * ((1 << ell) + 1), (1 - Fraction(1, 2 * ell)) * d),
    )


def _l3_dim(ell: int) -> int:
    delta = ell % 2
    return _binom(2 * ell, 3) - 2 * (1 + delta) * ell


def _l1l2_dim(ell: int) -> int:
    return 16 * _binom(ell + 1, 3)


def _symp_l3_terms(ell: int, d: int) -> tuple:
    return (
        (1, Fraction(ell * (2 * ell + 1) + d - 4 * ell ** 2 + 16 * ell - 14)),
        ((1 << (2 * ell)) - 1, Fraction(d - 2 * ell ** 2 + 5 * ell - 1)),
    )


def _ort_l3_terms(ell: int, d: int) -> tuple:
    return (
        (1, Fraction(ell * (2 * ell - 1) + 1 + d - 4 * ell ** 2 + 16 * ell - 14)),
        ((1 << (ell - 1)) * ((1 << ell) + 1), Fraction(d - 2 * ell ** 2 + 5 * ell - 1)),
    )


def _symp_spin_build(ell: int) -> PowerSumProblem:
    d = 1 << ell
    terms = [(1, Fraction(ell * (2 * ell + 1)) + Fraction(d, 2))]
    for j in range(1, ell // 2 + 1):
        terms.append((1, Fraction(4 * j * (ell - j) + 1) + Fraction(d, 2)
                      + (1 << (ell - j - 1))))
    return PowerSumProblem(Fraction(d), tuple(terms))


def _ort_spin_build(ell: int) -> PowerSumProblem:
    d = 1 << (ell - 1)
    terms = [(1, Fraction(ell * (2 * ell - 1)) + Fraction(5 * d, 8))]
    for j in range(1, (ell + 1) // 2):
        terms.append((1, Fraction(2 * j * (2 * ell - 2 * j - 1) + 1)
                      + Fraction(d, 2) + (1 << (ell - j - 2))))
    return PowerSumProblem(Fraction(d), tuple(terms))


def _claim_range(lo: int, hi: Optional[int], verdict: str = "holds"):
    def f(n: int) -> Optional[str]:
        if n >= lo and (hi is None or n <= hi):
            return verdict
        return None
    return f


def _uni_spin_claim(ell: int) -> Optional[str]:
    if ell in (9, 11):
        return "fails"
    if ell >= 13 and ell % 2 == 1:
        return "holds"
    return None


# tail helper rational functions of the parameter n
_X = Poly.x()


def _tail_e8() -> tuple:
    lhs = _rf((0, 1))
    term = TailTerm(exp=_rf((248, Fraction(10, 11))), coeff_log2=RatFunc.const(0),
                    d_coeff=RatFunc.const(Fraction(10, 11)))
    return (TailBranch(3626, None, lhs, (term,), 1),)


def _tail_symp_generic() -> tuple:
    # d = 3 n^3 (real threshold; gap grows with d since both d-coefficients < 1)
    d = _rf((0, 0, 0, 3))
    lhs = d
    t1 = TailTerm(exp=_rf((0, 1, 2)) + d - RatFunc(Poly((0, 0, 0, 3)), Poly((3, 1))),
                  coeff_log2=RatFunc.const(0),
                  d_coeff=RatFunc(Poly((2, 1)), Poly((3, 1))))  # (n+2)/(n+3)
    t2 = TailTerm(exp=d - RatFunc(Poly((0, 0, 0, 3)), Poly((1, 2))),
                  coeff_log2=_rf((0, 2)),
                  d_coeff=RatFunc(Poly((0, 2)), Poly((1, 2))))  # 2n/(2n+1)
    return (TailBranch(9, None, lhs, (t1, t2), 2),)


def _tail_ort_generic() -> tuple:
    d = _rf((0, 0, 0, Fraction(8, 3)))
    lhs = d
    t1 = TailTerm(exp=_rf((1, -1, 2)) + d - RatFunc(Poly((0, 0, 0, Fraction(8, 3))), Poly((3, 1))),
                  coeff_log2=RatFunc.const(0),
                  d_coeff=RatFunc(Poly((2, 1)), Poly((3, 1))))
    t2 = TailTerm(exp=d - RatFunc(Poly((0, 0, 0, Fraction(8, 3))), Poly((0, 2))),
                  coeff_log2=_rf((0, 2)),
                  d_coeff=RatFunc(Poly((-1, 2)), Poly((0, 2))))  # (2n-1)/(2n)
    return (TailBranch(9, None, lhs, (t1, t2), 2),)


def _tail_l3(symp: bool) -> tuple:
    # d = C(2n,3) - 2(1+delta)n per parity, with C(2n,3) = (4n^3 - 6n^2 + 2n)/3;
    # both exponent gaps are d-free quadratics
    branches = []
    for parity in (0, 1):
        delta = parity
        d = _rf((0, Fraction(2, 3), -2, Fraction(4, 3))) - _rf((0, 2 + 2 * delta))
        if symp:
            # n(2n+1) + d - 4n^2 + 16n - 14 = d - (2n^2 - 17n + 14)
            t1 = TailTerm(exp=d - _rf((14, -17, 2)), coeff_log2=RatFunc.const(0))
        else:
            # n(2n-1) + 1 + d - 4n^2 + 16n - 14 = d - (2n^2 - 15n + 13)
            t1 = TailTerm(exp=d - _rf((13, -15, 2)), coeff_log2=RatFunc.const(0))
        t2 = TailTerm(exp=d - _rf((1, -5, 2)), coeff_log2=_rf((0, 2)))
        start = 9 if parity == 1 else 10
        branches.append(TailBranch(start, parity, d, (t1, t2), 2))
    return tuple(branches)


_CATALOG: dict[str, CatalogEntry] = {}


def _register(entry: CatalogEntry):
    _CATALOG[entry.name] = entry


_register(CatalogEntry(
    name="e8-alpha", parameter="d",
    domain=lambda d: d >= 1, domain_text="d >= 1",
    build=_e8_build,
    claimed=lambda d: "holds" if d >= 2729 else "fails",
    claim_text="holds for all d >= 3626 (exact threshold d = 2729)",
    tail=_tail_e8(),
))

_register(CatalogEntry(
    name="uni-generic", parameter="ell",
    domain=lambda l: l >= 3, domain_text="ell >= 3",
    build=lambda l: PowerSumProblem(
        Fraction((l + 1) * l * (l - 1) * (l - 2), 4),
        _uni_terms(l, Fraction((l + 1) * l * (l - 1) * (l - 2), 4))),
    claimed=_claim_range(8, None),
    claim_text="holds at the generic unitary dimension floor for ell >= 8",
))

_register(CatalogEntry(
    name="uni-spin", parameter="ell",
    domain=lambda l: l >= 3 and l % 2 == 1, domain_text="odd ell >= 3",
    build=lambda l: PowerSumProblem(
        Fraction(_binom(l + 1, (l + 1) // 2)),
        _uni_terms(l, _binom(l + 1, (l + 1) // 2))),
    claimed=_uni_spin_claim,
    claim_text="fails at ell in {9,11}, holds for odd ell >= 13",
))

_register(CatalogEntry(
    name="symp-generic", parameter="ell",
    domain=lambda l: l >= 4, domain_text="ell >= 4",
    build=lambda l: PowerSumProblem(
        Fraction(_ceil_frac(Fraction(3 * l ** 3))),
        _symp1_terms(l, _ceil_frac(Fraction(3 * l ** 3)))),
    claimed=_claim_range(9, None),
    claim_text="holds for ell >= 9 at d = ceil(3 ell^3)",
    tail=_tail_symp_generic(),
))

_register(CatalogEntry(
    name="symp-spin", parameter="ell",
    domain=lambda l: l >= 2, domain_text="ell >= 2",
    build=_symp_spin_build,
    claimed=_claim_range(9, 12),
    claim_text="holds for 9 <= ell <= 12 at the symplectic spin dimension 2^ell",
))

_register(CatalogEntry(
    name="symp-l1l2", parameter="ell",
    domain=lambda l: l >= 2, domain_text="ell >= 2",
    build=lambda l: PowerSumProblem(
        Fraction(_l1l2_dim(l)),
        ((1, Fraction(l * (2 * l + 1) + _l1l2_dim(l) - 4 * (l - 1) ** 2)),)),
    claimed=_claim_range(9, 11),
    claim_text="holds for ell in {9,10,11} at d = 16 C(ell+1,3)",
))

_register(CatalogEntry(
    name="symp-l1l2-generic", parameter="ell",
    domain=lambda l: l >= 4, domain_text="ell >= 4",
    build=lambda l: PowerSumProblem(
        Fraction(_l1l2_dim(l)), _symp1_terms(l, _l1l2_dim(l))),
    claimed=_claim_range(12, None),
    claim_text="the generic symplectic bound holds at d = 16 C(ell+1,3) for ell >= 12",
))

_register(CatalogEntry(
    name="symp-l3", parameter="ell",
    domain=lambda l: l >= 4, domain_text="ell >= 4",
    build=lambda l: PowerSumProblem(
        Fraction(_l3_dim(l)), _symp_l3_terms(l, _l3_dim(l))),
    claimed=_claim_range(9, None),
    claim_text="holds for all ell >= 9 at the lambda_3 dimension",
    tail=_tail_l3(symp=True),
))

_register(CatalogEntry(
    name="symp-l3-fail", parameter="ell",
    domain=lambda l: l >= 4, domain_text="ell >= 4",
    build=lambda l: PowerSumProblem(
        Fraction(_l3_dim(l)), _symp1_terms(l, _l3_dim(l))),
    claimed=_claim_range(9, None, "fails"),
    claim_text="the generic symplectic bound fails at the lambda_3 dimension, ell >= 9",
))

_register(CatalogEntry(
    name="ort-generic", parameter="ell",
    domain=lambda l: l >= 4, domain_text="ell >= 4",
    build=lambda l: PowerSumProblem(
        Fraction(_ceil_frac(Fraction(8 * l ** 3, 3))),
        _ort1_terms(l, _ceil_frac(Fraction(8 * l ** 3, 3)))),
    claimed=_claim_range(9, None),
    claim_text="holds for ell >= 9 at d = ceil(8 ell^3 / 3)",
    tail=_tail_ort_generic(),
))

_register(CatalogEntry(
    name="ort-spin", parameter="ell",
    domain=lambda l: l >= 4, domain_text="ell >= 4",
    build=_ort_spin_build,
    claimed=_claim_range(10, 13),
    claim_text="holds for 10 <= ell <= 13 at the orthogonal spin dimension 2^(ell-1)",
))

_register(CatalogEntry(
    name="ort-l1l2", parameter="ell",
    domain=lambda l: l >= 4, domain_text="ell >= 4",
    build=lambda l: PowerSumProblem(
        Fraction(_l1l2_dim(l)), _ort1_terms(l, _l1l2_dim(l))),
    claimed=_claim_range(9, None),
    claim_text="the generic orthogonal bound holds at d = 16 C(ell+1,3) for ell >= 9",
))

_register(CatalogEntry(
    name="ort-l3", parameter="ell",
    domain=lambda l: l >= 4, domain_text="ell >= 4",
    build=lambda l: PowerSumProblem(
        Fraction(_l3_dim(l)), _ort_l3_terms(l, _l3_dim(l))),
    claimed=_claim_range(9, None),
    claim_text="holds for all ell >= 9 at the lambda_3 dimension",
    tail=_tail_l3(symp=False),
))

_register(CatalogEntry(
    name="ort-l3-fail", parameter="ell",
    domain=lambda l: l >= 4, domain_text="ell >= 4",
    build=lambda l: PowerSumProblem(
        Fraction(_l3_dim(l)), _ort1_terms(l, _l3_dim(l))),
    claimed=_claim_range(9, None, "fails"),
    claim_text="the generic orthogonal bound fails at the lambda_3 dimension, ell >= 9",
))


def catalog_names() -> list:
    return sorted(_CATALOG)


def catalog_entry(name: str) -> CatalogEntry:
    if name not in _CATALOG:
        raise ExprimError(f"unknown bound name {name!r}; known: {', '.join(catalog_names())}")
    return _CATALOG[name]


@dataclass(frozen=True)
class BoundReport:
    name: str
    results: tuple  # of (param, verdict, claimed or None)
    tail: str = "unchecked"

    @property
    def all_match(self) -> bool:
        return all(c is None or v == c for _, v, c in self.results)


def certify_named_bound(name: str, params: Sequence[int]) -> BoundReport:
    """Evaluate a catalog inequality at each parameter value, exactly.

    The report carries the source's claimed verdict alongside each
    computed one for cross-checking.
    """
    entry = catalog_entry(name)
    results = []
    for p in params:
        if not entry.domain(p):
            raise ExprimError(
                f"{name}: parameter {p} outside domain ({entry.domain_text})")
        verdict = compare_power_sums(entry.build(p))
        results.append((p, verdict, entry.claimed(p)))
    return BoundReport(name, tuple(results))


def tail_certify(name: str, ell0: int) -> str:
    """'certified' when the inequality provably holds for every parameter
    >= ell0, via term-count dominance and polynomial gap positivity;
    'unchecked' when dominance cannot be established (never claims falsity).

    Raises when the entry has no polynomial exponent family.
    """
    entry = catalog_entry(name)
    # a failing point check refutes dominance outright
    probe = [p for p in range(ell0, ell0 + 5) if entry.domain(p)]
    for p in probe:
        if compare_power_sums(entry.build(p)) == "fails":
            return "unchecked"
    if not entry.tail:
        raise ExprimError(f"{name}: entry lacks a polynomial exponent family")
    for branch in entry.tail:
        start = max(ell0, branch.start_min)
        if branch.parity is not None and start % 2 != branch.parity:
            start += 1
        a = Fraction(start)
        klog = (branch.k_count - 1).bit_length()  # log2ceil of the term count
        for term in branch.terms:
            gap = branch.lhs - term.exp - term.coeff_log2 - RatFunc.const(klog)
            if not gap.ge_on_ray(1, a):
                return "unchecked"
            if not gap.nondecreasing_on_ray(a):
                return "unchecked"
            if term.d_coeff is not None:
                # gap must also grow with d beyond the real threshold
                one_minus = RatFunc.const(1) - term.d_coeff
                if not one_minus.ge_on_ray(0, a):
                    return "unchecked"
                if one_minus(a) == 0:
                    return "unchecked"
    return "certified"
