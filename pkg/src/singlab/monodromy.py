"""Monodromy and Alexander-polynomial calculus.

Eigenvalue divisors are written in the basis ``L_m`` = divisor of
``t^m - 1`` with the product rule ``L_a * L_b = gcd(a, b) * L_lcm(a, b)``.
The identity of that product is ``L_1``, the divisor of ``t - 1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, gcd, lcm
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .errors import InexactDivisionError
from .laurent import LaurentPolynomial

__all__ = [
    "CyclotomicDivisor",
    "CyclicDecomposition",
    "DivisibilityVerdict",
    "OkaResult",
    "RankRelations",
    "divisor_mul",
    "divisor_to_charpoly",
    "brieskorn_divisor",
    "ak_divisor",
    "join_divisor",
    "oka_alexander",
    "module_order",
    "rank_relations",
    "divisibility_check",
    "roots_of_unity_degree_check",
    "superabundance",
    "superabundance_charpoly",
    "alex_crosscheck",
    "DEFAULT_KAPPA_CAP",
]

DEFAULT_KAPPA_CAP = 64

T_MINUS_1 = LaurentPolynomial({1: 1, 0: -1})
ONE = LaurentPolynomial.constant(1)


class CyclotomicDivisor:
    """Formal integer combination ``sum e_m L_m``; zero multiplicities dropped."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, int] = ()):
        clean: Dict[int, int] = {}
        for m, e in dict(coeffs).items():
            if int(m) != m or m < 1:
                raise ValueError(f"divisor index must be a positive integer, got {m}")
            if int(e) != e:
                raise ValueError(f"multiplicity must be an integer, got {e}")
            if e:
                clean[int(m)] = clean.get(int(m), 0) + int(e)
                if not clean[int(m)]:
                    del clean[int(m)]
        self.coeffs = clean

    @classmethod
    def one(cls) -> "CyclotomicDivisor":
        return cls({1: 1})

    @classmethod
    def lam(cls, m: int, e: int = 1) -> "CyclotomicDivisor":
        return cls({m: e})

    def __add__(self, other):
        if isinstance(other, int):
            other = CyclotomicDivisor({1: other})
        out = dict(self.coeffs)
        for m, e in other.coeffs.items():
            out[m] = out.get(m, 0) + e
        return CyclotomicDivisor(out)

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicDivisor({m: -e for m, e in self.coeffs.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = CyclotomicDivisor({1: other})
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return CyclotomicDivisor({m: e * other for m, e in self.coeffs.items()})
        return divisor_mul(self, other)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            other = CyclotomicDivisor({1: other})
        if not isinstance(other, CyclotomicDivisor):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def degree(self) -> int:
        """Degree of the (virtual) polynomial ``prod (t^m - 1)^e_m``."""
        return sum(m * e for m, e in self.coeffs.items())

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for m in sorted(self.coeffs, reverse=True):
            e = self.coeffs[m]
            body = "1" if m == 1 else f"L{m}"
            if abs(e) != 1:
                body = f"{abs(e)}*{body}" if m != 1 else str(abs(e))
            parts.append(("-" if e < 0 else "+", body))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"CyclotomicDivisor({self.coeffs})"


def divisor_mul(a: CyclotomicDivisor, b: CyclotomicDivisor) -> CyclotomicDivisor:
    out: Dict[int, int] = {}
    for m1, e1 in a.coeffs.items():
        for m2, e2 in b.coeffs.items():
            l = lcm(m1, m2)
            out[l] = out.get(l, 0) + e1 * e2 * gcd(m1, m2)
    return CyclotomicDivisor(out)


def divisor_to_charpoly(D: CyclotomicDivisor) -> LaurentPolynomial:
    """``prod_m (t^m - 1)^e_m`` as an honest polynomial, unit-normalized.

    Raises :class:`InexactDivisionError` when the negative part does not
    divide out.
    """
    num = ONE
    den = ONE
    for m, e in sorted(D.coeffs.items()):
        factor = LaurentPolynomial.cyclotomic_binomial(m) ** abs(e)
        if e > 0:
            num = num * factor
        else:
            den = den * factor
    q, r = num.divmod(den)
    if r:
        raise InexactDivisionError(f"divisor {D} is not the divisor of a polynomial")
    return q.normalized()


def brieskorn_divisor(exponents: Sequence[int]) -> CyclotomicDivisor:
    """Eigenvalue divisor of ``x_1^a_1 + ... + x_r^a_r``: ``prod (L_a - 1)``."""
    if not exponents:
        raise ValueError("need at least one exponent")
    result = CyclotomicDivisor.one()
    for a in exponents:
        if int(a) != a or a < 2:
            raise ValueError(f"Brieskorn exponents must be integers >= 2, got {a}")
        result = divisor_mul(result, CyclotomicDivisor.lam(a) - 1)
    return result


def ak_divisor(k: int) -> CyclotomicDivisor:
    """Transversal type A_k, encoded as the Brieskorn pair ``(2, k + 1)``."""
    if k < 1:
        raise ValueError("A_k needs k >= 1")
    return brieskorn_divisor([2, k + 1])


def join_divisor(a: CyclotomicDivisor, b: CyclotomicDivisor) -> CyclotomicDivisor:
    """Eigenvalue divisor of a sum of functions in separate variables."""
    return divisor_mul(a, b)


# -- Oka family ---------------------------------------------------------------


@dataclass(frozen=True)
class OkaResult:
    a: int
    b: int
    expected_rank: int
    formula_value: Optional[LaurentPolynomial]
    formula_error: Optional[str]
    consistent: bool
    variant_value: Optional[LaurentPolynomial]
    variant_error: Optional[str]
    variant_consistent: bool


def _quotient_or_error(top: int, a: int, b: int):
    D = CyclotomicDivisor({top: 1}) + 1 - CyclotomicDivisor.lam(a) - CyclotomicDivisor.lam(b)
    try:
        return divisor_to_charpoly(D), None
    except InexactDivisionError as exc:
        return None, str(exc)


def oka_alexander(a: int, b: int) -> OkaResult:
    """Evaluate ``(t^(a+b)-1)(t-1)/((t^a-1)(t^b-1))`` for ``P_a^b + P_b^a``.

    The first homology of the Milnor fibre has rank ``(a-1)(b-1)``, which the
    ``a+b`` quotient cannot match. The ``ab`` quotient is computed next to it
    and reported separately; neither replaces the other.
    """
    if a < 2 or b < 2:
        raise ValueError("a and b must be at least 2")
    expected = (a - 1) * (b - 1)
    value, err = _quotient_or_error(a + b, a, b)
    consistent = value is not None and value.degree() == expected
    variant, verr = _quotient_or_error(a * b, a, b)
    vconsistent = variant is not None and variant.degree() == expected
    return OkaResult(
        a=a,
        b=b,
        expected_rank=expected,
        formula_value=value,
        formula_error=err,
        consistent=consistent,
        variant_value=variant,
        variant_error=verr,
        variant_consistent=vconsistent,
    )


# -- module orders and decompositions ----------------------------------------


@dataclass(frozen=True)
class CyclicDecomposition:
    """``(+)_i Q[t,1/t]/(lambda_i^k_i)  (+)  Q[t,1/t]^kappa``."""

    torsion_factors: Tuple[Tuple[LaurentPolynomial, int], ...] = ()
    free_rank: int = 0

    def __post_init__(self):
        factors = []
        for lam_i, k_i in self.torsion_factors:
            if not lam_i or lam_i.is_unit():
                raise ValueError(f"torsion factor {lam_i} must be a nonzero nonunit")
            if k_i < 1:
                raise ValueError("exponents k_i must be positive")
            factors.append((lam_i.normalized(), int(k_i)))
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        object.__setattr__(self, "torsion_factors", tuple(factors))

    def __add__(self, other: "CyclicDecomposition") -> "CyclicDecomposition":
        return CyclicDecomposition(
            self.torsion_factors + other.torsion_factors, self.free_rank + other.free_rank
        )


def module_order(dec: CyclicDecomposition) -> LaurentPolynomial:
    """Product of ``lambda_i^k_i``; the zero polynomial when there is a free part."""
    if dec.free_rank > 0:
        return LaurentPolynomial()
    out = ONE
    for lam_i, k_i in dec.torsion_factors:
        out = out * lam_i ** k_i
    return out.normalized()


@dataclass(frozen=True)
class RankRelations:
    n: int
    t_minus_1_factors: int
    dim_H_complement: Optional[int]
    rank_H_fiber: Optional[int]
    inequality_holds: Optional[bool]
    equality_criterion: bool
    equality_holds: Optional[bool]
    h1_fiber_vanishes: Optional[bool] = None
    notes: Tuple[str, ...] = field(default=())


def rank_relations(
    dec: CyclicDecomposition, n: int, irreducible_components: Optional[int] = None
) -> RankRelations:
    """Rank bookkeeping for the cyclic decomposition of H_{n-1}(F, Q).

    For ``n > 2`` the number of summands supported at ``t = 1`` equals
    ``dim H_{n-1}`` of the complement, so the fibre rank dominates it, with
    equality exactly when every summand is ``Q[t]/(t - 1)``. For ``n = 2``
    the summand count is the number of components minus one.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    count = 0
    only_simple_ones = dec.free_rank == 0
    for lam_i, k_i in dec.torsion_factors:
        if lam_i.root_multiplicity_at_one() > 0:
            count += 1
        if lam_i ** k_i != T_MINUS_1:
            only_simple_ones = False
    rank_fiber = None
    if dec.free_rank == 0:
        rank_fiber = sum(lam_i.degree() * k_i for lam_i, k_i in dec.torsion_factors)
    notes: List[str] = []

    if n == 2:
        if irreducible_components is None:
            raise ValueError("n = 2 needs the number of irreducible components")
        if irreducible_components < 1:
            raise ValueError("component count must be positive")
        dim_h = irreducible_components - 1
        vanishes = None
        if irreducible_components == 1:
            vanishes = module_order(dec) == ONE
            notes.append("irreducible: H_1(F) vanishes iff the order is 1")
        if count != dim_h:
            notes.append(
                f"decomposition has {count} summands at t=1 but {dim_h} are expected"
            )
    else:
        dim_h = count
        vanishes = None
    inequality = None if rank_fiber is None else rank_fiber >= dim_h
    equality = None if rank_fiber is None else rank_fiber == dim_h
    if equality is not None and equality != only_simple_ones and n > 2:
        notes.append("equality criterion disagrees with rank count")
    return RankRelations(
        n=n,
        t_minus_1_factors=count,
        dim_H_complement=dim_h,
        rank_H_fiber=rank_fiber,
        inequality_holds=inequality,
        equality_criterion=only_simple_ones,
        equality_holds=equality,
        h1_fiber_vanishes=vanishes,
        notes=tuple(notes),
    )


# -- divisibility -------------------------------------------------------------


@dataclass(frozen=True)
class DivisibilityVerdict:
    divides: bool
    quotient: Optional[LaurentPolynomial]
    kappa: Optional[int]
    context: str


def _product(polys: Sequence[LaurentPolynomial]) -> LaurentPolynomial:
    out = ONE
    for p in polys:
        out = out * p
    return out


def divisibility_check(
    delta: LaurentPolynomial,
    transversal: Sequence[LaurentPolynomial],
    infinity_factors: Sequence[LaurentPolynomial] = (),
    kappa_allowance: bool = True,
    mode: str = "global",
    kappa_cap: int = DEFAULT_KAPPA_CAP,
) -> DivisibilityVerdict:
    """Does ``delta`` divide the product of the transversal (and infinity) factors?

    Global mode also allows a power ``(t-1)^kappa`` and reports the least
    such ``kappa`` up to ``kappa_cap``. Local mode uses the transversal
    factors alone with ``kappa = 0``.
    """
    if not delta:
        raise ValueError("delta must be nonzero")
    if mode == "global":
        target = _product(transversal) * _product(infinity_factors)
        cap = kappa_cap if kappa_allowance else 0
        context = "global: delta | prod(transversal) * prod(infinity) * (t-1)^kappa"
    elif mode == "local":
        target = _product(transversal)
        cap = 0
        context = "local: delta | prod(transversal)"
    else:
        raise ValueError(f"mode must be 'global' or 'local', got {mode!r}")
    if not target:
        raise ValueError("product of factors is zero")
    for kappa in range(cap + 1):
        q, r = target.divmod(delta)
        if not r:
            return DivisibilityVerdict(True, q.normalized(), kappa, context)
        target = target * T_MINUS_1
    return DivisibilityVerdict(False, None, None, context)


def roots_of_unity_degree_check(p: LaurentPolynomial, d: int) -> bool:
    """True iff every root of ``p`` is a d-th root of unity.

    Checked as ``p | (t^d - 1)^deg(p)`` using powers reduced modulo ``p``.
    """
    if d < 1:
        raise ValueError("d must be positive")
    if not p:
        raise ValueError("p must be nonzero")
    p = p.normalized()
    deg = p.degree()
    if deg == 0:
        return True
    base = LaurentPolynomial.cyclotomic_binomial(d).mod(p)
    acc = ONE
    e = deg
    while e:
        if e & 1:
            acc = (acc * base).mod(p)
        e >>= 1
        if e:
            base = (base * base).mod(p)
    return not acc


def alex_crosscheck(lhs: LaurentPolynomial, dec: CyclicDecomposition) -> bool:
    """Compare an order computed one way with the order of a decomposition."""
    rhs = module_order(dec)
    if not rhs or not lhs:
        return not rhs and not lhs
    return lhs.associate(rhs)


# -- superabundance -----------------------------------------------------------

Point = Tuple[Fraction, Fraction, Fraction]


def rational_rank(rows: Sequence[Sequence[Fraction]]) -> int:
    """Rank over Q by fraction-exact row reduction."""
    mat = [[Fraction(v) for v in row] for row in rows]
    if not mat:
        return 0
    ncols = len(mat[0])
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(mat)) if mat[r][col]), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        prow = mat[rank]
        for r in range(rank + 1, len(mat)):
            if mat[r][col]:
                f = mat[r][col] / prow[col]
                mat[r] = [a - f * b for a, b in zip(mat[r], prow)]
        rank += 1
        if rank == len(mat):
            break
    return rank


def _normalize_point(p: Sequence) -> Point:
    p = tuple(Fraction(v) for v in p)
    if len(p) != 3:
        raise ValueError(f"projective plane points need 3 coordinates, got {len(p)}")
    lead = next((v for v in p if v), None)
    if lead is None:
        raise ValueError("(0:0:0) is not a projective point")
    return tuple(v / lead for v in p)


def plane_monomials(m: int) -> List[Tuple[int, int, int]]:
    return [(i, j, m - i - j) for i in range(m, -1, -1) for j in range(m - i, -1, -1)]


def superabundance(points: Sequence[Sequence], m: int) -> int:
    """Excess dimension of degree-``m`` plane curves through ``points``.

    ``dim ker E - max(0, N - P)`` where ``E`` evaluates all ``N``
    degree-``m`` monomials at the ``P`` points.
    """
    if m < 0:
        raise ValueError("degree must be nonnegative")
    pts = [_normalize_point(p) for p in points]
    if len(set(pts)) != len(pts):
        raise ValueError("duplicate points")
    monos = plane_monomials(m)
    N = len(monos)
    assert N == comb(m + 2, 2)
    P = len(pts)
    rows = [[x ** i * y ** j * z ** k for i, j, k in monos] for x, y, z in pts]
    kernel = N - rational_rank(rows)
    return kernel - max(0, N - P)


def superabundance_charpoly(s: int) -> LaurentPolynomial:
    """``(t^2 - t + 1)^s``."""
    if s < 0:
        raise ValueError("superabundance is nonnegative")
    return LaurentPolynomial({2: 1, 1: -1, 0: 1}) ** s
