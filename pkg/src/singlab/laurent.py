"""Univariate Laurent polynomials in ``t`` over Q."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Dict, Iterable, Mapping, Tuple, Union

from .errors import InexactDivisionError
from .polycore import RingContext, parse_polynomial

__all__ = ["LaurentPolynomial", "parse_laurent"]

Scalar = Union[int, Fraction]


class LaurentPolynomial:
    """Finite sum of ``c * t^e`` with integer ``e`` and rational ``c``.

    Equality is exact; use :meth:`normalized` or :meth:`associate` to
    compare up to the units ``c * t^e`` of Q[t, 1/t].
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, Scalar] = ()):
        clean: Dict[int, Fraction] = {}
        for e, c in dict(coeffs).items():
            c = Fraction(c)
            if c:
                clean[int(e)] = c
        self.coeffs = clean

    @classmethod
    def from_list(cls, values: Iterable[Scalar], shift: int = 0) -> "LaurentPolynomial":
        """Coefficients listed lowest degree first, starting at ``t^shift``."""
        return cls({shift + i: c for i, c in enumerate(values)})

    @classmethod
    def t(cls, power: int = 1) -> "LaurentPolynomial":
        return cls({power: 1})

    @classmethod
    def constant(cls, c: Scalar) -> "LaurentPolynomial":
        return cls({0: c})

    @classmethod
    def cyclotomic_binomial(cls, m: int) -> "LaurentPolynomial":
        """``t^m - 1``."""
        return cls({m: 1, 0: -1})

    # -- queries ------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    @property
    def low(self) -> int:
        return min(self.coeffs)

    @property
    def high(self) -> int:
        return max(self.coeffs)

    def degree(self) -> int:
        """Width ``high - low``: the degree once units are stripped."""
        if not self.coeffs:
            raise ValueError("degree of zero is undefined")
        return self.high - self.low

    def is_unit(self) -> bool:
        return len(self.coeffs) == 1

    def to_list(self):
        """Coefficients lowest degree first (after normalization)."""
        p = self.normalized()
        if not p.coeffs:
            return []
        return [p.coeffs.get(i, Fraction(0)) for i in range(p.high + 1)]

    def __call__(self, x: Scalar) -> Fraction:
        x = Fraction(x)
        return sum((c * x ** e for e, c in self.coeffs.items()), Fraction(0))

    # -- arithmetic ----------------------------------------------------------

    @staticmethod
    def _lift(other):
        if isinstance(other, LaurentPolynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPolynomial.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out: Dict[int, Fraction] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if not self.is_unit():
                raise InexactDivisionError("only units have negative powers")
            (e, c), = self.coeffs.items()
            return LaurentPolynomial({e * n: c ** n})
        result = LaurentPolynomial.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def divmod(self, other: "LaurentPolynomial") -> Tuple["LaurentPolynomial", "LaurentPolynomial"]:
        """Division with remainder after shifting both sides to start at ``t^0``.

        The quotient absorbs the shift, so ``self == q * other + r * t^self.low``.
        """
        if not other:
            raise ZeroDivisionError("division by zero Laurent polynomial")
        if not self:
            return LaurentPolynomial(), LaurentPolynomial()
        shift = self.low - other.low
        num = {e - self.low: c for e, c in self.coeffs.items()}
        den = {e - other.low: c for e, c in other.coeffs.items()}
        dh = max(den)
        lc = den[dh]
        quot: Dict[int, Fraction] = {}
        while num and max(num) >= dh:
            nh = max(num)
            q = num[nh] / lc
            quot[nh - dh] = q
            for e, c in den.items():
                v = num.get(e + nh - dh, 0) - q * c
                if v:
                    num[e + nh - dh] = v
                else:
                    num.pop(e + nh - dh, None)
        q = LaurentPolynomial({e + shift: c for e, c in quot.items()})
        return q, LaurentPolynomial(num)

    def exact_div(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        q, r = self.divmod(other)
        if r:
            raise InexactDivisionError(f"{other} does not divide {self}")
        return q

    def divides(self, other: "LaurentPolynomial") -> bool:
        """Whether ``self`` divides ``other`` in Q[t, 1/t]."""
        if not self:
            return not other
        return not other.divmod(self)[1]

    def mod(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        return self.divmod(other)[1]

    # -- normalization --------------------------------------------------------

    def normalized(self) -> "LaurentPolynomial":
        """Canonical associate: lowest exponent 0, coprime integer coefficients,
        positive leading coefficient."""
        if not self.coeffs:
            return self
        low = self.low
        den = 1
        for c in self.coeffs.values():
            den = lcm(den, c.denominator)
        ints = {e - low: int(c * den) for e, c in self.coeffs.items()}
        g = 0
        for v in ints.values():
            g = gcd(g, v)
        if ints[max(ints)] < 0:
            g = -g
        return LaurentPolynomial({e: Fraction(v, g) for e, v in ints.items()})

    def associate(self, other: "LaurentPolynomial") -> bool:
        return self.normalized() == other.normalized()

    def root_multiplicity_at_one(self) -> int:
        if not self:
            raise ValueError("zero has every root")
        count, p = 0, self
        t1 = LaurentPolynomial({1: 1, 0: -1})
        while True:
            q, r = p.divmod(t1)
            if r:
                return count
            count, p = count + 1, q

    # -- printing ------------------------------------------------------------

    def __str__(self):
        if not self.coeffs:
            return "0"
        pieces = []
        for e in sorted(self.coeffs, reverse=True):
            c = self.coeffs[e]
            mono = "" if e == 0 else ("t" if e == 1 else f"t^{e}")
            a = abs(c)
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            pieces.append(("-" if c < 0 else "+", body))
        out = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"LaurentPolynomial({str(self)!r})"


_T_RING = RingContext(("t",))


def parse_laurent(text: str) -> LaurentPolynomial:
    """Parse a polynomial in the single variable ``t``."""
    p = parse_polynomial(text, _T_RING)
    return LaurentPolynomial({m[0]: c for m, c in p.terms.items()})
