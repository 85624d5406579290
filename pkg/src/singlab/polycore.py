"""Sparse multivariate polynomials over the rationals.

Polynomials are immutable maps from exponent tuples to nonzero
:class:`fractions.Fraction` coefficients, tied to a :class:`RingContext`
that fixes the variable names and their (positive integer) weights.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple, Union

from .errors import ParseError

__all__ = [
    "RingContext",
    "Polynomial",
    "WeightedDecomposition",
    "parse_polynomial",
    "weighted_decompose",
    "gradient",
    "homogenize",
    "evaluate",
    "grevlex_key",
    "lex_key",
]

Exponents = Tuple[int, ...]
Scalar = Union[int, Fraction]

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


@dataclass(frozen=True)
class RingContext:
    variables: Tuple[str, ...]
    weights: Tuple[int, ...] = field(default=())

    def __post_init__(self):
        variables = tuple(self.variables)
        weights = tuple(self.weights) if self.weights else (1,) * len(variables)
        if len(set(variables)) != len(variables):
            raise ValueError(f"duplicate variable names in {variables}")
        for name in variables:
            if not isinstance(name, str) or not _IDENT.match(name):
                raise ValueError(f"invalid variable name {name!r}")
        if len(weights) != len(variables):
            raise ValueError("weights and variables differ in length")
        if any(int(w) != w or w < 1 for w in weights):
            raise ValueError(f"weights must be positive integers, got {weights}")
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "weights", tuple(int(w) for w in weights))

    @property
    def nvars(self) -> int:
        return len(self.variables)

    @property
    def unit_weights(self) -> bool:
        return all(w == 1 for w in self.weights)

    def index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise KeyError(name) from None

    def weighted_degree(self, exps: Exponents) -> int:
        return sum(w * e for w, e in zip(self.weights, exps))

    def extend(self, name: str, weight: int = 1) -> "RingContext":
        if name in self.variables:
            raise ValueError(f"variable {name!r} already in ring")
        return RingContext(self.variables + (name,), self.weights + (weight,))

    def gen(self, name: str) -> "Polynomial":
        i = self.index(name)
        exps = tuple(1 if j == i else 0 for j in range(self.nvars))
        return Polynomial(self, {exps: Fraction(1)})

    def gens(self) -> Tuple["Polynomial", ...]:
        return tuple(self.gen(v) for v in self.variables)

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def constant(self, c: Scalar) -> "Polynomial":
        return Polynomial(self, {(0,) * self.nvars: Fraction(c)})


def grevlex_key(exps: Exponents):
    """Sort key: larger key means larger monomial in graded reverse lex."""
    return (sum(exps), tuple(-e for e in reversed(exps)))


def lex_key(exps: Exponents):
    return exps


class Polynomial:
    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: RingContext, terms: Mapping[Exponents, Scalar] = ()):
        n = ring.nvars
        clean: Dict[Exponents, Fraction] = {}
        for exps, c in dict(terms).items():
            exps = tuple(exps)
            if len(exps) != n or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent vector {exps} for {n} variables")
            c = Fraction(c)
            if c:
                clean[exps] = clean.get(exps, Fraction(0)) + c
                if not clean[exps]:
                    del clean[exps]
        self.ring = ring
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, ring, terms):
        # trusted constructor: terms already canonical
        p = cls.__new__(cls)
        p.ring = ring
        p.terms = terms
        p._hash = None
        return p

    # -- basic queries -------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.ring.nvars, Fraction(0))

    def total_degree(self) -> int:
        if not self.terms:
            raise ValueError("degree of the zero polynomial is undefined")
        return max(sum(e) for e in self.terms)

    def weighted_degree(self) -> int:
        if not self.terms:
            raise ValueError("degree of the zero polynomial is undefined")
        return max(self.ring.weighted_degree(e) for e in self.terms)

    def is_weighted_homogeneous(self) -> bool:
        return len({self.ring.weighted_degree(e) for e in self.terms}) <= 1

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def sorted_terms(self, key=grevlex_key):
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def leading_monomial(self, key=grevlex_key) -> Exponents:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return max(self.terms, key=key)

    def leading_coefficient(self, key=grevlex_key) -> Fraction:
        return self.terms[self.leading_monomial(key)]

    # -- arithmetic ------------------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ValueError("polynomials belong to different rings")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = terms.get(m, 0) + c
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        return Polynomial._raw(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms: Dict[Exponents, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                s = terms.get(m, 0) + c1 * c2
                if s:
                    terms[m] = s
                else:
                    del terms[m]
        return Polynomial._raw(self.ring, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = self.ring.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, c: Scalar) -> "Polynomial":
        c = Fraction(c)
        if not c:
            return self.ring.zero()
        return Polynomial._raw(self.ring, {m: v * c for m, v in self.terms.items()})

    def mul_term(self, exps: Exponents, c: Fraction) -> "Polynomial":
        return Polynomial._raw(
            self.ring,
            {tuple(a + b for a, b in zip(m, exps)): v * c for m, v in self.terms.items()},
        )

    def monic(self, key=grevlex_key) -> "Polynomial":
        return self.scale(1 / self.leading_coefficient(key))

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    # -- calculus and substitutions --------------------------------------

    def diff(self, var: Union[str, int]) -> "Polynomial":
        i = self.ring.index(var) if isinstance(var, str) else var
        terms = {}
        for m, c in self.terms.items():
            if m[i]:
                dm = m[:i] + (m[i] - 1,) + m[i + 1:]
                terms[dm] = c * m[i]
        return Polynomial._raw(self.ring, terms)

    def specialize(self, name: str, value: Scalar) -> "Polynomial":
        """Substitute ``name = value`` and drop the variable from the ring."""
        i = self.ring.index(name)
        ring = RingContext(
            self.ring.variables[:i] + self.ring.variables[i + 1:],
            self.ring.weights[:i] + self.ring.weights[i + 1:],
        )
        value = Fraction(value)
        out: Dict[Exponents, Fraction] = {}
        for m, c in self.terms.items():
            key = m[:i] + m[i + 1:]
            out[key] = out.get(key, 0) + c * value ** m[i]
        return Polynomial(ring, out)

    def permute_variables(self, perm: Sequence[int]) -> "Polynomial":
        """Send variable ``i`` to variable ``perm[i]`` within the same ring."""
        n = self.ring.nvars
        terms = {}
        for m, c in self.terms.items():
            new = [0] * n
            for i, e in enumerate(m):
                new[perm[i]] = e
            terms[tuple(new)] = c
        return Polynomial._raw(self.ring, terms)

    def __call__(self, *point):
        return evaluate(self, point)

    # -- printing ----------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        names = self.ring.variables
        pieces = []
        for m, c in self.sorted_terms():
            mono = "*".join(
                v if e == 1 else f"{v}^{e}" for v, e in zip(names, m) if e
            )
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            pieces.append((sign, body))
        first_sign, first = pieces[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"Polynomial({str(self)!r}, vars={self.ring.variables})"


@dataclass(frozen=True)
class WeightedDecomposition:
    """``f = f_d + f_{d-k} + ...`` split by weighted degree.

    ``k`` is ``None`` when ``f`` is weighted-homogeneous.
    """

    d: int
    k: Optional[int]
    parts: Dict[int, Polynomial]

    @property
    def top(self) -> Polynomial:
        return self.parts[self.d]

    @property
    def next_part(self) -> Optional[Polynomial]:
        if self.k is None:
            return None
        return self.parts[self.d - self.k]

    @property
    def homogeneous(self) -> bool:
        return self.k is None


# -- parser -------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        if not text[pos:].strip():
            break
        m = _TOKEN.match(text, pos)
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            tokens.append(("num", int(m.group(1)), start))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*^()/":
                raise ParseError(f"unexpected character {ch!r}", start)
            tokens.append((ch, ch, start))
        pos = m.end()
    tokens.append(("end", None, n))
    return tokens


class _Parser:
    # expr   := ['+'|'-'] term (('+'|'-') term)*
    # term   := factor ('*' factor)*
    # factor := atom ('^' INT)?
    # atom   := INT ['/' INT] | NAME | '(' expr ')' | ('+'|'-') factor

    def __init__(self, text, ring):
        self.tokens = _tokenize(text)
        self.i = 0
        self.ring = ring

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind=None):
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            what = "end of input" if tok[0] == "end" else repr(tok[1])
            raise ParseError(f"expected {kind!r}, found {what}", tok[2])
        self.i += 1
        return tok

    def parse(self):
        if self.peek()[0] == "end":
            raise ParseError("empty input", 0)
        p = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected token {tok[1]!r}", tok[2])
        return p

    def expr(self):
        p = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self):
        p = self.factor()
        while self.peek()[0] == "*":
            self.take()
            p = p * self.factor()
        return p

    def factor(self):
        base = self.atom()
        if self.peek()[0] == "^":
            self.take()
            tok = self.peek()
            if tok[0] != "num":
                raise ParseError("exponent must be a nonnegative integer literal", tok[2])
            self.take()
            base = base ** tok[1]
        return base

    def atom(self):
        tok = self.peek()
        kind = tok[0]
        if kind == "num":
            self.take()
            value = Fraction(tok[1])
            if self.peek()[0] == "/":
                self.take()
                den = self.take("num")
                if den[1] == 0:
                    raise ParseError("zero denominator", den[2])
                value = Fraction(tok[1], den[1])
            return self.ring.constant(value)
        if kind == "name":
            self.take()
            if tok[1] not in self.ring.variables:
                raise ParseError(f"unknown variable {tok[1]!r}", tok[2])
            return self.ring.gen(tok[1])
        if kind == "(":
            self.take()
            p = self.expr()
            self.take(")")
            return p
        if kind in ("+", "-"):
            self.take()
            p = self.factor()
            return p if kind == "+" else -p
        what = "end of input" if kind == "end" else repr(tok[1])
        raise ParseError(f"unexpected {what}", tok[2])


def parse_polynomial(text: str, ring: RingContext) -> Polynomial:
    """Parse ``text`` into a polynomial of ``ring``.

    Accepts integer and ``p/q`` literals, ``+ - * ^`` and parentheses.
    Raises :class:`ParseError` carrying the offending character offset.
    """
    return _Parser(text, ring).parse()


def variables_in(text: str) -> Tuple[str, ...]:
    """Identifiers of ``text`` in order of first appearance."""
    seen = []
    for kind, value, _ in _tokenize(text):
        if kind == "name" and value not in seen:
            seen.append(value)
    return tuple(seen)


# -- decomposition, gradient, homogenization ---------------------------------


def weighted_decompose(f: Polynomial) -> WeightedDecomposition:
    if f.is_zero():
        raise ValueError("the zero polynomial has no weighted decomposition")
    ring = f.ring
    buckets: Dict[int, Dict[Exponents, Fraction]] = {}
    for m, c in f.terms.items():
        buckets.setdefault(ring.weighted_degree(m), {})[m] = c
    parts = {deg: Polynomial._raw(ring, t) for deg, t in buckets.items()}
    degrees = sorted(parts, reverse=True)
    d = degrees[0]
    k = d - degrees[1] if len(degrees) > 1 else None
    return WeightedDecomposition(d=d, k=k, parts=parts)


def gradient(f: Polynomial) -> list:
    return [f.diff(i) for i in range(f.ring.nvars)]


def homogenize(f: Polynomial, new_var: str) -> Polynomial:
    """Weighted homogenization of ``f`` by a new weight-1 variable."""
    if f.is_zero():
        raise ValueError("cannot homogenize the zero polynomial")
    ring = f.ring.extend(new_var, 1)
    d = f.weighted_degree()
    terms = {m + (d - f.ring.weighted_degree(m),): c for m, c in f.terms.items()}
    return Polynomial._raw(ring, terms)


def evaluate(f: Polynomial, point: Iterable[Scalar]) -> Fraction:
    point = [Fraction(v) for v in point]
    if len(point) != f.ring.nvars:
        raise ValueError(f"expected {f.ring.nvars} coordinates, got {len(point)}")
    total = Fraction(0)
    for m, c in f.terms.items():
        term = c
        for v, e in zip(point, m):
            if e:
                term *= v ** e
        total += term
    return total
