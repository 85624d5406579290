"""Groebner bases over Q and the dimension counts built on them.

Bases are computed with Buchberger's algorithm using the normal selection
strategy plus the product and chain criteria. Everything downstream
(Krull dimension, projective dimension, Milnor numbers) is read off the
leading monomials of the reduced basis.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .errors import HypothesisError, ResourceLimitError
from .polycore import Exponents, Polynomial, RingContext, grevlex_key, lex_key

__all__ = [
    "ResourceLimits",
    "Ideal",
    "GroebnerBasis",
    "DimensionResult",
    "buchberger",
    "normal_form",
    "is_groebner",
    "affine_dimension",
    "projective_dimension",
    "milnor_number",
    "jacobian_ideal",
]

ORDERS = {"grevlex": grevlex_key, "lex": lex_key}

DEFAULT_MAX_BASIS = 10_000
DEFAULT_MAX_DEGREE = 64


@dataclass(frozen=True)
class ResourceLimits:
    max_basis: int = DEFAULT_MAX_BASIS
    max_degree: int = DEFAULT_MAX_DEGREE

    @classmethod
    def from_env(cls, environ=None) -> "ResourceLimits":
        """Read ``SINGLAB_MAX_BASIS`` / ``SINGLAB_MAX_DEGREE`` if set."""
        env = os.environ if environ is None else environ
        return cls(
            max_basis=int(env.get("SINGLAB_MAX_BASIS", DEFAULT_MAX_BASIS)),
            max_degree=int(env.get("SINGLAB_MAX_DEGREE", DEFAULT_MAX_DEGREE)),
        )


class Ideal:
    """Ideal of a polynomial ring given by generators; zero generators are dropped."""

    __slots__ = ("ring", "generators")

    def __init__(self, ring: RingContext, generators: Sequence[Polynomial]):
        gens = []
        for g in generators:
            if g.ring != ring:
                raise ValueError("generator from a different ring")
            if not g.is_zero():
                gens.append(g)
        self.ring = ring
        self.generators = tuple(gens)

    @classmethod
    def from_polys(cls, polys: Sequence[Polynomial]) -> "Ideal":
        if not polys:
            raise ValueError("need at least one polynomial to infer the ring")
        return cls(polys[0].ring, polys)

    def __repr__(self):
        return f"Ideal({', '.join(map(str, self.generators))})"


@dataclass(frozen=True)
class GroebnerBasis:
    ring: RingContext
    order: str
    basis: Tuple[Polynomial, ...]

    @property
    def key(self):
        return ORDERS[self.order]

    def leading_monomials(self) -> List[Exponents]:
        return [g.leading_monomial(self.key) for g in self.basis]

    def is_unit(self) -> bool:
        return any(g.is_constant() for g in self.basis)

    def __iter__(self):
        return iter(self.basis)

    def __len__(self):
        return len(self.basis)


@dataclass(frozen=True)
class DimensionResult:
    """``dim == -1`` encodes the empty variety."""

    dim: int
    witness: Tuple[str, ...]


# -- internals on raw term dicts ------------------------------------------


def _divides(a: Exponents, b: Exponents) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: Exponents, b: Exponents) -> Exponents:
    return tuple(max(x, y) for x, y in zip(a, b))


def _reduce(terms: Dict[Exponents, Fraction], basis, key) -> Dict[Exponents, Fraction]:
    """Full reduction of ``terms`` by ``basis``, a list of (lm, monic term dict)."""
    p = dict(terms)
    rem: Dict[Exponents, Fraction] = {}
    while p:
        m = max(p, key=key)
        c = p[m]
        for lm, g in basis:
            if _divides(lm, m):
                q = tuple(x - y for x, y in zip(m, lm))
                for gm, gc in g.items():
                    mm = tuple(x + y for x, y in zip(q, gm))
                    v = p.get(mm, 0) - c * gc
                    if v:
                        p[mm] = v
                    else:
                        p.pop(mm, None)
                break
        else:
            rem[m] = c
            del p[m]
    return rem


def _monic(terms, key):
    lm = max(terms, key=key)
    inv = 1 / terms[lm]
    return lm, {m: c * inv for m, c in terms.items()}


def _spoly(f, g, key):
    (lf, tf), (lg, tg) = f, g
    l = _lcm(lf, lg)
    qf = tuple(x - y for x, y in zip(l, lf))
    qg = tuple(x - y for x, y in zip(l, lg))
    out: Dict[Exponents, Fraction] = {}
    for m, c in tf.items():
        mm = tuple(x + y for x, y in zip(m, qf))
        out[mm] = out.get(mm, 0) + c
    for m, c in tg.items():
        mm = tuple(x + y for x, y in zip(m, qg))
        v = out.get(mm, 0) - c
        if v:
            out[mm] = v
        else:
            out.pop(mm, None)
    return out


def _check_caps(entry, size, limits):
    if size > limits.max_basis:
        raise ResourceLimitError(
            f"Groebner basis exceeded {limits.max_basis} elements"
        )
    deg = max(sum(m) for m in entry[1])
    if deg > limits.max_degree:
        raise ResourceLimitError(
            f"Groebner basis element of degree {deg} exceeds cap {limits.max_degree}"
        )


def buchberger(
    ideal: Ideal, order: str = "grevlex", limits: Optional[ResourceLimits] = None
) -> GroebnerBasis:
    """Reduced Groebner basis of ``ideal``.

    Raises :class:`ResourceLimitError` rather than returning a partial basis
    when the element count or degree cap is exceeded.
    """
    if order not in ORDERS:
        raise ValueError(f"unknown monomial order {order!r}")
    key = ORDERS[order]
    limits = limits or ResourceLimits()
    ring = ideal.ring
    n = ring.nvars

    if any(g.is_constant() for g in ideal.generators):
        return GroebnerBasis(ring, order, (ring.constant(1),))

    G: List[Tuple[Exponents, Dict[Exponents, Fraction]]] = []
    for g in ideal.generators:
        entry = _monic(g.terms, key)
        G.append(entry)
        _check_caps(entry, len(G), limits)

    pending = {(i, j) for j in range(len(G)) for i in range(j)}

    def pair_key(p):
        i, j = p
        return (sum(_lcm(G[i][0], G[j][0])), i, j)

    while pending:
        pair = min(pending, key=pair_key)
        pending.discard(pair)
        i, j = pair
        li, lj = G[i][0], G[j][0]
        lij = _lcm(li, lj)
        # product criterion
        if all(a == 0 or b == 0 for a, b in zip(li, lj)):
            continue
        # chain criterion
        skip = False
        for k in range(len(G)):
            if k in (i, j) or not _divides(G[k][0], lij):
                continue
            if (min(i, k), max(i, k)) not in pending and (min(j, k), max(j, k)) not in pending:
                skip = True
                break
        if skip:
            continue
        r = _reduce(_spoly(G[i], G[j], key), G, key)
        if not r:
            continue
        entry = _monic(r, key)
        if not any(entry[0]):
            return GroebnerBasis(ring, order, (ring.constant(1),))
        G.append(entry)
        _check_caps(entry, len(G), limits)
        new = len(G) - 1
        pending.update((i, new) for i in range(new))

    # minimal basis: drop elements whose leading monomial is divisible by another's
    keep = []
    for idx, (lm, _) in enumerate(G):
        redundant = False
        for jdx, (lm2, _) in enumerate(G):
            if jdx == idx or not _divides(lm2, lm):
                continue
            if lm2 != lm or jdx < idx:
                redundant = True
                break
        if not redundant:
            keep.append(G[idx])
    # inter-reduce tails
    reduced = []
    for idx, (lm, g) in enumerate(keep):
        others = [e for jdx, e in enumerate(keep) if jdx != idx]
        tail = {m: c for m, c in g.items() if m != lm}
        tail = _reduce(tail, others, key)
        tail[lm] = Fraction(1)
        reduced.append((lm, tail))
    reduced.sort(key=lambda e: key(e[0]))
    return GroebnerBasis(
        ring, order, tuple(Polynomial._raw(ring, t) for _, t in reduced)
    )


def _basis_entries(G: GroebnerBasis):
    key = G.key
    return [(g.leading_monomial(key), g.scale(1 / g.leading_coefficient(key)).terms) for g in G.basis]


def normal_form(f: Polynomial, G: GroebnerBasis) -> Polynomial:
    if f.ring != G.ring:
        raise ValueError("polynomial and basis live in different rings")
    return Polynomial._raw(f.ring, _reduce(f.terms, _basis_entries(G), G.key))


def is_groebner(G: GroebnerBasis) -> bool:
    """Check that every S-polynomial of basis pairs reduces to zero."""
    entries = _basis_entries(G)
    for a, b in itertools.combinations(entries, 2):
        if _reduce(_spoly(a, b, G.key), entries, G.key):
            return False
    return True


def _as_basis(I, limits) -> GroebnerBasis:
    if isinstance(I, GroebnerBasis):
        return I
    return buchberger(I, "grevlex", limits)


def affine_dimension(
    I: Union[Ideal, GroebnerBasis], limits: Optional[ResourceLimits] = None
) -> DimensionResult:
    """Krull dimension of V(I) in affine space.

    Uses the largest set of variables no leading monomial lives entirely in.
    """
    G = _as_basis(I, limits)
    ring = G.ring
    if G.is_unit():
        return DimensionResult(-1, ())
    supports = [frozenset(i for i, e in enumerate(m) if e) for m in G.leading_monomials()]
    n = ring.nvars
    for size in range(n, -1, -1):
        for subset in itertools.combinations(range(n), size):
            s = set(subset)
            if not any(sup <= s for sup in supports):
                return DimensionResult(size, tuple(ring.variables[i] for i in subset))
    raise AssertionError("unreachable: empty set is always independent")


def projective_dimension(
    I: Ideal, limits: Optional[ResourceLimits] = None
) -> DimensionResult:
    """Dimension of the projective zero set of a (weighted-)homogeneous ideal.

    The affine cone has dimension one more; a cone supported only at the
    origin gives ``-1``.
    """
    for g in I.generators:
        if not g.is_weighted_homogeneous():
            raise HypothesisError(f"generator {g} is not homogeneous")
    cone = affine_dimension(I, limits)
    if cone.dim <= 0:
        return DimensionResult(-1, ())
    # drop one coordinate from the witness: the cone direction
    return DimensionResult(cone.dim - 1, cone.witness[1:])


def milnor_number(
    I: Union[Ideal, GroebnerBasis], limits: Optional[ResourceLimits] = None
) -> int:
    """Dimension of Q[x]/I, counted as standard monomials."""
    G = _as_basis(I, limits)
    if G.is_unit():
        return 0
    dim = affine_dimension(G)
    if dim.dim > 0:
        raise HypothesisError(
            f"quotient is infinite-dimensional (variety of dimension {dim.dim})"
        )
    lms = G.leading_monomials()
    n = G.ring.nvars
    bounds = []
    for i in range(n):
        pure = [m[i] for m in lms if all(e == 0 for j, e in enumerate(m) if j != i)]
        bounds.append(min(pure))

    count = 0

    def walk(prefix):
        nonlocal count
        i = len(prefix)
        if i == n:
            count += 1
            return
        for e in range(bounds[i]):
            cand = prefix + (e,)
            # prune: any lm divisible within the fixed prefix with zeros elsewhere
            if any(_divides(m[: i + 1], cand) and not any(m[i + 1:]) for m in lms):
                break
            walk(cand)

    walk(())
    return count


def jacobian_ideal(f: Polynomial) -> Ideal:
    return Ideal(f.ring, [f.diff(i) for i in range(f.ring.nvars)])
