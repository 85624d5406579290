"""Homotopy-level consequences for fibres of a polynomial and their complements.

Nothing here computes homology of a space directly. The functions turn a
bound ``k`` on the dimension of the stratified singular set into the
vanishing ranges it guarantees, and do Betti-number bookkeeping for
suspensions, joins and sphere bouquets.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from .errors import HypothesisError
from .grobner import ResourceLimits, affine_dimension, jacobian_ideal, milnor_number, projective_dimension, buchberger
from .infinity import sigma_ideal
from .polycore import Polynomial

__all__ = [
    "ConnectivityReport",
    "BettiVector",
    "connectivity_bounds",
    "complement_betti_generic",
    "bouquet_betti",
    "tame_bouquet_rank",
    "thom_sebastiani",
]

GENERIC = "generic"
ATYPICAL = "atypical"

PI1_Z = "Z"
PI1_TRIVIAL = "trivial"
PI1_UNKNOWN = "unknown"


@dataclass(frozen=True)
class ConnectivityReport:
    """Connectivity bounds for the complement of one fibre kind.

    ``vanishing_range`` is the closed interval of degrees ``i`` with
    ``pi_i(C^{n+1} - fibre) = 0``; it is empty when ``hi < lo``.
    ``pi1`` records the fundamental-group statement made for the slice
    argument, ``pi1_complement`` the one coming from the suspension
    splitting (generic) or the atypical-fibre bound.
    """

    n: int
    k: int
    fiber_kind: str
    vanishing_range: Tuple[int, int]
    pi1: str
    pi1_complement: str
    fiber_connectivity: int
    fiber_connectivity_is_lower_bound: bool

    @property
    def range_empty(self) -> bool:
        lo, hi = self.vanishing_range
        return hi < lo

    def vanishing_degrees(self) -> List[int]:
        lo, hi = self.vanishing_range
        return list(range(lo, hi + 1))

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "fiber_kind": self.fiber_kind,
            "vanishing_range": list(self.vanishing_range),
            "vanishing_range_empty": self.range_empty,
            "vanishing_degrees": self.vanishing_degrees(),
            "pi1": self.pi1,
            "pi1_complement": self.pi1_complement,
            "fiber_connectivity": self.fiber_connectivity,
            "fiber_connectivity_is_lower_bound": self.fiber_connectivity_is_lower_bound,
        }


@dataclass(frozen=True)
class BettiVector:
    values: Tuple[int, ...] = field(default=(1,))

    def __post_init__(self):
        vals = tuple(int(v) for v in self.values)
        if not vals:
            raise ValueError("a Betti vector needs at least b_0")
        if any(v < 0 for v in vals):
            raise ValueError("Betti numbers are nonnegative")
        object.__setattr__(self, "values", vals)

    def __getitem__(self, i):
        return self.values[i] if i < len(self.values) else 0

    def __len__(self):
        return len(self.values)

    def trimmed(self) -> "BettiVector":
        vals = list(self.values)
        while len(vals) > 1 and vals[-1] == 0:
            vals.pop()
        return BettiVector(tuple(vals))

    def nonzero_degrees(self) -> List[int]:
        return [i for i, v in enumerate(self.values) if v]


def connectivity_bounds(n: int, k: int, fiber_kind: str) -> ConnectivityReport:
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if not -1 <= k <= n:
        raise ValueError(f"need -1 <= k <= n, got k={k}, n={n}")
    if fiber_kind == GENERIC:
        hi = n - k
        connectivity = n - k - 1
        lower_bound = False
        pi1 = PI1_TRIVIAL if k >= 0 and n - k >= 1 else PI1_UNKNOWN
        # S^1 v S(F): pi_1 = Z exactly when F is connected
        pi1_complement = PI1_Z if connectivity >= 0 else PI1_UNKNOWN
    elif fiber_kind == ATYPICAL:
        hi = n - k - 1
        connectivity = n - k
        lower_bound = True
        pi1 = PI1_TRIVIAL if k >= 0 and n - k >= 2 else PI1_UNKNOWN
        # needs the general fibre (n-k-1)-connected with n-k-1 >= 1
        pi1_complement = PI1_Z if n - k - 1 >= 1 else PI1_UNKNOWN
    else:
        raise ValueError(f"fiber_kind must be 'generic' or 'atypical', got {fiber_kind!r}")
    return ConnectivityReport(
        n=n,
        k=k,
        fiber_kind=fiber_kind,
        vanishing_range=(2, hi),
        pi1=pi1,
        pi1_complement=pi1_complement,
        fiber_connectivity=connectivity,
        fiber_connectivity_is_lower_bound=lower_bound,
    )


def complement_betti_generic(fiber_betti: BettiVector, n: int) -> BettiVector:
    """Betti numbers of ``S^1 v S(F)`` from those of the general fibre ``F``.

    Suspension shifts reduced homology up by one, the circle adds to b_1.
    """
    if len(fiber_betti) < 1:
        raise ValueError("empty Betti vector")
    if len(fiber_betti) > 2 * n + 1:
        raise ValueError(f"fibre of complex dimension {n} has no homology above {2 * n}")
    b = fiber_betti.values
    out = [1, 1 + (b[0] - 1)] + list(b[1:])
    return BettiVector(tuple(out))


def bouquet_betti(rank: int, dim: int) -> BettiVector:
    """Betti numbers of a wedge of ``rank`` spheres of dimension ``dim``."""
    if rank < 0 or dim < 0:
        raise ValueError("rank and dimension must be nonnegative")
    if rank == 0:
        return BettiVector((1,))
    if dim == 0:
        return BettiVector((rank + 1,))
    vals = [0] * (dim + 1)
    vals[0] = 1
    vals[dim] = rank
    return BettiVector(tuple(vals))


def tame_bouquet_rank(f: Polynomial, limits: Optional[ResourceLimits] = None) -> int:
    """Number of spheres in the general fibre when nothing happens at infinity.

    Only answers when the locus at infinity is empty and the affine singular
    set is finite; the rank is then the global Milnor number.
    """
    sigma_dim = projective_dimension(sigma_ideal(f), limits).dim
    if sigma_dim != -1:
        raise HypothesisError(
            f"locus at infinity is nonempty (dimension {sigma_dim}); rank not determined"
        )
    G = buchberger(jacobian_ideal(f), "grevlex", limits)
    sing = affine_dimension(G).dim
    if sing > 0:
        raise HypothesisError(f"singular locus has dimension {sing} > 0")
    return milnor_number(G)


def thom_sebastiani(
    fiber_rank_g: int, dim_g: int, fiber_rank_h: int, dim_h: int
) -> Tuple[int, int]:
    """Join of two sphere bouquets: ranks multiply, dimensions add plus one."""
    for v in (fiber_rank_g, dim_g, fiber_rank_h, dim_h):
        if v < 0:
            raise ValueError("ranks and dimensions must be nonnegative")
    return fiber_rank_g * fiber_rank_h, dim_g + dim_h + 1
