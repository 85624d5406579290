"""Singularities at infinity of a polynomial map.

The locus at infinity is controlled by the projective set cut out by the
gradient of the top weighted-homogeneous part together with the next
nonzero part. Its dimension and that of the affine singular locus bound
the dimension of the stratified singular set of the compactified map.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Optional

from .errors import HypothesisError
from .grobner import (
    DimensionResult,
    Ideal,
    ResourceLimits,
    affine_dimension,
    jacobian_ideal,
    projective_dimension,
)
from .polycore import Polynomial, gradient, weighted_decompose

__all__ = [
    "InfinityReport",
    "sigma_ideal",
    "classify_at_infinity",
    "sing_infinity_V",
]


@dataclass(frozen=True)
class InfinityReport:
    d: int
    k_gap: Optional[int]
    dim_sing_affine: int
    dim_sigma: int
    bound_dim_sing_X: int
    isolated_at_infinity: bool
    dim_sing_infinity_V: Optional[int]
    weights_warning: bool
    homogeneous: bool

    @property
    def vacuous(self) -> bool:
        """Both loci empty: isolated because there is nothing to isolate."""
        return self.dim_sing_affine == -1 and self.dim_sigma == -1

    def to_dict(self) -> dict:
        out = asdict(self)
        out["isolated_vacuously"] = self.vacuous
        return out


def _require_nonconstant(f: Polynomial):
    if f.is_zero() or f.is_constant():
        raise HypothesisError("a nonconstant polynomial is required")


def sigma_ideal(f: Polynomial) -> Ideal:
    """Ideal of the locus at infinity: grad f_d together with f_{d-k}.

    Lives in the coordinates of the hyperplane at infinity, which are the
    ring's own variables; the homogenizing variable never appears. For a
    weighted-homogeneous ``f`` only the gradient of ``f_d`` is used.
    """
    _require_nonconstant(f)
    dec = weighted_decompose(f)
    gens = gradient(dec.top)
    if dec.next_part is not None:
        gens.append(dec.next_part)
    return Ideal(f.ring, gens)


def classify_at_infinity(
    f: Polynomial, limits: Optional[ResourceLimits] = None
) -> InfinityReport:
    _require_nonconstant(f)
    dec = weighted_decompose(f)
    a = affine_dimension(jacobian_ideal(f), limits).dim
    s = projective_dimension(sigma_ideal(f), limits).dim
    # both hypotheses hold with s = max(a, s), which is never weaker than s+1
    bound = max(a, s)
    sing_inf = sing_infinity_V(f, limits).dim if f.ring.unit_weights else None
    return InfinityReport(
        d=dec.d,
        k_gap=dec.k,
        dim_sing_affine=a,
        dim_sigma=s,
        bound_dim_sing_X=bound,
        isolated_at_infinity=bound <= 0,
        dim_sing_infinity_V=sing_inf,
        weights_warning=not f.ring.unit_weights,
        homogeneous=dec.homogeneous,
    )


def sing_infinity_V(
    f: Polynomial, limits: Optional[ResourceLimits] = None
) -> DimensionResult:
    """Projective dimension of Sing({f_d = 0}) inside the hyperplane at infinity."""
    _require_nonconstant(f)
    if not f.ring.unit_weights:
        raise HypothesisError("singular locus at infinity of V needs all weights 1")
    top = weighted_decompose(f).top
    return projective_dimension(jacobian_ideal(top), limits)
