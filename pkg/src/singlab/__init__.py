"""Exact computations for singularities at infinity and monodromy of polynomial maps."""

__version__ = "0.1.0"

from .errors import (
    HypothesisError,
    InexactDivisionError,
    ParseError,
    ResourceLimitError,
    SinglabError,
)
from .polycore import (
    Polynomial,
    RingContext,
    WeightedDecomposition,
    evaluate,
    gradient,
    homogenize,
    parse_polynomial,
    weighted_decompose,
)
from .grobner import (
    DimensionResult,
    GroebnerBasis,
    Ideal,
    ResourceLimits,
    affine_dimension,
    buchberger,
    jacobian_ideal,
    milnor_number,
    normal_form,
    projective_dimension,
)
from .infinity import InfinityReport, classify_at_infinity, sigma_ideal, sing_infinity_V
from .laurent import LaurentPolynomial, parse_laurent
