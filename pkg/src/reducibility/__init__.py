"""Exact computation of indices of reducibility, socles, unmixed components
and local cohomology socle dimensions for graded rings over Q."""

from .arith import (
    GREVLEX,
    LEX,
    MonomialOrder,
    Polynomial,
    elimination,
    format_polynomial,
    order_from_name,
    parse_polynomial,
)
from .errors import (
    AlgebraError,
    CeilingExceeded,
    HypothesisViolation,
    NotInSemigroup,
    NotParameterIdeal,
    ParseError,
    ZeroDivisorError,
)
from .groebner import GroebnerBasis, buchberger, ideal_membership, normal_form
from .ideals import Ideal, RingPresentation, colon_element, colon_ideal, eliminate, intersect, saturate
from .localcoh import (
    CohomologyReport,
    cohomology_report,
    goto_suzuki_bound,
    hd_socle_cech,
    power_family,
    stabilization_experiment,
)
from .quotient import (
    finite_length_submodule_dim,
    index_of_reducibility,
    is_parameter_ideal,
    krull_dimension,
    quotient_length,
    socle_basis,
    socle_dimension,
    standard_monomials,
)
from .ringfile import RingFile, load_ring_file, parse_ring_file
from .semigroup import MonomialSubalgebra, colon_monomial_fastpath, toric_presentation
from .theorems import SopWitness, Verdict, check_standard_sop, run_suite

__version__ = "0.1.0"
