"""Exact Euler characteristics of triangulated manifolds from even-dimensional face counts."""
from .coefficients import BetaTable, beta, beta_table, decompose, s_m_sum, theta
from .evenchi import (
    EulerComparison,
    cross_validate,
    euler_even,
    euler_even_from_fvector,
    euler_with_boundary,
)
from .exactmath import Polynomial, TruncatedSeries, bernoulli, binomial
from .kernels import BACKEND
from .relations import (
    CheckReport,
    HVector,
    check_boundary_links,
    check_dehn_sommerville,
    check_lemma1,
    f_polynomial,
    h_vector,
    is_semi_eulerian,
    lemma1_polynomial,
)
from .simplicial import (
    FVector,
    SimplicialComplex,
    boundary,
    double,
    euler_classical,
    f_vector,
    from_facets,
    is_pure,
    link,
)

__version__ = "0.1.0"
