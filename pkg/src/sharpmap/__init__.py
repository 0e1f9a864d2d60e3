"""Exact sparse solutions of the linear systems behind monomial sphere maps."""

from .certify import Certificate, gap_admissible, target_minimal_census, verify_sharp
from .families import (
    closed_form_coefficients,
    invariant_poly,
    l1_closed_form,
    primality_congruence,
    substitute,
    tensor_op,
    whitney_poly,
)
from .lp import LPProblem, LPResult, enumerate_vertex_optima, feasible, minimize
from .newton import build_graph, dehomogenize_trace, sink_certificate
from .poly import Poly, parse_poly
from .search import (
    BudgetExceeded,
    SearchBudget,
    SearchReport,
    min_l0,
    sharp_bound,
    symmetric_min_terms,
    uniqueness_test,
)
from .systems import (
    LinearSystem,
    SymmetricBasisElement,
    build_eliminated,
    build_homogenized,
    build_symmetric,
    reduce_support,
)

__version__ = "0.1.0"
