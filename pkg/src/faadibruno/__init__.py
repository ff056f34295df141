"""Exact calculus for higher-order derivatives of (f o phi) * (g o phi^(s)).

Partition-indexed coefficient formulas, a formal-symbol oracle and a concrete
rational-polynomial oracle to verify them against, and the Bell-polynomial /
Stirling-number objects the coefficients induce.  All arithmetic is exact.
"""

from .bell import (
    StirlingTable,
    YPolynomial,
    complete_bell,
    modified_complete_bell,
    modified_partial_bell,
    modified_stirling,
    partial_bell,
    product_form_complete,
    product_form_partial,
    stirling2,
    stirling_convolution,
    touchard,
)
from .coefficients import (
    CoefficientTable,
    CrossCheckError,
    IntegralityError,
    RecurrenceEvaluator,
    c_coeff,
    c_coeff_by_recurrence,
    coefficient_table,
    faa_di_bruno_coeff,
)
from .diffalg import (
    DiffMonomial,
    DiffPolynomial,
    derive,
    faa_expansion,
    formula_expansion,
    leibniz_product_expansion,
    monomial,
    nth_derivative_expansion,
    substitute_psi,
)
from .partitions import (
    DEFAULT_WEIGHT_CAP,
    CapExceeded,
    Multiset,
    Partition,
    enumerate_constrained,
    enumerate_partitions,
    make_partition,
)
from .polynomials import (
    RationalPolynomial,
    check_main_theorem,
    poly_add,
    poly_compose,
    poly_derivative,
    poly_mul,
    random_polynomial,
    run_random_checks,
)
from .symfunc import (
    ElementaryVector,
    elementary_by_subpartitions,
    elementary_moments,
    newton_residual,
    power_sum,
    subtract_transform,
)
from .verification import run_all as run_verification

__version__ = "0.1.0"
