"""Exact determinants and regularity of matrices ``A_ij = (x_i + r_j y_i)^ell``,
with the generalized-Vandermonde and Schur-polynomial machinery behind them."""

from .combinatorics import (
    IndexTuple,
    Partition,
    Tableau,
    complement,
    enumerate_index_tuples,
    enumerate_ssyt,
    gamma_coefficient,
    partition_to_tuple,
    tuple_to_partition,
)
from .exact import GaussianRational, as_scalar, binomial, factorial, format_scalar, parse_scalar
from .linalg import Matrix, column_combination, det_leibniz, det_oracle, replace_column
from .schur import (
    SparsePolynomial,
    generalized_vandermonde,
    poly_equal,
    poly_eval,
    poly_mul,
    schur_eval,
    schur_expand,
    vandermonde,
)
from .uniform import (
    RegularityStatus,
    RegularityVerdict,
    UniformMatrixSpec,
    b_matrix,
    build_matrix,
    classify_regularity,
    closed_form_limit_det,
    column_reduce,
    constant_gap_spec,
    det_b_alpha,
    det_expansion,
    finite_diff_sum,
)

__version__ = "0.1.0"
