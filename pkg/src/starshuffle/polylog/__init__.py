"""Symbolic and numeric polylogarithm machinery.

symfun     the function space spanned by z^k (1-z)^(-l) Li_w
series     exact harmonic sums, Taylor coefficients, numeric evaluation
integrate  the two antiderivations, basepoint limits, word-indexed operators
negindex   closed forms at nonpositive indices
"""

from .symfun import (
    SymFun,
    derivative,
    from_piece,
    index_of,
    inv_lambda_fun,
    lambda_fun,
    reduce_trailing_x0,
    theta,
    to_pieces,
)
from .series import (
    EvalParams,
    eval_li2,
    eval_li_word,
    eval_symfun,
    harmonic_sum,
    neg_taylor_coeff,
    stirling2,
)
from .integrate import (
    apply_word_op,
    discontinuity_demo,
    iota,
    limit_at_one,
    limit_at_zero,
)
from .negindex import (
    ROUTES,
    build_neg_series,
    closed_form_taylor_coeff,
    li_neg_closed_form,
)

__all__ = [
    "SymFun",
    "derivative",
    "from_piece",
    "index_of",
    "inv_lambda_fun",
    "lambda_fun",
    "reduce_trailing_x0",
    "theta",
    "to_pieces",
    "EvalParams",
    "eval_li2",
    "eval_li_word",
    "eval_symfun",
    "harmonic_sum",
    "neg_taylor_coeff",
    "stirling2",
    "apply_word_op",
    "discontinuity_demo",
    "iota",
    "limit_at_one",
    "limit_at_zero",
    "ROUTES",
    "build_neg_series",
    "closed_form_taylor_coeff",
    "li_neg_closed_form",
]
