"""Exact-arithmetic shuffle algebra over x0, x1 with Kleene stars of the
plane, the rewriting system for the kernel of the polylogarithm morphism,
and symbolic/numeric polylogarithm tools."""

from .errors import ConvergenceError, DomainError, NonElementaryConstantError
from .expressions import (
    ExprSyntaxError,
    ExprTypeError,
    elaborate,
    format_series,
    format_value,
    parse_expr,
    parse_value,
)
from .polylog import (
    ROUTES,
    EvalParams,
    SymFun,
    apply_word_op,
    build_neg_series,
    closed_form_taylor_coeff,
    discontinuity_demo,
    eval_li2,
    eval_li_word,
    eval_symfun,
    harmonic_sum,
    index_of,
    inv_lambda_fun,
    iota,
    lambda_fun,
    li_neg_closed_form,
    limit_at_one,
    limit_at_zero,
    neg_taylor_coeff,
    reduce_trailing_x0,
    theta,
)
from .rewrite import kernel_member, normal_form, rewrite_trace
from .shuffle_core import (
    NCPoly,
    YPoly,
    conc,
    format_poly,
    is_exchangeable,
    left_residual,
    parse_poly,
    pi_x,
    pi_y,
    right_residual,
    shuffle,
    stuffle,
    unshuffle,
)
from .star_series import (
    StarSeries,
    StarTerm,
    delta_left,
    embed,
    expand,
    plane_star,
    shuffle_power,
    shuffle_star,
    star,
    star_term,
)
from .words import (
    EPSILON,
    X0,
    X1,
    Word,
    clf_factorize,
    composition_of_word,
    lyndon_up_to,
    word_of_composition,
)

__all__ = [
    "ConvergenceError",
    "DomainError",
    "NonElementaryConstantError",
    "ExprSyntaxError",
    "ExprTypeError",
    "elaborate",
    "format_series",
    "format_value",
    "parse_expr",
    "parse_value",
    "ROUTES",
    "EvalParams",
    "SymFun",
    "apply_word_op",
    "build_neg_series",
    "closed_form_taylor_coeff",
    "discontinuity_demo",
    "eval_li2",
    "eval_li_word",
    "eval_symfun",
    "harmonic_sum",
    "index_of",
    "inv_lambda_fun",
    "iota",
    "lambda_fun",
    "li_neg_closed_form",
    "limit_at_one",
    "limit_at_zero",
    "neg_taylor_coeff",
    "reduce_trailing_x0",
    "theta",
    "kernel_member",
    "normal_form",
    "rewrite_trace",
    "NCPoly",
    "YPoly",
    "conc",
    "format_poly",
    "is_exchangeable",
    "left_residual",
    "parse_poly",
    "pi_x",
    "pi_y",
    "right_residual",
    "shuffle",
    "stuffle",
    "unshuffle",
    "StarSeries",
    "StarTerm",
    "delta_left",
    "embed",
    "expand",
    "plane_star",
    "shuffle_power",
    "shuffle_star",
    "star",
    "star_term",
    "EPSILON",
    "X0",
    "X1",
    "Word",
    "clf_factorize",
    "composition_of_word",
    "lyndon_up_to",
    "word_of_composition",
]
