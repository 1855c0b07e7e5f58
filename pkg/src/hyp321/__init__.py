"""Closed-form evaluation, identification and verification of 3F2(1) sums."""

from .expr import (LinExpr, Symbol, sym, Expr, eval_expr, substitute,
                   cgamma, as_real)
from .series import (ParamSet, SeriesResult, excess, is_terminating,
                     is_karlsson_minton, series_pfq, sum_series_numeric)

__all__ = [
    "LinExpr", "Symbol", "sym", "Expr", "eval_expr", "substitute", "cgamma",
    "as_real", "ParamSet", "SeriesResult", "excess", "is_terminating",
    "is_karlsson_minton", "series_pfq", "sum_series_numeric",
]

__version__ = "0.1.0"
