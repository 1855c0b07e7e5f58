"""Generalized Watson, Dixon, and Whipple elements at arbitrary offsets.

The three classical theorems evaluate one ₃F₂(1) each; their *contiguous*
elements shift the parameters by integers:

    Watson   W_{m,n}(a,b,c) = ₃F₂(a, b, c; (a+b+1+m)/2, 2c+n; 1)
    Dixon    X_{m,n}(a,b,c) = ₃F₂(a, b, c; 1+m+a−b, 1+m+n+a−c; 1)
    Whipple  P_{m,n}(a,b,c) = ₃F₂(a, b, 1−b+m+n; c, 1+2a+m−c; 1)

``watson_element`` reaches any (m, n) by walking a lattice of two
three-term recursions (one stepping m by 2 at fixed n, one stepping n by 1
at fixed m) from eight closed-form anchors.  Dixon and Whipple elements are
Watson elements at shifted arguments times an explicit gamma quotient; the
symbolic maps (``x_to_w``, ``w_to_x``, ``p_from_w``, ``p_from_x``) expose
those shifts and prefactors, and ``dixon_element`` / ``whipple_element``
apply them numerically.

One unknown remains after the anchors are consumed: the two recursions
leave W(2, 1) undetermined (the even-m, n≠0 sublattice is not reachable
from the anchors alone).  Since both recursions are linear, every lattice
value is an affine function p + q·u of u = W(2, 1); the lattice therefore
stores (p, q) pairs and resolves u once, by requiring the n-recursion to
hold in the m = −2 column, where independently computed values meet.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import (AnchorPole, DivergentSeries, ExceptionalCase, GammaPole,
                     Hyp321Error, LowerPole, NoConvergence, NoConvergentCheck,
                     PoleError, SingularRecursionPath)
from .expr import (Expr, LinExpr, Symbol, eval_expr, is_near_nonpositive_integer,
                   substitute, sym)
from .parser import parse_expr
from .series import sum_series_numeric

__all__ = [
    "FAMILIES", "ContigQuery", "AnchorTable", "default_anchor_table",
    "watson_element", "dixon_element", "whipple_element",
    "x_to_w", "w_to_x", "p_from_w", "p_from_x", "dixon_swap",
]

FAMILIES = ("watson", "dixon", "whipple")

#: relative threshold below which a recursion denominator is treated as zero
SINGULAR_TOL = 1e-9

_A, _B, _C = sym("a"), sym("b"), sym("c")
_M, _N = sym("m"), sym("n")
_LA, _LB, _LC = LinExpr.of(_A), LinExpr.of(_B), LinExpr.of(_C)
_LM, _LN = LinExpr.of(_M), LinExpr.of(_N)

Numeric = complex


# ---------------------------------------------------------------------------
# Query description
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ContigQuery:
    """A contiguous element request: family, parameters, and offsets."""

    family: str
    a: Numeric
    b: Numeric
    c: Numeric
    m: int
    n: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")

    def series_params(self) -> tuple[tuple[Numeric, ...], tuple[Numeric, ...]]:
        """Upper/lower parameters of the defining ₃F₂."""
        a, b, c, m, n = self.a, self.b, self.c, self.m, self.n
        if self.family == "watson":
            return (a, b, c), ((a + b + 1 + m) / 2, 2 * c + n)
        if self.family == "dixon":
            return (a, b, c), (1 + m + a - b, 1 + m + n + a - c)
        return (a, b, 1 - b + m + n), (c, 1 + 2 * a + m - c)


# ---------------------------------------------------------------------------
# Anchors
# ---------------------------------------------------------------------------

#: (m, n) -> (entry id, permutation sending (a, b, c) of the query to the
#: entry's own (a, b, c) symbols); permutation[i] is the index into the
#: query triple bound to the i-th entry symbol.
_ANCHOR_SPEC: dict[tuple[int, int], tuple[str, tuple[int, int, int]]] = {
    (0, 0): ("EXT.W00", (0, 1, 2)),
    (0, 1): ("EQ.15", (0, 1, 2)),
    (0, -1): ("B.43", (0, 1, 2)),
    (-1, 1): ("B.44", (0, 2, 1)),
    (1, 0): ("B.47", (0, 1, 2)),
    (1, -1): ("B.51", (2, 0, 1)),
    (-1, 0): ("C.5", (0, 1, 2)),
    (2, 0): ("C.6", (0, 1, 2)),
}


@dataclass(frozen=True)
class AnchorTable:
    """The eight Watson starting closed forms, as database entries.

    ``entries`` maps an offset pair to the entry holding its closed form
    plus the argument permutation under which the entry's left-hand side is
    exactly W_{m,n}.
    """

    entries: dict  # (m, n) -> (DbEntry, permutation)

    def value(self, m: int, n: int, a: Numeric, b: Numeric, c: Numeric) -> Numeric:
        entry, perm = self.entries[(m, n)]
        triple = (a, b, c)
        assignment = {_A: triple[perm[0]], _B: triple[perm[1]], _C: triple[perm[2]]}
        try:
            return eval_expr(entry.rhs, assignment)
        except PoleError as exc:
            raise AnchorPole(
                f"anchor W({m},{n}) ({entry.id}) hits a gamma pole: {exc}") from exc


_ANCHOR_CACHE: Optional[AnchorTable] = None


def default_anchor_table() -> AnchorTable:
    """Anchor table backed by the built-in database (cached)."""
    global _ANCHOR_CACHE
    if _ANCHOR_CACHE is None:
        from .database import get_entry, seed_db
        db = seed_db()
        _ANCHOR_CACHE = AnchorTable(entries={
            key: (get_entry(db, eid), perm)
            for key, (eid, perm) in _ANCHOR_SPEC.items()})
    return _ANCHOR_CACHE


# ---------------------------------------------------------------------------
# The Watson lattice
# ---------------------------------------------------------------------------

#: seed n-range (inclusive) available per anchored column m
_COLUMN_SEEDS = {-1: (0, 1), 0: (-1, 1), 1: (-1, 0), 2: (0, 1)}

#: the free lattice unknown: u = W(2, 1)
_FREE_NODE = (2, 1)


class _WatsonLattice:
    """Affine-in-u lattice of W values at fixed numeric (a, b, c).

    Every node is stored as a pair (p, q) meaning W = p + q·u with
    u = W(2, 1); u is resolved lazily from an n-recursion consistency
    condition in the m = −2 column.
    """

    def __init__(self, a: Numeric, b: Numeric, c: Numeric,
                 anchors: Optional[AnchorTable] = None):
        self.a = complex(a)
        self.b = complex(b)
        self.c = complex(c)
        self.anchors = anchors if anchors is not None else default_anchor_table()
        self.memo: dict[tuple[int, int], tuple[complex, complex]] = {}
        self.u: Optional[complex] = None
        self.scale = 1.0 + abs(self.a) + abs(self.b) + abs(self.c)

    # -- recursion coefficients -------------------------------------------
    def _check_denominator(self, d: complex, where: str) -> complex:
        if abs(d) < SINGULAR_TOL * self.scale ** 3:
            raise SingularRecursionPath(
                f"recursion denominator vanished at {where} "
                f"(|d| = {abs(d):.3g})")
        return d

    def _n_step(self, m: int, n: int) -> tuple[complex, complex]:
        """(c1, c2) with W(m, n) = c1·W(m, n−1) + c2·W(m, n−2)."""
        a, b, c = self.a, self.b, self.c
        d = 2 * self._check_denominator(
            (n + c - 1) * (1 - n - 2 * c + b) * (1 - n - 2 * c + a),
            f"n-step at (m,n)=({m},{n})")
        poly = (-3 * n * a - 3 * n * b - 11 * n + 2 * m * c - 4 * c * a
                - 4 * c * b - 16 * c + 8 + 12 * c * n + 4 * a + 4 * b
                - 2 * m + 8 * c ** 2 + 4 * n ** 2 + 2 * a * b + m * n)
        c1 = (2 * c + n - 1) * poly / d
        c2 = (2 * c + n - 1) * (2 * c + n - 2) * (a + b - 2 * c + 3 - m - 2 * n) / d
        return c1, c2

    def _m_step(self, m: int, n: int) -> tuple[complex, complex]:
        """(A, B) with W(m, n) = A·W(m−2, n) + B·W(m−4, n)."""
        a, b, c = self.a, self.b, self.c
        d = self._check_denominator(
            (a - b - m + 1) * (a - b + m - 1) * (a + b - 2 * c + m - 1),
            f"m-step at (m,n)=({m},{n})")
        ca = -2 * (a + b + m - 1) * (
            -a ** 2 + 2 * a * c + a * n - b ** 2 + 2 * b * c + b * n
            - 2 * c + m ** 2 + m * n - 4 * m - 3 * n + 5) / d
        cb = -(a + b + m - 3) * (a + b + m - 1) * (a + b - 2 * c + 3 - m - 2 * n) / d
        return ca, cb

    # -- lattice traversal --------------------------------------------------
    def pair(self, m: int, n: int) -> tuple[complex, complex]:
        key = (m, n)
        if key in self.memo:
            return self.memo[key]
        if key in _ANCHOR_SPEC:
            val = (self.anchors.value(m, n, self.a, self.b, self.c), 0j)
        elif key == _FREE_NODE:
            val = (0j, 1 + 0j)
        elif -1 <= m <= 2:
            lo, hi = _COLUMN_SEEDS[m]
            if n > hi:
                c1, c2 = self._n_step(m, n)
                w1, w2 = self.pair(m, n - 1), self.pair(m, n - 2)
                val = (c1 * w1[0] + c2 * w2[0], c1 * w1[1] + c2 * w2[1])
            else:  # n < lo: solve the stencil at n + 2 for its lowest term
                c1, c2 = self._n_step(m, n + 2)
                if abs(c2) < SINGULAR_TOL:
                    raise SingularRecursionPath(
                        f"n-step at (m,n)=({m},{n + 2}) cannot be inverted")
                w0, w1 = self.pair(m, n + 2), self.pair(m, n + 1)
                val = ((w0[0] - c1 * w1[0]) / c2, (w0[1] - c1 * w1[1]) / c2)
        elif m >= 3:
            ca, cb = self._m_step(m, n)
            w1, w2 = self.pair(m - 2, n), self.pair(m - 4, n)
            val = (ca * w1[0] + cb * w2[0], ca * w1[1] + cb * w2[1])
        else:  # m <= -2: solve the stencil at m + 4 for its lowest term
            ca, cb = self._m_step(m + 4, n)
            if abs(cb) < SINGULAR_TOL:
                raise SingularRecursionPath(
                    f"m-step at (m,n)=({m + 4},{n}) cannot be inverted")
            w0, w1 = self.pair(m + 4, n), self.pair(m + 2, n)
            val = ((w0[0] - ca * w1[0]) / cb, (w0[1] - ca * w1[1]) / cb)
        self.memo[key] = val
        return val

    # -- resolving the free unknown ----------------------------------------
    def _resolve_u(self) -> complex:
        """Fix u = W(2, 1) so the n-recursion holds in the m = −2 column."""
        if self.u is not None:
            return self.u
        for probe in (1, 2):
            c1, c2 = self._n_step(-2, probe)
            lp, lq = self.pair(-2, probe)
            w1, w2 = self.pair(-2, probe - 1), self.pair(-2, probe - 2)
            rp = c1 * w1[0] + c2 * w2[0]
            rq = c1 * w1[1] + c2 * w2[1]
            den = lq - rq
            mag = max(1.0, abs(lq), abs(rq))
            if abs(den) > SINGULAR_TOL * mag:
                self.u = (rp - lp) / den
                return self.u
        raise SingularRecursionPath(
            "the consistency condition fixing W(2,1) is degenerate at these "
            "parameters; perturb (a, b, c)")

    def value(self, m: int, n: int) -> complex:
        p, q = self.pair(m, n)
        if abs(q) <= 1e-13 * max(1.0, abs(p)):
            return p
        return p + q * self._resolve_u()


# ---------------------------------------------------------------------------
# Symbolic conversion maps
# ---------------------------------------------------------------------------

def _coerce(x) -> LinExpr:
    if isinstance(x, complex):
        if abs(x.imag) > 1e-12 * max(1.0, abs(x.real)):
            raise TypeError("symbolic maps take real or exact-rational arguments")
        x = x.real
    if isinstance(x, float):
        x = Fraction(x)
    return LinExpr.of(x)


_X_TO_W_PREF = parse_expr(
    "G(a-2*b-2*c+2+2*m+n)*G(1+a-c+m+n)"
    " / (G(1-c+m+n)*G(2*a-2*b-2*c+2+2*m+n))")

_W_TO_X_PREF = parse_expr(
    "G(c+n+(1+m-a-b)/2)*G(2*c+n)*G((a+b+1+m)/2)"
    " / (G(a)*G(c+n+(1+m+b-a)/2)*G(2*c+n+(1+m-a-b)/2))")

_P_FROM_W_PREF = parse_expr(
    "G(a-n)*G(c)*G(1+m+2*a-c) / (G(b)*G(2*a-n)*G(a-b+m+1))")

_P_FROM_X_PREF = parse_expr(
    "G(a-n)*G(c) / (G(b+c-1-m-n)*G(a-b+m+1))")


def _mapped(prefactor: Expr, args, mapping) -> tuple[tuple[LinExpr, ...], Expr]:
    return tuple(args), substitute(prefactor, mapping)


def x_to_w(a, b, c, m, n) -> tuple[tuple[LinExpr, ...], Expr]:
    """X_{m,n}(a,b,c) = W_{m,n}(mapped args) · prefactor."""
    a, b, c, m, n = map(_coerce, (a, b, c, m, n))
    mapping = {_A: a, _B: b, _C: c, _M: m, _N: n}
    return _mapped(_X_TO_W_PREF,
                   (1 + m + a - b * 2, a, 1 + m + a - b - c, m, n), mapping)


def w_to_x(a, b, c, m, n) -> tuple[tuple[LinExpr, ...], Expr]:
    """W_{m,n}(a,b,c) = X_{m,n}(mapped args) · prefactor."""
    a, b, c, m, n = map(_coerce, (a, b, c, m, n))
    mapping = {_A: a, _B: b, _C: c, _M: m, _N: n}
    return _mapped(_W_TO_X_PREF,
                   (c * 2 + n - a, (b - a + m + 1) / 2,
                    (1 + m - a - b) / 2 + c + n, m, n), mapping)


def p_from_w(a, b, c, m, n) -> tuple[tuple[LinExpr, ...], Expr]:
    """P_{m,n}(a,b,c) = W_{m,n}(mapped args) · prefactor."""
    a, b, c, m, n = map(_coerce, (a, b, c, m, n))
    mapping = {_A: a, _B: b, _C: c, _M: m, _N: n}
    return _mapped(_P_FROM_W_PREF,
                   (c - b, a * 2 - c + m + 1 - b, a - n, m, n), mapping)


def p_from_x(a, b, c, m, n) -> tuple[tuple[LinExpr, ...], Expr]:
    """P_{m,n}(a,b,c) = X_{m,n}(mapped args) · prefactor."""
    a, b, c, m, n = map(_coerce, (a, b, c, m, n))
    mapping = {_A: a, _B: b, _C: c, _M: m, _N: n}
    return _mapped(_P_FROM_X_PREF,
                   (a * 2 - b - c + m + 1, 1 + a - c + m, 1 - b + m + n, m, n),
                   mapping)


def dixon_swap(a, b, c, m, n) -> tuple:
    """The Dixon index symmetry X_{m,n}(a,b,c) = X_{m+n,−n}(a,c,b).

    It holds verbatim: swapping b and c and re-indexing permutes the two
    lower parameters of the defining ₃F₂.
    """
    return (a, c, b, m + n, -n)


# ---------------------------------------------------------------------------
# Numeric elements
# ---------------------------------------------------------------------------

def _cross_check(query: ContigQuery, value: complex, rel_tol: float) -> None:
    upper, lower = query.series_params()
    try:
        ref = sum_series_numeric(list(upper), list(lower), rel_tol=rel_tol / 10).value
    except (DivergentSeries, NoConvergence, LowerPole) as exc:
        err = NoConvergentCheck(
            f"no convergent series cross-check for {query.family} "
            f"({query.m},{query.n}): {exc}")
        err.value = value
        raise err from exc
    err = abs(value - ref) / max(1.0, abs(ref))
    if err > rel_tol:
        raise Hyp321Error(
            f"{query.family} element ({query.m},{query.n}) disagrees with the "
            f"direct series: {value} vs {ref} (rel err {err:.3g})")


def watson_element(a: Numeric, b: Numeric, c: Numeric, m: int, n: int,
                   rel_tol: Optional[float] = None,
                   anchors: Optional[AnchorTable] = None) -> complex:
    """W_{m,n}(a, b, c) by lattice recursion from the eight anchors.

    When ``rel_tol`` is given the result is cross-checked against direct
    series summation; ``NoConvergentCheck`` (carrying ``.value``) is raised
    if no convergent check exists.
    """
    lattice = _WatsonLattice(a, b, c, anchors)
    value = lattice.value(int(m), int(n))
    if rel_tol is not None:
        _cross_check(ContigQuery("watson", a, b, c, int(m), int(n)),
                     value, rel_tol)
    return value


def _prefactor_value(pref: Expr, a, b, c, m, n) -> complex:
    assignment = {_A: a, _B: b, _C: c, _M: m, _N: n}
    try:
        return eval_expr(pref, assignment)
    except PoleError as exc:
        raise GammaPole(f"gamma quotient pole: {exc}") from exc


def dixon_element(a: Numeric, b: Numeric, c: Numeric, m: int, n: int,
                  rel_tol: Optional[float] = None,
                  anchors: Optional[AnchorTable] = None) -> complex:
    """X_{m,n}(a, b, c) via the Watson lattice at shifted arguments."""
    m, n = int(m), int(n)
    wa = 1 + m + a - 2 * b
    wb = a
    wc = 1 + m + a - b - c
    value = (watson_element(wa, wb, wc, m, n, anchors=anchors)
             * _prefactor_value(_X_TO_W_PREF, a, b, c, m, n))
    if rel_tol is not None:
        _cross_check(ContigQuery("dixon", a, b, c, m, n), value, rel_tol)
    return value


def whipple_element(a: Numeric, b: Numeric, c: Numeric, m: int, n: int,
                    rel_tol: Optional[float] = None,
                    anchors: Optional[AnchorTable] = None) -> complex:
    """P_{m,n}(a, b, c) via the Watson lattice at shifted arguments.

    Raises ``ExceptionalCase`` for m = n = 0 with ``a`` a non-positive
    integer and ``b`` non-integer, where both conversion routes break down.
    """
    m, n = int(m), int(n)
    if (m == 0 and n == 0 and is_near_nonpositive_integer(complex(a))
            and abs(complex(b).imag) < 1e-9
            and abs(complex(b).real - round(complex(b).real)) > 1e-9):
        raise ExceptionalCase(
            "the Whipple conversion fails at m = n = 0 when a is a "
            "non-positive integer and b is not an integer")
    wa = c - b
    wb = 2 * a - c + m + 1 - b
    wc = a - n
    value = (watson_element(wa, wb, wc, m, n, anchors=anchors)
             * _prefactor_value(_P_FROM_W_PREF, a, b, c, m, n))
    if rel_tol is not None:
        _cross_check(ContigQuery("whipple", a, b, c, m, n), value, rel_tol)
    return value
