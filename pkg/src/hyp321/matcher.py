"""Identification and equivalence culling for closed-form ₃F₂(1) sums.

``unify`` solves, exactly over the rationals, for a substitution carrying a
symbolic parameter template onto a query parameter set.  ``identify`` combines
unification with the ten distinct Thomae images of a query to look the query
up in the database; ``equivalent`` and ``cull`` use the same machinery to
reduce a collection of identities to an inequivalent base set.

All symbolic matching is exact (``fractions.Fraction``); floating-point values
never participate in unification.  Numeric evaluation is used only as an
optional spot check on candidate matches.
"""

from __future__ import annotations

import random
import zlib
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Mapping, Optional, Sequence

from .database import (DbEntry, _constraint_ok, _default_watson, _int_range,
                       _RECOVERABLE)
from .errors import Hyp321Error
from .expr import (Add, Cos, Expr, FiniteSum, Gamma, LinExpr, LIN_ZERO, Mul,
                   Neg, Pochhammer, Polygamma, Pow, Recip, Sin, Symbol,
                   WatsonRef, eval_expr, free_symbols, substitute)
from .series import (ParamSet, excess, is_terminating, sample_continuous,
                     series_pfq)
from .thomae import (IDENTITY_VARIANT, ThomaeVariant, apply_variant,
                     distinct_images)

Q = Fraction

_UPPER_PERMS = tuple(permutations(range(3)))
_LOWER_PERMS = tuple(permutations(range(2)))


@dataclass(frozen=True)
class Substitution:
    """Map from template symbols to affine expressions in query symbols."""

    mapping: tuple[tuple[Symbol, LinExpr], ...]

    def as_dict(self) -> dict[Symbol, LinExpr]:
        return dict(self.mapping)

    def __str__(self) -> str:
        return "{" + ", ".join(f"{s.name} -> {lin}" for s, lin in self.mapping) + "}"


@dataclass(frozen=True)
class MatchResult:
    """One identification hit: the query is ``variant``-image of ``entry_id``.

    ``instantiated_rhs`` is the entry's closed form after substitution,
    multiplied by the Thomae prefactor, so that it evaluates to the *query's*
    value.  ``derived`` carries the entry's helper-symbol definitions with the
    same substitution applied; they must be bound (in order) before
    ``instantiated_rhs`` is evaluated.
    """

    entry_id: str
    variant: ThomaeVariant
    substitution: Substitution
    instantiated_rhs: Expr
    derived: tuple[tuple[Symbol, Expr], ...] = ()


# ---------------------------------------------------------------------------
# Exact unification
# ---------------------------------------------------------------------------

def _solve(rows: list[list[Fraction]], rhs: list[LinExpr],
           nsym: int) -> Optional[list[LinExpr]]:
    """Gauss-Jordan over Fraction with LinExpr right-hand sides.

    Returns the unique solution, or None when the system is inconsistent or
    underdetermined (a free template symbol admits infinitely many bindings).
    """
    m = [row[:] for row in rows]
    r = list(rhs)
    for col in range(nsym):
        piv = next((i for i in range(col, len(m)) if m[i][col] != 0), None)
        if piv is None:
            return None
        m[col], m[piv] = m[piv], m[col]
        r[col], r[piv] = r[piv], r[col]
        inv = Q(1) / m[col][col]
        m[col] = [x * inv for x in m[col]]
        r[col] = r[col] * inv
        for i in range(len(m)):
            if i != col and m[i][col] != 0:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[col])]
                r[i] = r[i] - r[col] * f
    for i in range(nsym, len(m)):
        if r[i] != LIN_ZERO:
            return None
    return r[:nsym]


def _integer_bindings_ok(mapping: Mapping[Symbol, LinExpr]) -> bool:
    for s, lin in mapping.items():
        if s.kind != "integer":
            continue
        if lin.is_constant:
            k = lin.as_integer()
            if k is None or k < 0:
                return False
        elif not lin.is_integer_valued():
            return False
    return True


def _constants_compatible(template: ParamSet, query: ParamSet) -> bool:
    """Cheap rejection: constant template parameters must appear verbatim."""
    for tside, qside in ((template.upper, query.upper),
                         (template.lower, query.lower)):
        pool = list(qside)
        for t in tside:
            if t.is_constant:
                if t not in pool:
                    return False
                pool.remove(t)
    return True


def unify(template: ParamSet, query: ParamSet) -> list[Substitution]:
    """All exact substitutions carrying ``template`` onto ``query``.

    For each of the 6 x 2 slot alignments the five linear equations
    ``template_i(sigma) = query_i`` are solved over the rationals for the
    template symbols.  A solution is kept when it is unique and exact,
    integer-kind symbols bind to non-negative integer constants or to
    integer-valued affine forms, and re-instantiation reproduces the query as
    a multiset.  Template symbols must be disjoint from query symbols.
    """
    if len(template.upper) != 3 or len(template.lower) != 2:
        raise ValueError("unify expects 3F2 parameter sets")
    if len(query.upper) != 3 or len(query.lower) != 2:
        raise ValueError("unify expects 3F2 parameter sets")
    if not _constants_compatible(template, query):
        return []
    tsyms = sorted(template.free_symbols(), key=lambda s: s.name)
    tparams = template.upper + template.lower
    rows = [[p.coeff(s) for s in tsyms] for p in tparams]
    out: list[Substitution] = []
    seen: set = set()
    for up in _UPPER_PERMS:
        qu = tuple(query.upper[i] for i in up)
        for lp in _LOWER_PERMS:
            ql = tuple(query.lower[i] for i in lp)
            rhs = [q - LinExpr.of(p.const)
                   for p, q in zip(tparams, qu + ql)]
            sol = _solve(rows, rhs, len(tsyms))
            if sol is None:
                continue
            mapping = dict(zip(tsyms, sol))
            if not _integer_bindings_ok(mapping):
                continue
            inst = ParamSet(tuple(u.subs(mapping) for u in template.upper),
                            tuple(l.subs(mapping) for l in template.lower))
            if inst != query:
                continue
            key = tuple((s.name, lin) for s, lin in sorted(
                mapping.items(), key=lambda kv: kv[0].name))
            if key in seen:
                continue
            seen.add(key)
            out.append(Substitution(tuple(
                sorted(mapping.items(), key=lambda kv: kv[0].name))))
    return out


# ---------------------------------------------------------------------------
# Identification against the database
# ---------------------------------------------------------------------------

def _entry_constraints_ok(entry: DbEntry,
                          mapping: Mapping[Symbol, LinExpr]) -> bool:
    """Check integer-symbol constraints for bindings that are constant.

    Symbolic bindings are accepted here (the constraints travel with the
    match and can only be adjudicated at evaluation time).
    """
    values: dict[Symbol, complex] = {}
    for s, _ in entry.int_symbols:
        lin = mapping.get(s)
        if lin is not None and lin.is_constant:
            values[s] = complex(lin.const)
    for s, constraints in entry.int_symbols:
        for cstr in constraints:
            try:
                if not _constraint_ok(cstr, values):
                    return False
            except Hyp321Error:
                continue  # references an unbound symbol: recorded, not checked
    return True


def _spot_check(query: ParamSet, match: MatchResult, entry: DbEntry,
                seed: int, rel_tol: float) -> bool:
    """Numerically test one candidate match at a random legal assignment.

    Returns False only on a demonstrated numeric mismatch; if no convergent
    check point can be found the candidate is accepted.
    """
    rng = random.Random((seed << 32) ^ zlib.crc32(
        (match.entry_id + "|" + match.variant.name).encode()))
    derived_names = {s for s, _ in match.derived}
    base: set[Symbol] = set(query.free_symbols())
    base |= free_symbols(match.instantiated_rhs)
    for _, d in match.derived:
        base |= free_symbols(d)
    base -= derived_names
    order = sorted(base, key=lambda s: s.name)
    submap = match.substitution.as_dict()
    for _ in range(30):
        assign: dict[Symbol, complex] = {}
        for s in order:
            assign[s] = rng.randint(1, 4) if s.kind == "integer" \
                else sample_continuous(rng)
        try:
            full = dict(assign)
            for s, d in match.derived:
                full[s] = eval_expr(d, full)
            # respect the entry's own integer constraints at this draw
            ivals: dict[Symbol, complex] = {}
            bad = False
            for s, _ in entry.int_symbols:
                lin = submap.get(s)
                if lin is None:
                    bad = True
                    break
                v = lin.eval(full)
                if abs(v.imag) > 1e-9 or abs(v.real - round(v.real)) > 1e-9:
                    bad = True
                    break
                ivals[s] = complex(round(v.real))
            if bad:
                continue
            ok = all(_constraint_ok(c, ivals)
                     for _, cons in entry.int_symbols for c in cons)
            if not ok:
                continue
            exc = excess(query).eval(full)
            if not is_terminating(query, full) and exc.real <= 0.3:
                continue
            lhs = series_pfq(query, full, rel_tol=1e-10).value
            rhs = eval_expr(match.instantiated_rhs, full,
                            watson=_default_watson)
        except (_RECOVERABLE + (Hyp321Error,)):
            continue
        err = abs(lhs - rhs) / max(abs(lhs), abs(rhs), 1e-300)
        return err < rel_tol
    return True


def _rename_captured_indices(e: Expr, taken: frozenset[Symbol]) -> Expr:
    """Alpha-rename finite-sum indices that collide with ``taken`` symbols."""
    if isinstance(e, (Add, Mul)):
        return type(e)(tuple(_rename_captured_indices(x, taken)
                             for x in e.args))
    if isinstance(e, (Neg, Recip, Gamma, Sin, Cos)):
        return type(e)(_rename_captured_indices(e.arg, taken))
    if isinstance(e, Pow):
        return Pow(_rename_captured_indices(e.base, taken),
                   _rename_captured_indices(e.exponent, taken))
    if isinstance(e, Polygamma):
        return Polygamma(e.order, _rename_captured_indices(e.arg, taken))
    if isinstance(e, Pochhammer):
        return Pochhammer(_rename_captured_indices(e.base, taken), e.count)
    if isinstance(e, WatsonRef):
        return WatsonRef(_rename_captured_indices(e.a, taken),
                         _rename_captured_indices(e.b, taken),
                         _rename_captured_indices(e.c, taken), e.m, e.n)
    if isinstance(e, FiniteSum):
        body = _rename_captured_indices(e.body, taken)
        idx = e.index
        if idx in taken:
            fresh = Symbol(idx.name + "_", "integer")
            while fresh in taken or fresh in free_symbols(body):
                fresh = Symbol(fresh.name + "_", "integer")
            body = substitute(body, {idx: LinExpr.of(fresh)})
            idx = fresh
        return FiniteSum(idx, e.lower, e.upper, body)
    return e


def _substitute_capture_free(e: Expr, smap: Mapping[Symbol, LinExpr]) -> Expr:
    taken = frozenset().union(*(t.free_symbols() for t in smap.values()),
                              frozenset())
    return substitute(_rename_captured_indices(e, taken), smap)


def identify(entries: Sequence[DbEntry], query: ParamSet, *,
             include_conjectures: bool = False, numeric_check: bool = True,
             seed: int = 0, rel_tol: float = 1e-6) -> list[MatchResult]:
    """Look a ₃F₂(1) parameter set up in the database.

    Each of the query's distinct Thomae images (the 120 formal variants
    collapse to at most ten distinct parameter multisets) is unified against
    every non-flagged entry; conjectural entries participate only when
    ``include_conjectures`` is set.  Results are ordered by entry id, then
    variant name, and each instantiated closed form evaluates to the query's
    own value.
    """
    from .thomae import all_variants
    images = distinct_images(query, [IDENTITY_VARIANT] + all_variants())
    results: list[MatchResult] = []
    for entry in sorted(entries, key=lambda e: e.id):
        if entry.status == "flagged":
            continue
        if entry.status == "conjecture" and not include_conjectures:
            continue
        for v, img, pref in images:
            for sub in unify(entry.lhs, img):
                smap = sub.as_dict()
                if not _entry_constraints_ok(entry, smap):
                    continue
                inst_rhs = Mul((pref, _substitute_capture_free(entry.rhs,
                                                               smap)))
                derived = tuple((s, _substitute_capture_free(d, smap))
                                for s, d in entry.derived)
                match = MatchResult(entry.id, v, sub, inst_rhs, derived)
                if numeric_check and not _spot_check(query, match, entry,
                                                     seed, rel_tol):
                    continue
                results.append(match)
    results.sort(key=lambda r: (r.entry_id, r.variant.name))
    return results


# ---------------------------------------------------------------------------
# Equivalence and culling
# ---------------------------------------------------------------------------

def _qsym(s: Symbol) -> Symbol:
    return Symbol("q*" + s.name, s.kind)


def _renamed(p: ParamSet) -> ParamSet:
    """Rename every symbol so the set is disjoint from any template."""
    mapping = {s: LinExpr.make({_qsym(s): Q(1)}) for s in p.free_symbols()}
    return ParamSet(tuple(u.subs(mapping) for u in p.upper),
                    tuple(l.subs(mapping) for l in p.lower))


def _int_grid(entry: DbEntry) -> list[dict[Symbol, int]]:
    """The legal small integer assignments for an entry's integer symbols."""
    import itertools

    syms = [s for s, _ in entry.int_symbols]
    if not syms:
        return [dict()]
    ranges = []
    for s, constraints in entry.int_symbols:
        lo, hi = _int_range(constraints, s.name)
        ranges.append(range(lo, hi + 1))
    out = []
    for combo in itertools.product(*ranges):
        assign = dict(zip(syms, combo))
        if all(_constraint_ok(c, assign)
               for _, cons in entry.int_symbols for c in cons):
            out.append(assign)
    return out


def _int_ranges_ok(e1: DbEntry, e2: DbEntry, sub: Substitution) -> bool:
    """Every legal integer draw of ``e1`` must land inside ``e2``'s ranges.

    Without this, a template like (a, m, b; c, m-n) would absorb arbitrary
    entries through bindings such as m -> -n that are integer-valued but can
    never satisfy the template's own m >= 1 constraint.
    """
    tints = {s for s, _ in e2.int_symbols}
    smap = sub.as_dict()
    if not any(s in smap for s in tints):
        return True
    for g in _int_grid(e1):
        qassign = {_qsym(s): complex(v) for s, v in g.items()}
        t_assign: dict[Symbol, complex] = {}
        for s in tints:
            lin = smap.get(s)
            if lin is None:
                continue
            try:
                v = lin.eval(qassign)
            except Hyp321Error:
                return False  # binding leaks a continuous symbol
            if v.real < -1e-9:
                return False
            t_assign[s] = v
        for s, constraints in e2.int_symbols:
            if s not in t_assign:
                continue
            for c in constraints:
                try:
                    if not _constraint_ok(c, t_assign):
                        return False
                except Hyp321Error:
                    continue
    return True


def _derived_ok(e1: DbEntry, e2: DbEntry, sub: Substitution,
                rename_fwd: Mapping[Symbol, LinExpr]) -> bool:
    """Bound helper symbols must stand for structurally identical helpers.

    Derived symbols denote nonlinear functions of the base symbols, so the
    identity attached to a template only holds on that variety.  A witness
    binding a template derived symbol is accepted only when the binding is a
    plain query derived symbol whose definition, after the base-symbol
    substitution, is structurally equal to the template's own definition.
    """
    if not e2.derived:
        return True
    smap = sub.as_dict()
    tder = dict(e2.derived)
    qder = {_qsym(s): d for s, d in e1.derived}
    base_map = {s: lin for s, lin in smap.items() if s not in tder}
    for s, d in e2.derived:
        lin = smap.get(s)
        if lin is None:
            continue
        if lin.const != 0 or len(lin.terms) != 1:
            return False
        (qs, coef), = lin.terms
        if coef != 1 or qs not in qder:
            return False
        if substitute(d, base_map) != substitute(qder[qs], rename_fwd):
            return False
    return True


def _invertible(sub: Substitution) -> bool:
    """True when the witness substitution is an invertible affine map.

    Equivalence is symmetric up to inversion; a substitution that collapses
    symbols (e.g. binds an integer symbol to the constant 1) witnesses a
    specialization, not an equivalence, and specialization detection is out
    of scope for the automated cull.
    """
    qsyms = sorted({t for _, lin in sub.mapping for t, _ in lin.terms},
                   key=lambda s: s.name)
    if len(qsyms) != len(sub.mapping):
        return False
    rows = [[lin.coeff(t) for t in qsyms] for _, lin in sub.mapping]
    # rank via fraction Gaussian elimination
    n = len(qsyms)
    m = [row[:] for row in rows]
    for col in range(n):
        piv = next((i for i in range(col, n) if m[i][col] != 0), None)
        if piv is None:
            return False
        m[col], m[piv] = m[piv], m[col]
        inv = Q(1) / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for i in range(n):
            if i != col and m[i][col] != 0:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[col])]
    return True


def _kinds_preserved(e2: DbEntry, sub: Substitution) -> bool:
    """Continuous template symbols may not absorb integer query symbols.

    Integer symbols are strong constraints on acceptable transformations:
    two catalogued identities related only by folding an integer offset into
    a continuous slot are distinct catalogue entries (their closed forms are
    organized around different integer structure), so such a witness does not
    count as equivalence.
    """
    for s, lin in sub.mapping:
        if s.kind == "continuous":
            if any(t.kind == "integer" for t, _ in lin.terms):
                return False
    return True


@lru_cache(maxsize=None)
def _images_of(q: ParamSet) -> tuple:
    """Distinct Thomae images of a parameter set, identity first (cached)."""
    out = [(IDENTITY_VARIANT, q)]
    seen = {q.key()}
    for v, img, _ in distinct_images(q):
        if img.key() not in seen:
            seen.add(img.key())
            out.append((v, img))
    return tuple(out)


@lru_cache(maxsize=None)
def _witness_sound(e1: DbEntry, v: ThomaeVariant, tries: int = 24) -> bool:
    """Check numerically that the connecting Thomae relation is non-degenerate.

    A formal parameter-multiset witness can exist even though the relation
    linking the two evaluations breaks down on the whole legal domain (gamma
    poles in the prefactor at integer parameters).  The witness is accepted
    only if F(lhs) = prefactor * F(image) verifies at some legal assignment;
    a relation that is never evaluable is treated as degenerate.
    """
    from .database import _repaired_assignment

    if v == IDENTITY_VARIANT:
        return True
    rng = random.Random(zlib.crc32((e1.id + "|" + v.name).encode()))
    img, pref = apply_variant(v, e1.lhs)
    grid = _int_grid(e1)
    img_excess = excess(img)
    for _ in range(tries):
        base: dict[Symbol, complex] = {
            s: sample_continuous(rng) for s in e1.base_continuous()}
        if grid:
            base.update(rng.choice(grid))
        try:
            full = e1.assignment_with_derived(base)
            if not is_terminating(e1.lhs, full) and \
                    excess(e1.lhs).eval(full).real <= 0.3:
                repaired = _repaired_assignment(e1, base, rng)
                if repaired is None:
                    continue
                full = repaired
            if not is_terminating(img, full) and \
                    img_excess.eval(full).real <= 0.3:
                continue
            lv = series_pfq(e1.lhs, full, rel_tol=1e-10).value
            iv = series_pfq(img, full, rel_tol=1e-10).value
            pv = eval_expr(pref, full)
        except (_RECOVERABLE + (Hyp321Error,)):
            continue
        err = abs(lv - pv * iv) / max(abs(lv), abs(pv * iv), 1e-300)
        return err < 1e-6
    return False


def equivalent(e1: DbEntry, e2: DbEntry
               ) -> Optional[tuple[ThomaeVariant, Substitution]]:
    """Witness that ``e2``'s parameter set is a Thomae image of ``e1``'s.

    Returns ``(variant, substitution)`` such that substituting into ``e2``'s
    template reproduces the variant-image of ``e1``'s parameters, or None.
    A witness must respect integer-symbol ranges and derived-symbol
    definitions on both sides, and the connecting Thomae relation must hold
    numerically at a legal assignment.
    """
    q = _renamed(e1.lhs)
    rename_syms = set(e1.lhs.free_symbols())
    for _, d in e1.derived:
        rename_syms |= free_symbols(d)
    rename_fwd = {s: LinExpr.make({_qsym(s): Q(1)}) for s in rename_syms}

    for v, img in _images_of(q):
        for sub in unify(e2.lhs, img):
            if _invertible(sub) and \
               _kinds_preserved(e2, sub) and \
               _int_ranges_ok(e1, e2, sub) and \
               _derived_ok(e1, e2, sub, rename_fwd) and \
               _witness_sound(e1, v):
                return v, sub
    return None


def _int_lower_bound(entry: DbEntry, s: Symbol) -> int:
    for t, constraints in entry.int_symbols:
        if t == s:
            lo, _ = _int_range(constraints, s.name)
            return lo
    return 0


def _sup_if_bounded(entry: DbEntry, lin: LinExpr) -> Optional[Fraction]:
    """Least upper bound of an integer-valued affine form, if one exists."""
    hi = lin.const
    for s, c in lin.terms:
        if s.kind != "integer" or c > 0:
            return None
        hi += c * _int_lower_bound(entry, s)
    return hi


def _excess_nonpositive_integer(entry: DbEntry) -> bool:
    exc = entry.excess
    if not exc.is_integer_valued():
        return False
    sup = _sup_if_bounded(entry, exc)
    return sup is not None and sup <= 0


def _terminating_template(entry: DbEntry) -> bool:
    for u in entry.lhs.upper:
        if u.is_integer_valued():
            sup = _sup_if_bounded(entry, u)
            if sup is not None and sup <= 0:
                return True
    return False


def _karlsson_minton_template(entry: DbEntry, kmax: int = 3) -> bool:
    for u in entry.lhs.upper:
        for l in entry.lhs.lower:
            k = (u - l).as_integer()
            if k is not None and 1 <= k <= kmax:
                return True
    return False


def _n_continuous(entry: DbEntry) -> int:
    derived = dict(entry.derived)
    syms: set[Symbol] = set()
    for p in entry.lhs.upper + entry.lhs.lower:
        for s in p.free_symbols():
            if s in derived:
                syms |= {t for t in free_symbols(derived[s])
                         if t.kind == "continuous"}
            elif s.kind == "continuous":
                syms.add(s)
    return len(syms)


def _retention_rank(entry: DbEntry) -> tuple:
    return (-_n_continuous(entry), len(entry.int_symbols), entry.id)


def cull(entries: Sequence[DbEntry]) -> list[DbEntry]:
    """Reduce a collection of identities to an inequivalent base set.

    Dropped are: entries whose parametric excess is forced to a non-positive
    integer without the sum terminating; entries where an upper parameter
    exceeds a lower one by a small positive integer (the sum then reduces by
    partial fractions); and, for every class of Thomae-equivalent entries,
    all but the most general member (more continuous symbols wins; ties fall
    to fewer integer symbols, then the lexicographically smaller id).
    Flagged entries are kept untouched: they are quarantined, never dropped.
    Input order is preserved among survivors.
    """
    candidates: list[DbEntry] = []
    for e in entries:
        if e.status == "flagged":
            candidates.append(e)
            continue
        if _excess_nonpositive_integer(e) and not _terminating_template(e):
            continue
        if _karlsson_minton_template(e):
            continue
        candidates.append(e)

    ranked = sorted((e for e in candidates if e.status != "flagged"),
                    key=_retention_rank)
    retained: list[DbEntry] = []
    for e in ranked:
        if any(equivalent(e, r) is not None or equivalent(r, e) is not None
               for r in retained):
            continue
        retained.append(e)

    chosen = {id(e) for e in retained}
    return [e for e in candidates
            if e.status == "flagged" or id(e) in chosen]
