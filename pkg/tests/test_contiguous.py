"""Contiguous-element engine: recursions, anchors, and conversion formulas."""

import itertools
import random

import pytest

from hyp321 import expr as E
from hyp321.contiguous import (ContigQuery, default_anchor_table,
                               dixon_element, dixon_swap, p_from_w, p_from_x,
                               watson_element, whipple_element, w_to_x, x_to_w,
                               _WatsonLattice)
from hyp321.database import get_entry, seed_db, verify_entry
from hyp321.errors import (ExceptionalCase, NoConvergentCheck,
                           SingularRecursionPath)
from hyp321.series import sum_series_numeric

a_s, b_s, c_s = E.sym("a"), E.sym("b"), E.sym("c")


def _watson_draw(rng, m, n):
    """(a, b, c) with the W_{m,n} series comfortably convergent."""
    a = rng.uniform(0.1, 0.9)
    b = rng.uniform(0.1, 0.9)
    c = max(0.7 + (a + b - 1 - m) / 2 - n, 0.3) + rng.uniform(0.0, 0.8)
    return a, b, c


def _watson_series(a, b, c, m, n, rel_tol=1e-12):
    return sum_series_numeric([a, b, c], [(a + b + 1 + m) / 2, 2 * c + n],
                              rel_tol=rel_tol).value


class TestWatson:
    def test_grid_matches_oracle(self):
        rng = random.Random(3)
        for m, n in itertools.product(range(-2, 4), repeat=2):
            for _ in range(3):
                a, b, c = _watson_draw(rng, m, n)
                w = watson_element(a, b, c, m, n)
                ref = _watson_series(a, b, c, m, n)
                assert abs(w - ref) <= 1e-7 * max(1.0, abs(ref)), (m, n)

    def test_far_offsets(self):
        rng = random.Random(7)
        for m, n in ((-4, 5), (6, -3), (5, 6), (-4, -4)):
            a, b, c = _watson_draw(rng, m, n)
            w = watson_element(a, b, c, m, n)
            ref = _watson_series(a, b, c, m, n)
            assert abs(w - ref) <= 1e-7 * max(1.0, abs(ref))

    def test_classical_point(self):
        w = watson_element(0.3, 0.5, 1.4, 0, 0)
        ref = _watson_series(0.3, 0.5, 1.4, 0, 0)
        assert abs(w - ref) <= 1e-9 * abs(ref)

    def test_path_independence(self):
        # W(2,1) three ways: the lattice walk, the n-recursion applied to
        # lattice values in its column, and the m-recursion across columns.
        rng = random.Random(11)
        for _ in range(5):
            a, b, c = _watson_draw(rng, 2, 1)
            lat = _WatsonLattice(a, b, c)
            direct = lat.value(2, 1)
            c1, c2 = lat._n_step(2, 1)
            via_n = c1 * lat.value(2, 0) + c2 * lat.value(2, -1)
            ca, cb = lat._m_step(2, 1)
            via_m = ca * lat.value(0, 1) + cb * lat.value(-2, 1)
            scale = max(1.0, abs(direct))
            assert abs(direct - via_n) <= 1e-8 * scale
            assert abs(direct - via_m) <= 1e-8 * scale

    def test_recursions_as_identities(self):
        # feed oracle values into both three-term stencils
        rng = random.Random(23)
        for _ in range(10):
            m = rng.randint(0, 2)
            n = rng.randint(0, 2)
            a, b, c = _watson_draw(rng, m - 4, n - 2)
            lat = _WatsonLattice(a, b, c)
            c1, c2 = lat._n_step(m, n)
            lhs = _watson_series(a, b, c, m, n)
            rhs = (c1 * _watson_series(a, b, c, m, n - 1)
                   + c2 * _watson_series(a, b, c, m, n - 2))
            assert abs(lhs - rhs) <= 1e-8 * max(1.0, abs(lhs))
            ca, cb = lat._m_step(m, n)
            lhs2 = _watson_series(a, b, c, m, n)
            rhs2 = (ca * _watson_series(a, b, c, m - 2, n)
                    + cb * _watson_series(a, b, c, m - 4, n))
            assert abs(lhs2 - rhs2) <= 1e-8 * max(1.0, abs(lhs2))

    def test_anchor_consistency(self):
        table = default_anchor_table()
        rng = random.Random(31)
        for (m, n) in table.entries:
            for _ in range(10):
                a, b, c = _watson_draw(rng, m, n)
                anchor = table.value(m, n, a, b, c)
                ref = _watson_series(a, b, c, m, n)
                assert abs(anchor - ref) <= 1e-8 * max(1.0, abs(ref)), (m, n)

    def test_singular_path_detected(self):
        # a - b - m + 1 = 0 at the m-step for m = 3
        with pytest.raises(SingularRecursionPath):
            watson_element(2.2, 0.2, 3.0, 3, 0)

    def test_no_convergent_check_carries_value(self):
        plain = watson_element(0.3, 0.4, 0.25, 0, -2)
        with pytest.raises(NoConvergentCheck) as info:
            watson_element(0.3, 0.4, 0.25, 0, -2, rel_tol=1e-7)
        assert info.value.value == plain


class TestDixon:
    def test_matches_c3_and_c4(self):
        rng = random.Random(5)
        db = seed_db()
        for eid, (m, n) in (("C.3", (-1, 0)), ("C.4", (2, 0))):
            entry = get_entry(db, eid)
            for _ in range(5):
                a = rng.uniform(0.3, 0.8)
                b = rng.uniform(0.05, 0.25)
                c = rng.uniform(0.05, 0.25)
                closed = E.eval_expr(entry.rhs, {a_s: a, b_s: b, c_s: c})
                val = dixon_element(a, b, c, m, n)
                assert abs(val - closed) <= 1e-7 * max(1.0, abs(closed)), eid

    def test_well_poised_base_case(self):
        rng = random.Random(13)
        for _ in range(3):
            a = rng.uniform(0.2, 0.6)
            b = rng.uniform(0.05, 0.3)
            c = rng.uniform(0.05, 0.3)
            val = dixon_element(a, b, c, 0, 0)
            ref = sum_series_numeric([a, b, c], [1 + a - b, 1 + a - c],
                                     rel_tol=1e-12).value
            assert abs(val - ref) <= 1e-8 * max(1.0, abs(ref))

    def test_index_swap_symmetry(self):
        rng = random.Random(17)
        for _ in range(6):
            a = rng.uniform(0.5, 0.8)
            b = rng.uniform(0.05, 0.25)
            c = rng.uniform(0.05, 0.25)
            m, n = rng.randint(-1, 2), rng.randint(-1, 2)
            x1 = dixon_element(a, b, c, m, n)
            x2 = dixon_element(*dixon_swap(a, b, c, m, n))
            assert abs(x1 - x2) <= 1e-9 * max(1.0, abs(x1))


class TestWhipple:
    def test_matches_series(self):
        rng = random.Random(19)
        for m, n in itertools.product(range(-1, 3), repeat=2):
            a = rng.uniform(1.0, 1.8)
            b = rng.uniform(0.1, 0.6)
            c = rng.uniform(0.5, 1.0)
            q = ContigQuery("whipple", a, b, c, m, n)
            upper, lower = q.series_params()
            if (sum(lower) - sum(upper)).real <= 0.3:
                continue
            val = whipple_element(a, b, c, m, n)
            ref = sum_series_numeric(list(upper), list(lower),
                                     rel_tol=1e-12).value
            assert abs(val - ref) <= 1e-7 * max(1.0, abs(ref)), (m, n)

    def test_exceptional_case_refused(self):
        with pytest.raises(ExceptionalCase):
            whipple_element(-2, 0.3, 1.4, 0, 0)
        # integer b is fine
        whipple_element(0.7, 0.3, 1.4, 0, 0)

    def test_terminating_instance(self):
        # 1 - b + m + n a non-positive integer: finite sum, matched exactly
        a, c = 1.3, 0.9
        m, n = 1, 0
        b = 1 + m + n + 2  # 1 - b + m + n = -2
        val = whipple_element(a, b, c, m, n)
        q = ContigQuery("whipple", a, b, c, m, n)
        upper, lower = q.series_params()
        ref = sum_series_numeric(list(upper), list(lower)).value
        assert abs(val - ref) <= 1e-9 * max(1.0, abs(ref))


class TestConversions:
    def test_x_w_round_trip(self):
        rng = random.Random(29)
        for _ in range(6):
            a = rng.uniform(0.3, 0.6)
            b = rng.uniform(0.05, 0.25)
            c = rng.uniform(0.05, 0.25)
            m, n = rng.randint(-2, 3), rng.randint(-2, 3)
            wargs, wpref = x_to_w(a, b, c, m, n)
            wa, wb, wc = [t.eval({}) for t in wargs[:3]]
            x = dixon_element(a, b, c, m, n)
            w = watson_element(wa, wb, wc, m, n)
            assert abs(x - w * E.eval_expr(wpref, {})) <= 1e-9 * max(1.0, abs(x))
            xargs, xpref = w_to_x(wa, wb, wc, m, n)
            xa, xb, xc = [t.eval({}) for t in xargs[:3]]
            back = dixon_element(xa, xb, xc, m, n)
            assert abs(w - back * E.eval_expr(xpref, {})) <= 1e-9 * max(1.0, abs(w))

    def test_whipple_two_routes_agree(self):
        rng = random.Random(37)
        for _ in range(6):
            a = rng.uniform(1.0, 1.6)
            b = rng.uniform(0.1, 0.5)
            c = rng.uniform(0.5, 1.0)
            m, n = rng.randint(-1, 2), rng.randint(-1, 2)
            wargs, wpref = p_from_w(a, b, c, m, n)
            wa, wb, wc = [t.eval({}) for t in wargs[:3]]
            p1 = watson_element(wa, wb, wc, m, n) * E.eval_expr(wpref, {})
            xargs, xpref = p_from_x(a, b, c, m, n)
            xa, xb, xc = [t.eval({}) for t in xargs[:3]]
            p2 = dixon_element(xa, xb, xc, m, n) * E.eval_expr(xpref, {})
            assert abs(p1 - p2) <= 1e-8 * max(1.0, abs(p1))

    def test_recursion_derived_anchor_from_conversion(self):
        # the W(-1,0) closed form equals the conversion map applied to the
        # Dixon (-1,0) closed form
        db = seed_db()
        c3 = get_entry(db, "C.3")
        c5 = get_entry(db, "C.5")
        rng = random.Random(41)
        for _ in range(5):
            a = rng.uniform(0.3, 0.6)
            b = rng.uniform(0.05, 0.25)
            c = rng.uniform(0.05, 0.25)
            lhs = E.eval_expr(c5.rhs, {a_s: a, b_s: b, c_s: c})
            xargs, xpref = w_to_x(a, b, c, -1, 0)
            xa, xb, xc = [t.eval({}) for t in xargs[:3]]
            rhs = (E.eval_expr(c3.rhs, {a_s: xa, b_s: xb, c_s: xc})
                   * E.eval_expr(xpref, {}))
            assert abs(lhs - rhs) <= 1e-9 * max(1.0, abs(lhs))


class TestDatabaseClosure:
    @pytest.mark.parametrize("eid", ["B.48", "B.49"])
    def test_watson_reference_entries(self, eid):
        entry = get_entry(seed_db(), eid)
        report = verify_entry(entry, trials=5, seed=0, rel_tol=1e-7)
        assert report.passed, report.max_rel_err
