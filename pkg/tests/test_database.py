"""Seed database: numeric gate, special values, serialization, conjectures."""

import dataclasses
import random

import pytest

from hyp321 import expr as E
from hyp321.database import (db_from_json, db_to_json, dumps_db,
                             entry_from_json, entry_to_json, get_entry,
                             load_db, save_db, seed_db, verify_all,
                             verify_entry, _build_entry)
from hyp321.entries import RAW_ENTRIES
from hyp321.errors import ParseError, SchemaVersionMismatch
from hyp321.parser import parse_expr
from hyp321.series import ParamSet, series_pfq, sum_series_numeric

a, b, c, n, s = E.sym("a"), E.sym("b"), E.sym("c"), E.sym("n"), E.sym("s")


class TestGate:
    def test_all_entries_pass(self):
        reports = verify_all(seed_db(), trials=5, seed=0, rel_tol=1e-7)
        failed = [k for k, r in reports.items() if not r.passed]
        assert not failed, failed

    def test_no_unexplained_flags(self):
        assert all(e.status != "flagged" for e in seed_db())

    def test_entry_counts(self):
        db = seed_db()
        b_entries = [e for e in db if e.id.startswith("B.")]
        assert len(b_entries) == 66
        assert len([e for e in db if e.status == "conjecture"]) == 2


class TestSpecialValues:
    def test_terminating_one_term(self):
        entry = get_entry(seed_db(), "B.54")
        assign = {a: 0.37, n: 1}
        full = entry.assignment_with_derived(assign | {b: 2.6})
        lhs = series_pfq(entry.lhs, full).value
        rhs = E.eval_expr(entry.rhs, full)
        assert abs(lhs - 1.0) < 1e-12
        assert abs(rhs - 1.0) < 1e-12

    def test_rational_gamma_entry_golden(self):
        # independently computed reference value (30-digit oracle)
        entry = get_entry(seed_db(), "B.37")
        assign = {a: 0.31, b: 0.47, c: 2.73}
        rhs = E.eval_expr(entry.rhs, assign)
        assert abs(rhs - 1.0326947297019134) <= 1e-7

    def test_perturbed_coefficient_fails(self):
        raw = next(r for r in RAW_ENTRIES if r["id"] == "B.37")
        bad = dict(raw)
        assert bad["rhs"].count("-6*") == 1
        bad["rhs"] = bad["rhs"].replace("-6*", "-5.9*")
        entry = _build_entry(bad)
        report = verify_entry(entry, trials=5, seed=0, rel_tol=1e-7)
        assert not report.passed


class TestSerialization:
    def test_dumps_deterministic(self):
        db = seed_db()
        assert dumps_db(db) == dumps_db(db)

    def test_save_load_round_trip(self, tmp_path):
        db = seed_db()
        path = tmp_path / "db.json"
        save_db(db, str(path))
        back = load_db(str(path))
        assert [e.id for e in back] == [e.id for e in db]
        assert dumps_db(back) == dumps_db(db)

    def test_entry_round_trip_exact(self):
        for e in seed_db():
            assert entry_from_json(entry_to_json(e)) == e

    def test_division_by_zero_rejected(self):
        with pytest.raises(ParseError):
            parse_expr("1/0")

    def test_excess_mismatch_rejected(self):
        doc = entry_to_json(seed_db()[0])
        doc["excess"] = {"coeffs": {}, "const": "7"}
        with pytest.raises(ParseError):
            entry_from_json(doc)

    def test_schema_version_checked(self):
        doc = db_to_json(seed_db()[:1])
        doc["schema"] = "hyp321/999"
        with pytest.raises(SchemaVersionMismatch):
            db_from_json(doc)


class TestConjectures:
    def test_first_conjecture_small_offsets(self):
        entry = get_entry(seed_db(), "CONJ.23")
        rng = random.Random(1)
        for nval in range(5):
            for _ in range(5):
                aval = rng.uniform(0.1, 0.9)
                assign = {a: aval, n: nval}
                lhs = series_pfq(entry.lhs, assign).value
                rhs = E.eval_expr(entry.rhs, assign)
                assert abs(lhs - rhs) <= 1e-8 * max(1.0, abs(lhs)), nval

    def test_second_conjecture_including_equal_parameters(self):
        entry = get_entry(seed_db(), "CONJ.24")
        rng = random.Random(2)
        draws = [(rng.uniform(0.1, 0.6), rng.uniform(0.1, 0.6),
                  rng.uniform(3.5, 4.5)) for _ in range(9)]
        draws.append((2.5, 3.2, 3.2))  # b = c: left side degenerates to 2F1
        for aval, bval, cval in draws:
            assign = entry.assignment_with_derived({a: aval, b: bval, c: cval})
            lhs = series_pfq(entry.lhs, assign).value
            rhs = E.eval_expr(entry.rhs, assign)
            assert abs(lhs - rhs) <= 1e-8 * max(1.0, abs(lhs))

    def test_first_conjecture_reduces_to_known_entry(self):
        # at offset 1 the conjecture coincides with B.56 under a -> 2a,
        # b -> 1 - a
        conj = get_entry(seed_db(), "CONJ.23")
        known = get_entry(seed_db(), "B.56")
        rng = random.Random(3)
        for _ in range(8):
            aval = rng.uniform(0.1, 0.9)
            lhs = E.eval_expr(conj.rhs, {a: aval, n: 1})
            assign = known.assignment_with_derived(
                {a: 2 * aval, b: 1 - aval, n: 1})
            rhs = E.eval_expr(known.rhs, assign)
            assert abs(lhs - rhs) <= 1e-8 * max(1.0, abs(lhs))


class TestMintonReduction:
    """The 4F3 with a unit upper/lower offset splits into two 3F2 terms."""

    @pytest.mark.parametrize("nval", [2, 3])
    def test_relation(self, nval):
        rng = random.Random(100 + nval)
        for _ in range(5):
            av = rng.uniform(0.3, 0.9)
            bv = rng.uniform(0.3, 0.9)
            sv = rng.uniform(1.3, 1.9)
            lhs = sum_series_numeric(
                [1, 1 + av / (sv - 1), bv * sv - av, -nval],
                [av / (sv - 1), bv + 1, 1 - av - nval * sv]).value
            t1 = sum_series_numeric(
                [1, bv * sv - av, -nval],
                [bv + 1, 1 - av - nval * sv]).value
            coef = ((sv - 1) * (sv * bv - av) * nval
                    / (av * (bv + 1) * (1 - av - nval * sv)))
            t2 = sum_series_numeric(
                [2, 1 + bv * sv - av, 1 - nval],
                [bv + 2, 2 - av - nval * sv]).value
            rhs = t1 - coef * t2
            assert abs(lhs - rhs) <= 1e-8 * max(1.0, abs(lhs))

    def test_reduced_form_is_gated(self):
        entry = get_entry(seed_db(), "EQ.14")
        report = verify_entry(entry, trials=5, seed=0, rel_tol=1e-7)
        assert report.passed
