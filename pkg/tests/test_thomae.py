"""Two-term relations: numeric identity, excess transport, group structure."""

import random

import pytest

from hyp321 import expr as E
from hyp321.series import ParamSet, excess, sum_series_numeric
from hyp321.thomae import (BASE_COUNT, ThomaeVariant, all_variants,
                           apply_variant, base_relation, distinct_images,
                           inverse_of)

a, b, c = E.sym("a"), E.sym("b"), E.sym("c")
f, e = E.sym("f"), E.sym("e")

GENERIC = ParamSet.make([a, b, c], [f, e])


def _draw(rng):
    """Assignment keeping both sides of every base relation convergent."""
    return {
        a: rng.uniform(0.1, 0.4),
        b: rng.uniform(0.1, 0.4),
        c: rng.uniform(0.1, 0.4),
        f: rng.uniform(0.9, 1.5),
        e: rng.uniform(0.9, 1.5),
    }


class TestNumericIdentity:
    @pytest.mark.parametrize("base", range(1, 10))
    def test_base_relation_two_sided(self, base):
        rng = random.Random(1000 + base)
        for _ in range(20):
            assign = _draw(rng)
            img, pref = apply_variant(ThomaeVariant(base), GENERIC)
            up, lo = GENERIC.eval(assign)
            lhs = sum_series_numeric(up, lo, rel_tol=1e-11).value
            up2, lo2 = img.eval(assign)
            rhs = (E.eval_expr(pref, assign)
                   * sum_series_numeric(up2, lo2, rel_tol=1e-11).value)
            assert abs(lhs - rhs) <= 1e-8 * abs(lhs)

    def test_permuted_variants(self):
        rng = random.Random(4242)
        v = ThomaeVariant(3, (1, 2, 0), (1, 0))
        for _ in range(5):
            assign = _draw(rng)
            img, pref = apply_variant(v, GENERIC)
            up, lo = GENERIC.eval(assign)
            lhs = sum_series_numeric(up, lo, rel_tol=1e-11).value
            up2, lo2 = img.eval(assign)
            rhs = (E.eval_expr(pref, assign)
                   * sum_series_numeric(up2, lo2, rel_tol=1e-11).value)
            assert abs(lhs - rhs) <= 1e-8 * abs(lhs)


class TestStructure:
    def test_identity_variant(self):
        img, pref = apply_variant(ThomaeVariant(10), GENERIC)
        assert img == GENERIC
        assert pref == E.ONE

    def test_variant_count_and_order(self):
        vs = all_variants()
        assert len(vs) == 120
        assert vs[0] == ThomaeVariant(1, (0, 1, 2), (0, 1))
        assert len(set((v.base, v.upper_perm, v.lower_perm) for v in vs)) == 120

    def test_variant_names(self):
        assert ThomaeVariant(3, (0, 2, 1), (0, 1)).name == "T3·(acb|fe)"
        assert ThomaeVariant(10).name == "T10·(abc|fe)"
        assert ThomaeVariant(7, (2, 1, 0), (1, 0)).name == "T7·(cba|ef)"

    def test_excess_transport(self):
        """Base k maps the excess to a fixed slot expression; T1 sends it to c."""
        img, _ = apply_variant(ThomaeVariant(1), GENERIC)
        assert excess(img) == E.LinExpr.of(c)
        expected = {
            1: E.LinExpr.of(c),
            2: E.LinExpr.of(b),
            3: E.LinExpr.of(e) - E.LinExpr.of(a),
            4: E.LinExpr.of(f) - E.LinExpr.of(a),
            5: E.LinExpr.of(a),
            6: E.LinExpr.of(e) - E.LinExpr.of(b),
            7: E.LinExpr.of(f) - E.LinExpr.of(b),
            8: E.LinExpr.of(e) - E.LinExpr.of(c),
            9: E.LinExpr.of(f) - E.LinExpr.of(c),
            10: excess(GENERIC),
        }
        for base, want in expected.items():
            got, _ = apply_variant(ThomaeVariant(base), GENERIC)
            assert excess(got) == want, f"T{base}"

    def test_ten_distinct_generic_images(self):
        """120 variants collapse to exactly 10 parameter multisets generically."""
        imgs = distinct_images(GENERIC)
        assert len(imgs) == 10
        # input permutations alone reach every class: representatives come
        # from bases 1 (the three s-bearing images), 3 (the six
        # difference-type images) and 10 (the identity class)
        assert sorted(set(v.base for v, _, _ in imgs)) == [1, 3, 10]
        # and every base image appears among the ten classes
        keys = {img.key() for _, img, _ in imgs}
        for base in range(1, 11):
            img, _ = apply_variant(ThomaeVariant(base), GENERIC)
            assert img.key() in keys

    def test_group_closure_images(self):
        """Applying any variant to any image lands back in the ten classes."""
        class_keys = {img.key() for _, img, _ in distinct_images(GENERIC)}
        first, _ = apply_variant(ThomaeVariant(5), GENERIC)
        for v in all_variants()[::7]:
            img, _ = apply_variant(v, first)
            assert img.key() in class_keys

    def test_inverse_of(self):
        rng = random.Random(9)
        vs = all_variants()
        for v in rng.sample(vs, 12) + [ThomaeVariant(10)]:
            w = inverse_of(v)
            img, _ = apply_variant(v, GENERIC)
            back, _ = apply_variant(w, img)
            assert back == GENERIC

    def test_inverse_numeric(self):
        """Prefactors of v and its inverse cancel numerically."""
        rng = random.Random(31)
        assign = _draw(rng)
        for base in (1, 4, 8):
            v = ThomaeVariant(base)
            w = inverse_of(v)
            img, p1 = apply_variant(v, GENERIC)
            _, p2 = apply_variant(w, img)
            prod = E.eval_expr(p1, assign) * E.eval_expr(p2, assign)
            assert abs(prod - 1.0) <= 1e-9

    def test_rejects_wrong_shape(self):
        with pytest.raises(ValueError):
            apply_variant(ThomaeVariant(1), ParamSet.make([a, b], [f]))
        with pytest.raises(ValueError):
            base_relation(11, *(E.LinExpr.of(s) for s in (a, b, c, f, e)))
