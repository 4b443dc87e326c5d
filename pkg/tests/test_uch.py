"""Unipotent-character tables: cyclic closed forms, construction pipeline
steps, family partitions, and the axiom checker."""

import pytest

from spets.cyclotomic import Cyclo, zeta
from spets.laurent import LaurentPoly
from spets.reflection import build_group
from spets.tabledata import _g4_hc, _g312_hc, _levi_order
from spets.uch import (UnipotentCharacter, check_inducing_sum,
                       cyclic_uch, determine_parameters, ennola_transform,
                       hc_candidate_filter, regular_eigenvalues, verify_axioms)


class TestCyclicTables:
    @pytest.mark.parametrize("e", range(2, 13))
    def test_size(self, e):
        assert len(cyclic_uch(e).rows) == 1 + e * (e - 1) // 2

    def test_z3_degrees(self):
        t = cyclic_uch(3)
        got = {r.name: r.degree.serialize() for r in t.rows}
        assert got == {
            "1": "1",
            "rho_{1,0}": "(1/3-1/3*E(3,1))*x^2 + (2/3+1/3*E(3,1))*x",
            "rho_{2,0}": "(2/3+1/3*E(3,1))*x^2 + (1/3-1/3*E(3,1))*x",
            "rho_{2,1}": "(1/3+2/3*E(3,1))*x^2 + (-1/3-2/3*E(3,1))*x",
        }

    def test_z3_frobenius(self):
        t = cyclic_uch(3)
        got = {r.name: r.fr.serialize() for r in t.rows}
        assert got == {"1": "1", "rho_{1,0}": "1", "rho_{2,0}": "1",
                       "rho_{2,1}": "(-1-E(3,1))"}

    def test_z3_families(self):
        t = cyclic_uch(3)
        fams = [(f.members, f.a, f.A, f.special, f.cospecial)
                for f in t.families]
        assert fams == [
            (["1"], 0, 0, "1", "1"),
            (["rho_{1,0}", "rho_{2,0}", "rho_{2,1}"], 1, 2,
             "rho_{1,0}", "rho_{2,0}"),
        ]

    def test_degree_sum_is_group_order_poly(self):
        # sum over the principal series theta(1) Deg = Feg of the 1-series
        for e in (2, 3, 4, 5):
            t = cyclic_uch(e)
            total = LaurentPoly.zero()
            for r in t.rows:
                if r.series[0] == "1":
                    total = total + r.degree
            want = LaurentPoly([(k, Cyclo.rational(1)) for k in range(e)])
            assert total == want


class TestAxioms:
    @pytest.mark.parametrize("e", range(2, 9))
    def test_cyclic(self, e):
        G = build_group(f"Z_{e}")
        from spets.uch import _cyclic_feg_map
        report = verify_axioms(cyclic_uch(e), G, _cyclic_feg_map(e))
        assert report.passed, report.summary()

    def test_g4(self, g4, g4_result, g4_fegs):
        report = verify_axioms(g4_result.table, g4, g4_fegs)
        assert report.passed, report.summary()

    def test_g312(self, g312, g312_result, g312_fegs):
        report = verify_axioms(g312_result.table, g312, g312_fegs)
        assert report.passed, report.summary()

    def test_detects_sign_flip(self, g4, g4_result, g4_fegs):
        table = g4_result.table
        broken_rows = []
        for r in table.rows:
            if r.name == "phi_{2,5}":
                broken_rows.append(UnipotentCharacter(
                    r.name, -r.degree, r.fr, r.family, r.series,
                    r.sign_resolved, r.marker))
            else:
                broken_rows.append(r)
        broken = type(table)(table.group, broken_rows, table.families)
        report = verify_axioms(broken, g4, g4_fegs)
        assert not report.passed
        assert "family-sum" in report.failures or \
            any("family" in k for k in report.failures)


class TestRegularEigenvalues:
    def test_g4(self, g4):
        got = {z.serialize() for z in regular_eigenvalues(g4)}
        assert {"1", "-1", "E(4,1)", "-E(4,1)", "E(3,1)",
                "-1-E(3,1)"} <= got

    def test_z5(self):
        got = {z.serialize() for z in regular_eigenvalues(build_group("Z_5"))}
        assert "E(5,1)" in got and "1" in got


class TestHarishChandra:
    def test_g4_candidate_filter(self, g4, g4_result):
        hc = _g4_hc()
        l_order = _levi_order(g4, hc.levi_gen)
        rows = hc_candidate_filter(g4, l_order, hc.deg_lambda, 2,
                                   g4_result.table)
        assert sorted(r.name for r in rows) == ["Z_3:11", "Z_3:2"]
        assert check_inducing_sum(g4, l_order, hc.deg_lambda,
                                  [(r, 1) for r in rows])

    def test_g312_candidate_filter(self, g312, g312_result):
        hc = _g312_hc()
        l_order = _levi_order(g312, hc.levi_gen)
        rows = hc_candidate_filter(g312, l_order, hc.deg_lambda, 3,
                                   g312_result.table)
        assert sorted(r.name for r in rows) == \
            ["Z_3:1", "Z_3:zeta3", "Z_3:zeta3^2"]
        assert check_inducing_sum(g312, l_order, hc.deg_lambda,
                                  [(r, 1) for r in rows])


class TestDetermination:
    def test_g4_order_four_series(self, g4, g4_result):
        det = determine_parameters(g4, zeta(4), g4_result.table)
        assert det.spec.serialize() == \
            "H_{Z_4}((E(4,1))*x^3, (E(4,1)), (E(4,1))*x, (-E(4,1)))"

    def test_g4_order_three_series(self, g4, g4_result):
        det = determine_parameters(g4, zeta(3), g4_result.table)
        assert det.spec.serialize() == \
            "H_{Z_6}((E(3,1))*x^2, (-E(3,1))*x, (E(3,1)), (1+E(3,1))*x, " \
            "(-1-E(3,1)), (-E(3,1)))"

    def test_g312_minus_one_series(self, g312, g312_result):
        det = determine_parameters(g312, Cyclo.rational(-1), g312_result.table)
        assert det.spec.serialize() == \
            "H_{Z_6}(x^2, (-1-E(3,1))*x, (E(3,1)), x, (-1-E(3,1)), " \
            "(E(3,1))*x)"

    def test_idempotent(self, g4, g4_result):
        d1 = determine_parameters(g4, zeta(4), g4_result.table)
        d2 = determine_parameters(g4, zeta(4), g4_result.table)
        assert d1.spec == d2.spec
        assert d1.assignment == d2.assignment


class TestEnnola:
    def test_closure(self, g4, g4_result):
        # twisting by the full center permutes the completed table: the
        # transform introduces no new characters and is a signed bijection
        table = g4_result.table
        res = ennola_transform(table, Cyclo.rational(-1))
        assert res.new_names == []
        assert sorted(dst for dst, _ in res.permutation.values()) == \
            sorted(table.names())

    def test_involution(self, g312_result):
        table = g312_result.table
        res = ennola_transform(table, zeta(3))
        assert res.new_names == []
        back = ennola_transform(res.table, zeta(3) ** 2)
        assert back.new_names == []

    def test_pipeline_specs_cover_series(self, g4_result, g312_result):
        assert set(g4_result.specs) == {(4, 1), (3, 1)}
        assert set(g312_result.specs) == {(6, 1), (6, 5), (2, 1)}
