"""Cyclic algebra Schur elements, normal forms, and compatibility maps."""

import random
from fractions import Fraction

import pytest

from spets.cyclotomic import Cyclo, zeta
from spets.hecke import (CyclicHeckeParams, SpetsialAlgebraSpec, check_spetsial,
                         compactify, ennola_twist, frobenius, noncompactify,
                         omega_sigma_delta, one_spetsial_spec, parse_spec,
                         schur_cyclic, tau_pi)
from spets.laurent import FracExpMonomial, LaurentPoly


class TestSchurOracles:
    def test_rank_one_pair(self):
        p = CyclicHeckeParams.of(["x^3", "-1"])
        s = schur_cyclic(p)
        assert [e.serialize() for e in s] == ["x^3 + 1", "1 + x^-3"]
        assert [e.sigma() for e in s] == [Fraction(3), Fraction(-3)]

    def test_z3_relative_algebra(self):
        p = CyclicHeckeParams.of(["1", "(E(3,1))*x^2", "(-1-E(3,1))*x^2"])
        s = [e.serialize() for e in schur_cyclic(p)]
        assert s == ["1 + x^-2 + x^-4",
                     "(1-E(3,1))*x^2 + (2+E(3,1))",
                     "(2+E(3,1))*x^2 + (1-E(3,1))"]

    def test_one_series_z3(self):
        s = [e.serialize() for e in one_spetsial_spec(3).schur()]
        assert s == ["x^2 + x + 1",
                     "(2+E(3,1)) + (1-E(3,1))*x^-1",
                     "(1-E(3,1)) + (2+E(3,1))*x^-1"]

    def test_tau_pi(self):
        p = CyclicHeckeParams.of(["x^3", "-1"])
        assert tau_pi(p).serialize() == "x^3"

    def test_schur_sum_of_inverses(self):
        # evaluating at generic roots: S_i(u) has the defining interpolation
        # property prod_{j != i}(u_i - u_j)/u_j, checked against direct eval
        p = one_spetsial_spec(4).params()
        s = schur_cyclic(p)
        for i, si in enumerate(s):
            direct = Cyclo.rational(1)
            ui = p.params[i]
            for j, uj in enumerate(p.params):
                if j == i:
                    continue
                val_uj = uj.coeff
                val_ui = ui.coeff
                direct = direct * (val_uj - val_ui) / val_uj
            # at x = 1 every parameter collapses to its coefficient
            assert si.as_x().evaluate(Cyclo.rational(1)) == direct


class TestSpetsialConditions:
    @pytest.mark.parametrize("e", [2, 3, 4, 5, 6])
    def test_one_series_is_spetsial(self, e):
        assert check_spetsial(one_spetsial_spec(e)).passed

    def test_failure_reported(self):
        bad = SpetsialAlgebraSpec(e=3, d=1, a=0,
                                  m=(Fraction(5), Fraction(0), Fraction(0)),
                                  n_ref=2, n_hyp=1)
        report = check_spetsial(bad)
        assert not report.passed
        assert report.failures()


class TestNormalForms:
    def test_parse_serialize_roundtrip(self):
        text = "H_{Z_4}((E(4,1))*x^3, (E(4,1)), (E(4,1))*x, (-E(4,1)))"
        spec = parse_spec(text, 4, 1, n_ref=8, n_hyp=4)
        assert spec.serialize() == text
        assert spec.m == (Fraction(3), Fraction(0), Fraction(1), Fraction(0))

    def test_parse_rejects_bad_slots(self):
        with pytest.raises(ValueError):
            parse_spec("H_{Z_2}(x, x)", 1, 0)

    @pytest.mark.parametrize("e", [2, 3, 4, 6])
    def test_compactify_noncompactify_inverse(self, e):
        spec = one_spetsial_spec(e)
        assert compactify(noncompactify(spec)) == spec
        nc = noncompactify(spec)
        assert noncompactify(compactify(nc)) == nc

    def test_noncompact_exponents(self):
        # the 1-series algebra flips to exponents (0, 1, ..., 1)
        spec = noncompactify(one_spetsial_spec(5))
        assert spec.m == (Fraction(0),) + (Fraction(1),) * 4

    def test_ennola_twist(self):
        spec = ennola_twist(one_spetsial_spec(4), zeta(4))
        assert spec.serialize() == \
            "H_{Z_4}((-E(4,1))*x, (E(4,1)), -1, (-E(4,1)))"

    def test_normalize(self):
        spec = SpetsialAlgebraSpec(e=2, d=1, a=0,
                                   m=(Fraction(4), Fraction(1)),
                                   n_ref=1, n_hyp=1)
        assert spec.normalize().m == (Fraction(3), Fraction(0))


class TestEigenvalueData:
    def test_omega_sigma_delta_cyclic(self):
        spec = one_spetsial_spec(3)
        out = [omega_sigma_delta(spec, i) for i in range(3)]
        assert out[0][0].serialize() == "x^3"
        assert (out[0][1], out[0][2]) == (Fraction(2), Fraction(0))
        for i in (1, 2):
            assert out[i][0].serialize() == "1"
            assert (out[i][1], out[i][2]) == (Fraction(-1), Fraction(3))

    def test_frobenius_order_four_series(self):
        spec = parse_spec(
            "H_{Z_4}((E(4,1))*x^3, (E(4,1)), (E(4,1))*x, (-E(4,1)))",
            4, 1, n_ref=8, n_hyp=4)
        frs = [frobenius(spec, i) for i in range(4)]
        assert [[f.serialize() for f in fr] for fr in frs] == \
            [["1"], ["1"], ["1"], ["-1"]]

    def test_frobenius_order_three_series(self):
        spec = parse_spec(
            "H_{Z_6}((E(3,1))*x^2, (-E(3,1))*x, (E(3,1)), (1+E(3,1))*x, "
            "(-1-E(3,1)), (-E(3,1)))",
            3, 1, n_ref=8, n_hyp=4)
        frs = [frobenius(spec, i) for i in range(6)]
        assert [[f.serialize() for f in fr] for fr in frs] == \
            [["1"], ["1"], ["1"], ["(-1-E(3,1))"], ["(-1-E(3,1))"], ["1"]]


class TestPalindromicity:
    def test_schur_semi_palindromic_random(self):
        # For parameters u_j = c_j x^{m_j} with unit coefficients,
        # conj(S_i)(1/x) == sign * S_i(x) * prod_{j!=i} u_j / u_i^{e-1}.
        rng = random.Random(20260826)
        roots = [Cyclo.rational(1), Cyclo.rational(-1),
                 zeta(3), zeta(3) ** 2, zeta(4), -zeta(4)]
        trials = 0
        while trials < 100:
            e = rng.randint(2, 5)
            coeffs = [rng.choice(roots) for _ in range(e)]
            exps = [rng.randint(0, 4) for _ in range(e)]
            mons = [FracExpMonomial(c, Fraction(m))
                    for c, m in zip(coeffs, exps)]
            if len({(c.serialize(), m) for c, m in zip(coeffs, exps)}) < e:
                continue
            params = CyclicHeckeParams(e, tuple(mons))
            schur = schur_cyclic(params)
            for i, si in enumerate(schur):
                s = si.as_x()
                ratio_coeff = Cyclo.rational((-1) ** (e - 1))
                ratio_exp = 0
                for j in range(e):
                    if j == i:
                        continue
                    ratio_coeff = ratio_coeff * coeffs[j] / coeffs[i]
                    ratio_exp += exps[j] - exps[i]
                lhs = s.vee()
                rhs = s * LaurentPoly.monomial(ratio_coeff, ratio_exp)
                assert lhs == rhs
            trials += 1
