"""Order polynomials, fake degrees, character tables, and the Sylow-style
congruences |G|/(|W_G(L)||L|) = 1 mod Phi."""

from spets.chartables import char_table, feg_map
from spets.cyclotomic import Cyclo, zeta
from spets.laurent import LaurentPoly
from spets.orders import (all_sylow_congruences, cyclic_char_table,
                          fake_degree_torus, order_poly, poincare,
                          torus_order)
from spets.reflection import Matrix, build_group


class TestPoincare:
    def test_g4(self, g4):
        assert poincare(g4).serialize() == "x^10 - x^6 - x^4 + 1"

    def test_semi_palindromic(self, g4, g312):
        # x^{N_ref + rank} P(1/x) == (-1)^rank P(x) for every builtin group
        for G in (g4, g312, build_group("Z_6")):
            P = poincare(G)
            flipped = LaurentPoly([(-e, c) for e, c in P.coeffs])
            sign = (-1) ** G.rank
            assert LaurentPoly.x(G.n_ref + G.rank) * flipped == P * sign

    def test_product_of_degree_factors(self, g4):
        want = LaurentPoly.one()
        for d, _ in g4.degrees:
            want = want * (LaurentPoly.x(d) - 1)
        assert poincare(g4) == want


class TestOrderPoly:
    def test_g4_compact(self, g4):
        assert order_poly(g4).serialize() == "x^14 - x^10 - x^8 + x^4"

    def test_variant_prefactors(self, g4, g312):
        # compact variant carries x^{N_hyp}, noncompact carries x^{N_ref}
        for G in (g4, g312, build_group("Z_5")):
            P = poincare(G)
            assert order_poly(G, "compact") in \
                (LaurentPoly.x(G.n_hyp) * P, -LaurentPoly.x(G.n_hyp) * P)
            assert order_poly(G, "noncompact") in \
                (LaurentPoly.x(G.n_ref) * P, -LaurentPoly.x(G.n_ref) * P)

    def test_cyclic(self):
        G = build_group("Z_3")
        assert order_poly(G).serialize() == "x^4 - x"


class TestTorus:
    def test_identity_torus(self, g4):
        w = Matrix.identity(2)
        assert torus_order(g4, w).serialize() == "x^2 - 2*x + 1"

    def test_fake_degree_times_torus(self, g4):
        # Feg(R_w) * |T_w| = prod (x^{d_i} - 1) for the identity twist
        w = Matrix.identity(2)
        fd = fake_degree_torus(g4, w)
        assert fd * (LaurentPoly.x() - 1) ** 2 == poincare(g4)


class TestCharTables:
    def test_cyclic_orthogonality(self):
        for e in (2, 3, 5, 6):
            cyclic_char_table(build_group(f"Z_{e}")).verify_orthogonality()

    def test_g4_orthogonality(self, g4):
        char_table(g4).verify_orthogonality()

    def test_g312_orthogonality(self, g312):
        char_table(g312).verify_orthogonality()

    def test_g4_fake_degrees(self, g4, g4_fegs):
        want = {
            "phi_{1,0}": "1",
            "phi_{2,1}": "x^3 + x",
            "phi_{3,2}": "x^6 + x^4 + x^2",
            "phi_{2,3}": "x^5 + x^3",
            "phi_{1,4}": "x^4",
            "phi_{2,5}": "x^7 + x^5",
            "phi_{1,8}": "x^8",
        }
        assert {n: f.serialize() for n, f in g4_fegs.items()} == want

    def test_fake_degree_sum(self, g4, g312, g4_fegs, g312_fegs):
        # sum theta(1) * Feg(theta) = Poincare polynomial
        for G, fegs in ((g4, g4_fegs), (g312, g312_fegs)):
            table = char_table(G)
            total = LaurentPoly.zero()
            for name, f in fegs.items():
                total = total + f * table.degree(name)
            assert total == fake_degree_torus(G, Matrix.identity(G.rank))

    def test_feg_at_regular_eigenvalue(self, g4, g312):
        # Feg(theta)(zeta) == theta(w) whenever w is zeta-regular
        cases = [(g4, (Cyclo.rational(-1), zeta(4), zeta(6))),
                 (g312, (Cyclo.rational(-1), zeta(3), zeta(6)))]
        for G, zs in cases:
            table = char_table(G)
            fegs = feg_map(table)
            for z in zs:
                assert G.regular_classes(z)
                w = G.regular_element(z)
                for name, f in fegs.items():
                    assert f.evaluate(z) == table.value(name, w), (name, z)


class TestSylow:
    def test_g4_all_pass(self, g4):
        results = all_sylow_congruences(g4)
        assert results and all(ok for _, ok in results)

    def test_g312_all_pass(self, g312):
        results = all_sylow_congruences(g312)
        assert results and all(ok for _, ok in results)

    def test_z6_all_pass(self):
        results = all_sylow_congruences(build_group("Z_6"))
        assert results and all(ok for _, ok in results)

    def test_g4_covers_all_order_divisors(self, g4):
        # every K-cyclotomic factor of |G| appears in the suite
        order = order_poly(g4)
        ds = sorted({phi.root_order for phi, _ in all_sylow_congruences(g4)})
        assert ds == [1, 2, 3, 4, 6]
