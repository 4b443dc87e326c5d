"""Reflection group construction, class data, and regular elements."""

from spets.cyclotomic import Cyclo, zeta
from spets.reflection import Matrix, build_group


class TestBuiltins:
    def test_cyclic_orders(self):
        for e in range(2, 9):
            G = build_group(f"Z_{e}")
            assert G.order == e
            assert G.rank == 1
            assert G.degrees == [(e, Cyclo.rational(1))]
            assert G.n_ref == e - 1
            assert G.n_hyp == 1

    def test_g4(self, g4):
        assert g4.order == 24
        assert g4.rank == 2
        assert [d for d, _ in g4.degrees] == [4, 6]
        assert g4.n_ref == 8
        assert g4.n_hyp == 4
        assert len(g4.classes) == 7

    def test_g312(self, g312):
        assert g312.order == 18
        assert g312.rank == 2
        assert [d for d, _ in g312.degrees] == [3, 6]
        assert g312.n_ref == 7
        assert g312.n_hyp == 5
        assert len(g312.classes) == 9

    def test_degree_sum_counts_reflections(self, g4, g312):
        for G in (g4, g312, build_group("Z_5")):
            assert sum(d - 1 for d, _ in G.degrees) == G.n_ref

    def test_class_sizes_sum(self, g4, g312):
        for G in (g4, g312):
            assert sum(c.size for c in G.classes) == G.order


class TestMatrix:
    def test_identity_and_mul(self):
        I = Matrix.identity(2)
        m = Matrix.diagonal([zeta(3), zeta(3) ** 2])
        assert m @ I == m
        assert (m @ m @ m) == I
        assert m.multiplicative_order() == 3

    def test_det_trace(self):
        m = Matrix.diagonal([zeta(4), Cyclo.rational(1)])
        assert m.det() == zeta(4)
        assert m.trace() == zeta(4) + 1

    def test_eigenspace(self):
        m = Matrix.diagonal([zeta(3), Cyclo.rational(1)])
        space = m.eigenspace(Cyclo.rational(1))
        assert len(space) == 1
        assert m.apply(space[0]) == space[0]

    def test_charpoly_roots(self):
        m = Matrix.diagonal([zeta(6), zeta(6) ** 5])
        cp = m.charpoly()
        assert cp.evaluate(zeta(6)) == Cyclo.rational(0)


class TestRegular:
    def test_g4_regular(self, g4):
        # zeta_4-regular elements exist; the maximal eigenspace is a line
        # avoiding all reflecting hyperplanes.
        w = g4.regular_element(zeta(4))
        assert w is not None
        assert w.multiplicative_order() % 4 == 0
        assert len(w.eigenspace(zeta(4))) == 1

    def test_g4_minus_one_regular(self, g4):
        w = g4.regular_element(Cyclo.rational(-1))
        assert w == Matrix.diagonal([Cyclo.rational(-1)] * 2)

    def test_g312_regular(self, g312):
        for z in (zeta(6), zeta(6) ** 5, Cyclo.rational(-1)):
            assert g312.regular_element(z) is not None

    def test_centralizer_of_regular_is_cyclic(self, g4):
        w = g4.regular_element(zeta(4))
        cent = g4.centralizer(w)
        assert len(cent) == w.multiplicative_order()
        # cyclic: generated by w itself
        powers = set()
        p = w
        for _ in range(w.multiplicative_order()):
            powers.add(p)
            p = p @ w
        assert set(cent) == powers


class TestEigenspaceCentralizer:
    def test_restriction_is_cyclic(self, g4):
        w = g4.regular_element(zeta(4))
        C, _ = g4.centralizer_on_eigenspace(w, zeta(4))
        assert C.order == 4
        assert C.rank == 1

    def test_g312_zeta6(self, g312):
        w = g312.regular_element(zeta(6))
        C, _ = g312.centralizer_on_eigenspace(w, zeta(6))
        assert C.order == 6
