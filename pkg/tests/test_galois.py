import pytest

from conftest import brute_span
from hopfgalois.algebroid import is_left_ideal_coideal
from hopfgalois.errors import CapExceeded, InvalidIdealCoideal, InvalidSubring
from hopfgalois.exactla import GF, QQ, Subspace
from hopfgalois.fixtures import fixture, kc2, kc4, ks3, pair_groupoid, sweedler
from hopfgalois.galois import (
    build_xi,
    build_zeta,
    check_coequalizer_condition,
    check_connection,
    check_equalizer_condition,
    cotensor_square,
    enumerate_lattices,
    enumerate_subspaces,
    equalizer_persists,
    gaussian_binomial_total,
    phi,
    psi,
    verify_bijection,
    xi_composites,
    zeta_composites,
)
from hopfgalois.hopf import hopf_data

EVEN = [(1, 0, 0, 0), (0, 0, 1, 0)]


def group_coinvariants_oracle(b, I):
    """For a group algebra, x = sum c_g g is coinvariant iff g - 1 lies in I whenever c_g != 0."""
    m = b.dim
    keep = []
    for g in range(m):
        diff = [0] * m
        diff[g] += 1
        diff[0] -= 1
        if tuple(b.field.canon(x) for x in diff) in I:
            keep.append(b.e(g))
    return Subspace.span(b.field, m, keep)


class TestPhiPsi:
    def test_kc4_even_powers(self):
        b = kc4()
        B = Subspace.span(QQ, 4, EVEN)
        I = phi(b, B)
        assert I == Subspace.span(QQ, 4, [(1, 0, -1, 0), (0, 1, 0, -1)])
        assert psi(b, I) == B

    def test_kc4_psi_of_relations(self):
        b = kc4()
        I = Subspace.span(QQ, 4, [(-1, 0, 1, 0), (0, -1, 0, 1)])
        assert psi(b, I) == Subspace.span(QQ, 4, EVEN)

    def test_extremes(self):
        b = sweedler()
        k1 = Subspace.span(QQ, 4, [b.one])
        H = Subspace.full(QQ, 4)
        assert phi(b, k1).dim == 0
        assert psi(b, Subspace.zero(QQ, 4)) == k1
        assert phi(b, H) == Subspace.span(QQ, 4, [(1, -1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)])
        assert psi(b, phi(b, H)) == H

    def test_rejects_bad_input(self):
        b = kc4()
        with pytest.raises(InvalidSubring):
            phi(b, Subspace.span(QQ, 4, [(0, 1, 0, 0)]))
        with pytest.raises(InvalidIdealCoideal):
            psi(b, Subspace.span(QQ, 4, [(1, 0, 0, 0)]))

    def test_coinvariants_against_group_oracle(self):
        for F, name in ((GF(3), "kc4"), (GF(2), "ks3"), (QQ, "kc2")):
            b = fixture(name, F)
            if F.p is None:
                ideals = [Subspace.zero(F, 2), Subspace.span(F, 2, [(1, -1)])]
            else:
                ideals, _ = enumerate_lattices(b)
            for I in ideals:
                assert psi(b, I) == group_coinvariants_oracle(b, I)


class TestCotensorAndConditions:
    def test_cotensor_dimensions(self):
        b = kc4()
        assert cotensor_square(b, Subspace.zero(QQ, 4)).dim == 4
        assert cotensor_square(b, phi(b, Subspace.full(QQ, 4))).dim == 16
        assert cotensor_square(b, phi(b, Subspace.span(QQ, 4, EVEN))).dim == 8

    def test_cotensor_needs_ideal(self):
        with pytest.raises(InvalidIdealCoideal):
            cotensor_square(kc2(), Subspace.full(QQ, 2))

    def test_coequalizer_and_equalizer_for_group_algebras(self):
        b = kc4(GF(3))
        ideals, subrings = enumerate_lattices(b)
        assert all(check_coequalizer_condition(b, I) for I in ideals)
        assert all(check_equalizer_condition(b, None, B) for B in subrings)
        assert all(equalizer_persists(b, I) for I in ideals)

    def test_pair_groupoid(self):
        b = pair_groupoid(GF(3))
        h = hopf_data(b)
        ideals, subrings = enumerate_lattices(b)
        assert (len(ideals), len(subrings)) == (2, 4)
        rep = verify_bijection(b, h, ideals, subrings)
        assert rep.ok and rep.counts["kept_ideals"] == rep.counts["kept_subrings"] == 2


class TestComparisonMaps:
    @pytest.mark.parametrize("name,p", [("kc4", 3), ("sweedler", 5), ("ks3", 2), ("pair-groupoid", 3)])
    def test_zeta_and_xi(self, name, p):
        b = fixture(name, GF(p))
        h = hopf_data(b)
        _, subrings = enumerate_lattices(b)
        for B in subrings:
            zeta = build_zeta(b, h, B)
            assert zeta.domain_dim >= 0
            assert zeta_composites(b, h, B)["multiplication_leg"]
            xi = build_xi(b, h, B)
            assert xi.is_invertible()
            legs = xi_composites(b, h, B)
            assert legs["coaction_leg"] and legs["unit_leg"]

    def test_zeta_is_iso_for_kc4_even(self):
        b = kc4()
        h = hopf_data(b)
        zeta = build_zeta(b, h, Subspace.span(QQ, 4, EVEN))
        assert zeta.domain_dim == 8 and zeta.is_invertible()


class TestConnection:
    @pytest.mark.parametrize("name,p", [("kc4", 3), ("sweedler", 5)])
    def test_laws(self, name, p):
        b = fixture(name, GF(p))
        ideals, subrings = enumerate_lattices(b)
        rep = check_connection(b, None, ideals, subrings)
        assert rep.ok, rep.violations
        assert all(rep.laws.values())

    def test_counts(self):
        b = kc4(GF(3))
        ideals, subrings = enumerate_lattices(b)
        assert (len(ideals), len(subrings)) == (3, 3)
        b = sweedler(GF(5))
        ideals, subrings = enumerate_lattices(b)
        assert len(subrings) == 8

    def test_invalid_inputs_are_reported(self):
        b = kc4()
        rep = check_connection(b, None, [Subspace.full(QQ, 4)], [Subspace.span(QQ, 4, [(0, 1, 0, 0)])])
        assert not rep.ok
        assert len(rep.violations) == 2

    def test_bijection_sweedler(self):
        b = sweedler(GF(5))
        h = hopf_data(b)
        ideals, subrings = enumerate_lattices(b)
        rep = verify_bijection(b, h, ideals, subrings)
        assert rep.ok and rep.bijection
        assert rep.counts["kept_ideals"] == rep.counts["kept_subrings"]


class TestEnumeration:
    @pytest.mark.parametrize("dim,p,expected", [(2, 2, 5), (4, 3, 212), (4, 5, 1120)])
    def test_counts_match_gaussian_binomials(self, dim, p, expected):
        spaces = list(enumerate_subspaces(dim, p))
        assert len(spaces) == expected == gaussian_binomial_total(dim, p)
        assert len({S.key for S in spaces}) == expected

    def test_brute_force_small(self):
        spans = {frozenset(brute_span(2, 3, S.basis)) for S in enumerate_subspaces(3, 2)}
        assert len(spans) == gaussian_binomial_total(3, 2) == 16

    def test_cap(self):
        with pytest.raises(CapExceeded):
            list(enumerate_subspaces(6, 3, cap=100))

    def test_rational_field_refused(self):
        with pytest.raises(ValueError):
            enumerate_lattices(kc2())

    def test_enumerated_ideals_are_valid(self):
        b = sweedler(GF(3))
        ideals, _ = enumerate_lattices(b)
        assert all(is_left_ideal_coideal(b, I) for I in ideals)
