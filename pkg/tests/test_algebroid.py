import sympy
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopfgalois.algebroid import (
    bplus,
    hplus,
    is_coideal,
    is_comodule_subring,
    is_left_ideal,
    is_left_ideal_coideal,
    is_subring,
    span_left_ideal,
    validate_bialgebroid,
)
from hopfgalois.exactla import GF, QQ, Subspace
from hopfgalois.fixtures import FIXTURES, corrupted_kc2, fixture, kc2, kc4, pair_groupoid, sweedler


def sympy_tensor_over_subring_dim(b, B):
    """dim H (x)_B H computed as m^2 minus the rank of the balancing relations, with sympy."""
    m = b.dim
    rows = []
    for v in B.basis:
        R = b.H.rmul(v)
        L = b.H.lmul(v)
        for i in range(m):
            for j in range(m):
                left = [0] * (m * m)
                xi = R.columns[i]
                yj = L.columns[j]
                for p in range(m):
                    left[p * m + j] += xi[p]
                for q in range(m):
                    left[i * m + q] -= yj[q]
                rows.append([sympy.Rational(str(x)) for x in left])
    if not rows:
        return m * m
    return m * m - sympy.Matrix(rows).rank()


class TestValidation:
    @pytest.mark.parametrize("name", ["trivial", "kc2", "kc4", "ks3", "sweedler", "pair-groupoid",
                                      "idempotent-monoid"])
    def test_fixtures_pass(self, name):
        rep = validate_bialgebroid(fixture(name))
        assert rep.ok, rep.failed()

    def test_corruption_is_localised(self):
        rep = validate_bialgebroid(corrupted_kc2())
        assert rep.failed() == ["counitality"]
        assert rep["counitality"].witness is not None

    def test_report_json_has_every_check(self):
        rep = validate_bialgebroid(kc2()).to_json()
        names = {c["name"] for c in rep["checks"]}
        assert {"coassociativity", "counitality", "comult_in_takeuchi", "counit_unital"} <= names


class TestTensors:
    def test_kc2_over_whole_algebra(self):
        b = kc2()
        B = Subspace.full(QQ, 2)
        assert b.tensor_over_subring(B).dim == 2 == sympy_tensor_over_subring_dim(b, B)

    def test_kc4_over_even_powers(self):
        b = kc4()
        B = Subspace.span(QQ, 4, [(1, 0, 0, 0), (0, 0, 1, 0)])
        assert b.tensor_over_subring(B).dim == 8 == sympy_tensor_over_subring_dim(b, B)

    @pytest.mark.parametrize("name", ["kc2", "kc4", "sweedler", "ks3"])
    def test_field_base_gives_full_tensors(self, name):
        b = fixture(name)
        m = b.dim
        assert b.tensor_A.dim == m * m == b.tensor_Aop.dim
        assert b.takeuchi_A.dim == m * m

    def test_pair_groupoid_dims(self):
        b = pair_groupoid()
        assert b.tensor_A.dim == 8
        assert b.takeuchi_A.dim == 4
        assert b.tensor_Aop.dim == 8

    def test_tensor_is_bilinear_and_balanced(self):
        b = pair_groupoid()
        T = b.tensor_A
        x, y = b.e(1), b.e(3)
        for a in ((1, 0), (0, 1)):
            assert T.tensor(b.mul(b.t(a), x), y) == T.tensor(x, b.mul(b.s(a), y))


class TestSubobjects:
    def test_hplus_is_counit_kernel(self):
        b = kc4()
        assert hplus(b) == Subspace.span(QQ, 4, [(1, -1, 0, 0), (1, 0, -1, 0), (1, 0, 0, -1)])

    def test_bplus_of_even_powers(self):
        b = kc4()
        B = Subspace.span(QQ, 4, [(1, 0, 0, 0), (0, 0, 1, 0)])
        assert bplus(b, B) == Subspace.span(QQ, 4, [(1, 0, -1, 0)])

    def test_sweedler_objects(self):
        b = sweedler()
        one_x = Subspace.span(QQ, 4, [(1, 0, 0, 0), (0, 0, 1, 0)])
        assert is_comodule_subring(b, one_x)
        assert is_subring(b, one_x)
        one_g = Subspace.span(QQ, 4, [(1, 0, 0, 0), (0, 1, 0, 0)])
        assert is_comodule_subring(b, one_g)
        one_gx = Subspace.span(QQ, 4, [(1, 0, 0, 0), (0, 0, 0, 1)])
        # gx squares to zero, but Delta(gx) = g (x) gx + gx (x) 1 leaves H (x) span{1, gx}
        assert is_subring(b, one_gx) and not is_comodule_subring(b, one_gx)
        assert is_coideal(b, Subspace.span(QQ, 4, [(0, 0, 1, 0)]))
        assert is_coideal(b, Subspace.span(QQ, 4, [(0, 0, 0, 1)]))
        assert not is_coideal(b, Subspace.span(QQ, 4, [(0, 1, 0, 0)]))

    def test_left_ideal_generated(self):
        b = kc4()
        I = span_left_ideal(b, Subspace.span(QQ, 4, [(1, 0, -1, 0)]))
        assert I.dim == 2 and is_left_ideal(b, I) and is_left_ideal_coideal(b, I)

    def test_pair_groupoid_subrings_contain_target(self):
        b = pair_groupoid()
        diag = Subspace.span(QQ, 4, [(1, 0, 0, 0), (0, 0, 0, 1)])
        assert is_comodule_subring(b, diag)
        assert not is_comodule_subring(b, Subspace.span(QQ, 4, [(1, 0, 0, 1)]))


gf3_vectors = st.lists(st.lists(st.integers(0, 2), min_size=4, max_size=4), max_size=3)


@settings(max_examples=80, deadline=None)
@given(gf3_vectors)
def test_left_ideal_coideals_are_coideals(vs):
    b = kc4(GF(3))
    I = Subspace.span(GF(3), 4, vs)
    if is_left_ideal_coideal(b, I):
        assert is_coideal(b, I) and is_left_ideal(b, I)
    J = span_left_ideal(b, I)
    assert is_left_ideal(b, J) and I <= J


def test_all_fixtures_are_registered():
    assert {"kc2", "kc4", "ks3", "sweedler", "pair-groupoid", "kc2-corrupted", "idempotent-monoid"} <= set(FIXTURES)
