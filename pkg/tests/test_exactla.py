from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import brute_span, brute_vectors, sympy_rank
from hopfgalois.errors import DimensionMismatch, IllDefined
from hopfgalois.exactla import (
    GF,
    QQ,
    Field,
    LinMap,
    QuotientSpace,
    Subspace,
    coequalizer,
    equalizer,
    image,
    kernel,
    quotient_map_compose,
    rref,
    solve,
)


def M(F, rows, n=None):
    return LinMap.from_rows(F, rows, n)


class TestRref:
    def test_identity_is_fixed(self):
        assert rref(LinMap.identity(QQ, 2)) == LinMap.identity(QQ, 2)

    def test_rank_one_rational(self):
        assert rref(M(QQ, [[2, 4], [1, 2]])).rows == ((1, 2), (0, 0))

    def test_gf2_full_rank(self):
        assert rref(M(GF(2), [[1, 1], [1, 2]])).rows == ((1, 0), (0, 1))

    def test_fractions_stay_exact(self):
        r = rref(M(QQ, [[3, 1], [1, Fraction(1, 3)]]))
        assert r.rows == ((1, Fraction(1, 3)), (0, 0))


class TestKernel:
    def test_zero_map(self):
        assert kernel(LinMap.zero(QQ, 3, 3)) == Subspace.full(QQ, 3)

    def test_identity(self):
        assert kernel(LinMap.identity(QQ, 3)).dim == 0

    def test_projection(self):
        assert kernel(M(QQ, [[1, 0], [0, 0]])).basis == ((0, 1),)


class TestEqualizers:
    def test_equal_maps(self):
        f = M(QQ, [[1, 2], [3, 4]])
        assert equalizer(f, f) == Subspace.full(QQ, 2)

    def test_identity_and_zero(self):
        assert equalizer(LinMap.identity(QQ, 2), LinMap.zero(QQ, 2, 2)).dim == 0

    def test_shape_mismatch(self):
        with pytest.raises(DimensionMismatch):
            equalizer(LinMap.identity(QQ, 2), LinMap.identity(QQ, 3))

    def test_coequalizer_of_equal_maps(self):
        f = M(QQ, [[1, 2], [3, 4]])
        q = coequalizer(f, f)
        assert q.dim == 2 and q.projection == LinMap.identity(QQ, 2)

    def test_coequalizer_identity_zero(self):
        assert coequalizer(LinMap.identity(QQ, 2), LinMap.zero(QQ, 2, 2)).dim == 0


class TestQuotients:
    def test_projection_section(self):
        q = QuotientSpace.of(QQ, 3, [(1, 1, 0)])
        assert q.projection @ q.section == LinMap.identity(QQ, q.dim)
        assert q.projection.kernel() == q.killed

    def test_compose_projection_is_identity(self):
        q = QuotientSpace.of(QQ, 3, [(1, -1, 0)])
        assert quotient_map_compose(q, q.projection) == LinMap.identity(QQ, 2)

    def test_compose_zero(self):
        q = QuotientSpace.of(QQ, 3, [(1, -1, 0)])
        assert quotient_map_compose(q, LinMap.zero(QQ, 3, 2)) == LinMap.zero(QQ, 2, 2)

    def test_compose_rejects_maps_not_killing_relations(self):
        q = QuotientSpace.of(QQ, 2, [(1, 0)])
        with pytest.raises(IllDefined):
            quotient_map_compose(q, LinMap.identity(QQ, 2))

    def test_counit_descends_to_a_point(self):
        # eps on kC2 kills span{g - 1}; the induced map on H / H^+ is an isomorphism onto k
        eps = M(QQ, [[1, 1]])
        q = QuotientSpace.of(QQ, 2, [(1, -1)])
        induced = quotient_map_compose(q, eps)
        assert induced.is_invertible()


class TestSolve:
    def test_consistent(self):
        assert solve(M(QQ, [[1, 1], [0, 2]]), [3, 4]) == (1, 2)

    def test_inconsistent(self):
        assert solve(M(QQ, [[1, 1], [1, 1]]), [1, 2]) is None


class TestField:
    def test_parse(self):
        assert Field.parse("q") == QQ and Field.parse("gf:5") == GF(5)
        with pytest.raises(ValueError):
            Field.parse("gf:4")

    def test_json_scalars(self):
        assert QQ.to_json(Fraction(-3, 6)) == "-1/2"
        assert QQ.to_json(4) == "4"
        assert GF(5).to_json(GF(5)("1/2")) == "3"

    def test_no_image_mod_p(self):
        with pytest.raises(ValueError):
            GF(3)("1/3")

    @given(st.fractions().filter(lambda x: x != 0))
    def test_rational_inverse(self, a):
        assert QQ.canon(a * QQ.inv(a)) == 1

    @given(st.sampled_from([2, 3, 5, 7, 31]), st.integers(0, 10 ** 6))
    def test_fermat(self, p, a):
        F = GF(p)
        assert F.power(F(a), p) == F(a)


matrices_q = st.integers(1, 5).flatmap(
    lambda n: st.lists(st.lists(st.integers(-4, 4), min_size=n, max_size=n), min_size=1, max_size=5)
)


@settings(max_examples=60, deadline=None)
@given(matrices_q)
def test_rank_nullity_and_rank_against_sympy(rows):
    n = len(rows[0])
    m = M(QQ, rows, n)
    assert m.rank == sympy_rank(rows, n)
    assert m.kernel().dim + m.image().dim == n
    for v in m.kernel().basis:
        assert not any(m(v))


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([2, 3]), st.integers(1, 3).flatmap(
    lambda n: st.lists(st.lists(st.integers(0, 2), min_size=n, max_size=n), min_size=1, max_size=3)))
def test_kernel_size_matches_brute_force(p, rows):
    n = len(rows[0])
    F = GF(p)
    m = M(F, rows, n)
    zeros = [v for v in brute_vectors(p, n) if not any(sum(r[i] * v[i] for i in range(n)) % p for r in rows)]
    assert len(zeros) == p ** m.kernel().dim


vectors_gf3 = st.lists(st.lists(st.integers(0, 2), min_size=3, max_size=3), max_size=3)


@settings(max_examples=60, deadline=None)
@given(vectors_gf3, vectors_gf3)
def test_sum_and_intersection_against_brute_force(us, vs):
    F = GF(3)
    U, V = Subspace.span(F, 3, us), Subspace.span(F, 3, vs)
    assert U + V == V + U
    assert (U + V).basis == (V + U).basis
    su, sv = brute_span(3, 3, us), brute_span(3, 3, vs)
    assert len(brute_span(3, 3, us + vs)) == 3 ** (U + V).dim
    assert len(su & sv) == 3 ** (U & V).dim
    assert all(tuple(v) in su for v in (U & V).basis)


def test_canonical_basis_is_reduced_echelon():
    S = Subspace.span(QQ, 4, [(2, 4, 0, 2), (1, 2, 1, 0), (3, 6, 1, 2)])
    piv = []
    for row in S.basis:
        c = next(i for i, x in enumerate(row) if x)
        assert row[c] == 1
        piv.append(c)
    assert piv == sorted(piv)
    for r, c in zip(S.basis, piv):
        assert all(other[c] == 0 for other in S.basis if other is not r)


def test_image_and_coordinates_roundtrip():
    m = M(QQ, [[1, 0], [1, 1], [0, 1]])
    S = image(m)
    v = m((Fraction(1, 2), 3))
    coords = S.coordinates(v)
    assert tuple(sum(c * b[i] for c, b in zip(coords, S.basis)) for i in range(3)) == v
