"""Left bialgebroids given by structure constants.

H is an algebra with basis e_0..e_{m-1}; A is the base algebra with basis
f_0..f_{n-1}. Source ``s: A -> H`` and target ``t: A^op -> H`` are matrices,
the comultiplication is a matrix ``H -> H (x) H`` (a lift of the value in the
balanced tensor product) and the counit is a matrix ``H -> A``.

All the bimodule actions on H come from left or right multiplication by s(a)
and t(a); each balanced tensor product records which ones it balances.
Coordinates of ``x (x) y`` in the ambient space are indexed ``i * m + j``.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import cached_property
from typing import Sequence

from .errors import DimensionMismatch
from .exactla import (
    Field,
    LinMap,
    QuotientSpace,
    Subspace,
    Vector,
    canon_vector,
    is_zero,
    kron,
    lincomb,
    solve,
    unit_vector,
    vsub,
)


@dataclass(frozen=True, eq=False)
class BasedAlgebra:
    """Finite-dimensional algebra: ``e_i e_j = sum_k mult[i][j][k] e_k``."""

    field: Field
    dim: int
    mult: tuple
    unit: Vector

    @classmethod
    def from_structure(cls, F: Field, mult, unit=None) -> "BasedAlgebra":
        d = len(mult)
        m = tuple(tuple(canon_vector(F, (F(x) for x in mult[i][j])) for j in range(d)) for i in range(d))
        for i in range(d):
            if len(m[i]) != d or any(len(v) != d for v in m[i]):
                raise DimensionMismatch("structure constants must form a dim x dim x dim array")
        if unit is None:
            alg = cls(F, d, m, (0,) * d)
            unit = alg.solve_unit()
            if unit is None:
                raise ValueError("algebra has no unit")
        return cls(F, d, m, canon_vector(F, (F(x) for x in unit)))

    @cached_property
    def _terms(self):
        return [[[(k, c) for k, c in enumerate(self.mult[i][j]) if c] for j in range(self.dim)]
                for i in range(self.dim)]

    def basis_vector(self, i: int) -> Vector:
        return unit_vector(self.dim, i)

    def multiply(self, u: Sequence, v: Sequence) -> Vector:
        acc = [0] * self.dim
        vnz = [(j, b) for j, b in enumerate(v) if b]
        for i, a in enumerate(u):
            if not a:
                continue
            row = self._terms[i]
            for j, b in vnz:
                ab = a * b
                for k, c in row[j]:
                    acc[k] += ab * c
        return canon_vector(self.field, acc)

    def lmul(self, u: Sequence) -> LinMap:
        """Matrix of x -> u x."""
        return LinMap.from_columns(self.field, [self.multiply(u, self.basis_vector(j)) for j in range(self.dim)],
                                   self.dim)

    def rmul(self, u: Sequence) -> LinMap:
        """Matrix of x -> x u."""
        return LinMap.from_columns(self.field, [self.multiply(self.basis_vector(j), u) for j in range(self.dim)],
                                   self.dim)

    def solve_unit(self) -> Vector | None:
        d = self.dim
        rows, rhs = [], []
        for i in range(d):
            for k in range(d):
                rows.append(tuple(self.mult[j][i][k] for j in range(d)))
                rhs.append(1 if i == k else 0)
                rows.append(tuple(self.mult[i][j][k] for j in range(d)))
                rhs.append(1 if i == k else 0)
        if not rows:
            return ()
        return solve(LinMap(self.field, d, len(rows), tuple(rows)), rhs)

    def associativity_witness(self):
        d = self.dim
        for i in range(d):
            for j in range(d):
                eij = self.mult[i][j]
                for k in range(d):
                    ek = self.basis_vector(k)
                    left = self.multiply(eij, ek)
                    right = self.multiply(self.basis_vector(i), self.mult[j][k])
                    if left != right:
                        return (i, j, k)
        return None

    def unitality_witness(self):
        for i in range(self.dim):
            e = self.basis_vector(i)
            if self.multiply(self.unit, e) != e or self.multiply(e, self.unit) != e:
                return (i,)
        return None

    def span_products(self, U: Subspace, V: Subspace) -> Subspace:
        return Subspace.span(self.field, self.dim, [self.multiply(u, v) for u in U.basis for v in V.basis])


def trivial_algebra(F: Field) -> BasedAlgebra:
    """The ground field as a one-dimensional algebra."""
    return BasedAlgebra(F, 1, (((1,),),), (1,))


@dataclass(frozen=True, eq=False)
class AeRing:
    base: BasedAlgebra
    total: BasedAlgebra
    source: LinMap
    target: LinMap

    def __post_init__(self):
        n, m = self.base.dim, self.total.dim
        for name, f in (("source", self.source), ("target", self.target)):
            if (f.domain_dim, f.codomain_dim) != (n, m):
                raise DimensionMismatch(f"{name} must be a {m}x{n} matrix")

    @cached_property
    def s_basis(self) -> tuple:
        return self.source.columns

    @cached_property
    def t_basis(self) -> tuple:
        return self.target.columns


@dataclass(frozen=True)
class ModuleSpec:
    """A vector space with one action matrix per basis element of the balancing ring."""

    dim: int
    actions: tuple


@dataclass(frozen=True, eq=False)
class BalancedTensor:
    """``left (x) right`` modulo a family of balancing relations."""

    left_dim: int
    right_dim: int
    kind: str
    quotient: QuotientSpace
    subring: Subspace | None = None
    # (left op, right op) pairs: the Takeuchi-type condition is
    # sum (L m_i) (x) n_i == sum m_i (x) (R n_i) for every pair
    cross_ops: tuple = ()

    @property
    def field(self) -> Field:
        return self.quotient.field

    @property
    def dim(self) -> int:
        return self.quotient.dim

    @property
    def ambient_dim(self) -> int:
        return self.quotient.ambient_dim

    @property
    def killed(self) -> Subspace:
        return self.quotient.killed

    def project(self, v: Sequence) -> Vector:
        return self.quotient.project(v)

    def lift(self, q: Sequence) -> Vector:
        return self.quotient.lift(q)

    def tensor(self, u: Sequence, v: Sequence) -> Vector:
        return self.project(kron(self.field, u, v))


def kron_maps(L: LinMap, R: LinMap) -> LinMap:
    F = L.field
    cols = []
    for i in range(L.domain_dim):
        for j in range(R.domain_dim):
            cols.append(kron(F, L.columns[i], R.columns[j]))
    return LinMap.from_columns(F, cols, L.codomain_dim * R.codomain_dim)


def balancing_relations(F: Field, left: ModuleSpec, right: ModuleSpec) -> list:
    """Vectors ``(L_r e_i) (x) e_j - e_i (x) (R_r e_j)`` over all r, i, j."""
    if len(left.actions) != len(right.actions):
        raise DimensionMismatch("left and right module specs use different balancing rings")
    out = []
    for L, R in zip(left.actions, right.actions):
        if L.domain_dim != left.dim or L.codomain_dim != left.dim:
            raise DimensionMismatch("left action has the wrong shape")
        if R.domain_dim != right.dim or R.codomain_dim != right.dim:
            raise DimensionMismatch("right action has the wrong shape")
        for i in range(left.dim):
            for j in range(right.dim):
                v = vsub(F, kron(F, L.columns[i], unit_vector(right.dim, j)),
                         kron(F, unit_vector(left.dim, i), R.columns[j]))
                if not is_zero(v):
                    out.append(v)
    return out


def balanced_tensor(left: ModuleSpec, right: ModuleSpec, kind: str, *, field: Field,
                    subring: Subspace | None = None, extra_killed=(), cross_ops=()) -> BalancedTensor:
    rels = balancing_relations(field, left, right)
    rels.extend(extra_killed)
    q = QuotientSpace.of(field, left.dim * right.dim, rels)
    return BalancedTensor(left.dim, right.dim, kind, q, subring, tuple(cross_ops))


def takeuchi_subspace(t: BalancedTensor) -> Subspace:
    """Classes satisfying every cross condition, in quotient coordinates of ``t``."""
    if t.kind not in ("A", "Aop") or not t.cross_ops:
        raise ValueError(f"no Takeuchi condition is attached to a balanced tensor of kind {t.kind!r}")
    F = t.field
    blocks = []
    for L, R in t.cross_ops:
        op = kron_maps(L, LinMap.identity(F, t.right_dim)) - kron_maps(LinMap.identity(F, t.left_dim), R)
        blocks.append(t.quotient.projection @ op @ t.quotient.section)
    if not blocks:
        return Subspace.full(F, t.dim)
    rows = tuple(r for b in blocks for r in b.rows)
    return LinMap(F, t.dim, len(rows), rows).kernel()


# --------------------------------------------------------------------------


@dataclass
class Check:
    name: str
    passed: bool
    witness: tuple | None = None
    detail: str = ""

    def to_json(self) -> dict:
        d = {"name": self.name, "passed": self.passed}
        if self.witness is not None:
            d["witness"] = list(self.witness)
        if self.detail:
            d["detail"] = self.detail
        return d


@dataclass
class ValidationReport:
    checks: list = dc_field(default_factory=list)
    notes: list = dc_field(default_factory=list)

    def add(self, name: str, witness=None, detail: str = "") -> Check:
        c = Check(name, witness is None, witness, detail)
        self.checks.append(c)
        return c

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failed(self) -> list:
        return [c.name for c in self.checks if not c.passed]

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_json(self) -> dict:
        return {"ok": self.ok, "checks": [c.to_json() for c in self.checks], "notes": list(self.notes)}


AXIOM_DESCRIPTIONS = {
    "base_associative": "A is associative",
    "base_unital": "A is unital",
    "total_associative": "H is associative",
    "total_unital": "H is unital",
    "source_algebra_map": "s: A -> H is a unital algebra map",
    "target_algebra_map": "t: A^op -> H is a unital algebra map",
    "source_target_commute": "s(a) t(b) = t(b) s(a)",
    "comult_in_takeuchi": "Delta takes values in the Takeuchi product",
    "comult_multiplicative": "Delta(xy) = Delta(x) Delta(y) and Delta(1) = 1 (x) 1",
    "comult_bilinear": "Delta(s(a) t(b) x) = s(a) x_1 (x) t(b) x_2",
    "coassociativity": "(Delta (x) H) Delta = (H (x) Delta) Delta",
    "counitality": "s(eps(x_1)) x_2 = x = t(eps(x_2)) x_1",
    "counit_bilinear": "eps(s(a) t(b) x) = a eps(x) b",
    "counit_multiplicative": "eps(x s(eps(y))) = eps(xy) = eps(x t(eps(y)))",
    "counit_unital": "eps(1_H) = 1_A",
}


@dataclass(frozen=True, eq=False)
class LeftBialgebroid:
    ring: AeRing
    comult: LinMap
    counit: LinMap
    name: str = ""

    def __post_init__(self):
        m, n = self.ring.total.dim, self.ring.base.dim
        if (self.comult.domain_dim, self.comult.codomain_dim) != (m, m * m):
            raise DimensionMismatch(f"comultiplication must be a {m * m}x{m} matrix")
        if (self.counit.domain_dim, self.counit.codomain_dim) != (m, n):
            raise DimensionMismatch(f"counit must be a {n}x{m} matrix")

    @property
    def field(self) -> Field:
        return self.ring.total.field

    @property
    def H(self) -> BasedAlgebra:
        return self.ring.total

    @property
    def A(self) -> BasedAlgebra:
        return self.ring.base

    @property
    def dim(self) -> int:
        return self.ring.total.dim

    @property
    def base_dim(self) -> int:
        return self.ring.base.dim

    @property
    def one(self) -> Vector:
        return self.H.unit

    def e(self, i: int) -> Vector:
        return unit_vector(self.dim, i)

    def delta(self, x: Sequence) -> Vector:
        return self.comult(x)

    def eps(self, x: Sequence) -> Vector:
        return self.counit(x)

    def s(self, a: Sequence) -> Vector:
        return self.ring.source(a)

    def t(self, a: Sequence) -> Vector:
        return self.ring.target(a)

    def mul(self, x: Sequence, y: Sequence) -> Vector:
        return self.H.multiply(x, y)

    @cached_property
    def left_mult(self) -> tuple:
        return tuple(self.H.lmul(self.e(i)) for i in range(self.dim))

    @cached_property
    def right_mult(self) -> tuple:
        return tuple(self.H.rmul(self.e(i)) for i in range(self.dim))

    @cached_property
    def s_left(self) -> tuple:
        return tuple(self.H.lmul(v) for v in self.ring.s_basis)

    @cached_property
    def s_right(self) -> tuple:
        return tuple(self.H.rmul(v) for v in self.ring.s_basis)

    @cached_property
    def t_left(self) -> tuple:
        return tuple(self.H.lmul(v) for v in self.ring.t_basis)

    @cached_property
    def t_right(self) -> tuple:
        return tuple(self.H.rmul(v) for v in self.ring.t_basis)

    # --- tensor products -------------------------------------------------

    @cached_property
    def tensor_A(self) -> BalancedTensor:
        """H (x)_A H: ``t(a) x (x) y ~ x (x) s(a) y``."""
        return balanced_tensor(
            ModuleSpec(self.dim, self.t_left), ModuleSpec(self.dim, self.s_left), "A", field=self.field,
            cross_ops=tuple(zip(self.t_right, self.s_right)),
        )

    @cached_property
    def tensor_Aop(self) -> BalancedTensor:
        """H (x)_{A^op} H: ``x t(a) (x) y ~ x (x) t(a) y``."""
        return balanced_tensor(
            ModuleSpec(self.dim, self.t_right), ModuleSpec(self.dim, self.t_left), "Aop", field=self.field,
            cross_ops=tuple(zip(self.t_left, self.t_right)),
        )

    def tensor_over_subring(self, B: Subspace) -> BalancedTensor:
        """H (x)_B H: ``x b (x) y ~ x (x) b y``."""
        self._check_ambient(B)
        rm = tuple(self.H.rmul(b) for b in B.basis)
        lm = tuple(self.H.lmul(b) for b in B.basis)
        return balanced_tensor(ModuleSpec(self.dim, rm), ModuleSpec(self.dim, lm), "B", field=self.field,
                               subring=B)

    def quotient_tensor_A(self, I: Subspace) -> BalancedTensor:
        """(H/I) (x)_A H, realised on the ambient H (x) H."""
        self._check_ambient(I)
        extra = [kron(self.field, v, self.e(j)) for v in I.basis for j in range(self.dim)]
        return balanced_tensor(ModuleSpec(self.dim, self.t_left), ModuleSpec(self.dim, self.s_left), "A/I",
                               field=self.field, subring=I, extra_killed=extra)

    @cached_property
    def takeuchi_A(self) -> Subspace:
        return takeuchi_subspace(self.tensor_A)

    @cached_property
    def triple_relations(self) -> list:
        """Spanning set for the relations of H (x)_A H (x)_A H inside H^{(x)3}."""
        F, m = self.field, self.dim
        rel = self.tensor_A.killed.basis
        out = [kron(F, r, self.e(k)) for r in rel for k in range(m)]
        out += [kron(F, self.e(k), r) for r in rel for k in range(m)]
        return out

    @cached_property
    def tensor_AA(self) -> QuotientSpace:
        return QuotientSpace.of(self.field, self.dim ** 3, self.triple_relations)

    # --- maps on tensors -------------------------------------------------

    @cached_property
    def comult_left(self) -> LinMap:
        """Delta (x) H on the ambient H (x) H."""
        return kron_maps(self.comult, LinMap.identity(self.field, self.dim))

    @cached_property
    def comult_right(self) -> LinMap:
        """H (x) Delta on the ambient H (x) H."""
        return kron_maps(LinMap.identity(self.field, self.dim), self.comult)

    @cached_property
    def counit_left_map(self) -> LinMap:
        """eps (x)_A H: x (x) y -> s(eps(x)) y."""
        cols = []
        for i in range(self.dim):
            se = self.s(self.counit.columns[i])
            for j in range(self.dim):
                cols.append(self.mul(se, self.e(j)))
        return LinMap.from_columns(self.field, cols, self.dim)

    @cached_property
    def counit_right_map(self) -> LinMap:
        """H (x)_A eps: x (x) y -> t(eps(y)) x."""
        cols = []
        for i in range(self.dim):
            for j in range(self.dim):
                cols.append(self.mul(self.t(self.counit.columns[j]), self.e(i)))
        return LinMap.from_columns(self.field, cols, self.dim)

    def tensor_product(self, u: Sequence, v: Sequence, opposite: bool = False) -> Vector:
        """Factorwise product of ambient tensors; ``opposite`` reverses the second factor."""
        m = self.dim
        acc = [0] * (m * m)
        H = self.H
        unz = [(i, j, c) for i in range(m) for j in range(m) if (c := u[i * m + j])]
        vnz = [(k, l, c) for k in range(m) for l in range(m) if (c := v[k * m + l])]
        for i, j, a in unz:
            for k, l, b in vnz:
                left = H.mult[i][k]
                right = H.mult[l][j] if opposite else H.mult[j][l]
                ab = a * b
                for p, x in enumerate(left):
                    if x:
                        for q, y in enumerate(right):
                            if y:
                                acc[p * m + q] += ab * x * y
        return canon_vector(self.field, acc)

    def _check_ambient(self, S: Subspace):
        if S.ambient_dim != self.dim or S.field != self.field:
            raise DimensionMismatch(f"subspace of {S.field}^{S.ambient_dim} used in a {self.field}^{self.dim} algebroid")

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"LeftBialgebroid{label}(dim H = {self.dim}, dim A = {self.base_dim}, {self.field})"


def hopf_algebra(F: Field, mult, comult, counit, unit=None, name: str = "") -> LeftBialgebroid:
    """A bialgebra over the ground field, viewed as a bialgebroid with A = F.

    ``comult[i]`` is the coordinate vector of Delta(e_i) in H (x) H and
    ``counit[i]`` the scalar eps(e_i).
    """
    H = BasedAlgebra.from_structure(F, mult, unit)
    A = trivial_algebra(F)
    s = LinMap.from_columns(F, [H.unit], H.dim)
    ring = AeRing(A, H, s, s)
    delta = LinMap.from_columns(F, [canon_vector(F, (F(x) for x in c)) for c in comult], H.dim ** 2)
    eps = LinMap.from_rows(F, [[F(x) for x in counit]], H.dim)
    return LeftBialgebroid(ring, delta, eps, name)


def bialgebroid(F: Field, base_mult, mult, source, target, comult, counit, *, base_unit=None, unit=None,
                name: str = "") -> LeftBialgebroid:
    """Assemble a bialgebroid from raw structure constants.

    ``source``/``target`` are ``m x n`` matrices, ``comult`` is ``m^2 x m`` and
    ``counit`` is ``n x m`` (rows indexed by the codomain).
    """
    A = BasedAlgebra.from_structure(F, base_mult, base_unit)
    H = BasedAlgebra.from_structure(F, mult, unit)
    ring = AeRing(A, H, LinMap.from_rows(F, source, A.dim), LinMap.from_rows(F, target, A.dim))
    return LeftBialgebroid(ring, LinMap.from_rows(F, comult, H.dim), LinMap.from_rows(F, counit, H.dim), name)


# --------------------------------------------------------------------------
# validation


def validate_bialgebroid(b: LeftBialgebroid) -> ValidationReport:
    """Check every bialgebroid axiom on basis elements; failures carry a basis witness."""
    rep = ValidationReport()
    F, m, n = b.field, b.dim, b.base_dim
    A, H = b.A, b.H
    rep.add("base_associative", A.associativity_witness())
    rep.add("base_unital", A.unitality_witness())
    rep.add("total_associative", H.associativity_witness())
    rep.add("total_unital", H.unitality_witness())

    fa = [A.basis_vector(i) for i in range(n)]

    def algebra_map_witness(f, reverse):
        if f(A.unit) != H.unit:
            return ("unit",)
        for i in range(n):
            for j in range(n):
                lhs = f(A.multiply(fa[i], fa[j]))
                rhs = H.multiply(f(fa[j]), f(fa[i])) if reverse else H.multiply(f(fa[i]), f(fa[j]))
                if lhs != rhs:
                    return (i, j)
        return None

    rep.add("source_algebra_map", algebra_map_witness(b.s, False))
    rep.add("target_algebra_map", algebra_map_witness(b.t, True))
    w = None
    for i in range(n):
        for j in range(n):
            si, tj = b.ring.s_basis[i], b.ring.t_basis[j]
            if H.multiply(si, tj) != H.multiply(tj, si):
                w = w or (i, j)
    rep.add("source_target_commute", w)

    T = b.tensor_A
    deltas = [b.comult.columns[i] for i in range(m)]
    tak = b.takeuchi_A
    w = next(((i,) for i in range(m) if T.project(deltas[i]) not in tak), None)
    rep.add("comult_in_takeuchi", w)

    w = None
    if T.project(b.delta(H.unit)) != T.tensor(H.unit, H.unit):
        w = ("unit",)
    else:
        for i in range(m):
            for j in range(m):
                lhs = T.project(b.delta(H.mult[i][j]))
                rhs = T.project(b.tensor_product(deltas[i], deltas[j]))
                if lhs != rhs:
                    w = (i, j)
                    break
            if w:
                break
    rep.add("comult_multiplicative", w)

    w = None
    for a in range(n):
        sa, ta = b.ring.s_basis[a], b.ring.t_basis[a]
        sa_l = kron_maps(b.s_left[a], LinMap.identity(F, m))
        ta_r = kron_maps(LinMap.identity(F, m), b.t_left[a])
        for i in range(m):
            x = b.e(i)
            if T.project(b.delta(H.multiply(sa, x))) != T.project(sa_l(deltas[i])):
                w = ("s", a, i)
            elif T.project(b.delta(H.multiply(ta, x))) != T.project(ta_r(deltas[i])):
                w = ("t", a, i)
            if w:
                break
        if w:
            break
    rep.add("comult_bilinear", w)

    Q3 = b.tensor_AA
    w = None
    for i in range(m):
        diff = vsub(F, b.comult_left(deltas[i]), b.comult_right(deltas[i]))
        if not is_zero(Q3.project(diff)):
            w = (i,)
            break
    rep.add("coassociativity", w)

    w = None
    for i in range(m):
        x = b.e(i)
        if b.counit_left_map(deltas[i]) != x:
            w = ("left", i)
            break
        if b.counit_right_map(deltas[i]) != x:
            w = ("right", i)
            break
    rep.add("counitality", w)

    w = None
    for a in range(n):
        for i in range(m):
            ex = b.eps(b.e(i))
            if b.eps(H.multiply(b.ring.s_basis[a], b.e(i))) != A.multiply(fa[a], ex):
                w = ("s", a, i)
            elif b.eps(H.multiply(b.ring.t_basis[a], b.e(i))) != A.multiply(ex, fa[a]):
                w = ("t", a, i)
            if w:
                break
        if w:
            break
    rep.add("counit_bilinear", w)

    w = None
    for i in range(m):
        x = b.e(i)
        for j in range(m):
            y = b.e(j)
            ey = b.eps(y)
            mid = b.eps(H.mult[i][j])
            if b.eps(H.multiply(x, b.s(ey))) != mid:
                w = ("s", i, j)
            elif b.eps(H.multiply(x, b.t(ey))) != mid:
                w = ("t", i, j)
            if w:
                break
        if w:
            break
    rep.add("counit_multiplicative", w)
    rep.add("counit_unital", None if b.eps(H.unit) == A.unit else ("unit",))

    for c in rep.checks:
        c.detail = AXIOM_DESCRIPTIONS.get(c.name, "")
    rep.notes.append("H (x)_A H balances left multiplication by t(a) on the first factor against left "
                     "multiplication by s(a) on the second")
    rep.notes.append("the Takeuchi condition compares right multiplication by t(a) on the first factor with "
                     "right multiplication by s(a) on the second")
    rep.notes.append("A-bimodule structure on H: left action by s(a), right action by left multiplication by t(a)")
    return rep


# --------------------------------------------------------------------------
# augmentation, coideals and comodule subrings


def hplus(b: LeftBialgebroid) -> Subspace:
    return b.counit.kernel()


def bplus(b: LeftBialgebroid, B: Subspace) -> Subspace:
    """B intersected with the kernel of the counit."""
    b._check_ambient(B)
    return B & hplus(b)


def _stable_under(S: Subspace, maps) -> bool:
    return all(f(v) in S for f in maps for v in S.basis)


def _image_in_tensor(b: LeftBialgebroid, left: Subspace | None, right: Subspace | None) -> Subspace:
    """Image of ``left (x) H + H (x) right`` in H (x)_A H, in quotient coordinates."""
    T, F, m = b.tensor_A, b.field, b.dim
    gens = []
    if left is not None:
        gens += [T.tensor(v, b.e(j)) for v in left.basis for j in range(m)]
    if right is not None:
        gens += [T.tensor(b.e(j), v) for v in right.basis for j in range(m)]
    return Subspace.span(F, T.dim, gens)


def is_coideal(b: LeftBialgebroid, N: Subspace) -> bool:
    b._check_ambient(N)
    if not N.basis:
        return True
    if not _stable_under(N, b.s_left + b.t_left):
        return False
    if any(not is_zero(b.eps(v)) for v in N.basis):
        return False
    target = _image_in_tensor(b, N, N)
    T = b.tensor_A
    return all(T.project(b.delta(v)) in target for v in N.basis)


def is_left_ideal(b: LeftBialgebroid, I: Subspace) -> bool:
    b._check_ambient(I)
    return all(b.mul(b.e(k), v) in I for v in I.basis for k in range(b.dim))


def is_left_ideal_coideal(b: LeftBialgebroid, I: Subspace) -> bool:
    return is_left_ideal(b, I) and is_coideal(b, I)


def is_subring(b: LeftBialgebroid, B: Subspace) -> bool:
    """Contains 1 and t(A) and is closed under multiplication."""
    b._check_ambient(B)
    if b.one not in B:
        return False
    if any(v not in B for v in b.ring.t_basis):
        return False
    return all(b.mul(u, v) in B for u in B.basis for v in B.basis)


def is_comodule_subring(b: LeftBialgebroid, B: Subspace) -> bool:
    """A t-subring whose comultiplication corestricts to the image of B (x)_A H."""
    if not is_subring(b, B):
        return False
    target = _image_in_tensor(b, B, None)
    T = b.tensor_A
    return all(T.project(b.delta(v)) in target for v in B.basis)


def coaction(b: LeftBialgebroid, B: Subspace) -> LinMap | None:
    """A lift of the corestricted coaction: B -> B (x) H in B-coordinates (x) H, or None."""
    if not is_comodule_subring(b, B):
        return None
    T, F, m, k = b.tensor_A, b.field, b.dim, B.dim
    incl = LinMap.from_columns(F, [T.tensor(v, b.e(j)) for v in B.basis for j in range(m)], T.dim)
    cols = []
    for v in B.basis:
        x = solve(incl, T.project(b.delta(v)))
        cols.append(x)
    return LinMap.from_columns(F, cols, k * m)


def restrict_action(F: Field, f: LinMap, S: Subspace) -> LinMap:
    """Matrix of ``f`` on an f-stable subspace in the echelon basis of ``S``."""
    cols = []
    for v in S.basis:
        w = f(v)
        if w not in S:
            raise ValueError("subspace is not stable under the action")
        cols.append(S.coordinates(w))
    return LinMap.from_columns(F, cols, S.dim)


def span_left_ideal(b: LeftBialgebroid, S: Subspace) -> Subspace:
    """H S."""
    return b.H.span_products(Subspace.full(b.field, b.dim), S)


def lincomb_basis(b: LeftBialgebroid, coeffs) -> Vector:
    return lincomb(b.field, b.dim, ((c, b.e(i)) for i, c in enumerate(coeffs)))
