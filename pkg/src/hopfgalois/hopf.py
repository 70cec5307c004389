"""Canonical map, translation map and purity checks for left Hopf algebroids."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .algebroid import (
    BalancedTensor,
    LeftBialgebroid,
    ModuleSpec,
    balanced_tensor,
    bplus,
    restrict_action,
    span_left_ideal,
    takeuchi_subspace,
)
from .errors import IllDefined, InvariantViolation, NotLeftHopf
from .exactla import LinMap, Subspace, Vector, kron, quotient_map_compose, unit_vector


def beta_ambient(b: LeftBialgebroid) -> LinMap:
    """x (x) y -> x_1 (x) x_2 y on the ambient H (x) H, before any balancing."""
    m, F = b.dim, b.field
    cols = []
    for i in range(m):
        d = b.comult.columns[i]
        for j in range(m):
            right = b.right_mult[j]
            acc = [0] * (m * m)
            for p in range(m):
                for q in range(m):
                    c = d[p * m + q]
                    if not c:
                        continue
                    for r, w in enumerate(right.columns[q]):
                        if w:
                            acc[p * m + r] += c * w
            cols.append(acc)
    return LinMap.from_columns(F, cols, m * m)


def beta_map(b: LeftBialgebroid) -> LinMap:
    """The canonical map H (x)_{A^op} H -> H (x)_A H in quotient coordinates."""
    return quotient_map_compose(b.tensor_Aop.quotient, b.tensor_A.quotient.projection @ beta_ambient(b))


def invert_beta(b: LeftBialgebroid, beta: LinMap | None = None) -> LinMap:
    beta = beta_map(b) if beta is None else beta
    if beta.domain_dim != beta.codomain_dim or not beta.is_invertible():
        raise NotLeftHopf(f"canonical map has rank {beta.rank} between spaces of dimension "
                          f"{beta.domain_dim} and {beta.codomain_dim}")
    return beta.inverse()


@dataclass(frozen=True, eq=False)
class HopfData:
    bialgebroid: LeftBialgebroid
    beta: LinMap
    beta_inverse: LinMap

    @property
    def tensor_A(self) -> BalancedTensor:
        return self.bialgebroid.tensor_A

    @property
    def tensor_Aop(self) -> BalancedTensor:
        return self.bialgebroid.tensor_Aop

    @cached_property
    def distinguished(self) -> Subspace:
        """The subspace of H (x)_{A^op} H where t(a) x (x) y = x (x) y t(a)."""
        return takeuchi_subspace(self.tensor_Aop)

    @cached_property
    def beta_raw(self) -> LinMap:
        return beta_ambient(self.bialgebroid)

    def gamma(self, x) -> Vector:
        return translation_map(self, x)


def hopf_data(b: LeftBialgebroid) -> HopfData:
    beta = beta_map(b)
    inv = invert_beta(b, beta)
    if not (beta @ inv == LinMap.identity(b.field, beta.domain_dim)
            and inv @ beta == LinMap.identity(b.field, beta.domain_dim)):
        raise InvariantViolation("canonical map inverse is not two-sided")
    return HopfData(b, beta, inv)


def translation_map(h: HopfData, x) -> Vector:
    """gamma(x) = beta^{-1}(x (x) 1), in coordinates of H (x)_{A^op} H."""
    b = h.bialgebroid
    return h.beta_inverse(h.tensor_A.tensor(x, b.one))


def translation_product(h: HopfData, u, v) -> Vector:
    """(x (x) y)(x' (x) y') = x x' (x) y' y on classes of the distinguished subspace."""
    b, T = h.bialgebroid, h.tensor_Aop
    return T.project(b.tensor_product(T.lift(u), T.lift(v), opposite=True))


def check_translation_map(h: HopfData) -> dict:
    """Membership, unitality and multiplicativity of gamma on basis elements."""
    b = h.bialgebroid
    T = h.tensor_Aop
    m = b.dim
    gammas = [translation_map(h, b.e(i)) for i in range(m)]
    member = next(((i,) for i, g in enumerate(gammas) if g not in h.distinguished), None)
    unital = translation_map(h, b.one) == T.tensor(b.one, b.one)
    mult_w = None
    for i in range(m):
        for j in range(m):
            if translation_map(h, b.H.mult[i][j]) != translation_product(h, gammas[i], gammas[j]):
                mult_w = (i, j)
                break
        if mult_w:
            break
    inverse_w = next(((i,) for i, g in enumerate(gammas) if h.beta(g) != h.tensor_A.tensor(b.e(i), b.one)), None)
    return {
        "in_distinguished_subspace": member is None,
        "unital": unital,
        "multiplicative": mult_w is None,
        "right_inverse": inverse_w is None,
        "witness": member or mult_w or inverse_w,
    }


def project_to_subring_tensor(h: HopfData, B: Subspace) -> tuple[BalancedTensor, LinMap]:
    """H (x)_B H and the projection p: H (x)_{A^op} H -> H (x)_B H."""
    b = h.bialgebroid
    TB = b.tensor_over_subring(B)
    try:
        p = quotient_map_compose(h.tensor_Aop.quotient, TB.quotient.projection)
    except IllDefined as exc:
        raise IllDefined("t(A) is not contained in B, so H (x)_{A^op} H does not map onto H (x)_B H") from exc
    return TB, p


def check_bbeta_condition(h: HopfData, B: Subspace) -> bool:
    """(p o beta^{-1}) vanishes on the image of H B^+ (x)_A H."""
    b = h.bialgebroid
    I = span_left_ideal(b, bplus(b, B))
    if not I.basis:
        return True
    _, p = project_to_subring_tensor(h, B)
    comp = p @ h.beta_inverse
    T = h.tensor_A
    for v in I.basis:
        for j in range(b.dim):
            if any(comp(T.tensor(v, b.e(j)))):
                return False
    return True


def translation_compatible(h: HopfData, B: Subspace) -> bool:
    """gamma(B) lies in the image of B (x)_{A^op} H, i.e. gamma restricts to some gamma'."""
    b = h.bialgebroid
    T = h.tensor_Aop
    img = Subspace.span(b.field, T.dim, [T.tensor(v, b.e(j)) for v in B.basis for j in range(b.dim)])
    return all(translation_map(h, v) in img for v in B.basis)


def _h_action(b: LeftBialgebroid, slot: str, tensorand: str) -> tuple:
    """A^op-action on the free H factor.

    In the right slot the natural choice is left multiplication by t(a); in
    the left slot it is right multiplication by t(a).  The other tensorand
    uses the s-multiplication from the opposite side.
    """
    if slot == "right":
        return b.t_left if tensorand == "left" else b.s_right
    return b.t_right if tensorand == "right" else b.s_left


def purity_check(b: LeftBialgebroid, inclusion: Subspace, side: str = "left", tensorand: str | None = None) -> bool:
    """Injectivity of the inclusion tensored with H over A^op.

    ``side="left"`` tensors H on the left: H (x) S -> H (x) H.
    ``side="right"`` tensors H on the right: S (x) H -> H (x) H.
    ``tensorand`` chooses the A^op-action on the H factor; by default the one
    induced by t ("right" on the left side, "left" on the right side).
    """
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    if tensorand is None:
        tensorand = "right" if side == "left" else "left"
    if tensorand not in ("left", "right"):
        raise ValueError("tensorand must be 'left' or 'right'")
    b._check_ambient(inclusion)
    F, m, S = b.field, b.dim, inclusion
    if S.dim == 0:
        return True
    if side == "left":
        h_act = _h_action(b, "left", tensorand)
        s_full = b.t_left
        s_restr = tuple(restrict_action(F, f, S) for f in s_full)
        dom = balanced_tensor(ModuleSpec(m, h_act), ModuleSpec(S.dim, s_restr), "Aop", field=F)
        cod = balanced_tensor(ModuleSpec(m, h_act), ModuleSpec(m, s_full), "Aop", field=F)
        cols = [cod.project(kron(F, unit_vector(m, i), v)) for i in range(m) for v in S.basis]
    else:
        h_act = _h_action(b, "right", tensorand)
        s_full = b.t_right
        s_restr = tuple(restrict_action(F, f, S) for f in s_full)
        dom = balanced_tensor(ModuleSpec(S.dim, s_restr), ModuleSpec(m, h_act), "Aop", field=F)
        cod = balanced_tensor(ModuleSpec(m, s_full), ModuleSpec(m, h_act), "Aop", field=F)
        cols = [cod.project(kron(F, v, unit_vector(m, j))) for v in S.basis for j in range(m)]
    amb = LinMap.from_columns(F, cols, cod.dim)
    induced = quotient_map_compose(dom.quotient, amb)
    return induced.is_injective()


def purity_flags(b: LeftBialgebroid, S: Subspace) -> dict:
    """All four (side, tensorand) combinations."""
    return {f"{side}/{tens}": purity_check(b, S, side, tens)
            for side in ("left", "right") for tens in ("left", "right")}
