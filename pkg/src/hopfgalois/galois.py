"""The assignments B -> H B^+ and I -> coinvariants, and the checks around them."""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import combinations, product

from .algebroid import (
    LeftBialgebroid,
    ModuleSpec,
    balanced_tensor,
    bplus,
    is_comodule_subring,
    is_left_ideal_coideal,
    kron_maps,
    restrict_action,
    span_left_ideal,
)
from .errors import (
    CapExceeded,
    CorestFailure,
    IllDefined,
    InvalidIdealCoideal,
    InvalidSubring,
    InvariantViolation,
)
from .exactla import GF, LinMap, QuotientSpace, Subspace, kron, quotient_map_compose, unit_vector, vsub
from .hopf import HopfData, check_bbeta_condition, purity_check, translation_compatible


def phi(b: LeftBialgebroid, B: Subspace, check: bool = True) -> Subspace:
    """H B^+."""
    if check and not is_comodule_subring(b, B):
        raise InvalidSubring("not a right comodule subring containing t(A)")
    I = span_left_ideal(b, bplus(b, B))
    if check and not is_left_ideal_coideal(b, I):
        raise InvariantViolation("H B^+ is not a left ideal coideal")
    return I


def coinvariant_map(b: LeftBialgebroid, I: Subspace) -> LinMap:
    """x -> pi(x_1) (x) x_2 - pi(1) (x) x in (H/I) (x)_A H."""
    Q = b.quotient_tensor_A(I)
    cols = [vsub(b.field, Q.project(b.comult.columns[i]), Q.tensor(b.one, b.e(i))) for i in range(b.dim)]
    return LinMap.from_columns(b.field, cols, Q.dim)


def psi(b: LeftBialgebroid, I: Subspace, check: bool = True) -> Subspace:
    """Coinvariants of H/I."""
    if check and not is_left_ideal_coideal(b, I):
        raise InvalidIdealCoideal("not a left ideal coideal")
    B = coinvariant_map(b, I).kernel()
    if check and not is_comodule_subring(b, B):
        raise InvariantViolation("coinvariants do not form a right comodule subring")
    return B


def subring_equalizer(b: LeftBialgebroid, B: Subspace) -> Subspace:
    """Elements x with x (x)_B 1 = 1 (x)_B x."""
    TB = b.tensor_over_subring(B)
    cols = [vsub(b.field, TB.tensor(b.e(i), b.one), TB.tensor(b.one, b.e(i))) for i in range(b.dim)]
    return LinMap.from_columns(b.field, cols, TB.dim).kernel()


def check_equalizer_condition(b: LeftBialgebroid, h: HopfData | None, B: Subspace) -> bool:
    """B is exactly the equalizer of H -> H (x)_B H."""
    return subring_equalizer(b, B) == B


def _triple_quotient(b: LeftBialgebroid, I: Subspace) -> QuotientSpace:
    """H (x)_A (H/I) (x)_A H."""
    F, m = b.field, b.dim
    rels = list(b.triple_relations)
    rels += [kron(F, kron(F, b.e(i), v), b.e(k)) for v in I.basis for i in range(m) for k in range(m)]
    return QuotientSpace.of(F, m ** 3, rels)


def cotensor_square(b: LeftBialgebroid, I: Subspace) -> Subspace:
    """H cotensor_{H/I} H as a subspace of H (x)_A H (quotient coordinates)."""
    if not is_left_ideal_coideal(b, I):
        raise InvalidIdealCoideal("not a left ideal coideal")
    Q3 = _triple_quotient(b, I)
    diff = b.comult_left - b.comult_right
    T = b.tensor_A
    induced = quotient_map_compose(T.quotient, Q3.projection @ diff)
    return induced.kernel()


def _counit_difference(b: LeftBialgebroid) -> LinMap:
    return b.counit_left_map - b.counit_right_map


def check_coequalizer_condition(b: LeftBialgebroid, I: Subspace) -> bool:
    """The image of (eps (x) H - H (x) eps) on the cotensor square is exactly I."""
    C = cotensor_square(b, I)
    T = b.tensor_A
    d = quotient_map_compose(T.quotient, _counit_difference(b))
    return Subspace.span(b.field, b.dim, [d(v) for v in C.basis]) == I


def equalizer_persists(b: LeftBialgebroid, I: Subspace, B: Subspace | None = None) -> bool:
    """H (x)_{A^op} B is still the equalizer of the two maps into H (x)_{A^op} ((H/I) (x)_A H).

    B defaults to the coinvariants of H/I.  The check asks that
    H (x)_{A^op} B -> H (x)_{A^op} H is injective with image that equalizer.
    """
    F, m = b.field, b.dim
    B = psi(b, I, check=False) if B is None else B
    if not purity_check(b, B, "left"):
        return False
    T = b.tensor_Aop
    rels = []
    for L, R in zip(b.t_right, b.t_left):
        for i in range(m):
            for j in range(m):
                for k in range(m):
                    rels.append(vsub(F, kron(F, kron(F, L.columns[i], b.e(j)), b.e(k)),
                                     kron(F, kron(F, b.e(i), b.e(j)), R.columns[k])))
    for r in b.tensor_A.killed.basis:
        rels += [kron(F, b.e(i), r) for i in range(m)]
    rels += [kron(F, kron(F, b.e(i), v), b.e(k)) for v in I.basis for i in range(m) for k in range(m)]
    Q3 = QuotientSpace.of(F, m ** 3, rels)
    one = LinMap.from_columns(F, [b.one], m)
    ident = LinMap.identity(F, m)
    f1 = kron_maps(ident, b.comult)
    f2 = kron_maps(ident, kron_maps(one, ident))
    eq = quotient_map_compose(T.quotient, Q3.projection @ (f1 - f2)).kernel()
    img = Subspace.span(F, T.dim, [T.tensor(b.e(i), v) for i in range(m) for v in B.basis])
    return img == eq


def _tensor_over_aop_with(b: LeftBialgebroid, B: Subspace):
    """H (x)_{A^op} B, with B in echelon coordinates."""
    F, m = b.field, b.dim
    acts = tuple(restrict_action(F, f, B) for f in b.t_left)
    return balanced_tensor(ModuleSpec(m, b.t_right), ModuleSpec(B.dim, acts), "Aop", field=F)


def build_zeta(b: LeftBialgebroid, h: HopfData, B: Subspace, I: Subspace | None = None,
               assert_iso: bool = True) -> LinMap:
    """x (x) b -> x_1 (x) x_2 b from H (x)_{A^op} B into H cotensor_{H/I} H, I = H B^+ by default.

    Returned in the echelon coordinates of the cotensor square.
    """
    if not is_comodule_subring(b, B):
        raise InvalidSubring("not a right comodule subring containing t(A)")
    F, m = b.field, b.dim
    I = phi(b, B, check=False) if I is None else I
    C = cotensor_square(b, I)
    dom = _tensor_over_aop_with(b, B)
    T = b.tensor_A
    amb_cols = [T.project(h.beta_raw(kron(F, b.e(i), v))) for i in range(m) for v in B.basis]
    amb = LinMap.from_columns(F, amb_cols, T.dim)
    z = quotient_map_compose(dom.quotient, amb)
    cols = []
    for k, c in enumerate(z.columns):
        if c not in C:
            raise CorestFailure(f"zeta of domain basis vector {k} leaves the cotensor square")
        cols.append(C.coordinates(c))
    zeta = LinMap.from_columns(F, cols, C.dim)
    if assert_iso and psi(b, I, check=False) == B and equalizer_persists(b, I, B) and not zeta.is_invertible():
        raise InvariantViolation("zeta is not an isomorphism although the equalizer persists")
    return zeta


def build_xi(b: LeftBialgebroid, h: HopfData, B: Subspace, assert_iso: bool = True) -> LinMap:
    """x (x)_B y -> pi(x_1) (x) x_2 y from H (x)_B H to (H / H B^+) (x)_A H."""
    if not is_comodule_subring(b, B):
        raise InvalidSubring("not a right comodule subring containing t(A)")
    I = phi(b, B, check=False)
    TB = b.tensor_over_subring(B)
    Q = b.quotient_tensor_A(I)
    try:
        xi = quotient_map_compose(TB.quotient, Q.quotient.projection @ h.beta_raw)
    except IllDefined as exc:
        raise IllDefined("xi does not respect the balancing over B") from exc
    if assert_iso and check_bbeta_condition(h, B) and not xi.is_invertible():
        raise InvariantViolation(f"xi has rank {xi.rank} on spaces of dimension {xi.domain_dim} and {xi.codomain_dim}")
    return xi


def xi_composites(b: LeftBialgebroid, h: HopfData, B: Subspace) -> dict:
    """The two parallel composites through xi, each compared separately."""
    xi = build_xi(b, h, B, assert_iso=False)
    I = phi(b, B, check=False)
    TB = b.tensor_over_subring(B)
    Q = b.quotient_tensor_A(I)
    coaction_ok = all(xi(TB.tensor(b.e(i), b.one)) == Q.project(b.comult.columns[i]) for i in range(b.dim))
    unit_ok = all(xi(TB.tensor(b.one, b.e(i))) == Q.tensor(b.one, b.e(i)) for i in range(b.dim))
    return {"coaction_leg": coaction_ok, "unit_leg": unit_ok}


def zeta_composites(b: LeftBialgebroid, h: HopfData, B: Subspace) -> dict:
    """(eps (x) H) o zeta equals multiplication H (x) B -> H."""
    F, m = b.field, b.dim
    T = b.tensor_A
    d = quotient_map_compose(T.quotient, b.counit_left_map)
    ok = all(d(T.project(h.beta_raw(kron(F, b.e(i), v)))) == b.mul(b.e(i), v) for i in range(m) for v in B.basis)
    return {"multiplication_leg": ok}


# --------------------------------------------------------------------------
# reports


def _sub_json(S: Subspace) -> list:
    return [[S.field.to_json(x) for x in v] for v in S.basis]


@dataclass
class ObjectRecord:
    kind: str
    subspace: Subspace
    flags: dict = dc_field(default_factory=dict)
    image: Subspace | None = None

    def to_json(self) -> dict:
        d = {"kind": self.kind, "dim": self.subspace.dim, "basis": _sub_json(self.subspace),
             "flags": dict(sorted(self.flags.items()))}
        if self.image is not None:
            d["image"] = {"dim": self.image.dim, "basis": _sub_json(self.image)}
        return d


@dataclass
class GaloisReport:
    ideals: list = dc_field(default_factory=list)
    subrings: list = dc_field(default_factory=list)
    laws: dict = dc_field(default_factory=dict)
    violations: list = dc_field(default_factory=list)
    counts: dict = dc_field(default_factory=dict)
    notes: list = dc_field(default_factory=list)
    bijection: bool | None = None

    @property
    def ok(self) -> bool:
        return not self.violations and self.bijection is not False

    def violation(self, law: str, *witness):
        self.violations.append({"law": law, "witness": [_sub_json(w) if isinstance(w, Subspace) else w
                                                        for w in witness]})

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "bijection": self.bijection,
            "laws": dict(sorted(self.laws.items())),
            "counts": dict(sorted(self.counts.items())),
            "ideals": [r.to_json() for r in self.ideals],
            "subrings": [r.to_json() for r in self.subrings],
            "violations": self.violations,
            "notes": self.notes,
        }


def _sorted(spaces) -> list:
    return sorted(spaces, key=lambda S: S.key)


def check_connection(b: LeftBialgebroid, h: HopfData | None, ideals, subrings) -> GaloisReport:
    """Unit/counit inclusions, idempotency and monotonicity on the given objects."""
    rep = GaloisReport()
    good_I, good_B = [], []
    for I in _sorted(ideals):
        valid = is_left_ideal_coideal(b, I)
        rec = ObjectRecord("ideal", I, {"left_ideal_coideal": valid})
        rep.ideals.append(rec)
        if not valid:
            rep.violation("input is not a left ideal coideal", I)
            continue
        B = psi(b, I)
        PB = phi(b, B)
        rec.image = B
        rec.flags["counit_inclusion"] = PB <= I
        rec.flags["idempotent"] = psi(b, PB) == B
        if not rec.flags["counit_inclusion"]:
            rep.violation("H Psi(I)^+ is contained in I", I, PB)
        if not rec.flags["idempotent"]:
            rep.violation("Psi Phi Psi = Psi", I)
        good_I.append((I, B))
    for B in _sorted(subrings):
        valid = is_comodule_subring(b, B)
        rec = ObjectRecord("subring", B, {"comodule_subring": valid})
        rep.subrings.append(rec)
        if not valid:
            rep.violation("input is not a right comodule subring", B)
            continue
        I = phi(b, B)
        PI = psi(b, I)
        rec.image = I
        rec.flags["unit_inclusion"] = B <= PI
        rec.flags["idempotent"] = phi(b, PI) == I
        if not rec.flags["unit_inclusion"]:
            rep.violation("B is contained in Psi(H B^+)", B, PI)
        if not rec.flags["idempotent"]:
            rep.violation("Phi Psi Phi = Phi", B)
        good_B.append((B, I))
    pairs = 0
    for items, name in ((good_I, "Psi monotone"), (good_B, "Phi monotone")):
        for (U, fU), (V, fV) in combinations(items, 2):
            for (X, fX), (Y, fY) in (((U, fU), (V, fV)), ((V, fV), (U, fU))):
                if X <= Y:
                    pairs += 1
                    if not fX <= fY:
                        rep.violation(name, X, Y)
    rep.counts.update({"ideals": len(good_I), "subrings": len(good_B), "nested_pairs": pairs})
    rep.laws.update({
        "counit_inclusion": all(r.flags.get("counit_inclusion", True) for r in rep.ideals),
        "unit_inclusion": all(r.flags.get("unit_inclusion", True) for r in rep.subrings),
        "psi_phi_psi": all(r.flags.get("idempotent", True) for r in rep.ideals),
        "phi_psi_phi": all(r.flags.get("idempotent", True) for r in rep.subrings),
        "monotone": not any(v["law"].endswith("monotone") for v in rep.violations),
    })
    return rep


def ideal_flags(b: LeftBialgebroid, h: HopfData, I: Subspace) -> dict:
    B = psi(b, I, check=False)
    return {
        "coequalizer": check_coequalizer_condition(b, I),
        "coinvariants_left_pure": purity_check(b, B, "left"),
        "coinvariants_right_pure": purity_check(b, B, "right"),
    }


def subring_flags(b: LeftBialgebroid, h: HopfData, B: Subspace) -> dict:
    return {
        "equalizer": check_equalizer_condition(b, h, B),
        "left_pure": purity_check(b, B, "left"),
        "right_pure": purity_check(b, B, "right"),
        "bbeta": check_bbeta_condition(h, B),
    }


def _passes(flags: dict, keys) -> bool:
    return all(flags[k] for k in keys)


IDEAL_FILTER = ("coequalizer", "coinvariants_left_pure", "coinvariants_right_pure")
SUBRING_FILTER = ("equalizer", "left_pure", "right_pure", "bbeta")


def verify_bijection(b: LeftBialgebroid, h: HopfData, ideals, subrings, comparison_maps: bool = True) -> GaloisReport:
    """Filter both sides by the hypotheses and check that Phi and Psi are mutually inverse there."""
    rep = GaloisReport()
    rep.notes.append("flatness of H over A is not tested; the injectivity facts used are checked directly")
    kept_I, kept_B = [], []
    for I in _sorted(ideals):
        rec = ObjectRecord("ideal", I, {"left_ideal_coideal": is_left_ideal_coideal(b, I)})
        rep.ideals.append(rec)
        if not rec.flags["left_ideal_coideal"]:
            continue
        rec.flags.update(ideal_flags(b, h, I))
        rec.flags["kept"] = _passes(rec.flags, IDEAL_FILTER)
        if rec.flags["kept"]:
            kept_I.append(rec)
    zeta_checked = xi_checked = 0
    for B in _sorted(subrings):
        rec = ObjectRecord("subring", B, {"comodule_subring": is_comodule_subring(b, B)})
        rep.subrings.append(rec)
        if not rec.flags["comodule_subring"]:
            continue
        rec.flags.update(subring_flags(b, h, B))
        rec.flags["translation_compatible"] = translation_compatible(h, B)
        if rec.flags["translation_compatible"] and not rec.flags["bbeta"]:
            rep.violation("a restriction of the translation map forces the vanishing condition", B)
        if comparison_maps:
            try:
                build_zeta(b, h, B)
                rec.flags["zeta_corestricts"] = True
                zeta_checked += 1
            except (CorestFailure, InvariantViolation) as exc:
                rec.flags["zeta_corestricts"] = isinstance(exc, InvariantViolation)
                rep.violation(f"zeta: {exc}", B)
            if rec.flags["bbeta"]:
                try:
                    xi = build_xi(b, h, B)
                    rec.flags["xi_iso"] = xi.is_invertible()
                    xi_checked += 1
                except (IllDefined, InvariantViolation) as exc:
                    rec.flags["xi_iso"] = False
                    rep.violation(f"xi: {exc}", B)
        rec.flags["kept"] = _passes(rec.flags, SUBRING_FILTER)
        if rec.flags["kept"]:
            kept_B.append(rec)
    kept_B_spaces = {r.subspace.key for r in kept_B}
    kept_I_spaces = {r.subspace.key for r in kept_I}
    for rec in kept_I:
        I = rec.subspace
        B = psi(b, I)
        rec.image = B
        back = phi(b, B)
        if back != I:
            rep.violation("Phi Psi (I) = I", I, back)
        if not _passes(subring_flags(b, h, B), SUBRING_FILTER):
            rep.violation("Psi(I) satisfies the subring hypotheses", I, B)
        elif B.key not in kept_B_spaces and subrings:
            rep.notes.append(f"image of a kept ideal of dim {I.dim} is not among the supplied subrings")
    for rec in kept_B:
        B = rec.subspace
        I = phi(b, B)
        rec.image = I
        back = psi(b, I)
        if back != B:
            rep.violation("Psi Phi (B) = B", B, back)
        if not _passes(ideal_flags(b, h, I), IDEAL_FILTER):
            rep.violation("Phi(B) satisfies the ideal hypotheses", B, I)
        elif I.key not in kept_I_spaces and ideals:
            rep.notes.append(f"image of a kept subring of dim {B.dim} is not among the supplied ideals")
    rep.counts.update({
        "ideals": sum(1 for r in rep.ideals if r.flags.get("left_ideal_coideal")),
        "subrings": sum(1 for r in rep.subrings if r.flags.get("comodule_subring")),
        "kept_ideals": len(kept_I),
        "kept_subrings": len(kept_B),
        "zeta_checked": zeta_checked,
        "xi_checked": xi_checked,
    })
    rep.bijection = not rep.violations
    rep.laws["bijection"] = rep.bijection
    return rep


# --------------------------------------------------------------------------
# enumeration over GF(p)


def enumerate_subspaces(dim: int, p: int, cap: int = 10 ** 7):
    """Every subspace of GF(p)^dim once, as echelon bases grouped by pivot set."""
    if p ** dim > cap:
        raise CapExceeded(f"{p}^{dim} exceeds the enumeration cap {cap}")
    F = GF(p)
    for k in range(dim + 1):
        for pivots in combinations(range(dim), k):
            pset = set(pivots)
            slots = [(r, c) for r, pc in enumerate(pivots) for c in range(pc + 1, dim) if c not in pset]
            for values in product(range(p), repeat=len(slots)):
                rows = [[0] * dim for _ in range(k)]
                for r, pc in enumerate(pivots):
                    rows[r][pc] = 1
                for (r, c), v in zip(slots, values):
                    rows[r][c] = v
                yield Subspace(F, dim, tuple(tuple(r) for r in rows))


def gaussian_binomial_total(dim: int, p: int) -> int:
    total = 0
    for k in range(dim + 1):
        num = den = 1
        for i in range(k):
            num *= p ** (dim - i) - 1
            den *= p ** (i + 1) - 1
        total += num // den
    return total


def enumerate_lattices(b: LeftBialgebroid, cap: int = 10 ** 7) -> tuple[list, list]:
    """All left ideal coideals and all right comodule subrings of a bialgebroid over GF(p)."""
    p = b.field.p
    if p is None:
        raise ValueError("enumeration needs a finite field")
    ideals, subrings = [], []
    for S in enumerate_subspaces(b.dim, p, cap):
        if is_left_ideal_coideal(b, S):
            ideals.append(S)
        if is_comodule_subring(b, S):
            subrings.append(S)
    return ideals, subrings
