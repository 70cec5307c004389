"""Two commutative Hopf algebra examples checked with the rewriting engine.

``sl2_case_study``: the coordinate ring of SL_2 over the polynomial subalgebra
generated by a and b; the equalizer of H -> H (x)_B H is computed in the
presented pushout algebra K up to a degree bound.

``laurent_case_study``: k[X] inside the Laurent polynomials, where the
equalizer is strictly larger than the subalgebra.
"""
from __future__ import annotations

from .exactla import QQ, Field, LinMap, Subspace, unit_vector
from .rewrite import (
    PresentedAlgebra,
    ReductionSystem,
    check_confluence,
    poly_add,
    poly_mul,
    poly_sub,
)

K_VARIABLES = ("s", "t", "u", "v", "w", "z")
K_RULES = ("sv -> tu + 1", "sz -> tw + 1", "tuz -> tvw + v - z")
K_DEFINING = ("sv - tu - 1", "sz - tw - 1")
H_VARIABLES = ("a", "b", "c", "d")
H_RULES = ("ad -> bc + 1",)


def sl2_systems(F: Field = QQ) -> tuple[PresentedAlgebra, PresentedAlgebra]:
    H = PresentedAlgebra(ReductionSystem.from_strings(H_VARIABLES, H_RULES, F))
    K = PresentedAlgebra(ReductionSystem.from_strings(K_VARIABLES, K_RULES, F))
    return H, K


def third_rule_certificate(F: Field = QQ) -> dict:
    """tuz - tvw - v + z as a combination of the two defining relations of K."""
    S = ReductionSystem(K_VARIABLES, (), F)
    return {
        "target": "tuz - tvw - v + z",
        "combination": [
            {"multiplier": "-z", "relation": K_DEFINING[0]},
            {"multiplier": "v", "relation": K_DEFINING[1]},
        ],
        "variables": list(S.variables),
    }


def replay_combination(cert: dict, F: Field = QQ) -> bool:
    """Expand sum multiplier * relation without any reduction and compare with the target."""
    S = ReductionSystem(cert["variables"], (), F)
    acc: dict = {}
    for term in cert["combination"]:
        acc = poly_add(F, acc, poly_mul(F, S.parse(term["multiplier"]), S.parse(term["relation"])))
    return acc == S.parse(cert["target"])


def sl2_h_basis(d: int) -> list:
    """Monomials a^i b^j c^k and b^m c^n d^l (l >= 1) of total degree at most d."""
    out = []
    for n in range(d + 1):
        for i in range(n + 1):
            for j in range(n - i + 1):
                out.append((i, j, n - i - j, 0))
        for m in range(n + 1):
            for k in range(n - m + 1):
                l = n - m - k
                if l >= 1:
                    out.append((0, m, k, l))
    return sorted(out, key=lambda e: (sum(e), e))


def sl2_k_family(d: int) -> list:
    """The irreducible words s^i t^j u^k, t^m u^n v^l, s^i t^j w^k, t^m w^n z^l up to degree d.

    Here k >= 0 in the first family and k >= 1 in the third, so that the
    monomials s^i t^j are listed once; l >= 1 throughout.
    """
    out = []
    for n in range(d + 1):
        for i in range(n + 1):
            for j in range(n - i + 1):
                k = n - i - j
                out.append((i, j, k, 0, 0, 0))
                if k >= 1:
                    out.append((i, j, 0, 0, k, 0))
        for m in range(n + 1):
            for k in range(n - m + 1):
                l = n - m - k
                if l >= 1:
                    out.append((0, m, k, l, 0, 0))
                    out.append((0, m, 0, 0, k, l))
    return out


def _vectorize(F: Field, polys: list) -> tuple[list, LinMap]:
    monos = sorted({m for p in polys for m in p}, reverse=True)
    index = {m: i for i, m in enumerate(monos)}
    cols = []
    for p in polys:
        v = [0] * len(monos)
        for m, c in p.items():
            v[index[m]] = c
        cols.append(v)
    return monos, LinMap.from_columns(F, cols, len(monos)) if monos else LinMap.zero(F, len(polys), 0)


def sl2_case_study(degree: int, F: Field = QQ) -> dict:
    if degree < 0:
        raise ValueError("degree must be non-negative")
    H, K = sl2_systems(F)
    SH, SK = H.system, K.system
    conf = check_confluence(SK, max(degree, 5))
    h_conf = check_confluence(SH, max(degree, 2))
    cert = third_rule_certificate(F)
    cert_ok = replay_combination(cert, F)

    family = sl2_k_family(degree)
    distinct = len(set(family)) == len(family)
    irreducible = all(SK.is_normal(m) for m in family)
    family_normal = all(SK.normal_form({m: 1}) == {m: 1} for m in family)

    basis = sl2_h_basis(degree)
    basis_normal = sorted(basis) == sorted(SH.normal_monomials_up_to(degree))

    def var(name):
        return {SK.monomial(**{name: 1}): 1}

    eta1 = [var("s"), var("t"), var("u"), var("v")]
    eta2 = [var("s"), var("t"), var("w"), var("z")]
    diffs = []
    for e in basis:
        p = {e: 1}
        diffs.append(poly_sub(F, H.substitute(p, eta1, K), H.substitute(p, eta2, K)))
    _, M = _vectorize(F, diffs)
    kernel = M.kernel() if diffs else Subspace.zero(F, 0)
    expected = Subspace.span(F, len(basis), [unit_vector(len(basis), i) for i, e in enumerate(basis)
                                             if e[2] == 0 and e[3] == 0])
    equalizer_ok = kernel == expected
    equalizer_basis = [SH.format({basis[i]: c for i, c in enumerate(v) if c}) for v in kernel.basis]

    # the equalizer is closed under multiplication by a and b inside the degree window
    closed = True
    index = {e: i for i, e in enumerate(basis)}
    for v in kernel.basis:
        elem = {basis[i]: c for i, c in enumerate(v) if c}
        for g in ("a", "b"):
            prod = H.multiply(elem, {SH.monomial(**{g: 1}): 1})
            if any(sum(m) > degree for m in prod):
                continue
            vec = [0] * len(basis)
            for m, c in prod.items():
                vec[index[m]] = c
            if vec not in kernel:
                closed = False

    verified = conf.confluent and h_conf.confluent and cert_ok and distinct and irreducible and family_normal \
        and basis_normal and equalizer_ok and closed
    return {
        "example": "sl2",
        "field": F.descriptor(),
        "degree": degree,
        "reductionSystem": SK.to_json(),
        "confluence": conf.to_json(),
        "hConfluence": h_conf.to_json(),
        "thirdRuleCertificate": {**cert, "replayed": cert_ok},
        "kFamily": {"size": len(family), "distinct": distinct, "irreducible": irreducible,
                    "normalForms": family_normal},
        "hBasis": {"size": len(basis), "matchesNormalMonomials": basis_normal},
        "equalizer": {"dim": kernel.dim, "basis": equalizer_basis,
                      "expectedDim": expected.dim, "equalsSpanOfAiBj": equalizer_ok},
        "equalizerClosedUnderAB": closed,
        "notes": [
            "flatness and non-faithful-flatness of H over B are not checked by the engine",
            "the base field is the rationals (or a prime field); no complex numbers are needed",
        ],
        "verified": verified,
    }


# --------------------------------------------------------------------------


def laurent_system(F: Field = QQ) -> PresentedAlgebra:
    return PresentedAlgebra(ReductionSystem.from_strings(("X", "Y"), ("XY -> 1",), F))


def _laurent(z: int) -> tuple:
    """Exponent tuple of X^z (Y = X^{-1})."""
    return (z, 0) if z >= 0 else (0, -z)


def _laurent_label(z: int) -> str:
    return "1" if z == 0 else ("X" if z == 1 else (f"X^{z}" if z > 0 else ("Y" if z == -1 else f"Y^{-z}")))


def equalizer_certificate(z: int) -> dict:
    """X^z (x)_B 1 - 1 (x)_B X^z as a combination of balancing relations x b (x) y - x (x) b y, b in k[X]."""
    if z >= 0:
        rel = {"x": 0, "b": z, "y": 0, "coeff": "1"}
    else:
        k = -z
        rel = {"x": -k, "b": k, "y": -k, "coeff": "-1"}
    return {"element": _laurent_label(z), "exponent": z, "relations": [rel]}


def replay_equalizer_certificate(cert: dict, F: Field = QQ) -> bool:
    """Check the certificate by multiplying out with the rewriting engine."""
    H = laurent_system(F)
    z = cert["exponent"]
    target: dict = {}

    def add(t, c):
        target[t] = F.canon(target.get(t, 0) + c)

    def el(e):
        return {_laurent(e): 1}

    one = (0, 0)
    add((_laurent(z), one), 1)
    add((one, _laurent(z)), -1)
    got: dict = {}
    for r in cert["relations"]:
        if r["b"] < 0:
            return False      # b must lie in k[X]
        c = F(r["coeff"])
        xb = H.multiply(el(r["x"]), el(r["b"]))
        by = H.multiply(el(r["b"]), el(r["y"]))
        for m1, c1 in xb.items():
            got[(m1, _laurent(r["y"]))] = F.canon(got.get((m1, _laurent(r["y"])), 0) + c * c1)
        for m2, c2 in by.items():
            got[(_laurent(r["x"]), m2)] = F.canon(got.get((_laurent(r["x"]), m2), 0) - c * c2)
    clean = lambda d: {k: v for k, v in d.items() if v}
    return clean(got) == clean(target)


def laurent_case_study(window: int, F: Field = QQ) -> dict:
    if window < 1:
        raise ValueError("window must be at least 1")
    H = laurent_system(F)
    S = H.system
    conf = check_confluence(S, 2 * window)
    zs = list(range(-window, window + 1))
    idx = {z: i for i, z in enumerate(zs)}
    n = len(zs)

    def to_vec(p):
        v = [0] * n
        for m, c in p.items():
            z = m[0] - m[1]
            if z not in idx:
                return None
            v[idx[z]] += c
        return [F.canon(x) for x in v]

    def el(z):
        return {_laurent(z): 1}

    one = el(0)
    x_minus_1 = poly_sub(F, el(1), one)

    def products_in_window(left_zs, right_elems):
        out = []
        for a in left_zs:
            for r in right_elems:
                v = to_vec(H.multiply(el(a), r))
                if v is not None:
                    out.append(v)
        return Subspace.span(F, n, out)

    b_plus = [poly_sub(F, el(k), one) for k in range(1, window + 1)]
    h_plus = [poly_sub(F, el(z), one) for z in zs if z != 0]
    HBplus = products_in_window(zs, b_plus)
    HXm1 = products_in_window(zs, [x_minus_1])
    Hplus = Subspace.span(F, n, [to_vec(p) for p in h_plus])
    HHplus = products_in_window(zs, h_plus)
    # oracle: evaluation at X = 1
    ev = LinMap.from_rows(F, [[1] * n], n)
    ev_kernel = ev.kernel()
    plus_equal = HBplus == HXm1 == Hplus == HHplus == ev_kernel
    x_minus_1_in = to_vec(x_minus_1) in HBplus
    x_plus_1_in = to_vec(poly_add(F, el(1), one)) in HBplus

    certs = []
    for z in zs:
        c = equalizer_certificate(z)
        c["replayed"] = replay_equalizer_certificate(c, F)
        c["inB"] = z >= 0
        certs.append(c)
    inverse_cert = next(c for c in certs if c["exponent"] == -1)

    # every window monomial is coinvariant for H/HB^+ : Delta X^z = X^z (x) X^z and X^z - 1 lies in HB^+
    coinvariant = [to_vec(poly_sub(F, el(z), one)) in HBplus for z in zs]
    window_coinvariants = Subspace.span(F, n, [unit_vector(n, idx[z]) for z, ok in zip(zs, coinvariant) if ok])
    B_window = Subspace.span(F, n, [unit_vector(n, idx[z]) for z in zs if z >= 0])
    strict = B_window < window_coinvariants

    # X + 1 evaluates to 2 at X = 1, which vanishes only in characteristic 2
    verified = conf.confluent and plus_equal and x_minus_1_in and x_plus_1_in == (F.characteristic == 2) \
        and all(c["replayed"] for c in certs) and strict
    return {
        "example": "laurent",
        "field": F.descriptor(),
        "window": window,
        "reductionSystem": S.to_json(),
        "confluence": conf.to_json(),
        "inverseInEqualizer": {**inverse_cert, "inB": False},
        "equalizerCertificates": certs,
        "augmentation": {
            "windowDim": n,
            "dims": {"HB+": HBplus.dim, "H(X-1)": HXm1.dim, "H+": Hplus.dim, "HH+": HHplus.dim,
                     "kernelOfEvaluationAt1": ev_kernel.dim},
            "allEqual": plus_equal,
            "XMinus1InHBplus": x_minus_1_in,
            "XPlus1InHBplus": x_plus_1_in,
        },
        "coinvariants": {
            "windowDim": window_coinvariants.dim,
            "subalgebraWindowDim": B_window.dim,
            "strictlyLarger": strict,
        },
        "verified": verified,
    }
