"""Small bialgebroids used by tests, the acceptance suite and the CLI."""
from __future__ import annotations

from itertools import permutations
from pathlib import Path

from .algebroid import LeftBialgebroid, bialgebroid, hopf_algebra
from .exactla import GF, QQ, Field
from .io import bialgebroid_to_json, dumps


def _group_algebra(F: Field, elements, op, name: str) -> LeftBialgebroid:
    index = {g: i for i, g in enumerate(elements)}
    n = len(elements)
    mult = [[[0] * n for _ in range(n)] for _ in range(n)]
    for i, g in enumerate(elements):
        for j, h in enumerate(elements):
            mult[i][j][index[op(g, h)]] = 1
    comult = []
    for i in range(n):
        v = [0] * (n * n)
        v[i * n + i] = 1
        comult.append(v)
    return hopf_algebra(F, mult, comult, [1] * n, unit=[1 if k == 0 else 0 for k in range(n)], name=name)


def cyclic_group_algebra(n: int, F: Field = QQ) -> LeftBialgebroid:
    """k[C_n] with basis 1, g, ..., g^{n-1}."""
    return _group_algebra(F, list(range(n)), lambda a, b: (a + b) % n, f"kC{n}")


def kc2(F: Field = QQ) -> LeftBialgebroid:
    return cyclic_group_algebra(2, F)


def kc4(F: Field = QQ) -> LeftBialgebroid:
    return cyclic_group_algebra(4, F)


def ks3(F: Field = QQ) -> LeftBialgebroid:
    """k[S_3]; basis ordered lexicographically with the identity first."""
    perms = sorted(permutations(range(3)))
    return _group_algebra(F, perms, lambda p, q: tuple(p[q[i]] for i in range(3)), "kS3")


def sweedler(F: Field = QQ) -> LeftBialgebroid:
    """Sweedler's four-dimensional algebra: basis 1, g, x, gx.

    g^2 = 1, x^2 = 0, xg = -gx, Delta g = g (x) g, Delta x = 1 (x) x + x (x) g.
    """
    if F.characteristic == 2:
        raise ValueError("Sweedler's algebra needs characteristic different from 2")
    basis = [(0, 0), (1, 0), (0, 1), (1, 1)]   # g^a x^b
    idx = {v: i for i, v in enumerate(basis)}
    mult = [[[0] * 4 for _ in range(4)] for _ in range(4)]
    for i, (a, b) in enumerate(basis):
        for j, (c, d) in enumerate(basis):
            if b + d > 1:
                continue
            sign = -1 if b * c % 2 else 1
            mult[i][j][idx[((a + c) % 2, b + d)]] = sign

    def tt(u, v):
        w = [0] * 16
        w[u * 4 + v] = 1
        return w

    def add(*vs):
        return [sum(t) for t in zip(*vs)]

    comult = [
        tt(0, 0),
        tt(1, 1),
        add(tt(0, 2), tt(2, 1)),
        add(tt(1, 3), tt(3, 0)),
    ]
    return hopf_algebra(F, mult, comult, [1, 1, 0, 0], unit=[1, 0, 0, 0], name="sweedler")


def pair_groupoid(F: Field = QQ) -> LeftBialgebroid:
    """Groupoid algebra of the pair groupoid on two objects, over A = k x k.

    H has basis e_00, e_01, e_10, e_11 with e_ij e_kl = delta_jk e_il,
    s(f_i) = t(f_i) = e_ii, Delta e_ij = e_ij (x) e_ij and eps(e_ij) = f_i.
    """
    pairs = [(0, 0), (0, 1), (1, 0), (1, 1)]
    idx = {p: k for k, p in enumerate(pairs)}
    mult = [[[0] * 4 for _ in range(4)] for _ in range(4)]
    for a, (i, j) in enumerate(pairs):
        for c, (k, l) in enumerate(pairs):
            if j == k:
                mult[a][c][idx[(i, l)]] = 1
    base = [[[1, 0], [0, 0]], [[0, 0], [0, 1]]]
    s = [[1, 0], [0, 0], [0, 0], [0, 1]]
    comult = [[0] * 4 for _ in range(16)]
    for a in range(4):
        comult[a * 4 + a][a] = 1
    counit = [[0] * 4 for _ in range(2)]
    for a, (i, _) in enumerate(pairs):
        counit[i][a] = 1
    return bialgebroid(F, base, mult, s, s, comult, counit, name="pair-groupoid")


def corrupted_kc2(F: Field = QQ) -> LeftBialgebroid:
    """kC2 with Delta g replaced by g (x) 1."""
    mult = [[[1, 0], [0, 1]], [[0, 1], [1, 0]]]
    return hopf_algebra(F, mult, [[1, 0, 0, 0], [0, 0, 1, 0]], [1, 1], unit=[1, 0], name="kC2-corrupted")


def idempotent_monoid(F: Field = QQ) -> LeftBialgebroid:
    """Monoid algebra of {1, X} with X^2 = X: a bialgebra that is not Hopf."""
    mult = [[[1, 0], [0, 1]], [[0, 1], [0, 1]]]
    return hopf_algebra(F, mult, [[1, 0, 0, 0], [0, 0, 0, 1]], [1, 1], unit=[1, 0], name="idempotent-monoid")


def trivial(F: Field = QQ) -> LeftBialgebroid:
    """H = k."""
    return hopf_algebra(F, [[[1]]], [[1]], [1], unit=[1], name="trivial")


FIXTURES = {
    "trivial": trivial,
    "kc2": kc2,
    "kc4": kc4,
    "ks3": ks3,
    "sweedler": sweedler,
    "pair-groupoid": pair_groupoid,
    "kc2-corrupted": corrupted_kc2,
    "idempotent-monoid": idempotent_monoid,
}

HOPF_FIXTURES = ("trivial", "kc2", "kc4", "ks3", "sweedler", "pair-groupoid")


def fixture(name: str, F: Field = QQ) -> LeftBialgebroid:
    try:
        return FIXTURES[name](F)
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; choose from {sorted(FIXTURES)}") from None


SHIPPED = (
    ("trivial", QQ), ("kc2", QQ), ("kc4", QQ), ("ks3", QQ), ("sweedler", QQ), ("pair-groupoid", QQ),
    ("kc2-corrupted", QQ), ("idempotent-monoid", QQ), ("kc2", GF(2)), ("kc4", GF(3)), ("sweedler", GF(3)),
    ("sweedler", GF(5)),
)


def data_dir() -> Path:
    return Path(__file__).parent / "data"


def fixture_filename(name: str, F: Field) -> str:
    tag = "q" if F.is_rational else f"gf{F.p}"
    return f"{name}_{tag}.json"


def write_fixture_files(directory=None) -> list:
    """Write every shipped fixture as JSON; returns the paths written."""
    directory = Path(directory) if directory is not None else data_dir()
    directory.mkdir(parents=True, exist_ok=True)
    paths = []
    for name, F in SHIPPED:
        path = directory / fixture_filename(name, F)
        path.write_text(dumps(bialgebroid_to_json(fixture(name, F))))
        paths.append(path)
    return paths


__all__ = ["FIXTURES", "HOPF_FIXTURES", "fixture", "kc2", "kc4", "ks3", "sweedler", "pair_groupoid",
           "corrupted_kc2", "idempotent_monoid", "trivial", "cyclic_group_algebra", "write_fixture_files",
           "fixture_filename", "data_dir", "SHIPPED"]
