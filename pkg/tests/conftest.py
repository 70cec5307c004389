import itertools

import pytest
import sympy

from hopfgalois.exactla import Field, Subspace

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


# --- independent oracles ---------------------------------------------------


def sympy_rank(rows, ncols):
    """Rank over Q computed by sympy."""
    if not rows:
        return 0
    return sympy.Matrix([[sympy.Rational(str(x)) for x in r] for r in rows]).rank()


def brute_vectors(p, n):
    return itertools.product(range(p), repeat=n)


def brute_span(p, n, gens):
    """Every vector in the span of ``gens`` over GF(p), as a set of tuples."""
    out = {tuple([0] * n)}
    for g in gens:
        out = {tuple((v[i] + c * g[i]) % p for i in range(n)) for v in out for c in range(p)}
    return out


def brute_dim(p, size):
    d = 0
    while p ** d < size:
        d += 1
    assert p ** d == size
    return d


def subspace_of(F: Field, n, vectors):
    return Subspace.span(F, n, vectors)


@pytest.fixture
def rng():
    import random
    return random.Random(20240611)
