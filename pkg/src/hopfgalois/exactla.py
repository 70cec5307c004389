"""Exact fields (the rationals and GF(p)) and dense linear algebra over them.

Scalars are plain Python numbers: over the rationals an ``int`` or a
``fractions.Fraction``, over GF(p) an ``int`` in ``range(p)``. A :class:`Field`
instance knows how to coerce, invert and serialize them.

Every subspace is stored in reduced row echelon form, so two equal subspaces
always carry identical bases and compare equal as values.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence, Union

from .errors import DimensionMismatch, IllDefined

Scalar = Union[int, Fraction]
Vector = tuple


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class Field:
    """The rationals (``p is None``) or the prime field GF(p)."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None:
            if not isinstance(self.p, int) or not (2 <= self.p < 2**31) or not _is_prime(self.p):
                raise ValueError(f"GF(p) needs a prime p < 2^31, got {self.p!r}")

    @property
    def is_rational(self) -> bool:
        return self.p is None

    @property
    def characteristic(self) -> int:
        return self.p or 0

    def __str__(self):
        return "Q" if self.p is None else f"GF({self.p})"

    def __repr__(self):
        return "QQ" if self.p is None else f"GF({self.p})"

    def __call__(self, x) -> Scalar:
        if isinstance(x, str):
            try:
                x = Fraction(x.strip())
            except (ValueError, ZeroDivisionError) as exc:
                raise ValueError(f"not a scalar: {x!r}") from exc
        if isinstance(x, bool):
            x = int(x)
        if self.p is None:
            if isinstance(x, int):
                return x
            x = Fraction(x)
            return x.numerator if x.denominator == 1 else x
        if isinstance(x, int):
            return x % self.p
        x = Fraction(x)
        if x.denominator % self.p == 0:
            raise ValueError(f"{x} has no image in {self}")
        return x.numerator * pow(x.denominator, -1, self.p) % self.p

    def canon(self, x: Scalar) -> Scalar:
        if self.p is not None:
            return x % self.p
        if isinstance(x, Fraction) and x.denominator == 1:
            return x.numerator
        return x

    @property
    def zero(self) -> Scalar:
        return 0

    @property
    def one(self) -> Scalar:
        return 1

    def inv(self, a: Scalar) -> Scalar:
        if not a:
            raise ZeroDivisionError(f"inverse of zero in {self}")
        if self.p is not None:
            return pow(a, -1, self.p)
        return self.canon(1 / Fraction(a))

    def power(self, a: Scalar, e: int) -> Scalar:
        if self.p is not None:
            return pow(a, e, self.p)
        return self.canon(Fraction(a) ** e)

    def elements(self):
        if self.p is None:
            raise ValueError("the rationals are infinite")
        return range(self.p)

    def to_json(self, a: Scalar) -> str:
        if self.p is not None:
            return str(a % self.p)
        a = Fraction(a)
        return str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"

    def descriptor(self) -> dict:
        return {"type": "Q"} if self.p is None else {"type": "GF", "p": self.p}

    @classmethod
    def from_descriptor(cls, d: dict) -> "Field":
        kind = str(d.get("type", "")).upper()
        if kind == "Q":
            return cls()
        if kind == "GF":
            return cls(int(d["p"]))
        raise ValueError(f"unknown field descriptor {d!r}")

    @classmethod
    def parse(cls, text: str) -> "Field":
        """Parse a command-line spelling: ``q`` or ``gf:p``."""
        t = text.strip().lower()
        if t in ("q", "qq", "rationals"):
            return cls()
        if t.startswith("gf:"):
            return cls(int(t[3:]))
        raise ValueError(f"field must be 'q' or 'gf:<prime>', got {text!r}")


QQ = Field()


def GF(p: int) -> Field:
    return Field(p)


# --------------------------------------------------------------------------
# vectors


def zero_vector(n: int) -> Vector:
    return (0,) * n


def unit_vector(n: int, i: int) -> Vector:
    v = [0] * n
    v[i] = 1
    return tuple(v)


def is_zero(v: Sequence[Scalar]) -> bool:
    return not any(v)


def canon_vector(F: Field, v: Iterable[Scalar]) -> Vector:
    return tuple(F.canon(x) for x in v)


def lincomb(F: Field, n: int, terms: Iterable[tuple[Scalar, Sequence[Scalar]]]) -> Vector:
    """Return sum of ``c * v`` over ``terms``."""
    acc = [0] * n
    for c, v in terms:
        if not c:
            continue
        for j, x in enumerate(v):
            if x:
                acc[j] += c * x
    return canon_vector(F, acc)


def vsub(F: Field, u: Sequence[Scalar], v: Sequence[Scalar]) -> Vector:
    return tuple(F.canon(a - b) for a, b in zip(u, v))


def vadd(F: Field, u: Sequence[Scalar], v: Sequence[Scalar]) -> Vector:
    return tuple(F.canon(a + b) for a, b in zip(u, v))


def vscale(F: Field, c: Scalar, v: Sequence[Scalar]) -> Vector:
    return tuple(F.canon(c * a) for a in v)


def kron(F: Field, u: Sequence[Scalar], v: Sequence[Scalar]) -> Vector:
    """Coordinates of u (x) v, index ``i * len(v) + j``."""
    n = len(v)
    out = [0] * (len(u) * n)
    for i, a in enumerate(u):
        if a:
            base = i * n
            for j, b in enumerate(v):
                if b:
                    out[base + j] = a * b
    return canon_vector(F, out)


# --------------------------------------------------------------------------
# elimination


def _echelon(F: Field, rows: Iterable[Sequence[Scalar]], ncols: int):
    """Gauss-Jordan elimination; returns (nonzero rref rows, pivot columns)."""
    p = F.p
    work = [list(r) for r in rows if any(r)]
    for r in work:
        if len(r) != ncols:
            raise DimensionMismatch(f"row of length {len(r)} in a {ncols}-column matrix")
    pivots: list[int] = []
    nrows = len(work)
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        k = r
        while k < nrows and not work[k][c]:
            k += 1
        if k == nrows:
            continue
        work[r], work[k] = work[k], work[r]
        piv = work[r]
        lead = piv[c]
        if lead != 1:
            inv = F.inv(lead)
            if p is None:
                piv = [x * inv if x else 0 for x in piv]
            else:
                piv = [x * inv % p if x else 0 for x in piv]
            work[r] = piv
        nz = [(j, x) for j, x in enumerate(piv) if x and j != c]
        for i in range(nrows):
            if i == r:
                continue
            row = work[i]
            f = row[c]
            if not f:
                continue
            row[c] = 0
            if p is None:
                for j, x in nz:
                    row[j] -= f * x
            else:
                for j, x in nz:
                    row[j] = (row[j] - f * x) % p
        pivots.append(c)
        r += 1
    return [canon_vector(F, row) for row in work[:r]], pivots


def _nullspace_vectors(F: Field, rref_rows, pivots, ncols) -> list[Vector]:
    pivset = set(pivots)
    out = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [0] * ncols
        v[f] = 1
        for row, pc in zip(rref_rows, pivots):
            if row[f]:
                v[pc] = F.canon(-row[f])
        out.append(tuple(v))
    return out


# --------------------------------------------------------------------------
# subspaces


@dataclass(frozen=True)
class Subspace:
    """A subspace of F^n held by its reduced row echelon basis."""

    field: Field
    ambient_dim: int
    basis: tuple

    @classmethod
    def span(cls, F: Field, n: int, vectors: Iterable[Sequence[Scalar]] = ()) -> "Subspace":
        rows, _ = _echelon(F, vectors, n)
        return cls(F, n, tuple(rows))

    @classmethod
    def zero(cls, F: Field, n: int) -> "Subspace":
        return cls(F, n, ())

    @classmethod
    def full(cls, F: Field, n: int) -> "Subspace":
        return cls(F, n, tuple(unit_vector(n, i) for i in range(n)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    @cached_property
    def pivots(self) -> tuple:
        return tuple(next(j for j, x in enumerate(row) if x) for row in self.basis)

    @cached_property
    def _sparse(self):
        return [[(j, x) for j, x in enumerate(row) if x] for row in self.basis]

    def reduce(self, v: Sequence[Scalar]) -> Vector:
        """Remainder of ``v`` after clearing the pivot columns."""
        if len(v) != self.ambient_dim:
            raise DimensionMismatch(f"vector of length {len(v)} in ambient {self.ambient_dim}")
        w = list(v)
        for pc, row in zip(self.pivots, self._sparse):
            c = w[pc]
            if c:
                for j, x in row:
                    w[j] -= c * x
        return canon_vector(self.field, w)

    def __contains__(self, v) -> bool:
        return is_zero(self.reduce(v))

    def coordinates(self, v: Sequence[Scalar]) -> Vector:
        """Coefficients of ``v`` in the stored basis."""
        if v not in self:
            raise ValueError("vector is not in the subspace")
        return tuple(self.field.canon(v[pc]) for pc in self.pivots)

    def __le__(self, other: "Subspace") -> bool:
        self._compatible(other)
        return all(b in other for b in self.basis)

    def __lt__(self, other: "Subspace") -> bool:
        return self.dim < other.dim and self <= other

    def __ge__(self, other: "Subspace") -> bool:
        return other <= self

    def __gt__(self, other: "Subspace") -> bool:
        return other < self

    def __add__(self, other: "Subspace") -> "Subspace":
        self._compatible(other)
        return Subspace.span(self.field, self.ambient_dim, self.basis + other.basis)

    def __and__(self, other: "Subspace") -> "Subspace":
        self._compatible(other)
        if not self.basis or not other.basis:
            return Subspace.zero(self.field, self.ambient_dim)
        F, k = self.field, self.dim
        cols = list(self.basis) + [vscale(F, -1, b) for b in other.basis]
        # columns of the stacked matrix are the spanning vectors
        rows = [tuple(c[i] for c in cols) for i in range(self.ambient_dim)]
        rref, piv = _echelon(F, rows, len(cols))
        null = _nullspace_vectors(F, rref, piv, len(cols))
        vecs = [lincomb(F, self.ambient_dim, zip(z[:k], self.basis)) for z in null]
        return Subspace.span(F, self.ambient_dim, vecs)

    def _compatible(self, other: "Subspace"):
        if self.ambient_dim != other.ambient_dim or self.field != other.field:
            raise DimensionMismatch(
                f"subspaces of {self.field}^{self.ambient_dim} and {other.field}^{other.ambient_dim}"
            )

    @property
    def key(self) -> tuple:
        """Deterministic sort key (dimension first, then the echelon basis)."""
        return (self.dim, tuple(tuple(self.field.to_json(x) for x in row) for row in self.basis))

    def to_json(self) -> dict:
        return {
            "ambientDim": self.ambient_dim,
            "dim": self.dim,
            "vectors": [[self.field.to_json(x) for x in row] for row in self.basis],
        }

    def __repr__(self):
        rows = ", ".join("[" + " ".join(self.field.to_json(x) for x in r) + "]" for r in self.basis)
        return f"Subspace({self.field}^{self.ambient_dim}: {rows or '0'})"


def subspace_sum(U: Subspace, V: Subspace) -> Subspace:
    return U + V


def subspace_intersection(U: Subspace, V: Subspace) -> Subspace:
    return U & V


# --------------------------------------------------------------------------
# linear maps


@dataclass(frozen=True, eq=False)
class LinMap:
    """A matrix ``codomain_dim x domain_dim``; column j is the image of e_j."""

    field: Field
    domain_dim: int
    codomain_dim: int
    rows: tuple

    def __post_init__(self):
        if len(self.rows) != self.codomain_dim or any(len(r) != self.domain_dim for r in self.rows):
            raise DimensionMismatch("matrix shape does not match the declared dimensions")

    @classmethod
    def from_rows(cls, F: Field, rows: Sequence[Sequence[Scalar]], domain_dim: int | None = None):
        rows = tuple(canon_vector(F, (F(x) for x in r)) for r in rows)
        if domain_dim is None:
            if not rows:
                raise DimensionMismatch("cannot infer the domain of an empty matrix")
            domain_dim = len(rows[0])
        return cls(F, domain_dim, len(rows), rows)

    @classmethod
    def from_columns(cls, F: Field, columns: Sequence[Sequence[Scalar]], codomain_dim: int | None = None):
        columns = [tuple(c) for c in columns]
        if codomain_dim is None:
            if not columns:
                raise DimensionMismatch("cannot infer the codomain of an empty column list")
            codomain_dim = len(columns[0])
        for c in columns:
            if len(c) != codomain_dim:
                raise DimensionMismatch("column length differs from the codomain dimension")
        rows = tuple(canon_vector(F, (c[i] for c in columns)) for i in range(codomain_dim))
        return cls(F, len(columns), codomain_dim, rows)

    @classmethod
    def identity(cls, F: Field, n: int) -> "LinMap":
        return cls(F, n, n, tuple(unit_vector(n, i) for i in range(n)))

    @classmethod
    def zero(cls, F: Field, domain_dim: int, codomain_dim: int) -> "LinMap":
        return cls(F, domain_dim, codomain_dim, tuple(zero_vector(domain_dim) for _ in range(codomain_dim)))

    @cached_property
    def columns(self) -> tuple:
        return tuple(tuple(r[j] for r in self.rows) for j in range(self.domain_dim))

    @cached_property
    def _sparse_cols(self):
        return [[(i, x) for i, x in enumerate(c) if x] for c in self.columns]

    def __call__(self, v: Sequence[Scalar]) -> Vector:
        if len(v) != self.domain_dim:
            raise DimensionMismatch(f"vector of length {len(v)} fed to a map from dimension {self.domain_dim}")
        acc = [0] * self.codomain_dim
        for j, c in enumerate(v):
            if c:
                for i, x in self._sparse_cols[j]:
                    acc[i] += c * x
        return canon_vector(self.field, acc)

    def __matmul__(self, other: "LinMap") -> "LinMap":
        if self.domain_dim != other.codomain_dim:
            raise DimensionMismatch(
                f"cannot compose {self.codomain_dim}x{self.domain_dim} after {other.codomain_dim}x{other.domain_dim}"
            )
        return LinMap.from_columns(self.field, [self(c) for c in other.columns], self.codomain_dim)

    def _same_shape(self, other: "LinMap"):
        if (self.domain_dim, self.codomain_dim) != (other.domain_dim, other.codomain_dim):
            raise DimensionMismatch("maps have different shapes")

    def __add__(self, other: "LinMap") -> "LinMap":
        self._same_shape(other)
        return LinMap(self.field, self.domain_dim, self.codomain_dim,
                      tuple(vadd(self.field, a, b) for a, b in zip(self.rows, other.rows)))

    def __sub__(self, other: "LinMap") -> "LinMap":
        self._same_shape(other)
        return LinMap(self.field, self.domain_dim, self.codomain_dim,
                      tuple(vsub(self.field, a, b) for a, b in zip(self.rows, other.rows)))

    def __neg__(self) -> "LinMap":
        return LinMap(self.field, self.domain_dim, self.codomain_dim,
                      tuple(vscale(self.field, -1, r) for r in self.rows))

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinMap):
            return NotImplemented
        return (self.domain_dim, self.codomain_dim, self.rows) == (other.domain_dim, other.codomain_dim, other.rows)

    __hash__ = None

    @cached_property
    def _rref(self):
        return _echelon(self.field, self.rows, self.domain_dim)

    @property
    def rank(self) -> int:
        return len(self._rref[1])

    def kernel(self) -> Subspace:
        rows, piv = self._rref
        return Subspace.span(self.field, self.domain_dim, _nullspace_vectors(self.field, rows, piv, self.domain_dim))

    def image(self) -> Subspace:
        return Subspace.span(self.field, self.codomain_dim, self.columns)

    def is_injective(self) -> bool:
        return self.rank == self.domain_dim

    def is_surjective(self) -> bool:
        return self.rank == self.codomain_dim

    def is_invertible(self) -> bool:
        return self.domain_dim == self.codomain_dim == self.rank

    def inverse(self) -> "LinMap":
        n = self.domain_dim
        if not self.is_invertible():
            raise ZeroDivisionError("matrix is singular")
        aug = [tuple(r) + unit_vector(n, i) for i, r in enumerate(self.rows)]
        rows, _ = _echelon(self.field, aug, 2 * n)
        return LinMap(self.field, n, n, tuple(r[n:] for r in rows))

    def restrict(self, sub: Subspace) -> "LinMap":
        """The map on ``sub``, written in the echelon basis of ``sub``."""
        if sub.ambient_dim != self.domain_dim:
            raise DimensionMismatch("subspace lives in a different ambient space")
        return LinMap.from_columns(self.field, [self(b) for b in sub.basis], self.codomain_dim)

    def to_json(self) -> list:
        return [[self.field.to_json(x) for x in r] for r in self.rows]

    def __repr__(self):
        return f"LinMap({self.field}: {self.domain_dim} -> {self.codomain_dim})"


def rref(m: LinMap) -> LinMap:
    """Reduced row echelon form, padded with zero rows to the original shape."""
    rows, _ = m._rref
    padded = list(rows) + [zero_vector(m.domain_dim)] * (m.codomain_dim - len(rows))
    return LinMap(m.field, m.domain_dim, m.codomain_dim, tuple(padded))


def kernel(m: LinMap) -> Subspace:
    return m.kernel()


def image(m: LinMap) -> Subspace:
    return m.image()


def solve(m: LinMap, b: Sequence[Scalar]) -> Vector | None:
    """One solution x of m(x) = b, or None when the system is inconsistent."""
    n = m.domain_dim
    if len(b) != m.codomain_dim:
        raise DimensionMismatch("right-hand side has the wrong length")
    aug = [tuple(r) + (bi,) for r, bi in zip(m.rows, b)]
    rows, piv = _echelon(m.field, aug, n + 1)
    if piv and piv[-1] == n:
        return None
    x = [0] * n
    for row, pc in zip(rows, piv):
        x[pc] = row[n]
    return tuple(x)


def equalizer(f: LinMap, g: LinMap) -> Subspace:
    if (f.domain_dim, f.codomain_dim) != (g.domain_dim, g.codomain_dim):
        raise DimensionMismatch("equalizer of maps with different shapes")
    return (f - g).kernel()


# --------------------------------------------------------------------------
# quotients


@dataclass(frozen=True, eq=False)
class QuotientSpace:
    """F^n modulo ``killed``; quotient coordinates are the non-pivot columns."""

    killed: Subspace

    @classmethod
    def of(cls, F: Field, n: int, vectors: Iterable[Sequence[Scalar]] = ()) -> "QuotientSpace":
        return cls(Subspace.span(F, n, vectors))

    @property
    def field(self) -> Field:
        return self.killed.field

    @property
    def ambient_dim(self) -> int:
        return self.killed.ambient_dim

    @cached_property
    def free(self) -> tuple:
        piv = set(self.killed.pivots)
        return tuple(j for j in range(self.ambient_dim) if j not in piv)

    @property
    def dim(self) -> int:
        return len(self.free)

    def project(self, v: Sequence[Scalar]) -> Vector:
        w = self.killed.reduce(v)
        return tuple(w[j] for j in self.free)

    def lift(self, q: Sequence[Scalar]) -> Vector:
        if len(q) != self.dim:
            raise DimensionMismatch(f"quotient vector of length {len(q)}, expected {self.dim}")
        v = [0] * self.ambient_dim
        for j, x in zip(self.free, q):
            v[j] = x
        return tuple(v)

    @cached_property
    def projection(self) -> LinMap:
        n = self.ambient_dim
        return LinMap.from_columns(self.field, [self.project(unit_vector(n, i)) for i in range(n)], self.dim)

    @cached_property
    def section(self) -> LinMap:
        return LinMap.from_columns(
            self.field, [self.lift(unit_vector(self.dim, i)) for i in range(self.dim)], self.ambient_dim
        )

    def __repr__(self):
        return f"QuotientSpace({self.field}^{self.ambient_dim} / dim {self.killed.dim})"


def coequalizer(f: LinMap, g: LinMap) -> QuotientSpace:
    """Quotient of the common codomain by the image of ``f - g``."""
    if (f.domain_dim, f.codomain_dim) != (g.domain_dim, g.codomain_dim):
        raise DimensionMismatch("coequalizer of maps with different shapes")
    return QuotientSpace((f - g).image())


def quotient_map_compose(q: QuotientSpace, m: LinMap) -> LinMap:
    """The map induced by ``m`` on ``q``; raises IllDefined unless m kills ``q.killed``."""
    if m.domain_dim != q.ambient_dim:
        raise DimensionMismatch("map and quotient live on different spaces")
    for v in q.killed.basis:
        if not is_zero(m(v)):
            raise IllDefined(f"map does not vanish on the relation {[q.field.to_json(x) for x in v]}")
    return m @ q.section
