"""Reduction systems for commutative presented algebras.

Monomials are exponent tuples in the declared variable order; comparing the
tuples is the lexicographic order with the first variable largest.  A
polynomial is a dict ``{monomial: coefficient}`` with no zero coefficients.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field
from itertools import combinations, combinations_with_replacement
from typing import Iterable, Mapping

from .errors import ParseError
from .exactla import QQ, Field

Monomial = tuple
Poly = dict


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_div(b: Monomial, a: Monomial) -> Monomial:
    return tuple(y - x for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def degree(a: Monomial) -> int:
    return sum(a)


def poly_add(F: Field, *polys: Mapping) -> Poly:
    out: dict = {}
    for p in polys:
        for m, c in p.items():
            out[m] = out.get(m, 0) + c
    return {m: F.canon(c) for m, c in out.items() if F.canon(c)}


def poly_scale(F: Field, c, p: Mapping) -> Poly:
    return {m: F.canon(c * v) for m, v in p.items() if F.canon(c * v)}


def poly_sub(F: Field, p: Mapping, q: Mapping) -> Poly:
    return poly_add(F, p, poly_scale(F, -1, q))


def poly_mul(F: Field, p: Mapping, q: Mapping) -> Poly:
    out: dict = {}
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            m = mono_mul(m1, m2)
            out[m] = out.get(m, 0) + c1 * c2
    return {m: F.canon(c) for m, c in out.items() if F.canon(c)}


@dataclass(frozen=True)
class Rule:
    lhs: Monomial
    rhs: tuple  # sorted ((monomial, coeff), ...)

    @property
    def rhs_poly(self) -> Poly:
        return dict(self.rhs)


_TERM = re.compile(r"\s*([+-])?\s*([^+-]+)")


class ReductionSystem:
    def __init__(self, variables: Iterable[str], rules: Iterable[tuple[Monomial, Mapping]] = (), field: Field = QQ):
        self.variables = tuple(variables)
        if len(set(self.variables)) != len(self.variables):
            raise ParseError("variable names must be distinct")
        self.field = field
        self.n = len(self.variables)
        built = []
        seen = set()
        for lhs, rhs in rules:
            lhs = tuple(lhs)
            if len(lhs) != self.n:
                raise ParseError("rule monomial has the wrong number of exponents")
            if lhs in seen:
                raise ParseError(f"two rules share the left-hand side {self.format_monomial(lhs)}")
            seen.add(lhs)
            r = {tuple(m): field.canon(field(c)) for m, c in rhs.items()}
            r = {m: c for m, c in r.items() if c}
            for m in r:
                if not m < lhs:
                    raise ParseError(f"rule {self.format_monomial(lhs)} -> {self.format(r)} does not decrease "
                                     f"the lexicographic order")
            built.append(Rule(lhs, tuple(sorted(r.items(), reverse=True))))
        self.rules = tuple(built)
        self._nf_cache: dict = {}

    # --- parsing and printing ------------------------------------------

    @classmethod
    def from_strings(cls, variables: Iterable[str], rules: Iterable[str], field: Field = QQ) -> "ReductionSystem":
        """Rules written as ``"sv -> tu + 1"``."""
        shell = cls(variables, (), field)
        parsed = []
        for text in rules:
            if "->" not in text:
                raise ParseError(f"rule {text!r} lacks '->'")
            left, right = text.split("->", 1)
            lp = shell.parse(left)
            if len(lp) != 1 or next(iter(lp.values())) != 1:
                raise ParseError(f"left-hand side of {text!r} must be a single monic monomial")
            parsed.append((next(iter(lp)), shell.parse(right)))
        return cls(variables, parsed, field)

    def parse_monomial(self, text: str) -> Monomial:
        exps = [0] * self.n
        names = sorted(self.variables, key=len, reverse=True)
        pos, s = 0, text.replace("*", "").replace(" ", "")
        while pos < len(s):
            for name in names:
                if s.startswith(name, pos):
                    pos += len(name)
                    m = re.match(r"\^(\d+)", s[pos:])
                    e = 1
                    if m:
                        e = int(m.group(1))
                        pos += m.end()
                    exps[self.variables.index(name)] += e
                    break
            else:
                raise ParseError(f"cannot read a variable at {s[pos:]!r}")
        return tuple(exps)

    def parse(self, text: str) -> Poly:
        text = text.strip()
        if not text:
            raise ParseError("empty polynomial")
        out: dict = {}
        pos = 0
        while pos < len(text):
            m = _TERM.match(text, pos)
            if not m or not m.group(2).strip():
                raise ParseError(f"cannot parse polynomial {text!r}")
            sign = -1 if m.group(1) == "-" else 1
            body = m.group(2).strip()
            cm = re.match(r"(\d+(?:/\d+)?)\s*\*?\s*", body)
            coeff = 1
            if cm:
                coeff = self.field(cm.group(1))
                body = body[cm.end():]
            mono = self.parse_monomial(body) if body else (0,) * self.n
            out[mono] = out.get(mono, 0) + sign * coeff
            pos = m.end()
        return poly_add(self.field, out)

    def format_monomial(self, m: Monomial) -> str:
        parts = []
        for name, e in zip(self.variables, m):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        sep = "*" if any(len(v) > 1 for v in self.variables) else ""
        return sep.join(parts) or "1"

    def format(self, p: Mapping) -> str:
        if not p:
            return "0"
        out = []
        for m in sorted(p, reverse=True):
            c = p[m]
            neg = False
            if self.field.is_rational and c < 0:
                neg, c = True, -c
            mono = self.format_monomial(m)
            if mono == "1":
                body = self.field.to_json(c)
            elif c == 1:
                body = mono
            else:
                body = f"{self.field.to_json(c)}{mono}"
            if not out:
                out.append(("-" if neg else "") + body)
            else:
                out.append(("- " if neg else "+ ") + body)
        return " ".join(out)

    def monomial(self, **exps) -> Monomial:
        return tuple(exps.get(v, 0) for v in self.variables)

    def to_json(self) -> dict:
        return {
            "variables": list(self.variables),
            "field": self.field.descriptor(),
            "rules": [
                {
                    "lhs": {v: e for v, e in zip(self.variables, r.lhs) if e},
                    "rhs": [{"coeff": self.field.to_json(c), "exponents": {v: e for v, e in zip(self.variables, m) if e}}
                            for m, c in r.rhs],
                }
                for r in self.rules
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping, field: Field | None = None) -> "ReductionSystem":
        try:
            variables = list(data["variables"])
            F = field or (Field.from_descriptor(data["field"]) if "field" in data else QQ)
            rules = []
            for r in data.get("rules", []):
                lhs = tuple(int(r["lhs"].get(v, 0)) for v in variables)
                rhs: dict = {}
                for t in r.get("rhs", []):
                    m = tuple(int(t.get("exponents", {}).get(v, 0)) for v in variables)
                    rhs[m] = rhs.get(m, 0) + F(t["coeff"])
                rules.append((lhs, rhs))
        except (KeyError, TypeError, AttributeError) as exc:
            raise ParseError(f"malformed reduction system: {exc}") from exc
        return cls(variables, rules, F)

    # --- reduction -----------------------------------------------------

    def matching_rules(self, m: Monomial) -> list:
        return [r for r in self.rules if divides(r.lhs, m)]

    def is_normal(self, m: Monomial) -> bool:
        return not self.matching_rules(m)

    def apply(self, rule: Rule, m: Monomial) -> Poly:
        """Rewrite one occurrence of ``rule.lhs`` in ``m``."""
        q = mono_div(m, rule.lhs)
        return {mono_mul(k, q): c for k, c in rule.rhs}

    def _nf_monomial(self, m: Monomial) -> Poly:
        cached = self._nf_cache.get(m)
        if cached is not None:
            return cached
        # iterative: expand the largest reducible monomial until none remain
        out: dict = {}
        pending: dict = {m: 1}
        F = self.field
        while pending:
            top = max(pending)
            c = pending.pop(top)
            if not c:
                continue
            hit = self._nf_cache.get(top)
            if hit is not None:
                for k, v in hit.items():
                    out[k] = out.get(k, 0) + c * v
                continue
            rules = self.matching_rules(top)
            if not rules:
                out[top] = out.get(top, 0) + c
                continue
            for k, v in self.apply(rules[0], top).items():
                pending[k] = F.canon(pending.get(k, 0) + c * v)
        res = {k: F.canon(v) for k, v in out.items() if F.canon(v)}
        self._nf_cache[m] = res
        return res

    def normal_form(self, p: Mapping) -> Poly:
        F = self.field
        acc: dict = {}
        for m, c in p.items():
            for k, v in self._nf_monomial(tuple(m)).items():
                acc[k] = acc.get(k, 0) + c * v
        return {k: F.canon(v) for k, v in acc.items() if F.canon(v)}

    def reduce_step(self, p: Mapping) -> Poly | None:
        """One rewrite of the largest reducible monomial, or None if ``p`` is normal."""
        reducible = [m for m in p if not self.is_normal(m)]
        if not reducible:
            return None
        top = max(reducible)
        rest = {k: v for k, v in p.items() if k != top}
        return poly_add(self.field, rest, poly_scale(self.field, p[top], self.apply(self.matching_rules(top)[0], top)))

    def multiply(self, p: Mapping, q: Mapping) -> Poly:
        return self.normal_form(poly_mul(self.field, p, q))

    # --- enumeration ---------------------------------------------------

    def monomials_of_degree(self, d: int):
        for combo in combinations_with_replacement(range(self.n), d):
            e = [0] * self.n
            for i in combo:
                e[i] += 1
            yield tuple(e)

    def monomials_up_to(self, d: int) -> list:
        return [m for k in range(d + 1) for m in self.monomials_of_degree(k)]

    def normal_monomials_up_to(self, d: int) -> list:
        return [m for m in self.monomials_up_to(d) if self.is_normal(m)]

    def check_confluence(self, degree_bound: int = 0) -> "ConfluenceReport":
        return check_confluence(self, degree_bound)


@dataclass
class Ambiguity:
    monomial: Monomial
    rules: tuple
    forms: tuple

    @property
    def resolved(self) -> bool:
        return all(f == self.forms[0] for f in self.forms)


@dataclass
class ConfluenceReport:
    system: ReductionSystem
    ambiguities: list = dc_field(default_factory=list)
    exhaustive_checked: int = 0
    exhaustive_failures: list = dc_field(default_factory=list)
    degree_bound: int = 0

    @property
    def confluent(self) -> bool:
        return all(a.resolved for a in self.ambiguities) and not self.exhaustive_failures

    def unresolved(self) -> list:
        return [a for a in self.ambiguities if not a.resolved]

    def to_json(self) -> dict:
        S = self.system
        return {
            "confluent": self.confluent,
            "degreeBound": self.degree_bound,
            "ambiguities": [
                {"monomial": S.format_monomial(a.monomial),
                 "rules": [S.format_monomial(r) for r in a.rules],
                 "normalForms": [S.format(f) for f in a.forms],
                 "resolved": a.resolved}
                for a in self.ambiguities
            ],
            "exhaustiveChecked": self.exhaustive_checked,
            "exhaustiveFailures": [
                {"monomial": S.format_monomial(m), "normalForms": [S.format(f) for f in forms]}
                for m, forms in self.exhaustive_failures
            ],
        }


def _all_paths(S: ReductionSystem, m: Monomial) -> tuple:
    """Normal forms reached by starting with each applicable rule."""
    return tuple(S.normal_form(S.apply(r, m)) for r in S.matching_rules(m))


def check_confluence(S: ReductionSystem, degree_bound: int = 0) -> ConfluenceReport:
    """Resolve every overlap of two left-hand sides, then every monomial up to ``degree_bound``."""
    rep = ConfluenceReport(S, degree_bound=degree_bound)
    for r1, r2 in combinations(S.rules, 2):
        shares = any(a and b for a, b in zip(r1.lhs, r2.lhs))
        if not (shares or divides(r1.lhs, r2.lhs) or divides(r2.lhs, r1.lhs)):
            continue
        w = mono_lcm(r1.lhs, r2.lhs)
        forms = (S.normal_form(S.apply(r1, w)), S.normal_form(S.apply(r2, w)))
        rep.ambiguities.append(Ambiguity(w, (r1.lhs, r2.lhs), forms))
    for m in S.monomials_up_to(degree_bound):
        forms = _all_paths(S, m)
        if len(forms) > 1:
            rep.exhaustive_checked += 1
            if any(f != forms[0] for f in forms):
                rep.exhaustive_failures.append((m, forms))
    return rep


@dataclass
class PresentedAlgebra:
    """A commutative algebra given by a reduction system."""

    system: ReductionSystem

    @property
    def field(self) -> Field:
        return self.system.field

    def is_normal(self, m: Monomial) -> bool:
        return self.system.is_normal(m)

    def normal_form(self, p: Mapping) -> Poly:
        return self.system.normal_form(p)

    def multiply(self, p: Mapping, q: Mapping) -> Poly:
        return self.system.multiply(p, q)

    def element(self, text: str) -> Poly:
        return self.normal_form(self.system.parse(text))

    def basis_up_to(self, d: int) -> list:
        return self.system.normal_monomials_up_to(d)

    def substitute(self, p: Mapping, images: list, target: "PresentedAlgebra") -> Poly:
        """Algebra map sending the i-th variable to ``images[i]`` (polynomials of the target)."""
        F = target.field
        one = {(0,) * target.system.n: 1}
        acc: dict = {}
        for m, c in p.items():
            term = dict(one)
            for img, e in zip(images, m):
                for _ in range(e):
                    term = target.multiply(term, img)
            acc = poly_add(F, acc, poly_scale(F, c, term))
        return target.normal_form(acc)


def normal_form(a: PresentedAlgebra | ReductionSystem, poly: Mapping) -> Poly:
    return a.normal_form(poly)


def format_poly(S: ReductionSystem, p: Mapping) -> str:
    return S.format(p)
