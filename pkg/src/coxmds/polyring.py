"""Multivariate polynomials over the rationals.

Exponent vectors are integer tuples, coefficients are `fractions.Fraction`.
The module provides the expression grammar used throughout the package
(integers, rationals a/b, variables T(i) or Ti, + - * ^, parentheses,
unary minus, named parameters fixed at parse time), canonical printing in
descending degree-reverse-lexicographic term order, grading utilities and
enumeration of monomials of a prescribed degree for pointed gradings.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .intlinalg import GradingGroup, strictly_positive_functional


def degrevlex_key(mono):
    """Sort key realizing degree-reverse-lexicographic comparison."""
    return (sum(mono), tuple(-e for e in reversed(mono)))


class ParseError(ValueError):
    """Raised for malformed polynomial expressions."""


class PolynomialRing:
    """Q[T(1), ..., T(r)] with 1-based printed variable indices."""

    def __init__(self, nvars: int, name: str = "T"):
        if nvars < 0:
            raise ValueError("negative variable count")
        self.nvars = nvars
        self.name = name

    def __eq__(self, other):
        return (
            isinstance(other, PolynomialRing)
            and self.nvars == other.nvars
            and self.name == other.name
        )

    def __hash__(self):
        return hash((self.nvars, self.name))

    def __repr__(self):
        return f"PolynomialRing({self.nvars})"

    def var_name(self, i: int) -> str:
        return f"{self.name}({i + 1})"

    def zero(self) -> "Poly":
        return Poly(self, {})

    def one(self) -> "Poly":
        return self.constant(1)

    def constant(self, c) -> "Poly":
        c = Fraction(c)
        if c == 0:
            return self.zero()
        return Poly(self, {(0,) * self.nvars: c})

    def variable(self, i: int) -> "Poly":
        if not 0 <= i < self.nvars:
            raise IndexError("variable index out of range")
        e = [0] * self.nvars
        e[i] = 1
        return Poly(self, {tuple(e): Fraction(1)})

    def variables(self) -> list:
        return [self.variable(i) for i in range(self.nvars)]

    def monomial(self, exps, coeff=1) -> "Poly":
        exps = tuple(int(e) for e in exps)
        assert len(exps) == self.nvars and all(e >= 0 for e in exps)
        c = Fraction(coeff)
        return Poly(self, {exps: c} if c else {})

    def parse(self, text: str, params: dict | None = None) -> "Poly":
        return _Parser(self, text, params or {}).parse()


class Poly:
    """Immutable-by-convention polynomial: dict exponent tuple -> Fraction."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: PolynomialRing, coeffs: dict):
        self.ring = ring
        self.coeffs = coeffs

    # -- basic queries ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def total_degree(self) -> int:
        return max((sum(m) for m in self.coeffs), default=-1)

    def monomials(self) -> list:
        return sorted(self.coeffs, key=degrevlex_key, reverse=True)

    def terms(self) -> list:
        return [(m, self.coeffs[m]) for m in self.monomials()]

    def leading_monomial(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.coeffs, key=degrevlex_key)

    def leading_coefficient(self) -> Fraction:
        return self.coeffs[self.leading_monomial()]

    def constant_coefficient(self) -> Fraction:
        return self.coeffs.get((0,) * self.ring.nvars, Fraction(0))

    def support_variables(self) -> set:
        used = set()
        for m in self.coeffs:
            for i, e in enumerate(m):
                if e:
                    used.add(i)
        return used

    def key(self) -> tuple:
        """Hashable canonical form."""
        return tuple((m, self.coeffs[m]) for m in self.monomials())

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: "Poly"):
        if self.ring != other.ring:
            raise ValueError("polynomials from different rings")

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = self.ring.constant(other)
        self._check(other)
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            s = out.get(m, Fraction(0)) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Poly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.ring, {m: -c for m, c in self.coeffs.items()})

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = self.ring.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = Fraction(other)
            if not c:
                return self.ring.zero()
            return Poly(self.ring, {m: v * c for m, v in self.coeffs.items()})
        self._check(other)
        out: dict = {}
        for m1, c1 in self.coeffs.items():
            for m2, c2 in other.coeffs.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                s = out.get(m, Fraction(0)) + c1 * c2
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return Poly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base_needed = n >> 1
            if base_needed:
                base = base * base
            n = base_needed
        return result

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ring == other.ring and self.coeffs == other.coeffs
        return self - self.ring.constant(other) == self.ring.zero() if isinstance(other, (int, Fraction)) else NotImplemented

    def __hash__(self):
        return hash((self.ring, self.key()))

    # -- structure ----------------------------------------------------------

    def substitute(self, mapping: dict) -> "Poly":
        """Simultaneously substitute polynomials or constants for variables.

        `mapping` sends 0-based variable indices to Poly or Fraction/int.
        """
        ring = self.ring
        images = {}
        for i, val in mapping.items():
            images[i] = val if isinstance(val, Poly) else ring.constant(val)
        power_cache: dict = {}

        def power(i, e):
            key = (i, e)
            if key not in power_cache:
                power_cache[key] = images[i] ** e
            return power_cache[key]

        out = ring.zero()
        for m, c in self.coeffs.items():
            fixed = [0] * ring.nvars
            factor = ring.constant(c)
            for i, e in enumerate(m):
                if not e:
                    continue
                if i in images:
                    factor = factor * power(i, e)
                else:
                    fixed[i] = e
            out = out + factor * ring.monomial(fixed)
        return out

    def evaluate(self, values) -> Fraction:
        """Value at a rational point (one value per variable)."""
        values = [Fraction(v) for v in values]
        assert len(values) == self.ring.nvars, "point length mismatch"
        total = Fraction(0)
        for m, c in self.coeffs.items():
            term = c
            for i, e in enumerate(m):
                if e:
                    term *= values[i] ** e
            total += term
        return total

    def extend(self, new_ring: PolynomialRing) -> "Poly":
        """View in a ring with more variables (appended at the end)."""
        pad = new_ring.nvars - self.ring.nvars
        assert pad >= 0
        return Poly(new_ring, {m + (0,) * pad: c for m, c in self.coeffs.items()})

    def restrict(self, new_ring: PolynomialRing) -> "Poly":
        """View in a ring with fewer variables; trailing variables must be absent."""
        cut = self.ring.nvars - new_ring.nvars
        assert cut >= 0
        out = {}
        for m, c in self.coeffs.items():
            if any(m[new_ring.nvars :]):
                raise ValueError("polynomial uses removed variables")
            out[m[: new_ring.nvars]] = c
        return Poly(new_ring, out)

    def permute(self, perm: list) -> "Poly":
        """Rename variables: new variable j is old variable perm[j]."""
        assert sorted(perm) == list(range(self.ring.nvars))
        out = {}
        for m, c in self.coeffs.items():
            out[tuple(m[p] for p in perm)] = c
        return Poly(self.ring, out)

    # -- printing -----------------------------------------------------------

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for m, c in self.terms():
            factors = []
            for i, e in enumerate(m):
                if e == 1:
                    factors.append(self.ring.var_name(i))
                elif e > 1:
                    factors.append(f"{self.ring.var_name(i)}^{e}")
            if not factors:
                body = str(abs(c))
            elif abs(c) == 1:
                body = "*".join(factors)
            else:
                body = str(abs(c)) + "*" + "*".join(factors)
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += sign + body
        return text

    def __repr__(self):
        return f"<{self}>"


# ---------------------------------------------------------------------------
# parsing


_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<sym>[-+*/^()]))")


class _Parser:
    def __init__(self, ring: PolynomialRing, text: str, params: dict):
        self.ring = ring
        self.text = text
        self.params = params
        self.tokens = self._lex(text)
        self.pos = 0

    def _lex(self, text: str) -> list:
        tokens = []
        i = 0
        while i < len(text):
            m = _TOKEN.match(text, i)
            if not m or m.end() == m.start():
                if text[i:].strip():
                    raise ParseError(f"unexpected character {text[i]!r} at position {i}")
                break
            i = m.end()
            if m.lastgroup == "int":
                tokens.append(("int", int(m.group("int"))))
            elif m.lastgroup == "name":
                tokens.append(("name", m.group("name")))
            else:
                tokens.append(("sym", m.group("sym")))
        tokens.append(("end", None))
        return tokens

    def _peek(self):
        return self.tokens[self.pos]

    def _next(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def _expect_sym(self, sym: str):
        kind, val = self._next()
        if kind != "sym" or val != sym:
            raise ParseError(f"expected {sym!r} in {self.text!r}")

    def parse(self) -> Poly:
        poly = self._expr()
        kind, _ = self._peek()
        if kind != "end":
            raise ParseError(f"trailing input in {self.text!r}")
        return poly

    def _expr(self) -> Poly:
        kind, val = self._peek()
        if kind == "sym" and val in "+-":
            self._next()
            first = self._term()
            if val == "-":
                first = -first
        else:
            first = self._term()
        result = first
        while True:
            kind, val = self._peek()
            if kind == "sym" and val in "+-":
                self._next()
                term = self._term()
                result = result + term if val == "+" else result - term
            else:
                return result

    def _term(self) -> Poly:
        result = self._unary()
        while True:
            kind, val = self._peek()
            if kind == "sym" and val == "*":
                self._next()
                result = result * self._unary()
            else:
                return result

    def _unary(self) -> Poly:
        kind, val = self._peek()
        if kind == "sym" and val == "-":
            self._next()
            return -self._unary()
        return self._power()

    def _power(self) -> Poly:
        base = self._atom()
        kind, val = self._peek()
        if kind == "sym" and val == "^":
            self._next()
            kind, exp = self._next()
            if kind != "int":
                raise ParseError(f"exponent must be a nonnegative integer in {self.text!r}")
            return base**exp
        return base

    def _atom(self) -> Poly:
        kind, val = self._next()
        if kind == "int":
            nxt_kind, nxt_val = self._peek()
            if nxt_kind == "sym" and nxt_val == "/":
                self._next()
                dkind, dval = self._next()
                if dkind != "int" or dval == 0:
                    raise ParseError(f"malformed rational in {self.text!r}")
                return self.ring.constant(Fraction(val, dval))
            return self.ring.constant(val)
        if kind == "sym" and val == "(":
            inner = self._expr()
            self._expect_sym(")")
            return inner
        if kind == "name":
            return self._name_atom(val)
        raise ParseError(f"unexpected token in {self.text!r}")

    def _name_atom(self, name: str) -> Poly:
        ring = self.ring
        if name == ring.name:
            self._expect_sym("(")
            kind, idx = self._next()
            if kind != "int":
                raise ParseError(f"expected variable index in {self.text!r}")
            self._expect_sym(")")
            return self._var(idx)
        compact = re.fullmatch(re.escape(ring.name) + r"(\d+)", name)
        if compact:
            return self._var(int(compact.group(1)))
        if name in self.params:
            return ring.constant(Fraction(self.params[name]))
        raise ParseError(f"unknown name {name!r} in {self.text!r}")

    def _var(self, index_1based: int) -> Poly:
        if not 1 <= index_1based <= self.ring.nvars:
            raise ParseError(
                f"variable index {index_1based} outside 1..{self.ring.nvars}"
            )
        return self.ring.variable(index_1based - 1)


# ---------------------------------------------------------------------------
# grading utilities


def monomial_degree(mono, var_degrees: list, group: GradingGroup):
    deg = [0] * group.length
    for e, d in zip(mono, var_degrees):
        if e:
            for k in range(group.length):
                deg[k] += e * d[k]
    return group.reduce(deg)


def degree_of(poly: Poly, var_degrees: list, group: GradingGroup):
    """K-degree of a homogeneous polynomial; raises for inhomogeneous input."""
    if poly.is_zero():
        raise ValueError("zero polynomial has no degree")
    degs = {monomial_degree(m, var_degrees, group) for m in poly.coeffs}
    if len(degs) > 1:
        raise ValueError("polynomial is not homogeneous for the grading")
    return next(iter(degs))


def is_homogeneous(poly: Poly, var_degrees: list, group: GradingGroup) -> bool:
    if poly.is_zero():
        return True
    degs = {monomial_degree(m, var_degrees, group) for m in poly.coeffs}
    return len(degs) == 1


def homogeneous_monomials(var_degrees: list, group: GradingGroup, target) -> list:
    """All exponent tuples of K-degree `target`, for gradings whose variable
    degrees span a pointed cone (checked via a strictly positive functional).

    Returns monomials sorted descending in degree-reverse-lexicographic order.
    """
    r = len(var_degrees)
    target = group.reduce(target)
    a = group.rank
    free = [list(d[:a]) for d in var_degrees]
    if a == 0:
        raise ValueError("grading has no free part; enumeration unbounded")
    phi = strictly_positive_functional(free)
    if phi is None:
        raise ValueError("effective cone is not pointed")
    weights = [sum(p * f for p, f in zip(phi, fr)) for fr in free]
    budget = sum(p * t for p, t in zip(phi, target[:a]))
    if budget < 0:
        return []
    out = []
    exps = [0] * r

    def rec(i: int, residual_free: list, residual_tors: list, budget):
        if i == r:
            if all(x == 0 for x in residual_free) and all(
                x % d == 0 for x, d in zip(residual_tors, group.torsion)
            ):
                out.append(tuple(exps))
            return
        w = weights[i]
        dmax = budget // w
        d = var_degrees[i]
        for e in range(dmax + 1):
            exps[i] = e
            rec(
                i + 1,
                [x - e * d[k] for k, x in enumerate(residual_free)],
                [x - e * d[a + k] for k, x in enumerate(residual_tors)],
                budget - e * w,
            )
        exps[i] = 0

    rec(0, list(target[:a]), list(target[a:]), budget)
    return sorted(out, key=degrevlex_key, reverse=True)
