"""Multivariate polynomials with exact rational coefficients.

Text grammar accepted by :func:`parse_poly` (whitespace is ignored)::

    poly   := [sign] term (sign term)*
    sign   := '+' | '-'
    term   := coeff ['*' factor ('*' factor)*] | factor ('*' factor)*
    factor := var ['^' uint]
    coeff  := uint | '(' ['-'] uint ['/' uint] ')'
    var    := [A-Za-z_][A-Za-z0-9_]*

Repeated factors multiply (``x*x`` is ``x^2``).  Rendering uses graded
lexicographic order, highest degree first, and re-parses to the same value.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import (
    ChartError,
    ExponentOverflow,
    PolySyntaxError,
    UnknownVariable,
    VariableMismatch,
)

# Exponents are bounded by a signed 64-bit machine word.
MAX_EXPONENT = 2**63 - 1

Monomial = tuple  # tuple[int, ...], one slot per variable


class MultiPoly:
    """Immutable polynomial over Q in a fixed, ordered list of variables."""

    __slots__ = ("variables", "_terms", "_hash")

    def __init__(self, variables: Iterable[str], terms: Mapping[Monomial, object] | None = None):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise VariableMismatch(f"duplicate variable names in {variables}")
        clean = {}
        for mono, coeff in (terms or {}).items():
            mono = tuple(int(e) for e in mono)
            if len(mono) != len(variables):
                raise VariableMismatch(
                    f"monomial {mono} has {len(mono)} slots, expected {len(variables)}"
                )
            if any(e < 0 for e in mono):
                raise ValueError(f"negative exponent in {mono}")
            c = Fraction(coeff)
            if c:
                clean[mono] = c
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "_terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, variables: Sequence[str]) -> "MultiPoly":
        return cls(variables)

    @classmethod
    def constant(cls, value, variables: Sequence[str]) -> "MultiPoly":
        return cls(variables, {(0,) * len(variables): value})

    @classmethod
    def var(cls, name: str, variables: Sequence[str]) -> "MultiPoly":
        variables = tuple(variables)
        if name not in variables:
            raise UnknownVariable(name)
        mono = tuple(int(v == name) for v in variables)
        return cls(variables, {mono: 1})

    # -- basic accessors --------------------------------------------------

    @property
    def terms(self) -> dict:
        """Copy of the term map ``monomial -> nonzero Fraction``."""
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coefficient(self, mono: Monomial) -> Fraction:
        return self._terms.get(tuple(mono), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def constant_term(self) -> Fraction:
        return self.coefficient((0,) * len(self.variables))

    def total_degree(self) -> int | None:
        """Maximum total degree of a term; ``None`` for the zero polynomial."""
        if not self._terms:
            return None
        return max(sum(m) for m in self._terms)

    def min_degree(self) -> int | None:
        if not self._terms:
            return None
        return min(sum(m) for m in self._terms)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self._terms}) <= 1

    # -- arithmetic -------------------------------------------------------

    def _check(self, other: "MultiPoly") -> None:
        if self.variables != other.variables:
            raise VariableMismatch(f"{self.variables} != {other.variables}")

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.constant(other, self.variables)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return MultiPoly(self.variables, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.variables, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return MultiPoly(self.variables, {m: c * v for m, v in self._terms.items()})
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check(other)
        out: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return MultiPoly(self.variables, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = MultiPoly.constant(1, self.variables)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.variables == other.variables and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(
                self, "_hash", hash((self.variables, frozenset(self._terms.items())))
            )
        return self._hash

    # -- calculus and substitution ---------------------------------------

    def derivative(self, index: int) -> "MultiPoly":
        out = {}
        for m, c in self._terms.items():
            e = m[index]
            if e:
                out[m[:index] + (e - 1,) + m[index + 1 :]] = c * e
        return MultiPoly(self.variables, out)

    def jacobian(self) -> list["MultiPoly"]:
        return [self.derivative(i) for i in range(len(self.variables))]

    def dehomogenize(self, chart) -> "MultiPoly":
        """Set the chart variable (index or name) to 1 and drop it."""
        index = self._index(chart)
        variables = self.variables[:index] + self.variables[index + 1 :]
        out: dict = {}
        for m, c in self._terms.items():
            key = m[:index] + m[index + 1 :]
            out[key] = out.get(key, 0) + c
        return MultiPoly(variables, out)

    def truncate(self, degree: int) -> "MultiPoly":
        """Drop every term of total degree >= ``degree``."""
        return MultiPoly(
            self.variables, {m: c for m, c in self._terms.items() if sum(m) < degree}
        )

    def reorder(self, variables: Sequence[str]) -> "MultiPoly":
        """Same polynomial written in a permuted variable list."""
        variables = tuple(variables)
        if sorted(variables) != sorted(self.variables):
            raise VariableMismatch(f"{variables} is not a permutation of {self.variables}")
        perm = [self.variables.index(v) for v in variables]
        return MultiPoly(
            variables, {tuple(m[i] for i in perm): c for m, c in self._terms.items()}
        )

    def _index(self, chart) -> int:
        if isinstance(chart, str):
            if chart not in self.variables:
                raise ChartError(f"unknown chart variable {chart!r}")
            return self.variables.index(chart)
        if not 0 <= chart < len(self.variables):
            raise ChartError(f"chart index {chart} out of range for {len(self.variables)} variables")
        return chart

    # -- rendering --------------------------------------------------------

    def sorted_terms(self) -> list:
        """Terms in graded lexicographic order, highest first."""
        return sorted(self._terms.items(), key=lambda mc: (sum(mc[0]), mc[0]), reverse=True)

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"MultiPoly({render(self)!r}, {list(self.variables)!r})"


def _render_coeff(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"({c.numerator}/{c.denominator})"


def _render_monomial(mono: Monomial, variables: Sequence[str]) -> str:
    parts = []
    for v, e in zip(variables, mono):
        if e == 1:
            parts.append(v)
        elif e > 1:
            parts.append(f"{v}^{e}")
    return "*".join(parts)


def render(f: MultiPoly) -> str:
    if f.is_zero():
        return "0"
    pieces = []
    for i, (mono, c) in enumerate(f.sorted_terms()):
        sign = "-" if c < 0 else "+"
        a = abs(c)
        body = _render_monomial(mono, f.variables)
        if not body:
            text = _render_coeff(a)
        elif a == 1:
            text = body
        else:
            text = f"{_render_coeff(a)}*{body}"
        if i == 0:
            pieces.append(text if sign == "+" else f"-{text}")
        else:
            pieces.append(f" {sign} {text}")
    return "".join(pieces)


class _Parser:
    def __init__(self, text: str, variables: Sequence[str]):
        self.text = text
        self.variables = tuple(variables)
        self.pos = 0

    def offset(self, pos: int | None = None) -> int:
        pos = self.pos if pos is None else pos
        return len(self.text[:pos].encode("utf-8"))

    def error(self, message: str, pos: int | None = None):
        raise PolySyntaxError(message, self.offset(pos))

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            found = self.peek() or "end of input"
            self.error(f"expected {ch!r}, found {found!r}")
        self.pos += 1

    def uint(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected unsigned integer")
        return int(self.text[start : self.pos])

    def ident(self) -> tuple[str, int]:
        self.skip()
        start = self.pos
        if self.pos < len(self.text) and (self.text[self.pos].isalpha() or self.text[self.pos] == "_"):
            self.pos += 1
            while self.pos < len(self.text) and (
                self.text[self.pos].isalnum() or self.text[self.pos] == "_"
            ):
                self.pos += 1
            return self.text[start : self.pos], start
        self.error("expected variable name")

    def coeff(self) -> Fraction:
        if self.peek() == "(":
            self.pos += 1
            negative = False
            if self.peek() == "-":
                negative = True
                self.pos += 1
            num = self.uint()
            den = 1
            if self.peek() == "/":
                self.pos += 1
                den_pos = self.pos
                den = self.uint()
                if den == 0:
                    self.error("zero denominator", den_pos)
            self.expect(")")
            value = Fraction(num, den)
            return -value if negative else value
        return Fraction(self.uint())

    def factor(self, mono: list[int]) -> None:
        name, start = self.ident()
        if name not in self.variables:
            raise UnknownVariable(f"unknown variable {name!r} at byte offset {self.offset(start)}")
        exp = 1
        if self.peek() == "^":
            self.pos += 1
            exp_pos = self.pos
            exp = self.uint()
            if exp > MAX_EXPONENT:
                raise ExponentOverflow(
                    f"exponent {exp} exceeds {MAX_EXPONENT} at byte offset {self.offset(exp_pos)}"
                )
        i = self.variables.index(name)
        mono[i] += exp
        if mono[i] > MAX_EXPONENT:
            raise ExponentOverflow(f"accumulated exponent of {name} exceeds {MAX_EXPONENT}")

    def term(self) -> tuple[tuple, Fraction]:
        mono = [0] * len(self.variables)
        ch = self.peek()
        if ch.isdigit() or ch == "(":
            c = self.coeff()
            if self.peek() != "*":
                return tuple(mono), c
            self.pos += 1
        else:
            c = Fraction(1)
        self.factor(mono)
        while self.peek() == "*":
            self.pos += 1
            self.factor(mono)
        return tuple(mono), c

    def poly(self) -> MultiPoly:
        if not self.peek():
            self.error("empty polynomial")
        terms: dict = {}
        sign = 1
        if self.peek() in "+-":
            sign = -1 if self.peek() == "-" else 1
            self.pos += 1
        while True:
            mono, c = self.term()
            terms[mono] = terms.get(mono, 0) + sign * c
            ch = self.peek()
            if not ch:
                break
            if ch not in "+-":
                self.error(f"unexpected character {ch!r}")
            sign = -1 if ch == "-" else 1
            self.pos += 1
        return MultiPoly(self.variables, terms)


def parse_poly(text: str, variables: Sequence[str]) -> MultiPoly:
    """Parse ``text`` into a polynomial over the ordered ``variables``."""
    return _Parser(text, variables).poly()


def total_degree(f: MultiPoly) -> int | None:
    return f.total_degree()


def is_homogeneous(f: MultiPoly) -> bool:
    return f.is_homogeneous()


def jacobian(f: MultiPoly) -> list[MultiPoly]:
    return f.jacobian()


def dehomogenize(f: MultiPoly, chart) -> MultiPoly:
    if not f.is_homogeneous():
        raise ValueError("dehomogenize expects a homogeneous polynomial")
    return f.dehomogenize(chart)


def monomials_below(nvars: int, degree: int) -> list[Monomial]:
    """All monomials in ``nvars`` variables of total degree < ``degree``, graded order."""
    out = []
    for d in range(degree):
        out.extend(monomials_of_degree(nvars, d))
    return out


def monomials_of_degree(nvars: int, degree: int) -> list[Monomial]:
    if nvars == 0:
        return [()] if degree == 0 else []
    if nvars == 1:
        return [(degree,)]
    out = []
    for first in range(degree, -1, -1):
        for rest in monomials_of_degree(nvars - 1, degree - first):
            out.append((first,) + rest)
    return out
