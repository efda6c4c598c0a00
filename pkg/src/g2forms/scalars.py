"""Exact scalar arithmetic: rationals and multivariate polynomials over Q.

The engine never touches floating point.  A scalar is a ``PolyScalar``: a
polynomial with ``fractions.Fraction`` coefficients in a fixed, ordered tuple
of parameter symbols (the *context*).  Plain rationals are the special case
of an empty context or a constant polynomial.

PolyScalar values are immutable and always kept in canonical form: dense
exponent vectors (one entry per context symbol), no zero coefficients
stored.  Because of this, two polynomials are equal if and only if their
term maps are identical, so the zero test is exact and free.

Only ring operations (add, neg, mul) plus division of rational constants
are provided; nothing in the engine needs polynomial division.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping

__all__ = [
    "ContextMismatchError",
    "PolyScalar",
    "Rational",
    "format_rational",
    "parse_rational",
]

Rational = Fraction


class ContextMismatchError(ValueError):
    """Two scalars with different parameter contexts were combined."""


def parse_rational(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"`` into a Fraction."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"invalid rational literal {text!r}") from exc


def format_rational(value: Fraction) -> str:
    """Render a Fraction as ``p/q``, omitting ``/q`` when the denominator is 1."""
    return str(value)


_SYMBOL_RE = re.compile(r"^[A-Za-z][A-Za-z0-9_]*$")
_RATIONAL_RE = re.compile(r"^-?\d+(/\d+)?$")


class PolyScalar:
    """Multivariate polynomial over Q in an ordered parameter context.

    ``symbols`` is the context (a tuple of names); ``terms`` maps dense
    exponent tuples (length ``len(symbols)``) to nonzero Fractions.
    """

    __slots__ = ("symbols", "terms")

    def __init__(self, symbols: Iterable[str], terms: Mapping[tuple, Fraction] | None = None):
        symbols = tuple(symbols)
        seen = set()
        for name in symbols:
            if not _SYMBOL_RE.match(name):
                raise ValueError(f"invalid symbol name {name!r}")
            if name in seen:
                raise ValueError(f"duplicate symbol {name!r} in context")
            seen.add(name)
        nsym = len(symbols)
        clean: dict[tuple, Fraction] = {}
        if terms:
            for expo, coeff in terms.items():
                expo = tuple(int(e) for e in expo)
                if len(expo) != nsym:
                    raise ValueError(
                        f"exponent vector {expo} does not match context of {nsym} symbols"
                    )
                if any(e < 0 for e in expo):
                    raise ValueError(f"negative exponent in {expo}")
                coeff = Fraction(coeff)
                if coeff:
                    acc = clean.get(expo, _ZERO) + coeff
                    if acc:
                        clean[expo] = acc
                    else:
                        clean.pop(expo, None)
        self.symbols = symbols
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def constant(cls, value, symbols: Iterable[str] = ()) -> "PolyScalar":
        symbols = tuple(symbols)
        value = Fraction(value)
        if not value:
            return cls(symbols)
        return cls(symbols, {(0,) * len(symbols): value})

    @classmethod
    def zero(cls, symbols: Iterable[str] = ()) -> "PolyScalar":
        return cls(symbols)

    @classmethod
    def one(cls, symbols: Iterable[str] = ()) -> "PolyScalar":
        return cls.constant(1, symbols)

    @classmethod
    def symbol(cls, name: str, symbols: Iterable[str]) -> "PolyScalar":
        symbols = tuple(symbols)
        if name not in symbols:
            raise ValueError(f"symbol {name!r} is not in context {symbols}")
        expo = tuple(1 if s == name else 0 for s in symbols)
        return cls(symbols, {expo: Fraction(1)})

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(expo) for expo in self.terms)

    def constant_value(self) -> Fraction:
        """The value of a constant polynomial, as a Fraction."""
        if not self.terms:
            return Fraction(0)
        if not self.is_constant():
            raise ValueError(f"{self.render()} is not a constant")
        return next(iter(self.terms.values()))

    def total_degree(self) -> int:
        if not self.terms:
            return 0
        return max(sum(expo) for expo in self.terms)

    # -- ring operations ---------------------------------------------------

    def _check_context(self, other: "PolyScalar") -> None:
        if self.symbols != other.symbols:
            raise ContextMismatchError(
                f"context mismatch: {self.symbols} vs {other.symbols}"
            )

    def __add__(self, other: "PolyScalar") -> "PolyScalar":
        if not isinstance(other, PolyScalar):
            return NotImplemented
        self._check_context(other)
        terms = dict(self.terms)
        for expo, coeff in other.terms.items():
            acc = terms.get(expo, _ZERO) + coeff
            if acc:
                terms[expo] = acc
            else:
                terms.pop(expo, None)
        return PolyScalar(self.symbols, terms)

    def __neg__(self) -> "PolyScalar":
        return PolyScalar(self.symbols, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "PolyScalar") -> "PolyScalar":
        if not isinstance(other, PolyScalar):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: "PolyScalar") -> "PolyScalar":
        if not isinstance(other, PolyScalar):
            return NotImplemented
        self._check_context(other)
        terms: dict[tuple, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                expo = tuple(a + b for a, b in zip(e1, e2))
                acc = terms.get(expo, _ZERO) + c1 * c2
                if acc:
                    terms[expo] = acc
                else:
                    terms.pop(expo, None)
        return PolyScalar(self.symbols, terms)

    def __pow__(self, power: int) -> "PolyScalar":
        if not isinstance(power, int) or power < 0:
            raise ValueError("only nonnegative integer powers are supported")
        result = PolyScalar.one(self.symbols)
        for _ in range(power):
            result = result * self
        return result

    def scale(self, value) -> "PolyScalar":
        """Multiply by a plain rational."""
        value = Fraction(value)
        return PolyScalar(self.symbols, {e: c * value for e, c in self.terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolyScalar):
            return NotImplemented
        return self.symbols == other.symbols and self.terms == other.terms

    __hash__ = None  # mutable dict inside; not hashable

    # -- substitution ------------------------------------------------------

    def substitute(self, assignment: Mapping[str, Fraction]) -> "PolyScalar":
        """Substitute rationals for a subset of the context symbols.

        The result lives in the reduced context (assigned symbols removed,
        order preserved).  Assigning every symbol yields a constant.
        """
        for name in assignment:
            if name not in self.symbols:
                raise ValueError(f"unknown symbol {name!r} in assignment")
        values = {name: Fraction(v) for name, v in assignment.items()}
        keep = [i for i, s in enumerate(self.symbols) if s not in values]
        new_symbols = tuple(self.symbols[i] for i in keep)
        terms: dict[tuple, Fraction] = {}
        for expo, coeff in self.terms.items():
            factor = coeff
            for i, s in enumerate(self.symbols):
                if s in values and expo[i]:
                    factor *= values[s] ** expo[i]
            new_expo = tuple(expo[i] for i in keep)
            acc = terms.get(new_expo, _ZERO) + factor
            if acc:
                terms[new_expo] = acc
            else:
                terms.pop(new_expo, None)
        return PolyScalar(new_symbols, terms)

    def with_symbols(self, symbols: Iterable[str]) -> "PolyScalar":
        """Reinterpret this polynomial in a larger context.

        Every current symbol must appear in the target context.
        """
        symbols = tuple(symbols)
        positions = []
        for name in self.symbols:
            if name not in symbols:
                raise ValueError(f"target context is missing symbol {name!r}")
            positions.append(symbols.index(name))
        nsym = len(symbols)
        terms = {}
        for expo, coeff in self.terms.items():
            new_expo = [0] * nsym
            for pos, e in zip(positions, expo):
                new_expo[pos] = e
            terms[tuple(new_expo)] = coeff
        return PolyScalar(symbols, terms)

    # -- rendering / parsing -----------------------------------------------

    def render(self) -> str:
        """Canonical text form: graded-lex term order, symbols in context order.

        Examples: ``6*b - 2``, ``-a3``, ``1/2*a1 + 2*a2``.
        """
        if not self.terms:
            return "0"
        items = sorted(
            self.terms.items(),
            key=lambda kv: (-sum(kv[0]), tuple(-e for e in kv[0])),
        )
        parts: list[str] = []
        for expo, coeff in items:
            monomial = "*".join(
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(self.symbols, expo)
                if e
            )
            mag = abs(coeff)
            if not monomial:
                body = format_rational(mag)
            elif mag == 1:
                body = monomial
            else:
                body = f"{format_rational(mag)}*{monomial}"
            if not parts:
                parts.append(body if coeff > 0 else f"-{body}")
            else:
                parts.append(f" + {body}" if coeff > 0 else f" - {body}")
        return "".join(parts)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"PolyScalar({self.symbols!r}, {self.render()!r})"

    @classmethod
    def parse(cls, text: str, symbols: Iterable[str]) -> "PolyScalar":
        """Parse the canonical rendering (and harmless variants of it)."""
        symbols = tuple(symbols)
        compact = text.replace(" ", "")
        if not compact:
            raise ValueError("empty polynomial literal")
        result = cls.zero(symbols)
        for match in re.finditer(r"[+-]?[^+-]+", compact):
            chunk = match.group()
            sign = Fraction(1)
            if chunk[0] == "+":
                chunk = chunk[1:]
            elif chunk[0] == "-":
                sign = Fraction(-1)
                chunk = chunk[1:]
            if not chunk:
                raise ValueError(f"dangling sign in {text!r}")
            coeff = sign
            expo = [0] * len(symbols)
            for factor in chunk.split("*"):
                if not factor:
                    raise ValueError(f"empty factor in {text!r}")
                if _RATIONAL_RE.match(factor):
                    coeff *= Fraction(factor)
                    continue
                if "^" in factor:
                    name, _, power_text = factor.partition("^")
                    if not power_text.isdigit():
                        raise ValueError(f"invalid exponent in {factor!r}")
                    power = int(power_text)
                else:
                    name, power = factor, 1
                if name not in symbols:
                    raise ValueError(f"unknown symbol {name!r} (context {symbols})")
                expo[symbols.index(name)] += power
            term = cls(symbols, {tuple(expo): coeff})
            result = result + term
        return result


_ZERO = Fraction(0)
