"""Alternating multilinear forms with exact coefficients.

An :class:`AltForm` of degree k on an n-dimensional space stores a map from
strictly increasing k-tuples of basis indices (1-based, matching the usual
``e^{i j k}`` notation) to nonzero :class:`~g2forms.scalars.PolyScalar`
coefficients.  Wedge products compute their sign by counting transpositions
while merging the index tuples; contraction and evaluation are the exact
antiderivation and alternating-sum formulas.

Basis covectors are 1-indexed throughout, so ``basis_form(7, (1, 2, 7))``
is the form usually written ``e^{127}``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from itertools import combinations, permutations
from typing import Iterable, Mapping, Sequence

from g2forms.scalars import ContextMismatchError, PolyScalar, format_rational

__all__ = [
    "AltForm",
    "Vector",
    "basis_form",
    "basis_vector",
    "contract",
    "evaluate",
    "merge_sign",
    "parse_form",
    "pullback",
    "sort_sign",
    "top_coefficient",
    "wedge",
]


def sort_sign(indices: Sequence[int]) -> tuple[tuple[int, ...], int] | None:
    """Sort indices, returning (sorted tuple, permutation sign).

    Returns None when an index repeats (the alternating form vanishes).
    """
    items = list(indices)
    sign = 1
    # insertion sort; n <= 8 everywhere in this package
    for i in range(1, len(items)):
        j = i
        while j > 0 and items[j - 1] > items[j]:
            items[j - 1], items[j] = items[j], items[j - 1]
            sign = -sign
            j -= 1
    for a, b in zip(items, items[1:]):
        if a == b:
            return None
    return tuple(items), sign


def merge_sign(left: Sequence[int], right: Sequence[int]) -> tuple[tuple[int, ...], int] | None:
    """Merge two strictly increasing tuples, counting the crossing sign."""
    merged: list[int] = []
    sign = 1
    i = j = 0
    while i < len(left) and j < len(right):
        if left[i] == right[j]:
            return None
        if left[i] < right[j]:
            merged.append(left[i])
            i += 1
        else:
            if (len(left) - i) % 2:
                sign = -sign
            merged.append(right[j])
            j += 1
    merged.extend(left[i:])
    merged.extend(right[j:])
    return tuple(merged), sign


class Vector:
    """A tangent vector: components over a shared scalar context."""

    __slots__ = ("dim", "symbols", "components")

    def __init__(self, components: Iterable[PolyScalar]):
        components = tuple(components)
        if not components:
            raise ValueError("a vector needs at least one component")
        symbols = components[0].symbols
        for c in components:
            if c.symbols != symbols:
                raise ContextMismatchError("vector components disagree on context")
        self.dim = len(components)
        self.symbols = symbols
        self.components = components

    @classmethod
    def from_rationals(cls, values: Iterable, symbols: Iterable[str] = ()) -> "Vector":
        symbols = tuple(symbols)
        return cls([PolyScalar.constant(v, symbols) for v in values])

    def with_symbols(self, symbols: Iterable[str]) -> "Vector":
        return Vector([c.with_symbols(symbols) for c in self.components])

    def __eq__(self, other) -> bool:
        if not isinstance(other, Vector):
            return NotImplemented
        return self.components == other.components

    __hash__ = None

    def __repr__(self) -> str:
        return f"Vector([{', '.join(c.render() for c in self.components)}])"


def basis_vector(dim: int, index: int, symbols: Iterable[str] = ()) -> Vector:
    """The basis vector e_index (1-based)."""
    if not 1 <= index <= dim:
        raise ValueError(f"index {index} out of range 1..{dim}")
    symbols = tuple(symbols)
    return Vector(
        [PolyScalar.constant(1 if i == index else 0, symbols) for i in range(1, dim + 1)]
    )


class AltForm:
    """Alternating k-form on an n-dimensional space."""

    __slots__ = ("dim", "degree", "symbols", "coeffs")

    def __init__(
        self,
        dim: int,
        degree: int,
        symbols: Iterable[str] = (),
        coeffs: Mapping[tuple, PolyScalar] | None = None,
    ):
        if dim < 1:
            raise ValueError("dimension must be positive")
        if degree < 0:
            raise ValueError("degree must be nonnegative")
        symbols = tuple(symbols)
        clean: dict[tuple, PolyScalar] = {}
        if coeffs:
            for idx, coeff in coeffs.items():
                idx = tuple(int(i) for i in idx)
                if len(idx) != degree:
                    raise ValueError(f"index {idx} does not have degree {degree}")
                if any(not 1 <= i <= dim for i in idx):
                    raise ValueError(f"index {idx} out of range 1..{dim}")
                if any(a >= b for a, b in zip(idx, idx[1:])):
                    raise ValueError(f"index {idx} is not strictly increasing")
                if coeff.symbols != symbols:
                    raise ContextMismatchError("coefficient context does not match form")
                if not coeff.is_zero():
                    clean[idx] = coeff
        if degree > dim and clean:
            raise ValueError("degree exceeds dimension but coefficients are present")
        self.dim = dim
        self.degree = degree
        self.symbols = symbols
        self.coeffs = clean

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, indices: Sequence[int]) -> PolyScalar:
        key = tuple(indices)
        return self.coeffs.get(key, PolyScalar.zero(self.symbols))

    def eval_basis(self, indices: Sequence[int]) -> PolyScalar:
        """Evaluate on basis vectors e_{i_1}, ..., e_{i_k} (any order)."""
        if len(indices) != self.degree:
            raise ValueError(f"expected {self.degree} indices, got {len(indices)}")
        sorted_sign = sort_sign(indices)
        if sorted_sign is None:
            return PolyScalar.zero(self.symbols)
        key, sign = sorted_sign
        coeff = self.coeffs.get(key)
        if coeff is None:
            return PolyScalar.zero(self.symbols)
        return coeff if sign == 1 else -coeff

    def rational_coefficients(self) -> dict[tuple, Fraction]:
        """Coefficients as Fractions; raises if any coefficient is symbolic."""
        out = {}
        for idx, coeff in self.coeffs.items():
            out[idx] = coeff.constant_value()
        return out

    def is_rational(self) -> bool:
        return all(c.is_constant() for c in self.coeffs.values())

    # -- linear structure ----------------------------------------------------

    def _check_compatible(self, other: "AltForm") -> None:
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")
        if self.symbols != other.symbols:
            raise ContextMismatchError(
                f"context mismatch: {self.symbols} vs {other.symbols}"
            )

    def __add__(self, other: "AltForm") -> "AltForm":
        if not isinstance(other, AltForm):
            return NotImplemented
        self._check_compatible(other)
        if self.degree != other.degree:
            raise ValueError("cannot add forms of different degree")
        coeffs = dict(self.coeffs)
        for idx, coeff in other.coeffs.items():
            acc = coeffs.get(idx)
            acc = coeff if acc is None else acc + coeff
            if acc.is_zero():
                coeffs.pop(idx, None)
            else:
                coeffs[idx] = acc
        return AltForm(self.dim, self.degree, self.symbols, coeffs)

    def __neg__(self) -> "AltForm":
        return AltForm(
            self.dim, self.degree, self.symbols, {i: -c for i, c in self.coeffs.items()}
        )

    def __sub__(self, other: "AltForm") -> "AltForm":
        if not isinstance(other, AltForm):
            return NotImplemented
        return self + (-other)

    def scale(self, value) -> "AltForm":
        """Multiply by a PolyScalar or a plain rational."""
        if isinstance(value, PolyScalar):
            if value.symbols != self.symbols:
                raise ContextMismatchError("scalar context does not match form")
            return AltForm(
                self.dim,
                self.degree,
                self.symbols,
                {i: c * value for i, c in self.coeffs.items()},
            )
        return AltForm(
            self.dim,
            self.degree,
            self.symbols,
            {i: c.scale(value) for i, c in self.coeffs.items()},
        )

    def with_symbols(self, symbols: Iterable[str]) -> "AltForm":
        symbols = tuple(symbols)
        return AltForm(
            self.dim,
            self.degree,
            symbols,
            {i: c.with_symbols(symbols) for i, c in self.coeffs.items()},
        )

    def substitute(self, assignment) -> "AltForm":
        new_symbols = None
        coeffs = {}
        for idx, coeff in self.coeffs.items():
            sub = coeff.substitute(assignment)
            new_symbols = sub.symbols
            coeffs[idx] = sub
        if new_symbols is None:
            probe = PolyScalar.zero(self.symbols).substitute(assignment)
            new_symbols = probe.symbols
        return AltForm(self.dim, self.degree, new_symbols, coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, AltForm):
            return NotImplemented
        return (
            self.dim == other.dim
            and self.degree == other.degree
            and self.symbols == other.symbols
            and self.coeffs == other.coeffs
        )

    __hash__ = None

    def render(self) -> str:
        return render_form(self)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"AltForm({self.dim}, {self.degree}, {self.render()!r})"


def basis_form(dim: int, indices: Sequence[int], symbols: Iterable[str] = ()) -> AltForm:
    """The basis form e^{i_1 ... i_k} (indices in any order, sign applied)."""
    symbols = tuple(symbols)
    sorted_sign = sort_sign(indices)
    if sorted_sign is None:
        return AltForm(dim, len(indices), symbols)
    key, sign = sorted_sign
    return AltForm(dim, len(indices), symbols, {key: PolyScalar.constant(sign, symbols)})


# -- operations --------------------------------------------------------------


def wedge(alpha: AltForm, beta: AltForm) -> AltForm:
    """Exterior product; graded-commutative and associative."""
    alpha._check_compatible(beta)
    degree = alpha.degree + beta.degree
    coeffs: dict[tuple, PolyScalar] = {}
    if degree > alpha.dim:
        return AltForm(alpha.dim, degree, alpha.symbols)
    for i1, c1 in alpha.coeffs.items():
        for i2, c2 in beta.coeffs.items():
            merged = merge_sign(i1, i2)
            if merged is None:
                continue
            idx, sign = merged
            term = c1 * c2
            if sign < 0:
                term = -term
            acc = coeffs.get(idx)
            acc = term if acc is None else acc + term
            if acc.is_zero():
                coeffs.pop(idx, None)
            else:
                coeffs[idx] = acc
    return AltForm(alpha.dim, degree, alpha.symbols, coeffs)


def contract(vector: Vector, alpha: AltForm) -> AltForm:
    """Interior product (contraction) of a vector into a form."""
    if alpha.degree == 0:
        raise ValueError("cannot contract into a 0-form")
    if vector.dim != alpha.dim:
        raise ValueError(f"dimension mismatch: {vector.dim} vs {alpha.dim}")
    if vector.symbols != alpha.symbols:
        raise ContextMismatchError("vector context does not match form")
    coeffs: dict[tuple, PolyScalar] = {}
    for idx, coeff in alpha.coeffs.items():
        for pos, i in enumerate(idx):
            comp = vector.components[i - 1]
            if comp.is_zero():
                continue
            term = coeff * comp
            if pos % 2:
                term = -term
            rest = idx[:pos] + idx[pos + 1 :]
            acc = coeffs.get(rest)
            acc = term if acc is None else acc + term
            if acc.is_zero():
                coeffs.pop(rest, None)
            else:
                coeffs[rest] = acc
    return AltForm(alpha.dim, alpha.degree - 1, alpha.symbols, coeffs)


def top_coefficient(alpha: AltForm) -> PolyScalar:
    """The coefficient of e^{1...n} in a top-degree form."""
    if alpha.degree != alpha.dim:
        raise ValueError(
            f"top_coefficient needs degree {alpha.dim}, got degree {alpha.degree}"
        )
    return alpha.coefficient(tuple(range(1, alpha.dim + 1)))


def evaluate(alpha: AltForm, vectors: Sequence[Vector]) -> PolyScalar:
    """Full alternating multilinear evaluation alpha(v_1, ..., v_k)."""
    if len(vectors) != alpha.degree:
        raise ValueError(f"expected {alpha.degree} vectors, got {len(vectors)}")
    for v in vectors:
        if v.dim != alpha.dim:
            raise ValueError("vector dimension does not match form")
        if v.symbols != alpha.symbols:
            raise ContextMismatchError("vector context does not match form")
    if alpha.degree == 0:
        return alpha.coefficient(())
    total = PolyScalar.zero(alpha.symbols)
    for idx, coeff in alpha.coeffs.items():
        rows = [[v.components[i - 1] for v in vectors] for i in idx]
        total = total + coeff * _poly_det(rows)
    return total


def _poly_det(rows: list) -> PolyScalar:
    n = len(rows)
    if n == 1:
        return rows[0][0]
    symbols = rows[0][0].symbols
    total = PolyScalar.zero(symbols)
    for c in range(n):
        entry = rows[0][c]
        if entry.is_zero():
            continue
        minor = [row[:c] + row[c + 1 :] for row in rows[1:]]
        term = entry * _poly_det(minor)
        total = total + (term if c % 2 == 0 else -term)
    return total


def evaluate_by_permutations(alpha: AltForm, vectors: Sequence[Vector]) -> PolyScalar:
    """Brute-force evaluation as a sum over all k! permutations.

    Independent of :func:`evaluate`; kept as a cross-checking oracle.
    """
    if len(vectors) != alpha.degree:
        raise ValueError(f"expected {alpha.degree} vectors, got {len(vectors)}")
    if alpha.degree == 0:
        return alpha.coefficient(())
    total = PolyScalar.zero(alpha.symbols)
    k = alpha.degree
    for idx, coeff in alpha.coeffs.items():
        for perm in permutations(range(k)):
            sign = _permutation_sign(perm)
            prod = PolyScalar.constant(sign, alpha.symbols)
            for slot, vpos in enumerate(perm):
                prod = prod * vectors[vpos].components[idx[slot] - 1]
            total = total + coeff * prod
    return total


def _permutation_sign(perm: Sequence[int]) -> int:
    sign = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    return sign


def pullback(alpha: AltForm, matrix: Sequence[Sequence]) -> AltForm:
    """Pullback of a form along the linear map with the given matrix.

    ``matrix[r][c]`` is the e_r component of the image of e_c; entries may
    be Fractions or PolyScalars in the form's context.
    """
    n = alpha.dim
    if len(matrix) != n or any(len(row) != n for row in matrix):
        raise ValueError("matrix shape does not match form dimension")
    cols = []
    for c in range(n):
        comps = []
        for r in range(n):
            entry = matrix[r][c]
            if not isinstance(entry, PolyScalar):
                entry = PolyScalar.constant(entry, alpha.symbols)
            comps.append(entry)
        cols.append(Vector(comps))
    coeffs = {}
    for idx in combinations(range(1, n + 1), alpha.degree):
        value = evaluate(alpha, [cols[i - 1] for i in idx])
        if not value.is_zero():
            coeffs[idx] = value
    return AltForm(n, alpha.degree, alpha.symbols, coeffs)


# -- rendering / parsing ------------------------------------------------------

_FORM_TERM_RE = re.compile(r"^(?:(?P<coeff>[^e]*?)\*?)?e\^\{(?P<idx>\d+)\}$")


def render_form(alpha: AltForm) -> str:
    """Signed-sum rendering, e.g. ``e^{1 2 4} - e^{1 3 5}``.

    Multi-indices are printed in lexicographic order.  Non-constant
    coefficients are parenthesized; rational coefficients follow the
    ``c*e^{...}`` convention with 1 and -1 absorbed into the sign.
    """
    if not alpha.coeffs:
        return "0"
    parts: list[str] = []
    for idx in sorted(alpha.coeffs):
        coeff = alpha.coeffs[idx]
        e_part = "e^{" + " ".join(str(i) for i in idx) + "}"
        if coeff.is_constant():
            value = coeff.constant_value()
            mag = abs(value)
            body = e_part if mag == 1 else f"{format_rational(mag)}*{e_part}"
            negative = value < 0
        else:
            body = f"({coeff.render()})*{e_part}"
            negative = False
        if not parts:
            parts.append(f"-{body}" if negative else body)
        else:
            parts.append(f" - {body}" if negative else f" + {body}")
    return "".join(parts)


def parse_form(
    text: str, dim: int, degree: int | None = None, symbols: Iterable[str] = ()
) -> AltForm:
    """Parse the rendering produced by :func:`render_form`.

    Only rational coefficients are supported (which covers every bundled
    case file); indices are single digits, as dimensions never exceed 9.
    """
    symbols = tuple(symbols)
    compact = text.replace(" ", "")
    if not compact:
        raise ValueError("empty form literal")
    if compact in {"0", "+0", "-0"}:
        if degree is None:
            raise ValueError("the zero form needs an explicit degree")
        return AltForm(dim, degree, symbols)
    result: AltForm | None = None
    for match in re.finditer(r"[+-]?[^+-]+", compact):
        chunk = match.group()
        sign = Fraction(1)
        if chunk[0] == "+":
            chunk = chunk[1:]
        elif chunk[0] == "-":
            sign = Fraction(-1)
            chunk = chunk[1:]
        m = _FORM_TERM_RE.match(chunk)
        if not m:
            raise ValueError(f"cannot parse form term {chunk!r}")
        coeff_text = m.group("coeff") or ""
        coeff = sign * (Fraction(coeff_text) if coeff_text else Fraction(1))
        indices = tuple(int(ch) for ch in m.group("idx"))
        if any(not 1 <= i <= dim for i in indices):
            raise ValueError(f"index out of range 1..{dim} in {chunk!r}")
        term = basis_form(dim, indices, symbols).scale(coeff)
        if degree is not None and term.degree != degree:
            raise ValueError(f"term {chunk!r} does not have degree {degree}")
        result = term if result is None else result + term
    assert result is not None
    return result
