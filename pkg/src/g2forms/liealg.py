"""Lie algebras from structure constants or matrix bases; reductive splits.

A :class:`LieAlgebra` stores antisymmetric structure constants c^k_{ij}
(only i < j kept) over a shared scalar context.  :func:`from_matrices`
derives the constants from an explicit matrix basis by exact linear solves;
complex matrices are accepted as (re, im) pairs and realified, which keeps
every computation in Q while preserving all brackets.

:func:`reductive_split` extracts the data a homogeneous space G/H needs:
the isotropy action ad(h)|_m and the m-projection of the bracket on m.
Cases where only that projected data is known (no full algebra) enter
through :func:`homogeneous_from_partial` and are flagged ``partial``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from g2forms import _linalg
from g2forms.scalars import PolyScalar

__all__ = [
    "HomogeneousSpaceData",
    "JacobiReport",
    "LieAlgebra",
    "LieStructureError",
    "MatrixBasis",
    "from_matrices",
    "homogeneous_from_partial",
    "jacobi_check",
    "realify_matrix",
    "reductive_split",
]


class LieStructureError(ValueError):
    """Structural validation of Lie-algebra data failed."""


def realify_matrix(entries: Sequence[Sequence]) -> list[list[Fraction]]:
    """Realify a complex d x d matrix into a real 2d x 2d matrix.

    Entries are Fractions (real) or (re, im) pairs.  The map X -> [[A, -B],
    [B, A]] for X = A + iB is an injective Lie-algebra homomorphism, so
    structure constants computed from realified matrices agree with the
    complex ones.
    """
    d = len(entries)
    real = [[Fraction(0)] * (2 * d) for _ in range(2 * d)]
    for r in range(d):
        row = entries[r]
        if len(row) != d:
            raise ValueError("complex matrix must be square")
        for c in range(d):
            entry = row[c]
            if isinstance(entry, (tuple, list)):
                re_part, im_part = Fraction(entry[0]), Fraction(entry[1])
            else:
                re_part, im_part = Fraction(entry), Fraction(0)
            real[r][c] = re_part
            real[r][c + d] = -im_part
            real[r + d][c] = im_part
            real[r + d][c + d] = re_part
    return real


class MatrixBasis:
    """An ordered list of real square matrices spanning a Lie algebra."""

    def __init__(self, matrices: Sequence[Sequence[Sequence]]):
        mats = []
        size = None
        for m in matrices:
            rows = [[Fraction(x) for x in row] for row in m]
            if size is None:
                size = len(rows)
            if len(rows) != size or any(len(r) != size for r in rows):
                raise ValueError("matrices must be square and equally sized")
            mats.append(rows)
        if not mats:
            raise ValueError("empty matrix basis")
        self.matrices = mats
        self.size = size

    @classmethod
    def from_complex(cls, matrices: Sequence[Sequence[Sequence]]) -> "MatrixBasis":
        """Build a basis from complex matrices with (re, im) pair entries."""
        return cls([realify_matrix(m) for m in matrices])

    def __len__(self) -> int:
        return len(self.matrices)


def _commutator(a, b):
    n = len(a)
    ab = _linalg.matmul(a, b)
    ba = _linalg.matmul(b, a)
    return [[ab[i][j] - ba[i][j] for j in range(n)] for i in range(n)]


def _vec(mat) -> list[Fraction]:
    return [x for row in mat for x in row]


class LieAlgebra:
    """Dimension, basis names and structure constants over one context."""

    def __init__(
        self,
        dim: int,
        constants: Mapping[tuple, Sequence[PolyScalar]],
        names: Sequence[str] | None = None,
        symbols: Iterable[str] = (),
    ):
        symbols = tuple(symbols)
        if names is None:
            names = [f"e{i}" for i in range(1, dim + 1)]
        if len(names) != dim:
            raise ValueError("need one basis name per dimension")
        clean: dict[tuple, tuple] = {}
        for (i, j), comps in constants.items():
            if not (1 <= i < j <= dim):
                raise LieStructureError(
                    f"structure constants must be keyed by 1 <= i < j <= n, got ({i}, {j})"
                )
            comps = tuple(comps)
            if len(comps) != dim:
                raise LieStructureError(f"bracket [{i},{j}] must have {dim} components")
            for c in comps:
                if c.symbols != symbols:
                    raise LieStructureError("structure constant context mismatch")
            if any(not c.is_zero() for c in comps):
                clean[(i, j)] = comps
        self.dim = dim
        self.names = tuple(names)
        self.symbols = symbols
        self.constants = clean

    def bracket(self, i: int, j: int) -> tuple:
        """Components of [e_i, e_j]; antisymmetry handled here."""
        if i == j:
            return tuple(PolyScalar.zero(self.symbols) for _ in range(self.dim))
        if i < j:
            comps = self.constants.get((i, j))
            if comps is None:
                return tuple(PolyScalar.zero(self.symbols) for _ in range(self.dim))
            return comps
        comps = self.bracket(j, i)
        return tuple(-c for c in comps)

    def bracket_of_vectors(self, u: Sequence[PolyScalar], v: Sequence[PolyScalar]) -> list:
        """Bracket of two coefficient vectors, by bilinearity."""
        out = [PolyScalar.zero(self.symbols) for _ in range(self.dim)]
        for i in range(1, self.dim + 1):
            ui = u[i - 1]
            if ui.is_zero():
                continue
            for j in range(1, self.dim + 1):
                vj = v[j - 1]
                if vj.is_zero() or i == j:
                    continue
                comps = self.bracket(i, j)
                factor = ui * vj
                for k in range(self.dim):
                    if not comps[k].is_zero():
                        out[k] = out[k] + factor * comps[k]
        return out

    def with_symbols(self, symbols: Iterable[str]) -> "LieAlgebra":
        symbols = tuple(symbols)
        constants = {
            key: tuple(c.with_symbols(symbols) for c in comps)
            for key, comps in self.constants.items()
        }
        return LieAlgebra(self.dim, constants, self.names, symbols)


def from_matrices(basis: MatrixBasis, names: Sequence[str] | None = None) -> LieAlgebra:
    """Structure constants of the span of a matrix basis, by exact solve.

    Raises :class:`LieStructureError` when the matrices are linearly
    dependent or some commutator leaves the span (with the offending pair).
    """
    n = len(basis)
    if n == 1:
        # a one-dimensional algebra is abelian by antisymmetry, whatever the
        # matrix (including the zero matrix, whose span is degenerate)
        return LieAlgebra(1, {}, names)
    columns = [_vec(m) for m in basis.matrices]
    span_matrix = _linalg.transpose(columns)  # (size^2) x n
    if _linalg.rank(span_matrix) != n:
        raise LieStructureError("matrix basis is linearly dependent")
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    rhs_cols = _linalg.transpose(
        [_vec(_commutator(basis.matrices[i - 1], basis.matrices[j - 1])) for i, j in pairs]
    )
    solutions = _linalg.solve_many(span_matrix, rhs_cols)
    constants: dict[tuple, tuple] = {}
    for (i, j), sol in zip(pairs, solutions):
        if sol is None:
            raise LieStructureError(
                f"commutator [e{i}, e{j}] does not lie in the span of the basis"
            )
        constants[(i, j)] = tuple(PolyScalar.constant(x) for x in sol)
    return LieAlgebra(n, constants, names)


@dataclass
class JacobiReport:
    """Outcome of a Jacobi-identity check."""

    dim: int
    violations: list = field(default_factory=list)  # (i, j, k, component renders)

    @property
    def ok(self) -> bool:
        return not self.violations

    def render(self) -> str:
        if self.ok:
            return "jacobi: valid"
        lines = [f"jacobi: {len(self.violations)} violating triple(s)"]
        for i, j, k, comps in self.violations:
            lines.append(f"  ({i},{j},{k}): cyclic sum = ({', '.join(comps)})")
        return "\n".join(lines)


def jacobi_check(algebra: LieAlgebra) -> JacobiReport:
    """List every triple (i, j, k) whose Jacobi cyclic sum is nonzero."""
    report = JacobiReport(algebra.dim)
    n = algebra.dim
    basis_vecs = [
        [PolyScalar.constant(1 if t == s else 0, algebra.symbols) for t in range(n)]
        for s in range(n)
    ]
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            for k in range(j + 1, n + 1):
                total = [PolyScalar.zero(algebra.symbols) for _ in range(n)]
                for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
                    inner = algebra.bracket(a, b)
                    outer = algebra.bracket_of_vectors(inner, basis_vecs[c - 1])
                    total = [t + o for t, o in zip(total, outer)]
                if any(not t.is_zero() for t in total):
                    report.violations.append(
                        (i, j, k, tuple(t.render() for t in total))
                    )
    return report


class HomogeneousSpaceData:
    """Reductive homogeneous data: isotropy action on m and projected bracket.

    ``isotropy`` is one (dim_m x dim_m) matrix of scalars per isotropy
    generator, column c holding the components of [A, e_c]_m.  ``bracket``
    maps (i, j) with i < j to the m-components of [e_i, e_j]_m.  ``partial``
    marks data not backed by a full Lie algebra, for which d o d = 0 is not
    guaranteed by construction.
    """

    def __init__(
        self,
        dim_m: int,
        isotropy: Sequence[Sequence[Sequence[PolyScalar]]],
        bracket: Mapping[tuple, Sequence[PolyScalar]],
        names: Sequence[str] | None = None,
        symbols: Iterable[str] = (),
        partial: bool = False,
    ):
        symbols = tuple(symbols)
        if names is None:
            names = [f"e{i}" for i in range(1, dim_m + 1)]
        if len(names) != dim_m:
            raise ValueError("need one name per m-basis element")
        iso_clean = []
        for mat in isotropy:
            if len(mat) != dim_m or any(len(row) != dim_m for row in mat):
                raise ValueError("isotropy matrices must be dim_m x dim_m")
            for row in mat:
                for entry in row:
                    if entry.symbols != symbols:
                        raise ValueError("isotropy entry context mismatch")
            iso_clean.append(tuple(tuple(row) for row in mat))
        bracket_clean: dict[tuple, tuple] = {}
        seen: dict[tuple, tuple] = {}
        for (i, j), comps in bracket.items():
            if not (1 <= i <= dim_m and 1 <= j <= dim_m) or i == j:
                raise LieStructureError(f"invalid bracket key ({i}, {j})")
            comps = tuple(comps)
            if len(comps) != dim_m:
                raise LieStructureError(f"bracket [{i},{j}] must have {dim_m} components")
            for c in comps:
                if c.symbols != symbols:
                    raise LieStructureError("bracket component context mismatch")
            seen[(i, j)] = comps
        for (i, j), comps in seen.items():
            if (j, i) in seen:
                mirrored = seen[(j, i)]
                if any(not (a + b).is_zero() for a, b in zip(comps, mirrored)):
                    raise LieStructureError(
                        f"bracket table is not antisymmetric at ({i}, {j})"
                    )
            if i < j and any(not c.is_zero() for c in comps):
                bracket_clean[(i, j)] = comps
            elif i > j and (j, i) not in seen:
                neg = tuple(-c for c in comps)
                if any(not c.is_zero() for c in neg):
                    bracket_clean[(j, i)] = neg
        self.dim_m = dim_m
        self.names = tuple(names)
        self.symbols = symbols
        self.isotropy = tuple(iso_clean)
        self.bracket = bracket_clean
        self.partial = partial

    def bracket_m(self, i: int, j: int) -> tuple:
        """Components of [e_i, e_j]_m, antisymmetry handled."""
        if i == j:
            return tuple(PolyScalar.zero(self.symbols) for _ in range(self.dim_m))
        if i < j:
            comps = self.bracket.get((i, j))
            if comps is None:
                return tuple(PolyScalar.zero(self.symbols) for _ in range(self.dim_m))
            return comps
        return tuple(-c for c in self.bracket_m(j, i))

    def isotropy_is_rational(self) -> bool:
        return all(
            entry.is_constant() for mat in self.isotropy for row in mat for entry in row
        )

    def bracket_is_rational(self) -> bool:
        return all(c.is_constant() for comps in self.bracket.values() for c in comps)

    def is_rational(self) -> bool:
        return self.isotropy_is_rational() and self.bracket_is_rational()

    def instantiate(self, assignment: Mapping[str, Fraction]) -> "HomogeneousSpaceData":
        """Substitute parameter values throughout (reduced context)."""
        iso = [
            [[entry.substitute(assignment) for entry in row] for row in mat]
            for mat in self.isotropy
        ]
        bracket = {
            key: tuple(c.substitute(assignment) for c in comps)
            for key, comps in self.bracket.items()
        }
        new_symbols = tuple(s for s in self.symbols if s not in assignment)
        return HomogeneousSpaceData(
            self.dim_m, iso, bracket, self.names, new_symbols, self.partial
        )

    def with_symbols(self, symbols: Iterable[str]) -> "HomogeneousSpaceData":
        symbols = tuple(symbols)
        iso = [
            [[entry.with_symbols(symbols) for entry in row] for row in mat]
            for mat in self.isotropy
        ]
        bracket = {
            key: tuple(c.with_symbols(symbols) for c in comps)
            for key, comps in self.bracket.items()
        }
        return HomogeneousSpaceData(
            self.dim_m, iso, bracket, self.names, symbols, self.partial
        )

    def restrict(self, indices: Sequence[int]) -> "HomogeneousSpaceData":
        """Sub-data on a bracket-closed, isotropy-stable subset of the basis."""
        indices = list(indices)
        pos = {idx: p for p, idx in enumerate(indices)}
        dim = len(indices)
        for (i, j), comps in self.bracket.items():
            inside = i in pos and j in pos
            for k, c in enumerate(comps, start=1):
                if c.is_zero():
                    continue
                if inside and k not in pos:
                    raise LieStructureError(
                        f"bracket [{i},{j}] leaves the restricted subspace"
                    )
        iso = []
        for mat in self.isotropy:
            for r in range(self.dim_m):
                for c in range(self.dim_m):
                    entry = mat[r][c]
                    if entry.is_zero():
                        continue
                    if ((c + 1) in pos) != ((r + 1) in pos):
                        raise LieStructureError(
                            "isotropy action does not preserve the restricted subspace"
                        )
            iso.append(
                [[mat[i - 1][j - 1] for j in indices] for i in indices]
            )
        bracket = {}
        for (i, j), comps in self.bracket.items():
            if i in pos and j in pos:
                bracket[(pos[i] + 1, pos[j] + 1)] = tuple(
                    comps[k - 1] for k in indices
                )
        names = [self.names[i - 1] for i in indices]
        return HomogeneousSpaceData(dim, iso, bracket, names, self.symbols, self.partial)


def reductive_split(
    algebra: LieAlgebra, h_indices: Sequence[int], m_indices: Sequence[int]
) -> HomogeneousSpaceData:
    """Split g = h + m, verifying [h, h] in h and [h, m] in m.

    The returned data is full-algebra backed (``partial`` is False), so the
    square of the coset differential vanishes on invariant forms.
    """
    h_set, m_set = set(h_indices), set(m_indices)
    if h_set & m_set:
        raise LieStructureError("h and m indices overlap")
    if h_set | m_set != set(range(1, algebra.dim + 1)):
        raise LieStructureError("h and m indices must partition the basis")
    m_list = list(m_indices)
    m_pos = {idx: p for p, idx in enumerate(m_list)}
    for a in sorted(h_set):
        for b in sorted(h_set):
            if a >= b:
                continue
            comps = algebra.bracket(a, b)
            for idx in m_list:
                if not comps[idx - 1].is_zero():
                    raise LieStructureError(
                        f"h is not a subalgebra: [e{a}, e{b}] has an m-component on e{idx}"
                    )
    isotropy = []
    for a in sorted(h_set):
        mat = [
            [PolyScalar.zero(algebra.symbols) for _ in m_list] for _ in m_list
        ]
        for j in m_list:
            comps = algebra.bracket(a, j)
            for idx in sorted(h_set):
                if not comps[idx - 1].is_zero():
                    raise LieStructureError(
                        f"reductivity failure: [e{a}, e{j}] has an h-component on e{idx}"
                    )
            for i in m_list:
                mat[m_pos[i]][m_pos[j]] = comps[i - 1]
        isotropy.append(mat)
    bracket = {}
    for p, i in enumerate(m_list):
        for q in range(p + 1, len(m_list)):
            j = m_list[q]
            comps = algebra.bracket(i, j)
            projected = tuple(comps[idx - 1] for idx in m_list)
            if any(not c.is_zero() for c in projected):
                bracket[(p + 1, q + 1)] = projected
    names = [algebra.names[i - 1] for i in m_list]
    return HomogeneousSpaceData(
        len(m_list), isotropy, bracket, names, algebra.symbols, partial=False
    )


def homogeneous_from_partial(
    dim_m: int,
    isotropy: Sequence[Sequence[Sequence[PolyScalar]]],
    bracket: Mapping[tuple, Sequence[PolyScalar]],
    names: Sequence[str] | None = None,
    symbols: Iterable[str] = (),
) -> HomogeneousSpaceData:
    """Wrap explicitly given ad(h)|_m matrices and a projected bracket.

    Antisymmetry of the supplied bracket is validated; nothing else can be
    (there is no full algebra), so the result is flagged ``partial`` and
    d o d = 0 is not guaranteed by construction.
    """
    return HomogeneousSpaceData(
        dim_m, isotropy, bracket, names, symbols, partial=True
    )
