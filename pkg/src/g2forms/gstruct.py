"""G2 and SU(3) structure checks over exact arithmetic.

Conventions fixed here (all scale choices are irrelevant to every verdict,
and are pinned by tests):

* The bilinear form of a 3-form phi on a 7-space is
  ``B[i][j] = top_coefficient(iota_{e_i} phi ^ iota_{e_j} phi ^ phi)``.
  For a definite phi, B is proportional to the induced metric by a positive
  constant, so B itself (sign-normalized) serves as the metric
  representative; the usual unit-norm normalization would need a 9th root
  and leave the rationals.
* ``hodge_dual_up_to_scale`` returns the true Hodge dual times the positive
  constant 1/sqrt(det Q): indices are raised with the k-th compound of
  Q^{-1} and contracted with the Levi-Civita symbol, so no square roots
  appear and the zero set is exactly that of the true dual.
* Hitchin's endomorphism of a 3-form psi on a 6-space is
  ``K[i][j] = top_coefficient(iota_{e_j} psi ^ psi ^ e^i)`` and
  ``lambda = trace(K^2)/6``; with this normalization the standard complex
  volume real part has lambda = -4 and K^2 = lambda * Id.  In
  ``su3_check`` the volume is renormalized to omega^3/6 (orientation from
  omega), which makes the induced bilinear form omega(., K .) positive for
  standard SU(3) pairs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from g2forms import _linalg
from g2forms.exterior import (
    AltForm,
    Vector,
    basis_form,
    basis_vector,
    contract,
    merge_sign,
    top_coefficient,
    wedge,
)
from g2forms.invariants import ClosedFamily, ce_differential
from g2forms.liealg import HomogeneousSpaceData
from g2forms.scalars import PolyScalar, format_rational

__all__ = [
    "DefinitenessReport",
    "GramMatrix",
    "HitchinReport",
    "SU3Report",
    "TorsionReport",
    "b_matrix",
    "definiteness",
    "g2_torsion_report",
    "hitchin_stability",
    "hodge_dual_up_to_scale",
    "metric_up_to_scale",
    "obstruction_certificate",
    "product_g2",
    "su3_check",
]


@dataclass
class GramMatrix:
    """Symmetric matrix of scalars (exact symmetry is validated)."""

    entries: tuple

    def __post_init__(self):
        n = len(self.entries)
        entries = tuple(tuple(row) for row in self.entries)
        for row in entries:
            if len(row) != n:
                raise ValueError("Gram matrix must be square")
        for i in range(n):
            for j in range(i + 1, n):
                if not (entries[i][j] - entries[j][i]).is_zero():
                    raise ValueError(f"Gram matrix is not symmetric at ({i+1},{j+1})")
        self.entries = entries

    @property
    def n(self) -> int:
        return len(self.entries)

    def entry(self, i: int, j: int) -> PolyScalar:
        """1-based access."""
        return self.entries[i - 1][j - 1]

    def is_rational(self) -> bool:
        return all(e.is_constant() for row in self.entries for e in row)

    def as_fractions(self) -> list:
        return [[e.constant_value() for e in row] for row in self.entries]

    def negated(self) -> "GramMatrix":
        return GramMatrix(tuple(tuple(-e for e in row) for row in self.entries))

    def render(self) -> str:
        return "\n".join(
            "[" + ", ".join(e.render() for e in row) + "]" for row in self.entries
        )


def b_matrix(phi: AltForm) -> GramMatrix:
    """B[i][j] = top coefficient of iota_i phi ^ iota_j phi ^ phi (n = 7)."""
    if phi.dim != 7 or phi.degree != 3:
        raise ValueError("b_matrix expects a 3-form on a 7-dimensional space")
    contractions = [
        contract(basis_vector(7, i, phi.symbols), phi) for i in range(1, 8)
    ]
    rows = []
    for i in range(7):
        row = []
        for j in range(7):
            row.append(top_coefficient(wedge(wedge(contractions[i], contractions[j]), phi)))
        rows.append(tuple(row))
    return GramMatrix(tuple(rows))


@dataclass
class DefinitenessReport:
    """Verdict plus an arithmetically re-checkable certificate.

    For parametrized families (``family`` is True) the verdict refers to
    every member at once: "degenerate" means some probe vector has
    identically vanishing B(v, v), so no member can be definite.
    """

    verdict: str  # definite | indefinite | degenerate | undecided-parametric
    orientation: str | None = None  # positive | negative (definite only)
    minors: list | None = None  # leading principal minors of B (single forms)
    witnesses: list = field(default_factory=list)  # (value render, vector)
    identity: str | None = None  # family-level certificate identity
    family: bool = False

    @property
    def is_definite(self) -> bool:
        return self.verdict == "definite"

    @property
    def excludes_definite(self) -> bool:
        return self.verdict in ("indefinite", "degenerate")

    def render(self) -> str:
        if self.verdict == "definite":
            minors = ", ".join(format_rational(m) for m in self.minors)
            return f"definite ({self.orientation}), certificate: minors {minors}"
        if self.verdict == "undecided-parametric":
            return "undecided-parametric: no vanishing certificate found"
        lines = [f"{self.verdict}" + (" (family-level)" if self.family else "")]
        if self.identity:
            lines.append(f"  certificate: {self.identity}")
        for value, vec in self.witnesses:
            comps = ", ".join(format_rational(x) for x in vec)
            lines.append(f"  witness v = ({comps}) with B(v,v) = {value}")
        return "\n".join(lines)


def definiteness(phi: AltForm) -> DefinitenessReport:
    """Exact definiteness of a rational 3-form on a 7-space.

    Definite verdicts carry the leading-principal-minor sign chain;
    non-definite verdicts carry explicit witness vectors obtained from a
    symmetric congruence diagonalization of B.
    """
    if not phi.is_rational():
        raise ValueError(
            "definiteness needs rational coefficients; "
            "route parametric families through obstruction_certificate"
        )
    gram = b_matrix(phi)
    b = gram.as_fractions()
    minors = _linalg.leading_principal_minors(b)
    if all(m > 0 for m in minors):
        return DefinitenessReport("definite", "positive", minors)
    if all((m > 0 if k % 2 else m < 0) for k, m in enumerate(minors)):
        return DefinitenessReport("definite", "negative", minors)
    diag = _linalg.congruence_diagonalize(b)
    zero_entries = [(d, v) for d, v in diag if d == 0]
    if zero_entries:
        d, v = zero_entries[0]
        return DefinitenessReport(
            "degenerate", witnesses=[(format_rational(d), v)], minors=minors
        )
    positive = next((d, v) for d, v in diag if d > 0) if any(d > 0 for d, _ in diag) else None
    negative = next((d, v) for d, v in diag if d < 0) if any(d < 0 for d, _ in diag) else None
    witnesses = []
    for item in (negative, positive):
        if item:
            witnesses.append((format_rational(item[0]), item[1]))
    return DefinitenessReport("indefinite", witnesses=witnesses, minors=minors)


def _family_probe_value(generic: AltForm, probe: Vector) -> PolyScalar:
    iota = contract(probe, generic)
    return top_coefficient(wedge(wedge(iota, iota), generic))


def obstruction_certificate(
    family: ClosedFamily, probes: list | None = None
) -> DefinitenessReport:
    """Search for a certificate that no member of a closed family is definite.

    A probe vector v with B(v, v) identically zero in the family parameters
    rules out definiteness for every member (verdict "degenerate").  A pair
    of probes with B(v, v) + B(w, w) identically zero but individually
    nonzero forces every member to be indefinite or isotropic (verdict
    "indefinite").  With no certificate the result is
    "undecided-parametric": the family may well contain definite members.
    """
    generic = family.generic
    if generic.dim != 7 or generic.degree != 3:
        raise ValueError("obstruction certificates apply to 3-form families on a 7-space")
    symbols = generic.symbols
    names = family.data.names
    if probes is None:
        probes = [basis_vector(7, i, symbols) for i in range(1, 8)]
    probe_names = []
    values = []
    for pos, probe in enumerate(probes):
        if probe.symbols != symbols:
            probe = probe.with_symbols(symbols)
            probes[pos] = probe
        label = _probe_label(probe, names)
        value = _family_probe_value(generic, probe)
        if value.is_zero():
            return DefinitenessReport(
                "degenerate",
                family=True,
                identity=f"B({label},{label}) = 0 identically on the closed family",
                witnesses=[("0", [c.constant_value() for c in probe.components])],
            )
        probe_names.append(label)
        values.append(value)
    for i in range(len(values)):
        for j in range(i + 1, len(values)):
            if (values[i] + values[j]).is_zero():
                return DefinitenessReport(
                    "indefinite",
                    family=True,
                    identity=(
                        f"B({probe_names[i]},{probe_names[i]}) + "
                        f"B({probe_names[j]},{probe_names[j]}) = 0 identically, "
                        "with neither term identically zero"
                    ),
                )
    return DefinitenessReport("undecided-parametric", family=True)


def _probe_label(probe: Vector, names) -> str:
    parts = []
    for i, comp in enumerate(probe.components):
        if comp.is_zero():
            continue
        name = names[i] if i < len(names) else f"e{i+1}"
        value = comp.constant_value() if comp.is_constant() else None
        if value == 1:
            parts.append(name)
        elif value is not None:
            parts.append(f"{format_rational(value)}*{name}")
        else:
            parts.append(f"({comp.render()})*{name}")
    return " + ".join(parts) if parts else "0"


def metric_up_to_scale(phi: AltForm) -> GramMatrix:
    """Positive-definite representative of the induced metric (up to scale)."""
    report = definiteness(phi)
    if not report.is_definite:
        raise ValueError(f"form is not definite: verdict {report.verdict}")
    gram = b_matrix(phi)
    return gram if report.orientation == "positive" else gram.negated()


def hodge_dual_up_to_scale(metric: GramMatrix, alpha: AltForm) -> AltForm:
    """The Hodge dual of alpha, times a positive constant depending on Q only.

    Raising the k indices with Q^{-1} and contracting with the Levi-Civita
    symbol yields sqrt(det Q)^{-1} times the true dual; since the constant
    is positive, d(result) = 0 iff d(*alpha) = 0, which is all any caller
    needs.  Requires a positive-definite rational Q.
    """
    if not metric.is_rational():
        raise ValueError("hodge dual needs a rational metric representative")
    q = metric.as_fractions()
    n = metric.n
    if alpha.dim != n:
        raise ValueError("form dimension does not match the metric")
    minors = _linalg.leading_principal_minors(q)
    if not all(m > 0 for m in minors):
        raise ValueError("metric representative is not positive definite")
    qinv = _linalg.inverse(q)
    k = alpha.degree
    full = tuple(range(1, n + 1))
    coeffs = {}
    for upper in combinations(full, k):
        raised = PolyScalar.zero(alpha.symbols)
        for lower, coeff in alpha.coeffs.items():
            minor = [[qinv[i - 1][l - 1] for l in lower] for i in upper]
            d = _linalg.det(minor)
            if d:
                raised = raised + coeff.scale(d)
        if raised.is_zero():
            continue
        complement = tuple(i for i in full if i not in upper)
        merged = merge_sign(upper, complement)
        assert merged is not None
        _, sign = merged
        coeffs[complement] = raised if sign == 1 else -raised
    return AltForm(n, n - k, alpha.symbols, coeffs)


@dataclass
class TorsionReport:
    """Definiteness/closedness/coclosedness verdicts for a 3-form on a 7-space."""

    definite: bool
    orientation: str | None
    closed: bool
    coclosed: bool | None  # None when not definite (no metric, no dual)
    classification: str
    definiteness: DefinitenessReport

    def render(self) -> str:
        parts = [
            f"definite: {'yes (' + self.orientation + ')' if self.definite else 'no'}",
            f"closed: {'yes' if self.closed else 'no'}",
        ]
        if self.coclosed is None:
            parts.append("coclosed: n/a (no metric)")
        else:
            parts.append(f"coclosed: {'yes' if self.coclosed else 'no'}")
        parts.append(f"=> {self.classification}")
        return "; ".join(parts)


def g2_torsion_report(data: HomogeneousSpaceData, phi: AltForm) -> TorsionReport:
    """Closed/coclosed verdicts of an invariant 3-form on the given space."""
    if phi.symbols != data.symbols:
        raise ValueError("form and homogeneous data must share one context")
    report = definiteness(phi)
    closed = ce_differential(data, phi).is_zero()
    coclosed = None
    if report.is_definite:
        metric = metric_up_to_scale(phi)
        star = hodge_dual_up_to_scale(metric, phi)
        coclosed = ce_differential(data, star).is_zero()
    if not report.is_definite:
        classification = "not a G2-structure (form is not definite)"
    elif closed and coclosed:
        classification = "torsion-free (closed and coclosed)"
    elif closed:
        classification = "closed non-parallel"
    elif coclosed:
        classification = "coclosed, not closed"
    else:
        classification = "neither closed nor coclosed"
    return TorsionReport(
        report.is_definite, report.orientation, closed, coclosed, classification, report
    )


@dataclass
class HitchinReport:
    """Hitchin invariant of a 3-form on a 6-space.

    ``K[i][j] = top(iota_{e_j} psi ^ psi ^ e^i)`` with the e^{1..6} volume;
    lambda = trace(K^2)/6.  lambda < 0 certifies complex type (stable
    orbit), in which case K^2 = lambda * Id exactly.
    """

    lam: Fraction
    k_matrix: list
    k_squared: list

    @property
    def stable_complex(self) -> bool:
        return self.lam < 0

    @property
    def k_squared_is_scalar(self) -> bool:
        n = len(self.k_matrix)
        for i in range(n):
            for j in range(n):
                expected = self.lam if i == j else Fraction(0)
                if self.k_squared[i][j] != expected:
                    return False
        return True

    def render(self) -> str:
        kind = "complex type (stable)" if self.lam < 0 else (
            "real type" if self.lam > 0 else "degenerate/unstable"
        )
        return f"lambda = {format_rational(self.lam)} ({kind})"


def hitchin_stability(psi: AltForm) -> HitchinReport:
    """Hitchin's K endomorphism and lambda invariant (n = 6)."""
    if psi.dim != 6 or psi.degree != 3:
        raise ValueError("hitchin_stability expects a 3-form on a 6-dimensional space")
    if not psi.is_rational():
        raise ValueError("hitchin_stability needs rational coefficients")
    k_rows = []
    for i in range(1, 7):
        e_i = basis_form(6, (i,), psi.symbols)
        row = []
        for j in range(1, 7):
            iota = contract(basis_vector(6, j, psi.symbols), psi)
            row.append(top_coefficient(wedge(wedge(iota, psi), e_i)).constant_value())
        k_rows.append(row)
    k_sq = _linalg.matmul(k_rows, k_rows)
    lam = sum((k_sq[i][i] for i in range(6)), Fraction(0)) / 6
    return HitchinReport(lam, k_rows, k_sq)


@dataclass
class SU3Report:
    """Pointwise and torsion conditions for a candidate SU(3) pair.

    ``symplectic_half_flat`` requires the four pointwise conditions
    (nondegenerate, stable, compatible, tamed) together with d(omega) = 0
    and d(psi) = 0; ``strictly`` additionally requires d(*psi) != 0.
    Fields after a failed stability check are left as None (skipped).
    """

    nondegenerate: bool
    stable: bool
    lam: Fraction | None = None
    compatible: bool | None = None
    tamed: bool | None = None
    gram: GramMatrix | None = None
    d_omega_zero: bool | None = None
    d_psi_zero: bool | None = None
    d_star_psi_zero: bool | None = None

    @property
    def su3_structure(self) -> bool:
        return bool(
            self.nondegenerate and self.stable and self.compatible and self.tamed
        )

    @property
    def symplectic_half_flat(self) -> bool:
        return bool(self.su3_structure and self.d_omega_zero and self.d_psi_zero)

    @property
    def strictly_symplectic_half_flat(self) -> bool:
        return bool(self.symplectic_half_flat and self.d_star_psi_zero is False)

    def flags(self) -> dict:
        return {
            "nondegenerate": self.nondegenerate,
            "stable": self.stable,
            "compatible": self.compatible,
            "tamed": self.tamed,
            "d_omega_zero": self.d_omega_zero,
            "d_psi_zero": self.d_psi_zero,
            "d_star_psi_zero": self.d_star_psi_zero,
            "symplectic_half_flat": self.symplectic_half_flat,
            "strictly_symplectic_half_flat": self.strictly_symplectic_half_flat,
        }

    def render(self) -> str:
        rows = [f"{key}: {value}" for key, value in self.flags().items()]
        return "\n".join(rows)


def su3_check(
    data: HomogeneousSpaceData, omega: AltForm, psi: AltForm
) -> SU3Report:
    """Full SU(3)-pair verdict for (omega, psi) on a 6-dimensional space.

    The orientation is taken from omega^3 (so the verdict does not depend
    on the labeling of the basis), and the induced bilinear form is
    G = Omega . K with K renormalized to the omega^3/6 volume; ``tamed``
    requires G to be symmetric positive definite.
    """
    if data.dim_m != 6 or omega.dim != 6 or psi.dim != 6:
        raise ValueError("su3_check works on 6-dimensional data")
    if omega.degree != 2 or psi.degree != 3:
        raise ValueError("expected a 2-form omega and a 3-form psi")
    if omega.symbols != data.symbols or psi.symbols != data.symbols:
        raise ValueError("forms and homogeneous data must share one context")
    if not (omega.is_rational() and psi.is_rational()):
        raise ValueError("su3_check needs rational forms")
    volume = top_coefficient(wedge(wedge(omega, omega), omega)).constant_value()
    nondegenerate = volume != 0
    hitchin = hitchin_stability(psi)
    stable = hitchin.stable_complex
    report = SU3Report(nondegenerate, stable, hitchin.lam)
    if not (nondegenerate and stable):
        return report
    scale = Fraction(6) / volume  # renormalize K to the omega-volume
    k_norm = [[x * scale for x in row] for row in hitchin.k_matrix]
    omega_matrix = [
        [omega.eval_basis((i, j)).constant_value() for j in range(1, 7)]
        for i in range(1, 7)
    ]
    g = _linalg.matmul(omega_matrix, k_norm)
    symmetric = all(g[i][j] == g[j][i] for i in range(6) for j in range(6))
    positive = symmetric and all(
        m > 0 for m in _linalg.leading_principal_minors(g)
    )
    report.compatible = wedge(omega, psi).is_zero()
    report.tamed = positive
    if symmetric:
        report.gram = GramMatrix(
            tuple(
                tuple(PolyScalar.constant(x, data.symbols) for x in row) for row in g
            )
        )
    report.d_omega_zero = ce_differential(data, omega).is_zero()
    report.d_psi_zero = ce_differential(data, psi).is_zero()
    if positive:
        star_psi = hodge_dual_up_to_scale(report.gram, psi)
        report.d_star_psi_zero = ce_differential(data, star_psi).is_zero()
    return report


def product_g2(omega: AltForm, psi: AltForm) -> AltForm:
    """The 3-form omega ^ e7 + psi on the 7-space extending a 6-space.

    Contracting e7 back out recovers omega; the result is definite exactly
    when (omega, psi) passes the pointwise SU(3) conditions, which callers
    verify through :func:`su3_check` and :func:`definiteness` rather than
    by assumption.
    """
    if omega.dim != 6 or psi.dim != 6:
        raise ValueError("product_g2 expects forms on a 6-dimensional space")
    if omega.degree != 2 or psi.degree != 3:
        raise ValueError("expected a 2-form omega and a 3-form psi")
    if omega.symbols != psi.symbols:
        raise ValueError("omega and psi must share one context")
    omega7 = AltForm(7, 2, omega.symbols, dict(omega.coeffs))
    psi7 = AltForm(7, 3, psi.symbols, dict(psi.coeffs))
    e7 = basis_form(7, (7,), omega.symbols)
    return wedge(omega7, e7) + psi7
