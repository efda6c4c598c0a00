import random
from fractions import Fraction

import pytest

from conftest import random_form, random_unimodular
from g2forms import _linalg
from g2forms.catalog import models
from g2forms.exterior import (
    AltForm,
    basis_vector,
    contract,
    evaluate_by_permutations,
    parse_form,
    pullback,
    top_coefficient,
    wedge,
)
from g2forms.gstruct import (
    GramMatrix,
    b_matrix,
    definiteness,
    g2_torsion_report,
    hitchin_stability,
    hodge_dual_up_to_scale,
    metric_up_to_scale,
    obstruction_certificate,
    product_g2,
    su3_check,
)
from g2forms.invariants import ClosedFamily, closed_forms
from g2forms.liealg import HomogeneousSpaceData, MatrixBasis, from_matrices, reductive_split
from g2forms.scalars import PolyScalar

PHI0 = (
    "e^{1 2 7} + e^{1 3 5} - e^{1 4 6} - e^{2 3 6} - e^{2 4 5} "
    "+ e^{3 4 7} + e^{5 6 7}"
)
OMEGA0 = "e^{1 2} + e^{3 4} + e^{5 6}"
PSI0 = "e^{1 3 5} - e^{1 4 6} - e^{2 3 6} - e^{2 4 5}"


def phi0():
    return parse_form(PHI0, 7)


def identity_metric(n=7):
    return GramMatrix(
        tuple(
            tuple(PolyScalar.constant(1 if i == j else 0) for j in range(n))
            for i in range(n)
        )
    )


def abelian(dim=7):
    return HomogeneousSpaceData(dim, [], {}, partial=False)


def test_b_matrix_of_standard_form_is_six_identity():
    gram = b_matrix(phi0())
    for i in range(1, 8):
        for j in range(1, 8):
            expected = Fraction(6) if i == j else Fraction(0)
            assert gram.entry(i, j).constant_value() == expected


def test_b_matrix_against_permutation_evaluation_oracle():
    phi = phi0()
    basis = [basis_vector(7, i) for i in range(1, 8)]
    for i, j in [(1, 1), (7, 7), (1, 2), (3, 5)]:
        seven_form = wedge(
            wedge(contract(basis[i - 1], phi), contract(basis[j - 1], phi)), phi
        )
        oracle = evaluate_by_permutations(seven_form, basis)
        assert top_coefficient(seven_form) == oracle


def test_b_matrix_is_exactly_symmetric_on_random_forms():
    rng = random.Random(1231)
    for _ in range(10):
        gram = b_matrix(random_form(rng, 7, 3))  # constructor validates symmetry
        for i in range(1, 8):
            for j in range(1, 8):
                assert gram.entry(i, j) == gram.entry(j, i)


def test_b_matrix_symbolic_entry_case_n3():
    syms = tuple(f"a{i}" for i in range(1, 6))
    phi = AltForm(7, 3, syms)
    gammas = [
        "e^{1 2 3}",
        "e^{1 2 6} - e^{1 3 5} + e^{2 3 4}",
        "e^{1 5 6} - e^{2 4 6} + e^{3 4 5}",
        "e^{1 4 7} + e^{2 5 7} + e^{3 6 7}",
        "e^{4 5 6}",
    ]
    for name, text in zip(syms, gammas):
        phi = phi + parse_form(text, 7, 3, syms).scale(PolyScalar.symbol(name, syms))
    gram = b_matrix(phi)
    assert gram.entry(7, 7).render() == "-6*a4^3"


def test_b_matrix_of_zero_form_is_zero():
    gram = b_matrix(AltForm(7, 3, ()))
    assert all(gram.entry(i, j).is_zero() for i in range(1, 8) for j in range(1, 8))


def test_definiteness_of_standard_form():
    report = definiteness(phi0())
    assert report.verdict == "definite" and report.orientation == "positive"
    assert report.minors[0] == 6
    assert all(m > 0 for m in report.minors)


def test_definiteness_rejects_degenerate_split_form():
    report = definiteness(parse_form("e^{1 2 3} + e^{4 5 6}", 7))
    assert report.verdict in ("degenerate", "indefinite")
    assert not report.is_definite
    # the witness really does satisfy B(v, v) = value
    value, witness = report.witnesses[0]
    gram = b_matrix(parse_form("e^{1 2 3} + e^{4 5 6}", 7)).as_fractions()
    quad = sum(
        witness[i] * gram[i][j] * witness[j] for i in range(7) for j in range(7)
    )
    assert str(quad) == value


def test_definiteness_of_branch_c_member():
    phi = parse_form("-e^{2 4 7} + e^{2 5 6} - e^{3 4 6} - e^{3 5 7}", 7)
    assert not definiteness(phi).is_definite


def test_definiteness_requires_rational_input():
    sym = parse_form("e^{1 2 3}", 7, 3, ("t",)).scale(PolyScalar.symbol("t", ("t",)))
    with pytest.raises(ValueError, match="obstruction_certificate"):
        definiteness(sym)


def test_definiteness_verdict_is_congruence_invariant():
    rng = random.Random(515)
    split = parse_form("e^{1 2 3} + e^{4 5 6}", 7)
    base_phi = definiteness(phi0()).verdict
    base_split = definiteness(split).verdict
    for _ in range(20):
        t = random_unimodular(rng, 7)
        assert definiteness(pullback(phi0(), t)).verdict == base_phi
        assert definiteness(pullback(split, t)).verdict == base_split


def test_obstruction_certificate_on_sl3r_closed_family():
    algebra = from_matrices(MatrixBasis(models.sl3r_matrices()))
    data = reductive_split(algebra, [8], list(range(1, 8)))
    family = closed_forms(data, 3)
    report = obstruction_certificate(family)
    assert report.excludes_definite and report.family
    assert "identically" in report.identity


def test_obstruction_certificate_undecided_for_scaled_standard_form():
    family = ClosedFamily(
        data=abelian(),
        degree=3,
        parameters=("t",),
        basis=[phi0()],
        generic=phi0().with_symbols(("t",)).scale(PolyScalar.symbol("t", ("t",))),
        invariant_dim=35,
        rank=0,
    )
    report = obstruction_certificate(family)
    assert report.verdict == "undecided-parametric"


def test_metric_up_to_scale_and_orientation_flip():
    metric = metric_up_to_scale(phi0())
    assert metric.entry(1, 1).constant_value() == 6
    swap = [[Fraction(i == j) for j in range(7)] for i in range(7)]
    swap[0], swap[1] = swap[1], swap[0]
    flipped = pullback(phi0(), swap)  # orientation-reversing relabeling
    report = definiteness(flipped)
    assert report.verdict == "definite" and report.orientation == "negative"
    metric2 = metric_up_to_scale(flipped)
    assert all(m > 0 for m in _linalg.leading_principal_minors(metric2.as_fractions()))
    with pytest.raises(ValueError, match="not definite"):
        metric_up_to_scale(parse_form("e^{1 2 3} + e^{4 5 6}", 7))


def test_hodge_dual_orthonormal_examples():
    dual = hodge_dual_up_to_scale(identity_metric(), parse_form("e^{1 2 3}", 7))
    assert dual == parse_form("e^{4 5 6 7}", 7)
    dual_phi = hodge_dual_up_to_scale(identity_metric(), phi0())
    expected = parse_form(
        "e^{1 2 3 4} + e^{1 2 5 6} + e^{1 3 6 7} + e^{1 4 5 7} "
        "+ e^{2 3 5 7} - e^{2 4 6 7} + e^{3 4 5 6}",
        7,
    )
    assert dual_phi == expected


def test_hodge_dual_scale_covariance():
    rng = random.Random(616)
    for n in (6, 7):
        for k in (2, 3):
            alpha = random_form(rng, n, k)
            one = GramMatrix(
                tuple(
                    tuple(PolyScalar.constant(1 if i == j else 0) for j in range(n))
                    for i in range(n)
                )
            )
            doubled = GramMatrix(
                tuple(
                    tuple(PolyScalar.constant(2 if i == j else 0) for j in range(n))
                    for i in range(n)
                )
            )
            base = hodge_dual_up_to_scale(one, alpha)
            scaled = hodge_dual_up_to_scale(doubled, alpha)
            assert scaled == base.scale(Fraction(1, 2 ** k))


def test_hodge_dual_rejects_indefinite_metric():
    bad = GramMatrix(
        tuple(
            tuple(PolyScalar.constant(-1 if i == j else 0) for j in range(7))
            for i in range(7)
        )
    )
    with pytest.raises(ValueError, match="positive definite"):
        hodge_dual_up_to_scale(bad, parse_form("e^{1 2 3}", 7))


def test_torsion_report_on_flat_model():
    report = g2_torsion_report(abelian(), phi0())
    assert report.definite and report.closed and report.coclosed
    assert "torsion-free" in report.classification


def test_hitchin_values():
    report = hitchin_stability(parse_form(PSI0, 6))
    assert report.lam == -4
    assert report.k_squared_is_scalar and report.stable_complex
    decomposable = hitchin_stability(parse_form("e^{1 2 3}", 6))
    assert decomposable.lam == 0 and not decomposable.stable_complex
    real_type = hitchin_stability(parse_form("e^{1 2 3} + e^{4 5 6}", 6))
    assert real_type.lam > 0


def test_su3_check_flat_pair():
    data = abelian(6)
    report = su3_check(data, parse_form(OMEGA0, 6), parse_form(PSI0, 6))
    assert report.symplectic_half_flat
    assert not report.strictly_symplectic_half_flat
    assert report.gram.entry(1, 1).constant_value() == 2


def test_su3_check_unstable_psi_skips_rest():
    data = abelian(6)
    report = su3_check(data, parse_form(OMEGA0, 6), parse_form("e^{1 2 3}", 6))
    assert not report.stable
    assert report.compatible is None and report.tamed is None


def test_su3_check_sign_flipped_omega_is_not_tamed():
    data = abelian(6)
    omega = parse_form("e^{1 2} + e^{3 4} - e^{5 6}", 6)
    report = su3_check(data, omega, parse_form(PSI0, 6))
    assert report.nondegenerate and report.stable
    assert not report.tamed


def test_product_g2_examples():
    omega = parse_form(OMEGA0, 6)
    psi = parse_form(PSI0, 6)
    phi = product_g2(omega, psi)
    assert phi == phi0()
    assert definiteness(phi).is_definite
    degenerate = product_g2(AltForm(6, 2, ()), psi)
    report = definiteness(degenerate)
    assert not report.is_definite
    gram = b_matrix(degenerate)
    assert gram.entry(7, 7).is_zero()


def test_product_g2_contraction_recovers_omega():
    rng = random.Random(717)
    e7 = basis_vector(7, 7)
    for _ in range(50):
        omega = random_form(rng, 6, 2)
        psi = random_form(rng, 6, 3)
        phi = product_g2(omega, psi)
        recovered = contract(e7, phi)
        assert recovered == AltForm(7, 2, (), dict(omega.coeffs))


def test_product_over_strict_half_flat_is_closed_non_parallel():
    # su(2,1) with its full diagonal torus as isotropy carries strictly
    # symplectic half-flat pairs; the product with a flat line is then a
    # definite closed 3-form that is not coclosed.
    raw = models.su21_matrices(0, 1)
    mats = [raw[1], raw[2], raw[3], raw[4], raw[5], raw[6], raw[0], raw[7]]
    algebra = from_matrices(MatrixBasis.from_complex(mats))
    data6 = reductive_split(algebra, [7, 8], [1, 2, 3, 4, 5, 6])
    omega = parse_form("-2*e^{1 2} + e^{3 4} - e^{5 6}", 6)
    psi = parse_form("e^{1 3 6} - e^{1 4 5} + e^{2 3 5} + e^{2 4 6}", 6)
    su3 = su3_check(data6, omega, psi)
    assert su3.symplectic_half_flat and su3.strictly_symplectic_half_flat

    zero = PolyScalar.zero(())
    iso7 = [
        [[mat[r][c] if r < 6 and c < 6 else zero for c in range(7)] for r in range(7)]
        for mat in data6.isotropy
    ]
    bracket7 = {k: tuple(list(v) + [zero]) for k, v in data6.bracket.items()}
    data7 = HomogeneousSpaceData(7, iso7, bracket7, partial=False)
    report = g2_torsion_report(data7, product_g2(omega, psi))
    assert report.definite and report.closed and report.coclosed is False
    assert report.classification == "closed non-parallel"


def test_hitchin_on_unimodular_conjugates_of_standard_psi():
    rng = random.Random(818)
    psi0 = parse_form(PSI0, 6)
    for _ in range(5):
        t = random_unimodular(rng, 6)
        report = hitchin_stability(pullback(psi0, t))
        assert report.lam == -4  # det-1 changes leave the invariant fixed
        assert report.k_squared_is_scalar


def test_product_definiteness_tracks_su3_verdict_on_instances():
    # both directions of the pointwise equivalence, on concrete instances
    data = abelian(6)
    pairs = [
        (parse_form(OMEGA0, 6), parse_form(PSI0, 6)),
        (parse_form("e^{1 2} + e^{3 4} - e^{5 6}", 6), parse_form(PSI0, 6)),
        (AltForm(6, 2, ()), parse_form(PSI0, 6)),
        (parse_form(OMEGA0, 6), parse_form("e^{1 2 3}", 6)),
    ]
    for omega, psi in pairs:
        su3 = su3_check(data, omega, psi)
        product_definite = definiteness(product_g2(omega, psi)).is_definite
        assert product_definite == su3.su3_structure
