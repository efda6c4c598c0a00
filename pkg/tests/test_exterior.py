import random
from fractions import Fraction

import pytest

from conftest import random_form, random_vector
from g2forms.exterior import (
    AltForm,
    basis_form,
    basis_vector,
    contract,
    evaluate,
    evaluate_by_permutations,
    merge_sign,
    parse_form,
    pullback,
    sort_sign,
    top_coefficient,
    wedge,
)
from g2forms.scalars import ContextMismatchError, PolyScalar


def F(text, dim=7, degree=None, symbols=()):
    return parse_form(text, dim, degree, symbols)


def test_sign_helpers():
    assert sort_sign((3, 1, 2)) == ((1, 2, 3), 1)
    assert sort_sign((2, 1, 3)) == ((1, 2, 3), -1)
    assert sort_sign((1, 1, 2)) is None
    assert merge_sign((1, 2), (3, 4, 5)) == ((1, 2, 3, 4, 5), 1)
    assert merge_sign((1, 3), (2, 4)) == ((1, 2, 3, 4), -1)
    assert merge_sign((1, 2), (2, 3)) is None


def test_wedge_disjoint_and_signed():
    assert wedge(F("e^{1 2}", degree=2), F("e^{3 4 5}", degree=3)) == F("e^{1 2 3 4 5}")
    assert wedge(F("e^{1 3}", degree=2), F("e^{2 4}", degree=2)) == F("-e^{1 2 3 4}")


def test_wedge_beyond_top_degree_is_zero():
    alpha = F("e^{1 2 3 4}", dim=5)
    beta = F("e^{3 4}", dim=5)
    assert wedge(alpha, beta).is_zero()
    assert wedge(alpha, beta).degree == 6


def test_contract_examples():
    e1 = basis_vector(7, 1)
    e2 = basis_vector(7, 2)
    e7 = basis_vector(7, 7)
    assert contract(e1, F("e^{1 2 3}")) == F("e^{2 3}", degree=2)
    assert contract(e2, F("e^{1 2 3}")) == F("-e^{1 3}", degree=2)
    assert contract(e7, F("e^{1 2 7} + e^{3 4 7} + e^{5 6 7}")) == F(
        "e^{1 2} + e^{3 4} + e^{5 6}", degree=2
    )
    with pytest.raises(ValueError):
        contract(e1, AltForm(7, 0, (), {(): PolyScalar.one()}))


def test_top_coefficient():
    assert top_coefficient(F("6*e^{1 2 3 4 5 6 7}")).constant_value() == 6
    ctx = ("a4",)
    snake = basis_form(7, tuple(range(1, 8)), ctx).scale(
        PolyScalar.parse("-6*a4^3", ctx)
    )
    assert top_coefficient(snake).render() == "-6*a4^3"
    zero = AltForm(7, 7, ())
    assert top_coefficient(zero).is_zero()
    with pytest.raises(ValueError):
        top_coefficient(F("e^{1 2 3}"))


def test_evaluate_on_basis_vectors():
    e = [basis_vector(3, i) for i in range(1, 4)]
    form = parse_form("e^{1 2 3}", 3)
    assert evaluate(form, [e[0], e[1], e[2]]).constant_value() == 1
    assert evaluate(form, [e[1], e[0], e[2]]).constant_value() == -1
    assert form.eval_basis((2, 1, 3)).constant_value() == -1
    assert form.eval_basis((1, 1, 3)).is_zero()
    with pytest.raises(ValueError):
        evaluate(form, [e[0]])


def test_graded_commutativity_and_associativity_random():
    rng = random.Random(101)
    for _ in range(30):
        n = rng.randint(2, 7)
        k = rng.randint(0, min(3, n))
        l = rng.randint(0, min(3, n - 1))
        m = rng.randint(0, 2)
        alpha = random_form(rng, n, k)
        beta = random_form(rng, n, l)
        gamma = random_form(rng, n, m)
        lhs = wedge(alpha, beta)
        rhs = wedge(beta, alpha)
        if (k * l) % 2:
            rhs = -rhs
        assert lhs == rhs
        assert wedge(wedge(alpha, beta), gamma) == wedge(alpha, wedge(beta, gamma))


def test_double_contraction_vanishes_random():
    rng = random.Random(202)
    for _ in range(30):
        n = rng.randint(2, 7)
        k = rng.randint(2, min(4, n))
        alpha = random_form(rng, n, k)
        v = random_vector(rng, n)
        assert contract(v, contract(v, alpha)).is_zero()


def test_antiderivation_law_random():
    rng = random.Random(303)
    for _ in range(30):
        n = rng.randint(2, 7)
        k = rng.randint(1, min(3, n))
        l = rng.randint(1, min(3, n))
        alpha = random_form(rng, n, k)
        beta = random_form(rng, n, l)
        v = random_vector(rng, n)
        lhs = contract(v, wedge(alpha, beta))
        rhs = wedge(contract(v, alpha), beta)
        second = wedge(alpha, contract(v, beta))
        if k % 2:
            second = -second
        assert lhs == rhs + second


def test_evaluate_matches_permutation_oracle():
    # acceptance property: 100 random instances, n <= 7
    rng = random.Random(404)
    for _ in range(100):
        n = rng.randint(1, 7)
        k = rng.randint(1, min(3, n))
        alpha = random_form(rng, n, k)
        vectors = [random_vector(rng, n) for _ in range(k)]
        assert evaluate(alpha, vectors) == evaluate_by_permutations(alpha, vectors)


def test_pullback_by_identity_and_swap():
    phi = F("e^{1 2 7} + e^{1 3 5}")
    ident = [[Fraction(i == j) for j in range(7)] for i in range(7)]
    assert pullback(phi, ident) == phi
    swap = [list(row) for row in ident]
    swap[0], swap[1] = swap[1], swap[0]
    swapped = pullback(phi, swap)
    assert swapped == F("-e^{1 2 7} + e^{2 3 5}")


def test_render_parse_round_trip():
    samples = [
        "0",
        "e^{1 2 3}",
        "-e^{1 2 3} + 2*e^{4 5 6}",
        "1/2*e^{1 2} - e^{3 4}",
    ]
    for text in samples:
        degree = 3 if "3}" in text or text == "0" else 2
        form = parse_form(text, 7, degree if text == "0" else None)
        assert form.render() == text


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        parse_form("e^{1 2} + banana", 7)
    with pytest.raises(ValueError):
        parse_form("0", 7)  # zero form needs an explicit degree
    with pytest.raises(ValueError):
        parse_form("e^{9 9}", 7)


def test_context_mismatch_is_rejected():
    ctx_form = parse_form("e^{1 2}", 7, 2, ("t",))
    with pytest.raises(ContextMismatchError):
        wedge(ctx_form, parse_form("e^{3 4}", 7, 2))
    with pytest.raises(ValueError):
        wedge(parse_form("e^{1 2}", 6, 2), parse_form("e^{3 4}", 7, 2))
