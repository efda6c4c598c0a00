import random
from fractions import Fraction

import pytest

from conftest import random_rational
from g2forms.scalars import ContextMismatchError, PolyScalar, parse_rational


CTX = ("a3", "a6", "a7")


def P(text, symbols=CTX):
    return PolyScalar.parse(text, symbols)


def test_additive_inverse_cancels():
    a3 = PolyScalar.symbol("a3", CTX)
    assert (a3 + (-a3)).is_zero()


def test_product_distributes_over_declared_sum():
    lhs = P("a6^2 + a7^2") * P("a3")
    assert lhs == P("a3*a6^2 + a3*a7^2")
    assert lhs.render() == "a3*a6^2 + a3*a7^2"


def test_six_b_minus_two_vanishes_at_one_third():
    poly = PolyScalar.parse("6*b - 2", ("b",))
    assert poly.substitute({"b": Fraction(1, 3)}).is_zero()
    assert poly.substitute({"b": Fraction(1)}).constant_value() == 4


def test_substitution_annihilates_and_evaluates():
    assert P("a3*a6^2").substitute({"a3": Fraction(0)}).is_zero()
    poly = PolyScalar.parse("-6*a5^3", ("a5",))
    assert poly.substitute({"a5": Fraction(2)}).constant_value() == -48


def test_substitution_reduces_context():
    poly = P("a3*a6 + a7")
    sub = poly.substitute({"a6": Fraction(2)})
    assert sub.symbols == ("a3", "a7")
    assert sub == PolyScalar.parse("2*a3 + a7", ("a3", "a7"))


def test_unknown_symbol_in_assignment_rejected():
    with pytest.raises(ValueError, match="unknown symbol"):
        P("a3").substitute({"b": Fraction(1)})


def test_context_mismatch_names_both_contexts():
    with pytest.raises(ContextMismatchError) as err:
        P("a3") + PolyScalar.parse("b", ("b",))
    assert "a3" in str(err.value) and "b" in str(err.value)


def test_rationals_are_reduced_with_positive_denominator():
    assert parse_rational("2/4") == Fraction(1, 2)
    q = Fraction(1, -2)
    assert q.denominator > 0 and str(q) == "-1/2"
    with pytest.raises(ValueError):
        parse_rational("1/0")


def test_render_parse_round_trip():
    samples = [
        "0",
        "-a3",
        "6*a3*a6^2 + 6*a3*a7^2",
        "1/2*a3 - 2*a6",
        "a3^2*a7 - 5/3",
    ]
    for text in samples:
        assert P(text).render() == text


def test_constant_value_rejects_non_constant():
    with pytest.raises(ValueError):
        P("a3").constant_value()


def test_ring_axioms_on_random_triples():
    rng = random.Random(20240)
    ctx = ("x", "y", "z")

    def rand_poly():
        terms = {}
        for _ in range(rng.randint(0, 4)):
            expo = tuple(rng.randint(0, 2) for _ in ctx)
            terms[expo] = terms.get(expo, Fraction(0)) + random_rational(rng)
        return PolyScalar(ctx, terms)

    for _ in range(40):
        p, q, r = rand_poly(), rand_poly(), rand_poly()
        assert (p + q) + r == p + (q + r)
        assert (p * q) * r == p * (q * r)
        assert p * (q + r) == p * q + p * r
        assert p + q == q + p
        assert p * q == q * p
        assert (p - p).is_zero()  # canonical form: structural zero


def test_zero_test_agrees_with_random_evaluation():
    rng = random.Random(77)
    ctx = ("x", "y")
    poly = PolyScalar.parse("x^2*y - 3*x + 1/2", ctx)
    zero = poly - poly
    assert zero.is_zero()
    for _ in range(20):
        point = {"x": random_rational(rng), "y": random_rational(rng)}
        assert zero.substitute(point).constant_value() == 0
    # the nonzero polynomial evaluates nonzero somewhere among the samples
    values = [
        poly.substitute({"x": random_rational(rng), "y": random_rational(rng)})
        for _ in range(20)
    ]
    assert any(not v.is_zero() for v in values)


def test_power_and_scale():
    x = PolyScalar.symbol("x", ("x",))
    assert (x ** 3).render() == "x^3"
    assert x.scale(Fraction(-2)).render() == "-2*x"
    with pytest.raises(ValueError):
        x ** -1


def test_with_symbols_embeds_into_larger_context():
    poly = PolyScalar.parse("2*b - 1", ("b",))
    lifted = poly.with_symbols(("a", "b", "c"))
    assert lifted.symbols == ("a", "b", "c")
    assert lifted.render() == "2*b - 1"
    with pytest.raises(ValueError):
        poly.with_symbols(("a", "c"))
