from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from leibalg.errors import FieldError
from leibalg.exactfield import GF, Q, Field, FieldElement, arith, normalize, parse_field

PRIMES = [2, 3, 5, 7, 251]


def test_normalize_examples():
    assert normalize(7, GF(3)).value == 1
    assert normalize(Fraction(-2, -4), Q).value == Fraction(1, 2)
    assert normalize(0, GF(2)).value == 0


def test_arith_examples():
    assert arith("inv", normalize(2, GF(5))).value == 3
    half, third = normalize(Fraction(1, 2), Q), normalize(Fraction(1, 3), Q)
    assert arith("add", half, third).value == Fraction(5, 6)
    two = normalize(2, GF(3))
    assert arith("mul", two, two).value == 1


def test_inverse_of_zero_fails():
    with pytest.raises(FieldError):
        arith("inv", normalize(0, GF(7)))
    with pytest.raises(FieldError):
        arith("inv", normalize(0, Q))


def test_field_validation():
    for bad in (1, 4, 9, 257):
        with pytest.raises(FieldError):
            Field("GF", bad)
    assert GF(251).p == 251


def test_mixed_fields_rejected():
    with pytest.raises(FieldError):
        normalize(1, GF(2)) + normalize(1, GF(3))


@pytest.mark.parametrize("text,expected", [("GF(3)", GF(3)), ("Q", Q), (" GF(5) ", GF(5))])
def test_parse_field(text, expected):
    assert parse_field(text) == expected


@pytest.mark.parametrize("text", ["GF(4)", "R", "GF()", "F_3", "gf(5)"])
def test_parse_field_rejects(text):
    with pytest.raises(FieldError):
        parse_field(text)


def test_parse_coefficients():
    assert GF(5).parse("3/2") == 4
    assert GF(3).parse("-1") == 2
    assert Q.parse("-6/4") == Fraction(-3, 2)
    with pytest.raises(FieldError):
        GF(2).parse("1/2")
    with pytest.raises(FieldError):
        Q.parse("1/0")
    with pytest.raises(FieldError):
        Q.parse("x")


def test_canonical_format():
    assert GF(5).format(GF(5).norm(-1)) == "4"
    assert Q.format(Fraction(4, 2)) == "2"
    assert Q.format(Fraction(-1, 3)) == "-1/3"


fields = st.sampled_from([GF(p) for p in PRIMES] + [Q])
ints = st.integers(min_value=-10**6, max_value=10**6)


@st.composite
def triples(draw):
    f = draw(fields)
    if f.is_prime:
        vals = [draw(ints) for _ in range(3)]
    else:
        vals = [Fraction(draw(ints), draw(st.integers(1, 1000))) for _ in range(3)]
    return [FieldElement(f, f.norm(v)) for v in vals]


@given(triples())
def test_field_axioms(t):
    a, b, c = t
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a + (-a) == a.field.element(0)
    if a:
        assert a * a.inverse() == a.field.element(1)


@given(fields, ints, st.integers(1, 1000))
def test_normalize_idempotent(f, n, d):
    raw = n if f.is_prime else Fraction(n, d)
    once = normalize(raw, f)
    assert normalize(once.value, f) == once
