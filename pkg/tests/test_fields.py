from fractions import Fraction

import pytest

from core.errors import DomainError, PayloadError
from linalg.fields import PrimeField, RationalField, Sqrt5Field, field_from_selector, field_from_tag


def test_prime_field_arithmetic():
    F = PrimeField(7)
    assert F.add(5, 4) == 2
    assert F.mul(3, 5) == 1
    assert F.inv(3) == 5
    assert F.neg(2) == 5
    assert F.power(3, 6) == 1
    assert F.power(3, -1) == 5
    assert F.from_fraction(Fraction(1, 2)) == 4


def test_prime_field_rejects_composite_modulus():
    with pytest.raises(DomainError):
        PrimeField(15)
    with pytest.raises(DomainError):
        PrimeField(True)


@pytest.mark.parametrize("F", [PrimeField(7), RationalField(), Sqrt5Field()])
def test_division_by_zero(F):
    with pytest.raises(DomainError):
        F.inv(F.zero)


def test_rational_parse():
    F = RationalField()
    assert F.parse(3) == 3
    assert F.parse("-1/2") == Fraction(-1, 2)
    with pytest.raises(PayloadError):
        F.parse("1/0")
    with pytest.raises(PayloadError):
        F.parse("one")


@pytest.mark.parametrize("text, expected", [
    ("2-3*s5", (2, -3)),
    ("s5", (0, 1)),
    ("-s5", (0, -1)),
    ("1/2+s5", (Fraction(1, 2), 1)),
    ("-24*s5", (0, -24)),
    (4, (4, 0)),
])
def test_sqrt5_parse(text, expected):
    F = Sqrt5Field()
    assert F.parse(text) == F.element(*expected)


def test_sqrt5_parse_rejects_garbage():
    with pytest.raises(PayloadError):
        Sqrt5Field().parse("2+sqrt(5)")


def test_sqrt5_arithmetic():
    F = Sqrt5Field()
    root = F.element(0, 1)
    assert F.mul(root, root) == F.from_int(5)
    x = F.element(3, 2)
    assert F.mul(x, F.inv(x)) == F.one
    assert F.mul(x, F.conjugate(x)) == F.from_int(9 - 20)
    assert F.format(F.element(1, -2)) == "1-2*s5"
    assert F.parse(F.format(x)) == x
    with pytest.raises(DomainError):
        F.inv(F.zero)


def test_random_elements_stay_in_range(rng):
    F = PrimeField(11)
    assert all(0 <= F.random(rng) < 11 for _ in range(100))
    Q = RationalField(bound=3)
    assert all(abs(Q.random(rng)) <= 3 for _ in range(100))


def test_field_tags():
    for F in (PrimeField(13), RationalField(), Sqrt5Field()):
        assert field_from_tag(F.tag) == F
    assert field_from_selector("prime", 13) == PrimeField(13)
    with pytest.raises(PayloadError):
        field_from_tag({"prime": 13, "extra": 1})
    with pytest.raises(DomainError):
        field_from_selector("complex", 13)
