import pytest
from hypothesis import given, strategies as st

from shodapairs.errors import ParseError
from shodapairs.perm import Permutation


def perms(n):
    return st.permutations(list(range(n))).map(Permutation)


def test_parse_and_format_roundtrip():
    p = Permutation.parse("(0 1 2)(3 4)", 6)
    assert p.images == (1, 2, 0, 4, 3, 5)
    assert p.cycle_string() == "(0 1 2)(3 4)"
    assert Permutation.parse("()", 3).is_identity()
    assert Permutation.parse("(0,2)", 3).images == (2, 1, 0)


def test_product_acts_left_to_right():
    a = Permutation.parse("(0 1)", 3)
    b = Permutation.parse("(1 2)", 3)
    # 0 -a-> 1 -b-> 2
    assert (a * b)(0) == 2


@pytest.mark.parametrize("text", ["(0 1", "(0 a)", "(0 1) x", "(0 5)", "(0 1 0)", ""])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        Permutation.parse(text, 3)


def test_rejects_non_bijection():
    with pytest.raises(ValueError):
        Permutation([0, 0, 1])


@given(perms(6), perms(6), perms(6))
def test_associative(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(perms(7))
def test_inverse_and_cycles(a):
    ident = Permutation.identity(7)
    assert a * a.inverse() == ident
    assert Permutation.parse(a.cycle_string(), 7) == a
