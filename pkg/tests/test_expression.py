import random
import pytest
from sympy import QQ
from numeric import I, gauss
from liesym import SU2, norm_sq, norm_sq_power
from errors import DufloError, ExponentNegative, ExprSyntaxError
from expression import (Generator, ImagUnit, Norm2, Power, Product, RationalLit, Sum, lower_expr, parse_expr,
                        print_expr, tokenize)

E1, E2, E3 = SU2.generators


def test_parse_examples():
    assert parse_expr("E1") == Generator(1)
    assert parse_expr("norm2^2 * E3") == Product((Power(Norm2(), 2), Generator(3)))
    assert parse_expr("1/2 - i") == Sum(RationalLit(1, 2), (("-", ImagUnit()),))
    assert parse_expr("-3 * (E1 + E2)") == Product((RationalLit(-3), Sum(Generator(1), (("+", Generator(2)),))))
    assert parse_expr("  E2^0 ") == Power(Generator(2), 0)


def test_tokenize_positions():
    assert [t.where for t in tokenize("E1 +E2")] == [0, 3, 4, 6]


def test_syntax_errors():
    with pytest.raises(ExprSyntaxError) as info:
        parse_expr("E1 +")
    assert info.value.position == 4
    with pytest.raises(ExprSyntaxError) as info:
        parse_expr("E4")
    assert info.value.position == 0
    with pytest.raises(ExprSyntaxError) as info:
        parse_expr("E1 * 1/0")
    assert info.value.position == 7
    with pytest.raises(ExprSyntaxError):
        parse_expr("(E1")
    with pytest.raises(ExprSyntaxError):
        parse_expr("E1 $ E2")
    with pytest.raises(ExprSyntaxError):
        parse_expr("-E1")
    with pytest.raises(ExponentNegative) as info:
        parse_expr("E1^-1")
    assert info.value.position == 3
    assert isinstance(info.value, DufloError)


def test_lower_examples():
    assert lower_expr(parse_expr("norm2^2 * E1")) == norm_sq_power(2) * E1
    assert lower_expr(parse_expr("1/2 * E1*E2 - i*E3")) == E1 * E2 * gauss("1/2") - E3 * I
    assert lower_expr(parse_expr("norm2")) == norm_sq()
    assert lower_expr(parse_expr("(E1 + E2)^2")) == E1 ** 2 + E1 * E2 * 2 + E2 ** 2
    assert lower_expr(parse_expr("-2/4")) == SU2.constant(QQ(-1, 2))


def test_print_examples():
    assert print_expr(parse_expr("(E1+E2)*E3")) == "(E1 + E2) * E3"
    assert print_expr(parse_expr("E1 - (E2 - E3)")) == "E1 - (E2 - E3)"
    assert print_expr(parse_expr("(E1^2)^3")) == "(E1^2)^3"
    assert print_expr(parse_expr("E1*(E2*E3)")) == "E1 * (E2 * E3)"


def random_tree(rng: random.Random, depth: int):
    if depth == 0 or rng.random() < 0.3:
        choice = rng.randrange(4)
        if choice == 0:
            return Generator(rng.randint(1, 3))
        if choice == 1:
            return Norm2()
        if choice == 2:
            return ImagUnit()
        return RationalLit(rng.randint(-20, 20), rng.choice([None, rng.randint(1, 9)]))
    choice = rng.randrange(3)
    if choice == 0:
        rest = tuple((rng.choice("+-"), random_tree(rng, depth - 1)) for _ in range(rng.randint(1, 3)))
        return Sum(random_tree(rng, depth - 1), rest)
    if choice == 1:
        return Product(tuple(random_tree(rng, depth - 1) for _ in range(rng.randint(2, 3))))
    return Power(random_tree(rng, depth - 1), rng.randint(0, 4))


def test_print_parse_round_trip():
    rng = random.Random(2024)
    for _ in range(1000):
        tree = random_tree(rng, 4)
        assert parse_expr(print_expr(tree)) == tree
