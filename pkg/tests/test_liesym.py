import pytest
from itertools import combinations_with_replacement, product
from sympy import QQ
from numeric import ONE, ZERO, gauss
from errors import IndexOutOfRange, UnsupportedAlgebra
from liesym import (SU2, diffop_closed, from_structure_constants, jhalf_apply, kks_bracket, norm_partial_sq, norm_sq,
                    is_su2, norm_sq_power, partial, satisfies_jacobi, total_degree)

E1, E2, E3 = SU2.generators


def monomials(max_degree: int):
    return [SU2.monomial(m) for m in product(range(max_degree + 1), repeat=3) if 1 <= sum(m) <= max_degree]


def test_su2_data():
    for i, j, k in product(range(3), repeat=3):
        assert SU2.f[i][j][k] == SU2.f[j][i][k] * -1
    assert SU2.f[0][1][2] == ONE
    for m, n in product(range(3), repeat=2):
        assert SU2.kappa[m][n] == (gauss(-2) if m == n else ZERO)
        assert SU2.kappa_inv[m][n] == (gauss("-1/2") if m == n else ZERO)
        assert sum((SU2.kappa_inv[m][k] * SU2.kappa[k][n] for k in range(3)), ZERO) == (ONE if m == n else ZERO)
    assert satisfies_jacobi(SU2)


def test_norm_sq_power():
    assert norm_sq_power(0) == SU2.sym_ring.one
    assert norm_sq_power(1) == (E1 ** 2 + E2 ** 2 + E3 ** 2) * gauss("-1/2")
    assert norm_sq_power(1) == norm_sq()
    assert len(norm_sq_power(2)) == 6


def test_partial():
    assert partial(1, E1) == SU2.sym_ring.one
    assert partial(1, E1 ** 2 * E2) == E1 * E2 * 2
    assert partial(2, norm_sq()) == -E2
    with pytest.raises(IndexOutOfRange):
        partial(4, E1)


def test_kks_bracket_examples():
    assert kks_bracket(E1, E2) == E3
    assert kks_bracket(E1, E1) == SU2.sym_ring.zero
    assert kks_bracket(E1 * E2, E3) == E1 * E1 - E2 * E2


def test_kks_bracket_is_a_lie_bracket():
    basis = monomials(3)
    for p, q in product(basis, repeat=2):
        assert kks_bracket(p, q) == -kks_bracket(q, p)
    for p, q, r in combinations_with_replacement(basis, 3):
        jacobi = kks_bracket(p, kks_bracket(q, r)) + kks_bracket(q, kks_bracket(r, p)) + kks_bracket(r, kks_bracket(p, q))
        assert not jacobi


def test_norm_partial_sq_examples():
    assert not norm_partial_sq(E2)
    assert norm_partial_sq(norm_sq() * E1) == E1 * 10
    assert norm_partial_sq(norm_sq_power(2)) == norm_sq() * 20


def test_norm_partial_sq_on_radial_terms():
    for k in range(1, 7):
        assert norm_partial_sq(norm_sq_power(k) * E3) == norm_sq_power(k - 1) * E3 * ((2 * k + 3) * 2 * k)
        assert norm_partial_sq(norm_sq_power(k)) == norm_sq_power(k - 1) * (2 * k * (2 * k + 1))


def test_jhalf_apply_examples():
    assert jhalf_apply(E1) == E1
    assert jhalf_apply(norm_sq() * E1) == norm_sq() * E1 + E1 * gauss("5/24")
    assert jhalf_apply(norm_sq()) == norm_sq() + SU2.constant(QQ(1, 8))


def test_diffop_closed_examples():
    assert diffop_closed(0) == [QQ(1)]
    assert diffop_closed(1) == [QQ(1), QQ(5, 24)]
    assert diffop_closed(3, order_limit=1) == diffop_closed(3)[:2]


def test_diffop_closed_agrees_with_operator():
    for k in range(7):
        expected = sum((norm_sq_power(k - n) * E2 * c for n, c in enumerate(diffop_closed(k))), SU2.sym_ring.zero)
        assert jhalf_apply(norm_sq_power(k) * E2) == expected
        expected = sum((norm_sq_power(k - n) * c for n, c in enumerate(diffop_closed(k, with_generator=False))),
                       SU2.sym_ring.zero)
        assert jhalf_apply(norm_sq_power(k)) == expected


def test_generic_algebra_construction():
    copy = from_structure_constants("so3", [[[SU2.f[i][j][k] for k in range(3)] for j in range(3)] for i in range(3)])
    assert copy.kappa == SU2.kappa
    assert satisfies_jacobi(copy)
    assert is_su2(copy)
    assert jhalf_apply(copy.generators[0], copy) == copy.generators[0]
    scaled = from_structure_constants("su2", [[[2 * SU2.f[i][j][k] for k in range(3)] for j in range(3)] for i in range(3)])
    assert satisfies_jacobi(scaled) and not is_su2(scaled)
    with pytest.raises(UnsupportedAlgebra):
        jhalf_apply(scaled.generators[0], scaled)
    with pytest.raises(UnsupportedAlgebra):
        from_structure_constants("abelian", [[[0] * 2] * 2] * 2)


def test_total_degree():
    assert total_degree(SU2.sym_ring.zero) == -1
    assert total_degree(SU2.constant(3)) == 0
    assert total_degree(norm_sq_power(2) * E1 + E2) == 5
