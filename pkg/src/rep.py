from __future__ import annotations

import numpy as np
from typing import Optional
from functools import cache
from uea import UEAElem, Monomial
from liesym import is_su2
from errors import IndexOutOfRange
from numeric import GaussRat, ONE, ZERO, gauss


# numpy object arrays of GaussRat; Mat4 rows are (A, C), columns are (D, B)
Mat2 = np.ndarray
Mat4 = np.ndarray


def identity_matrix(n: int) -> np.ndarray:
    res = zero_matrix(n)
    for k in range(n):
        res[k, k] = ONE
    return res


def zero_matrix(n: int) -> np.ndarray:
    res = np.empty((n, n), dtype=object)
    res.fill(ZERO)
    return res


def matrix(rows) -> np.ndarray:
    res = np.empty((len(rows), len(rows[0])), dtype=object)
    for r, row in enumerate(rows):
        for c, value in enumerate(row):
            res[r, c] = value
    return res


def matrices_equal(a: np.ndarray, b: np.ndarray) -> bool:
    return a.shape == b.shape and all(x == y for x, y in zip(a.flat, b.flat))


def trace(m: np.ndarray) -> GaussRat:
    return sum((m[k, k] for k in range(m.shape[0])), ZERO)


def scalar_part(m: np.ndarray) -> Optional[GaussRat]:
    # c if m = c * identity, else None
    c = m[0, 0]
    return c if matrices_equal(m, identity_matrix(m.shape[0]) * c) else None


@cache
def tau(i: int) -> Mat2:
    # tau_i = -(i/2) sigma_i
    half, i_half = gauss("1/2"), gauss(0, "1/2")
    if i == 1:
        res = matrix([[ZERO, -i_half], [-i_half, ZERO]])
    elif i == 2:
        res = matrix([[ZERO, -half], [half, ZERO]])
    elif i == 3:
        res = matrix([[-i_half, ZERO], [ZERO, i_half]])
    else:
        raise IndexOutOfRange(f"tau index {i} outside 1..3")
    res.flags.writeable = False
    return res


@cache
def _monomial_matrix(monom: Monomial) -> Mat2:
    res = identity_matrix(2)
    for i, e in enumerate(monom):
        for _ in range(e):
            res = res @ tau(i + 1)
    res.flags.writeable = False
    return res


def rep_half(x: UEAElem) -> Mat2:
    assert is_su2(x.algebra.lie)
    res = zero_matrix(2)
    for monom, coeff in x.terms.items():
        res = res + _monomial_matrix(monom) * coeff
    return res


def tensor(t_side: Mat2, rep_side: Mat2) -> Mat4:
    # (t_side)^A_D (rep_side)^C_B at row (A, C), column (D, B)
    return np.kron(t_side, rep_side)


@cache
def tensor_sum_tau() -> Mat4:
    res = zero_matrix(4)
    for i in range(1, 4):
        res = res + tensor(tau(i), tau(i))
    res.flags.writeable = False
    return res


def delta_ad_cb() -> Mat4:
    # delta^A_D delta^C_B
    return identity_matrix(4)


def delta_ab_cd() -> Mat4:
    # delta^A_B delta^C_D, the swap of the two slots
    res = zero_matrix(4)
    for a in range(2):
        for c in range(2):
            res[2 * a + c, 2 * c + a] = ONE
    return res


def epsilon_ac_bd() -> Mat4:
    # epsilon^{AC} epsilon_{BD} with epsilon^{12} = epsilon_{12} = +1
    eps = [[0, 1], [-1, 0]]
    res = zero_matrix(4)
    for a in range(2):
        for c in range(2):
            for d in range(2):
                for b in range(2):
                    if eps[a][c] and eps[b][d]:
                        res[2 * a + c, 2 * d + b] = ONE * (eps[a][c] * eps[b][d])
    return res
