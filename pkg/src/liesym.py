from __future__ import annotations

from typing import Optional
from math import factorial
from itertools import product
from sympy import Matrix, LeviCivita, QQ, QQ_I
from dataclasses import dataclass
from functools import cached_property
from sympy.polys.rings import PolyElement, PolyRing, ring
from numeric import GaussRat, Rational, ONE, ZERO, to_gauss
from errors import IndexOutOfRange, UnsupportedAlgebra


SymPoly = PolyElement
# nested [i][j][k] tuples of GaussRat, holding f_{ij}^k
StructureConstants = tuple[tuple[tuple[GaussRat, ...], ...], ...]
Bilinear = tuple[tuple[GaussRat, ...], ...]


@dataclass(frozen=True, eq=False)
class LieData:
    name: str
    dim: int
    f: StructureConstants
    kappa: Bilinear
    kappa_inv: Bilinear

    @cached_property
    def _ring_and_generators(self) -> tuple[PolyRing, tuple[SymPoly, ...]]:
        poly_ring, *generators = ring(",".join(f"E{i+1}" for i in range(self.dim)), QQ_I)
        return poly_ring, tuple(generators)

    @property
    def sym_ring(self) -> PolyRing:
        return self._ring_and_generators[0]

    @property
    def generators(self) -> tuple[SymPoly, ...]:
        return self._ring_and_generators[1]

    def generator(self, i: int) -> SymPoly:
        # 1-based, as written E_1, E_2, E_3
        check_index(self, i)
        return self.generators[i - 1]

    def constant(self, value) -> SymPoly:
        return self.sym_ring.ground_new(to_gauss(value))

    def monomial(self, exponents: tuple[int, ...], coeff=ONE) -> SymPoly:
        return self.sym_ring.from_dict({tuple(exponents): to_gauss(coeff)})


def check_index(lie: LieData, i: int):
    if not 1 <= i <= lie.dim:
        raise IndexOutOfRange(f"generator index {i} outside 1..{lie.dim} for {lie.name}")


def from_structure_constants(name: str, f) -> LieData:
    dim = len(f)
    f = tuple(tuple(tuple(to_gauss(f[i][j][k]) for k in range(dim)) for j in range(dim)) for i in range(dim))
    # kappa_{mn} = tr(ad_m ad_n), (ad_m)^k_j = f_{mj}^k
    kappa = tuple(
        tuple(sum((f[m][j][k] * f[n][k][j] for j, k in product(range(dim), repeat=2)), ZERO) for n in range(dim))
        for m in range(dim)
    )
    killing = Matrix(dim, dim, lambda m, n: QQ_I.to_sympy(kappa[m][n]))
    if killing.det() == 0:
        raise UnsupportedAlgebra(f"{name} has a degenerate Killing form")
    inverse = killing.inv()
    kappa_inv = tuple(tuple(QQ_I.from_sympy(inverse[m, n]) for n in range(dim)) for m in range(dim))
    return LieData(name=name, dim=dim, f=f, kappa=kappa, kappa_inv=kappa_inv)


def su2() -> LieData:
    f = [[[int(LeviCivita(i, j, k)) for k in range(1, 4)] for j in range(1, 4)] for i in range(1, 4)]
    return from_structure_constants("su2", f)


SU2 = su2()


def is_su2(lie: LieData) -> bool:
    return lie.dim == SU2.dim and lie.f == SU2.f


def satisfies_jacobi(lie: LieData) -> bool:
    f, r = lie.f, range(lie.dim)
    for i, j, k, l in product(r, repeat=4):
        total = sum((f[i][j][m] * f[m][k][l] + f[j][k][m] * f[m][i][l] + f[k][i][m] * f[m][j][l] for m in r), ZERO)
        if total:
            return False
    return True


def total_degree(p: SymPoly) -> int:
    # -1 for the zero polynomial
    return max((sum(monom) for monom in p.keys()), default=-1)


def homogeneous_part(p: SymPoly, degree: int) -> SymPoly:
    return p.ring.from_dict({monom: coeff for monom, coeff in p.items() if sum(monom) == degree})


def norm_sq(lie: LieData = SU2) -> SymPoly:
    gens = lie.generators
    res = lie.sym_ring.zero
    for i, j in product(range(lie.dim), repeat=2):
        if lie.kappa_inv[i][j]:
            res += gens[i] * gens[j] * lie.kappa_inv[i][j]
    return res


def norm_sq_power(k: int, lie: LieData = SU2) -> SymPoly:
    assert k >= 0
    return norm_sq(lie) ** k


def partial(i: int, p: SymPoly, lie: LieData = SU2) -> SymPoly:
    return p.diff(lie.generator(i))


def kks_bracket(p: SymPoly, q: SymPoly, lie: LieData = SU2) -> SymPoly:
    gens = lie.generators
    dp = [p.diff(x) for x in gens]
    dq = [q.diff(x) for x in gens]
    res = lie.sym_ring.zero
    for i, j in product(range(lie.dim), repeat=2):
        if not dp[i] or not dq[j]:
            continue
        for k in range(lie.dim):
            if lie.f[i][j][k]:
                res += gens[k] * dp[i] * dq[j] * lie.f[i][j][k]
    return res


def norm_partial_sq(p: SymPoly, lie: LieData = SU2) -> SymPoly:
    # kappa_{mn} d^m d^n
    gens = lie.generators
    res = lie.sym_ring.zero
    for m, n in product(range(lie.dim), repeat=2):
        if lie.kappa[m][n]:
            res += p.diff(gens[m]).diff(gens[n]) * lie.kappa[m][n]
    return res


def _jhalf_coefficient(n: int) -> GaussRat:
    return to_gauss(QQ(1, factorial(2 * n + 1) * 8 ** n))


def jhalf_apply(p: SymPoly, lie: LieData = SU2) -> SymPoly:
    if not is_su2(lie):
        raise UnsupportedAlgebra(f"j^(1/2) is only evaluated for su2, not {lie.name}")
    res = lie.sym_ring.zero
    term, n = p, 0
    while term:
        res += term * _jhalf_coefficient(n)
        term = norm_partial_sq(term, lie)
        n += 1
    return res


# Coefficient of ||E||^{2(k-N)} E_i in j^(1/2)(d) applied to ||E||^{2k} E_i, N = 0..min(k, order_limit)
def diffop_closed(k: int, order_limit: Optional[int] = None, with_generator: bool = True) -> list[Rational]:
    assert k >= 0
    top = k if order_limit is None else min(k, order_limit)
    res = []
    for n in range(top + 1):
        coeff = QQ(factorial(2 * k + 1), factorial(2 * n + 1) * 8 ** n * factorial(2 * k - 2 * n + 1))
        if with_generator:
            coeff *= QQ(2 * k + 3, 2 * k - 2 * n + 3)
        res.append(coeff)
    return res
