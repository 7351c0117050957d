from __future__ import annotations

from typing import Union
from functools import cache
from collections import defaultdict
from liesym import LieData, SU2, check_index
from numeric import GaussRat, Scalar, ONE, ZERO, to_gauss
from errors import NotCentral, NotPolynomialInCasimir


# PBW exponent vector (a, b, c) meaning E^_1^a E^_2^b E^_3^c
Monomial = tuple[int, ...]
Terms = dict[Monomial, GaussRat]


class UEAElem:
    # normal-ordered PBW monomial -> coefficient
    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: EnvelopingAlgebra, terms: Terms):
        self.algebra = algebra
        self.terms = {monom: coeff for monom, coeff in terms.items() if coeff}

    def coeff(self, monom: Monomial) -> GaussRat:
        return self.terms.get(monom, ZERO)

    def degree(self) -> int:
        return max((sum(monom) for monom in self.terms), default=-1)

    def scalar_value(self) -> Union[GaussRat, None]:
        # the coefficient c if self = c * 1, else None
        if not self.terms:
            return ZERO
        if set(self.terms) == {self.algebra.unit_monomial}:
            return self.terms[self.algebra.unit_monomial]
        return None

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, UEAElem):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def __add__(self, other: Union[UEAElem, Scalar]) -> UEAElem:
        other = self.algebra.coerce(other)
        terms = defaultdict(lambda: ZERO, self.terms)
        for monom, coeff in other.terms.items():
            terms[monom] += coeff
        return UEAElem(self.algebra, terms)

    __radd__ = __add__

    def __neg__(self) -> UEAElem:
        return UEAElem(self.algebra, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: Union[UEAElem, Scalar]) -> UEAElem:
        return self + (-self.algebra.coerce(other))

    def __rsub__(self, other: Scalar) -> UEAElem:
        return self.algebra.coerce(other) - self

    def __mul__(self, other: Union[UEAElem, Scalar]) -> UEAElem:
        if isinstance(other, UEAElem):
            return self.algebra.pbw_mul(self, other)
        value = to_gauss(other)
        return UEAElem(self.algebra, {m: c * value for m, c in self.terms.items()})

    def __rmul__(self, other: Scalar) -> UEAElem:
        return self * other

    def __pow__(self, n: int) -> UEAElem:
        assert n >= 0
        res = self.algebra.one
        for _ in range(n):
            res = res * self
        return res

    def __repr__(self) -> str:
        return f"UEAElem({self.terms!r})"


class EnvelopingAlgebra:
    def __init__(self, lie: LieData):
        self.lie = lie
        self.dim = lie.dim
        self.unit_monomial: Monomial = (0,) * lie.dim

    @property
    def zero(self) -> UEAElem:
        return UEAElem(self, {})

    @property
    def one(self) -> UEAElem:
        return UEAElem(self, {self.unit_monomial: ONE})

    def scalar(self, value: Scalar) -> UEAElem:
        return UEAElem(self, {self.unit_monomial: to_gauss(value)})

    def coerce(self, value: Union[UEAElem, Scalar]) -> UEAElem:
        return value if isinstance(value, UEAElem) else self.scalar(value)

    def monomial(self, exponents: Monomial, coeff: Scalar = 1) -> UEAElem:
        return UEAElem(self, {tuple(exponents): to_gauss(coeff)})

    def generator(self, i: int) -> UEAElem:
        check_index(self.lie, i)
        exponents = [0] * self.dim
        exponents[i - 1] = 1
        return self.monomial(tuple(exponents))

    @cache
    def _left_mul_generator(self, i: int, monom: Monomial) -> tuple[tuple[Monomial, GaussRat], ...]:
        # E^_i * monom with i 0-based; first index j of monom decides whether a swap is needed
        j = next((t for t, e in enumerate(monom) if e), None)
        if j is None or i <= j:
            bumped = list(monom)
            bumped[i] += 1
            return ((tuple(bumped), ONE),)
        rest = list(monom)
        rest[j] -= 1
        rest = tuple(rest)
        acc: Terms = defaultdict(lambda: ZERO)
        # E^_i E^_j = E^_j E^_i + f_{ij}^k E^_k
        for inner, inner_coeff in self._left_mul_generator(i, rest):
            for outer, outer_coeff in self._left_mul_generator(j, inner):
                acc[outer] += inner_coeff * outer_coeff
        for k in range(self.dim):
            structure = self.lie.f[i][j][k]
            if structure:
                for outer, outer_coeff in self._left_mul_generator(k, rest):
                    acc[outer] += structure * outer_coeff
        return tuple((m, c) for m, c in acc.items() if c)

    def generator_times(self, i: int, x: UEAElem) -> UEAElem:
        # E^_i * x with i 0-based
        acc: Terms = defaultdict(lambda: ZERO)
        for monom, coeff in x.terms.items():
            for out, out_coeff in self._left_mul_generator(i, monom):
                acc[out] += coeff * out_coeff
        return UEAElem(self, acc)

    def word(self, letters: tuple[int, ...]) -> UEAElem:
        # ordered product of generators, letters 0-based
        res = self.one
        for i in reversed(letters):
            res = self.generator_times(i, res)
        return res

    @cache
    def _monomial_product(self, left: Monomial, right: Monomial) -> tuple[tuple[Monomial, GaussRat], ...]:
        res = UEAElem(self, {right: ONE})
        for i in reversed(range(self.dim)):
            for _ in range(left[i]):
                res = self.generator_times(i, res)
        return tuple(res.terms.items())

    def pbw_mul(self, x: UEAElem, y: UEAElem) -> UEAElem:
        acc: Terms = defaultdict(lambda: ZERO)
        for left, left_coeff in x.terms.items():
            for right, right_coeff in y.terms.items():
                for out, out_coeff in self._monomial_product(left, right):
                    acc[out] += left_coeff * right_coeff * out_coeff
        return UEAElem(self, acc)

    def commutator(self, x: UEAElem, y: UEAElem) -> UEAElem:
        return self.pbw_mul(x, y) - self.pbw_mul(y, x)

    @cache
    def casimir(self) -> UEAElem:
        res = self.zero
        for i in range(self.dim):
            for j in range(self.dim):
                if self.lie.kappa_inv[i][j]:
                    res = res + self.word((i, j)) * self.lie.kappa_inv[i][j]
        return res

    @cache
    def casimir_power(self, m: int) -> UEAElem:
        assert m >= 0
        if m == 0:
            return self.one
        return self.pbw_mul(self.casimir_power(m - 1), self.casimir())

    def is_central(self, x: UEAElem) -> bool:
        return all(not self.commutator(x, self.generator(i)) for i in range(1, self.dim + 1))

    def center_decompose(self, x: UEAElem) -> list[GaussRat]:
        if not self.is_central(x):
            raise NotCentral("element does not commute with every generator")
        coeffs: dict[int, GaussRat] = {}
        residual = x
        while residual:
            d = residual.degree()
            if d % 2:
                raise NotPolynomialInCasimir(f"central element has a degree {d} part")
            m = d // 2
            power = self.casimir_power(m)
            lead = max(monom for monom in power.terms if sum(monom) == d)
            c = residual.coeff(lead) / power.coeff(lead)
            residual = residual - power * c
            if residual.degree() >= d:
                raise NotPolynomialInCasimir(f"degree {d} part is not a multiple of the Casimir power")
            coeffs[m] = c
        if not coeffs:
            return []
        return [coeffs.get(m, ZERO) for m in range(max(coeffs) + 1)]

    def rebuild_from_center(self, coeffs: list[Scalar]) -> UEAElem:
        res = self.zero
        for m, c in enumerate(coeffs):
            res = res + self.casimir_power(m) * c
        return res


SU2_ALGEBRA = EnvelopingAlgebra(SU2)


def pbw_mul(x: UEAElem, y: UEAElem) -> UEAElem:
    return x.algebra.pbw_mul(x, y)


def casimir(algebra: EnvelopingAlgebra = SU2_ALGEBRA) -> UEAElem:
    return algebra.casimir()


def is_central(x: UEAElem) -> bool:
    return x.algebra.is_central(x)


def center_decompose(x: UEAElem) -> list[GaussRat]:
    return x.algebra.center_decompose(x)
