from __future__ import annotations

from math import comb
from itertools import product
from dataclasses import dataclass, field
from functools import cache, cached_property
from typing import Literal, Optional, Any
from sympy import QQ
from sympy.utilities.iterables import multiset_permutations
from numeric import GaussRat, Rational, ZERO, bernoulli, to_gauss
from liesym import SU2, SymPoly, is_su2, jhalf_apply, norm_sq_power, homogeneous_part, total_degree
from uea import SU2_ALGEBRA, EnvelopingAlgebra, UEAElem, Monomial
from errors import DegreeTooLarge, NotRadial, NotPolynomialInCasimir
from config import bruteforce_max_degree, ngi_max_n


MapKind = Literal["sym", "duflo", "duflo-mod", "sym-mod", "npp"]
MAP_KINDS: tuple[MapKind, ...] = ("sym", "duflo", "duflo-mod", "sym-mod", "npp")


class Symmetrizer:
    def __init__(self, algebra: EnvelopingAlgebra):
        self.algebra = algebra

    @cache
    def monomial_image(self, monom: Monomial) -> UEAElem:
        # Q_S(m) = sum_i (m_i / n) E^_i Q_S(m - e_i)
        n = sum(monom)
        if n == 0:
            return self.algebra.one
        res = self.algebra.zero
        for i, e in enumerate(monom):
            if e:
                lower = list(monom)
                lower[i] -= 1
                res = res + self.algebra.generator_times(i, self.monomial_image(tuple(lower))) * QQ(e, n)
        return res


@cache
def get_symmetrizer(algebra: EnvelopingAlgebra) -> Symmetrizer:
    return Symmetrizer(algebra)


def q_sym(p: SymPoly, algebra: EnvelopingAlgebra = SU2_ALGEBRA) -> UEAElem:
    symmetrizer = get_symmetrizer(algebra)
    res = algebra.zero
    for monom, coeff in p.items():
        res = res + symmetrizer.monomial_image(monom) * coeff
    return res


def q_sym_bruteforce(p: SymPoly, algebra: EnvelopingAlgebra = SU2_ALGEBRA) -> UEAElem:
    degree = total_degree(p)
    if degree > bruteforce_max_degree:
        raise DegreeTooLarge(f"brute-force symmetrization is limited to degree {bruteforce_max_degree}, got {degree}")
    res = algebra.zero
    for monom, coeff in p.items():
        letters = [i for i, e in enumerate(monom) for _ in range(e)]
        words = [tuple(w) for w in multiset_permutations(letters)] if letters else [()]
        average = algebra.zero
        for word in words:
            average = average + algebra.word(word)
        res = res + average * (to_gauss(coeff) / len(words))
    return res


def q_sym_invariant_closed(k: int, algebra: EnvelopingAlgebra = SU2_ALGEBRA, second_kind: bool = False) -> UEAElem:
    # -(1/8^k) sum_m C(2k+1, 2m) B_{2m} (2^{2m} - 2) (1 + 8 Delta)^{k-m}
    assert k >= 0
    base = algebra.one + algebra.casimir() * 8
    res = algebra.zero
    for m in range(k + 1):
        weight = comb(2 * k + 1, 2 * m) * bernoulli(2 * m, second_kind) * (2 ** (2 * m) - 2)
        res = res + (base ** (k - m)) * weight
    return res * QQ(-1, 8 ** k)


# Spin-1/2 value of Q_S(||E||^{2k}) from both Bernoulli sums; B_1 cancels, giving (2k+1)/8^k
def sym_spinhalf_faulhaber(k: int, second_kind: bool = False) -> Rational:
    assert k >= 0
    first = sum((comb(2 * k + 1, m) * bernoulli(m, second_kind) for m in range(2 * k + 1)), QQ(0))
    second = sum((comb(2 * k + 1, m) * bernoulli(m, second_kind) * 2 ** (2 * k - m + 1) for m in range(2 * k + 1)), QQ(0))
    return -first / 2 ** k + second / 8 ** k


def q_duflo(p: SymPoly, algebra: EnvelopingAlgebra = SU2_ALGEBRA) -> UEAElem:
    return q_sym(jhalf_apply(p, algebra.lie), algebra)


@dataclass
class RadialDecomposition:
    # even[k] is the coefficient of ||E||^{2k}; odd[i][k] of ||E||^{2k} E_{i+1}
    even: list[GaussRat] = field(default_factory=list)
    odd: tuple[list[GaussRat], ...] = field(default_factory=lambda: ([], [], []))

    def reassemble(self) -> SymPoly:
        res = SU2.sym_ring.zero
        for k, c in enumerate(self.even):
            if c:
                res += norm_sq_power(k) * c
        for i, coeffs in enumerate(self.odd):
            for k, c in enumerate(coeffs):
                if c:
                    res += norm_sq_power(k) * SU2.generators[i] * c
        return res


def _set_padded(coeffs: list[GaussRat], k: int, value: GaussRat):
    if not value:
        return
    coeffs.extend([ZERO] * (k + 1 - len(coeffs)))
    coeffs[k] = value


def classify_radial(p: SymPoly) -> RadialDecomposition:
    res = RadialDecomposition()
    for d in range(total_degree(p) + 1):
        part = homogeneous_part(p, d)
        if not part:
            continue
        k = d // 2
        # E_1^{2k} appears in ||E||^{2k} with coefficient (-1/2)^k, E_i^{2k+1} likewise in ||E||^{2k} E_i
        lead = to_gauss(QQ(-1, 2) ** k)
        if d % 2 == 0:
            c = part.get((d, 0, 0), ZERO) / lead
            part -= norm_sq_power(k) * c
            _set_padded(res.even, k, c)
        else:
            for i in range(3):
                exponents = [0, 0, 0]
                exponents[i] = d
                c = part.get(tuple(exponents), ZERO) / lead
                part -= norm_sq_power(k) * SU2.generators[i] * c
                _set_padded(res.odd[i], k, c)
        if part:
            raise NotRadial(f"degree {d} part lies outside the span of ||E||^(2k) and ||E||^(2k) E_i")
    return res


class Quantizer:
    def __init__(self,
                 # sym, duflo, duflo-mod, sym-mod or npp
                 kind: Optional[MapKind] = None,
                 algebra: EnvelopingAlgebra = SU2_ALGEBRA):
        assert kind in MAP_KINDS, f"unknown map kind {kind!r}"
        self.kind = kind
        self.algebra = algebra
        if kind == "sym":
            self.quantization_method = self._symmetric
        elif kind == "duflo":
            self.quantization_method = self._duflo
        else:
            # the extensions are only defined on the radial subspace of S(su(2))
            assert is_su2(algebra.lie)
            self.quantization_method = self._radial

    @cached_property
    def params(self) -> dict[str, Any]:
        res: dict[str, Any] = {}
        res["map"] = self.kind
        res["algebra"] = self.algebra.lie.name
        return res

    @cache
    def invariant_image(self, k: int) -> UEAElem:
        # image of ||E||^{2k}
        if self.kind in ("duflo", "duflo-mod"):
            return q_duflo(norm_sq_power(k), self.algebra)
        if self.kind in ("sym", "sym-mod"):
            return q_sym(norm_sq_power(k), self.algebra)
        return self.algebra.scalar(QQ(1, 8 ** k))

    def _symmetric(self, p: SymPoly) -> UEAElem:
        return q_sym(p, self.algebra)

    def _duflo(self, p: SymPoly) -> UEAElem:
        return q_duflo(p, self.algebra)

    def _radial(self, p: SymPoly) -> UEAElem:
        decomposition = classify_radial(p)
        res = self.algebra.zero
        for k, c in enumerate(decomposition.even):
            if c:
                res = res + self.invariant_image(k) * c
        for i, coeffs in enumerate(decomposition.odd):
            for k, c in enumerate(coeffs):
                if c:
                    res = res + self.algebra.pbw_mul(self.invariant_image(k), self.algebra.generator(i + 1)) * c
        return res

    def quantize(self, p: SymPoly) -> UEAElem:
        return self.quantization_method(p)


@cache
def get_quantizer(kind: MapKind) -> Quantizer:
    return Quantizer(kind)


def q_extended(kind: MapKind, p: SymPoly) -> UEAElem:
    return get_quantizer(kind).quantize(p)


def build_quantizers(config_grid_list: list[dict[str, list]]) -> list[Quantizer]:
    quantizer_list: list[Quantizer] = []
    for config_grid in config_grid_list:
        for args in product(*config_grid.values()):
            kwargs = {k: v for k, v in zip(config_grid.keys(), args)}
            quantizer_list.append(Quantizer(**kwargs))
    return quantizer_list


def duflo_closed_spinhalf(k: int, with_generator: bool) -> Rational:
    assert k >= 0
    if with_generator:
        return QQ(1, 2 ** k) * QQ(2 * k + 3, 3) / (k + 1)
    return QQ(1, 2 ** k)


def ngivia_gi_check(n: int, algebra: EnvelopingAlgebra = SU2_ALGEBRA) -> bool:
    # Q_S(||E||^{2(n+1)}) = kappa^{ij} Q_S(||E||^{2n} E_i) E^_j
    if n > ngi_max_n:
        raise DegreeTooLarge(f"ngivia_gi_check is limited to n <= {ngi_max_n}, got {n}")
    lie = algebra.lie
    lhs = q_sym(norm_sq_power(n + 1, lie), algebra)
    rhs = algebra.zero
    for i in range(lie.dim):
        image = q_sym(norm_sq_power(n, lie) * lie.generators[i], algebra)
        for j in range(lie.dim):
            if lie.kappa_inv[i][j]:
                rhs = rhs + algebra.pbw_mul(image, algebra.generator(j + 1)) * lie.kappa_inv[i][j]
    return lhs == rhs


# Casimir polynomial c_n with Q_S(||E||^{2n} E_i) = c_n(Delta) E^_i.
def ngi_factor(n: int, algebra: EnvelopingAlgebra = SU2_ALGEBRA) -> list[GaussRat]:
    image = q_sym(norm_sq_power(n, algebra.lie) * algebra.lie.generators[0], algebra)
    generator = algebra.generator(1)
    # c_n(Delta) is read off from Q_S(||E||^{2(n+1)}) = c_n(Delta) Delta
    coeffs = algebra.center_decompose(q_sym(norm_sq_power(n + 1, algebra.lie), algebra))
    if coeffs and coeffs[0]:
        raise NotPolynomialInCasimir("Q_S(||E||^(2(n+1))) has a constant term")
    factor = coeffs[1:]
    if algebra.rebuild_from_center(factor) * generator != image:
        raise NotPolynomialInCasimir(f"Q_S(||E||^{2 * n} E_1) is not a Casimir polynomial times E^_1")
    return factor
