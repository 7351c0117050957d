from __future__ import annotations

import numpy as np
from math import factorial
from typing import Literal, Optional
from dataclasses import dataclass
from sympy import QQ
from errors import ResidualNotInSpan
from liesym import SU2, SymPoly, norm_sq_power
from quantizer import MapKind, get_quantizer
from numeric import USeries, GaussRat, I, ZERO, taylor_oracle, to_gauss
from rep import (Mat4, delta_ab_cd, delta_ad_cb, epsilon_ac_bd, identity_matrix, matrices_equal, rep_half, tau,
                 tensor, tensor_sum_tau, trace, zero_matrix)


IntertwinerBasis = Literal["epsilon", "swap"]
# 2x2 matrix with SymPoly entries
PolyMatrix = list[list[SymPoly]]


@dataclass(frozen=True)
class GradedClassicalExp:
    # identity_slot[n] is P_n, generator_slots[n][i] is P_{n,i+1}; the u^n term is P_n 1 + sum_i P_{n,i} T_i
    identity_slot: tuple[SymPoly, ...]
    generator_slots: tuple[tuple[SymPoly, ...], ...]

    @property
    def order(self) -> int:
        return len(self.identity_slot)


@dataclass(frozen=True, eq=False)
class MatSeries:
    # terms[n] is the Mat4 coefficient of u^n
    terms: tuple[Mat4, ...]

    @classmethod
    def from_components(cls, components: list[tuple[USeries, Mat4]]) -> MatSeries:
        order = min(series.order for series, _ in components)
        terms = []
        for n in range(order):
            term = zero_matrix(4)
            for series, basis in components:
                if series[n]:
                    term = term + basis * series[n]
            terms.append(term)
        return cls(tuple(terms))

    @property
    def order(self) -> int:
        return len(self.terms)

    def map_terms(self, fn) -> USeries:
        return USeries(tuple(to_gauss(fn(term)) for term in self.terms))

    def __add__(self, other: MatSeries) -> MatSeries:
        return MatSeries(tuple(a + b for a, b in zip(self.terms, other.terms)))

    def __sub__(self, other: MatSeries) -> MatSeries:
        return MatSeries(tuple(a - b for a, b in zip(self.terms, other.terms)))

    def __eq__(self, other) -> bool:
        if not isinstance(other, MatSeries):
            return NotImplemented
        return self.order == other.order and all(matrices_equal(a, b) for a, b in zip(self.terms, other.terms))


@dataclass
class SkeinReport:
    map: MapKind
    order: int
    c1: USeries
    c2: USeries
    c_swap: USeries
    product_check: USeries
    passes_kauffman: bool
    a_series: Optional[USeries] = None


def _poly_matmul(a: PolyMatrix, b: PolyMatrix) -> PolyMatrix:
    return [[a[r][0] * b[0][c] + a[r][1] * b[1][c] for c in range(2)] for r in range(2)]


def classical_exp_series(order: int) -> GradedClassicalExp:
    assert order >= 1
    zero = SU2.sym_ring.zero
    # exponent -8iu kappa^{ij} E_i T_j = 4iu sum_i E_i tau_i, kept as its u^1 coefficient
    step: PolyMatrix = [[zero, zero], [zero, zero]]
    for i, generator in enumerate(SU2.generators):
        t = tau(i + 1)
        for r in range(2):
            for c in range(2):
                if t[r, c]:
                    step[r][c] = step[r][c] + generator * (t[r, c] * I * 4)
    one = SU2.sym_ring.one
    power: PolyMatrix = [[one, zero], [zero, one]]
    identity_slot, generator_slots = [], []
    for n in range(order):
        if n:
            power = [[entry * to_gauss(QQ(1, n)) for entry in row] for row in _poly_matmul(power, step)]
        # M = P 1 + sum_i P_i tau_i, tr(tau_i tau_j) = -delta_ij / 2
        identity_slot.append((power[0][0] + power[1][1]) * to_gauss(QQ(1, 2)))
        slots = []
        for i in range(1, 4):
            t = tau(i)
            traced = zero
            for r in range(2):
                for c in range(2):
                    if t[r, c]:
                        traced = traced + power[c][r] * t[r, c]
            slots.append(traced * to_gauss(-2))
        generator_slots.append(tuple(slots))
    return GradedClassicalExp(tuple(identity_slot), tuple(generator_slots))


def quantized_exp(kind: MapKind, order: int) -> MatSeries:
    assert order >= 1
    quantizer = get_quantizer(kind)
    classical = classical_exp_series(order)
    terms = []
    for n in range(order):
        term = tensor(identity_matrix(2), rep_half(quantizer.quantize(classical.identity_slot[n])))
        for i, poly in enumerate(classical.generator_slots[n]):
            if poly:
                term = term + tensor(tau(i + 1), rep_half(quantizer.quantize(poly)))
        terms.append(term)
    return MatSeries(tuple(terms))


def decompose_pauli(m: MatSeries) -> tuple[USeries, USeries]:
    # alpha = tr(M) / 4, beta = (4/3) tr(sum tau x tau . M)
    sum_tau = tensor_sum_tau()
    alpha = m.map_terms(lambda term: trace(term) / 4)
    beta = m.map_terms(lambda term: trace(sum_tau @ term) * to_gauss(QQ(4, 3)))
    rebuilt = MatSeries.from_components([(alpha, identity_matrix(4)), (beta, sum_tau)])
    if rebuilt != m:
        raise ResidualNotInSpan("matrix series is not in the span of 1x1 and sum tau x tau")
    return alpha, beta


def _pair(a: Mat4, b: Mat4) -> GaussRat:
    return sum((x * y for x, y in zip(a.flat, b.flat)), ZERO)


def _intertwiner_basis(basis: IntertwinerBasis) -> tuple[Mat4, Mat4]:
    if basis == "epsilon":
        return delta_ab_cd(), -epsilon_ac_bd()
    if basis == "swap":
        return delta_ab_cd(), delta_ad_cb()
    raise ValueError(f"unknown intertwiner basis {basis!r}")


def to_intertwiner(m: MatSeries, basis: IntertwinerBasis) -> tuple[USeries, USeries]:
    first, second = _intertwiner_basis(basis)
    # Frobenius Gram system for the two basis tensors
    g11, g12, g22 = _pair(first, first), _pair(first, second), _pair(second, second)
    det = g11 * g22 - g12 * g12
    c1, c2 = [], []
    for term in m.terms:
        r1, r2 = _pair(first, term), _pair(second, term)
        c1.append((r1 * g22 - r2 * g12) / det)
        c2.append((r2 * g11 - r1 * g12) / det)
    c1, c2 = USeries(tuple(c1)), USeries(tuple(c2))
    if MatSeries.from_components([(c1, first), (c2, second)]) != m:
        raise ResidualNotInSpan(f"matrix series is not in the span of the {basis} intertwiners")
    return c1, c2


def epsilon_to_swap(c1: USeries, c2: USeries) -> tuple[USeries, USeries]:
    # -eps eps = swap - delta delta
    return c1 - c2, c2


# sum_p z^p/p! tau^i_1 ... tau^i_p x Q(E_i_1 ... E_i_p) with z = 4iu
def noui_cross_series(kind: MapKind, order: int) -> MatSeries:
    assert order >= 1
    quantizer = get_quantizer(kind)
    # tau^(i tau^j) = -delta^{ij}/4 and delta^{ij} E_i E_j = -2 ||E||^2
    contraction = QQ(-1, 4) * QQ(-2)
    terms = []
    for p in range(order):
        k = p // 2
        weight = (I * 4) ** p * to_gauss(contraction ** k / factorial(p))
        if p % 2 == 0:
            term = tensor(identity_matrix(2), rep_half(quantizer.quantize(norm_sq_power(k))))
        else:
            term = zero_matrix(4)
            for i in range(1, 4):
                image = quantizer.quantize(norm_sq_power(k) * SU2.generator(i))
                term = term + tensor(tau(i), rep_half(image))
        terms.append(term * weight)
    return MatSeries(tuple(terms))


def kauffman_check(kind: MapKind, order: int) -> SkeinReport:
    assert order >= 4
    c1, c2 = to_intertwiner(quantized_exp(kind, order), "epsilon")
    product_check = c1 * c2
    passes = product_check.is_constant(1)
    a_series = None
    if passes:
        assert c1 == c2.inverse()
        a_series = c2
    c_swap, _ = epsilon_to_swap(c1, c2)
    return SkeinReport(map=kind, order=order, c1=c1, c2=c2, c_swap=c_swap, product_check=product_check,
                       passes_kauffman=passes, a_series=a_series)


def loop_closures(m: MatSeries) -> tuple[USeries, USeries]:
    parallel = m.map_terms(trace)
    crossed = m.map_terms(lambda term: sum((term[2 * a + c, 2 * c + a] for a in range(2) for c in range(2)), ZERO))
    return parallel, crossed


def closed_form(kind: MapKind, order: int) -> tuple[USeries, USeries]:
    cos1, sin1 = taylor_oracle("cos", 1, order), taylor_oracle("sin", 1, order)
    cos2, sin2 = taylor_oracle("cos", 2, order), taylor_oracle("sin", 2, order)
    four_i = I * 4
    if kind == "sym":
        return cos1 - sin1.shift(1), (sin1 * 2 + cos1.shift(1)) * (four_i / 3)
    if kind == "duflo":
        sinc = taylor_oracle("one_minus_cos_over_u", 2, order) * to_gauss(QQ(1, 2))
        return cos2, (sin2 + sinc) * (four_i / 3)
    if kind == "duflo-mod":
        return cos2, sin2 * (I * 2)
    if kind == "sym-mod":
        return cos1 - sin1.shift(1), cos1.shift(1) * four_i
    if kind == "npp":
        return cos1, sin1 * four_i
    raise ValueError(f"unknown map kind {kind!r}")
