from __future__ import annotations

from typing import Literal, Union
from threading import Lock
from sympy import QQ, QQ_I
from sympy.polys.rings import ring, PolyElement
from sympy.polys.ring_series import rs_mul, rs_series_inversion
from dataclasses import dataclass
from math import comb, factorial
from errors import NonzeroConstantTerm, UnknownForm, ZeroConstantTerm


GaussRat = type(QQ_I.one)
Rational = type(QQ.one)
Scalar = Union[int, Rational, GaussRat]
FormName = Literal["cos", "sin", "exp_i", "cosh_of_iu", "one_minus_cos_over_u"]

ZERO = QQ_I.zero
ONE = QQ_I.one
I = QQ_I(0, 1)

# Truncated series in u live in this ring while sympy multiplies or inverts them
SERIES_RING, U = ring("u", QQ_I)


def parse_rational(text: str) -> Rational:
    num, _, den = text.strip().partition("/")
    return QQ(int(num), int(den) if den else 1)


def rat(p: Union[int, str, Rational], q: int = 1) -> Rational:
    if isinstance(p, str):
        return parse_rational(p) / q
    return QQ.convert(p) / q


def gauss(re: Union[int, str, Rational] = 0, im: Union[int, str, Rational] = 0) -> GaussRat:
    return QQ_I(rat(re), rat(im))


def to_gauss(value: Scalar) -> GaussRat:
    return QQ_I.convert(value)


def format_rational(q: Rational) -> str:
    # JSON form, always "p/q" with q > 0
    return f"{q.numerator}/{q.denominator}"


def rational_text(q: Rational) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def gauss_text(z: GaussRat) -> str:
    if not z.y:
        return rational_text(z.x)
    im = "i" if z.y == 1 else "-i" if z.y == -1 else f"{rational_text(z.y)}i"
    if not z.x:
        return im
    sign = "-" if z.y < 0 else "+"
    return f"{rational_text(z.x)} {sign} {im.lstrip('-')}"


@dataclass(frozen=True)
class USeries:
    # coeffs[n] is the coefficient of u^n
    coeffs: tuple[GaussRat, ...]

    @classmethod
    def from_coeffs(cls, coeffs) -> USeries:
        return cls(tuple(to_gauss(c) for c in coeffs))

    @classmethod
    def constant(cls, value: Scalar, order: int) -> USeries:
        assert order >= 1
        return cls((to_gauss(value),) + (ZERO,) * (order - 1))

    @classmethod
    def zeros(cls, order: int) -> USeries:
        return cls((ZERO,) * order)

    @classmethod
    def variable(cls, order: int) -> USeries:
        assert order >= 2
        return cls((ZERO, ONE) + (ZERO,) * (order - 2))

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, n: int) -> GaussRat:
        return self.coeffs[n]

    def __iter__(self):
        return iter(self.coeffs)

    def __add__(self, other: USeries) -> USeries:
        n = min(self.order, other.order)
        return USeries(tuple(self.coeffs[k] + other.coeffs[k] for k in range(n)))

    def __sub__(self, other: USeries) -> USeries:
        n = min(self.order, other.order)
        return USeries(tuple(self.coeffs[k] - other.coeffs[k] for k in range(n)))

    def __neg__(self) -> USeries:
        return USeries(tuple(-c for c in self.coeffs))

    def __mul__(self, other: Union[USeries, Scalar]) -> USeries:
        if isinstance(other, USeries):
            return series_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other: Scalar) -> USeries:
        return self.scale(other)

    def scale(self, value: Scalar) -> USeries:
        value = to_gauss(value)
        return USeries(tuple(c * value for c in self.coeffs))

    def shift(self, n: int) -> USeries:
        return series_shift(self, n)

    def div_by_u(self) -> USeries:
        return series_div_by_u(self)

    def inverse(self) -> USeries:
        return series_inv(self)

    def is_constant(self, value: Scalar) -> bool:
        return self == USeries.constant(value, self.order)

    def only_even_powers(self) -> bool:
        return not any(self.coeffs[1::2])

    def only_odd_powers(self) -> bool:
        return not any(self.coeffs[0::2])


def _to_ring(a: USeries) -> PolyElement:
    return SERIES_RING.from_dict({(n,): c for n, c in enumerate(a.coeffs) if c})


def _from_ring(p: PolyElement, order: int) -> USeries:
    # Newton steps may leave terms at or past the order; read only n < order
    return USeries(tuple(p.get((n,), ZERO) for n in range(order)))


def series_mul(a: USeries, b: USeries) -> USeries:
    n = min(a.order, b.order)
    return _from_ring(rs_mul(_to_ring(a), _to_ring(b), U, n), n)


def series_div_by_u(a: USeries) -> USeries:
    if a.coeffs[0]:
        raise NonzeroConstantTerm(f"cannot divide by u: constant term is {gauss_text(a.coeffs[0])}")
    return USeries(a.coeffs[1:])


def series_shift(a: USeries, n: int) -> USeries:
    # multiply by u^n, keeping the order
    assert n >= 0
    return USeries(((ZERO,) * n + a.coeffs)[:a.order])


def series_inv(a: USeries) -> USeries:
    if not a.coeffs[0]:
        raise ZeroConstantTerm("series with zero constant term has no inverse")
    return _from_ring(rs_series_inversion(_to_ring(a), U, a.order), a.order)


_bernoulli_table: list[Rational] = [QQ(1)]
_bernoulli_lock = Lock()


def bernoulli(n: int, second_kind: bool = False) -> Rational:
    assert n >= 0
    if n == 1:
        return QQ(1, 2) if second_kind else QQ(-1, 2)
    with _bernoulli_lock:
        # sum_{k=0}^{m} C(m+1, k) B_k = 0
        for m in range(len(_bernoulli_table), n + 1):
            acc = sum((comb(m + 1, k) * _bernoulli_table[k] for k in range(m)), QQ(0))
            _bernoulli_table.append(-acc / (m + 1))
        return _bernoulli_table[n]


def _cos_term(a: GaussRat, n: int) -> GaussRat:
    if n % 2:
        return ZERO
    return a ** n * (-1) ** (n // 2) / factorial(n)


def _sin_term(a: GaussRat, n: int) -> GaussRat:
    if n % 2 == 0:
        return ZERO
    return a ** n * (-1) ** (n // 2) / factorial(n)


def _exp_i_term(a: GaussRat, n: int) -> GaussRat:
    return (I * a) ** n / factorial(n)


def _cosh_of_iu_term(a: GaussRat, n: int) -> GaussRat:
    # cosh(i a u)
    if n % 2:
        return ZERO
    return (I * a) ** n / factorial(n)


def _one_minus_cos_over_u_term(a: GaussRat, n: int) -> GaussRat:
    # (1 - cos(a u)) / u
    return -_cos_term(a, n + 1) if n % 2 else ZERO


_TAYLOR_TERMS = {
    "cos": _cos_term,
    "sin": _sin_term,
    "exp_i": _exp_i_term,
    "cosh_of_iu": _cosh_of_iu_term,
    "one_minus_cos_over_u": _one_minus_cos_over_u_term,
}


def taylor_oracle(name: FormName, a: Scalar, order: int) -> USeries:
    if name not in _TAYLOR_TERMS:
        raise UnknownForm(f"unknown closed form: {name!r}")
    term = _TAYLOR_TERMS[name]
    a = to_gauss(rat(a) if isinstance(a, str) else a)
    return USeries(tuple(term(a, n) for n in range(order)))
