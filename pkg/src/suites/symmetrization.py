from sympy import QQ
from itertools import product
from .base import Suite
from rep import rep_half, scalar_part
from liesym import SU2, norm_sq_power
from numeric import to_gauss
from quantizer import (q_sym, q_sym_bruteforce, q_sym_invariant_closed, ngivia_gi_check, sym_spinhalf_faulhaber)


def monomials_up_to(degree: int) -> list[tuple[int, int, int]]:
    return [m for m in product(range(degree + 1), repeat=3) if sum(m) <= degree]


class SymmetrizationSuite(Suite):
    name = "symmetrization"

    def check_bruteforce_equivalence(self) -> tuple[bool, str]:
        monomials = monomials_up_to(7)
        for monom in monomials:
            p = SU2.monomial(monom)
            if q_sym(p) != q_sym_bruteforce(p):
                return False, f"recursion and word averaging differ on E^{monom}"
        return True, f"{len(monomials)} monomials of degree <= 7 agree"

    def check_spinhalf_invariants(self) -> tuple[bool, str]:
        for k in range(7):
            value = scalar_part(rep_half(q_sym(norm_sq_power(k))))
            if value != to_gauss(QQ(2 * k + 1, 8 ** k)):
                return False, f"spin-1/2 value of Q_S(||E||^{2 * k}) is {value}"
        for k in range(6):
            if q_sym(norm_sq_power(k)) != q_sym_invariant_closed(k):
                return False, f"Bernoulli closed form differs at k={k}"
        return True, "(2k+1)/8^k for k <= 6, closed form for k <= 5"

    def check_ngi_via_gi(self) -> tuple[bool, str]:
        failed = [n for n in range(5) if not ngivia_gi_check(n)]
        return not failed, f"failed for n in {failed}" if failed else "holds for n <= 4"

    def check_bernoulli_convention(self) -> tuple[bool, str]:
        for k in range(7):
            expected = QQ(2 * k + 1, 8 ** k)
            first, second = sym_spinhalf_faulhaber(k, False), sym_spinhalf_faulhaber(k, True)
            if first != expected or second != expected:
                return False, f"k={k}: first kind {first}, second kind {second}, expected {expected}"
        for k in range(6):
            if q_sym_invariant_closed(k, second_kind=True) != q_sym_invariant_closed(k):
                return False, f"closed form depends on the B_1 convention at k={k}"
        return True, "both conventions agree for k <= 6"
