from sympy import QQ
from .base import Suite
from uea import SU2_ALGEBRA
from rep import rep_half, scalar_part, tau, matrices_equal
from numeric import to_gauss
from quantizer import q_duflo, duflo_closed_spinhalf
from liesym import (SU2, diffop_closed, jhalf_apply, kks_bracket, norm_partial_sq, norm_sq_power, satisfies_jacobi)


class DufloSuite(Suite):
    name = "duflo"

    def check_odd_power_spinhalf(self) -> tuple[bool, str]:
        for k in range(6):
            value = to_gauss(duflo_closed_spinhalf(k, True))
            for i in range(1, 4):
                image = rep_half(q_duflo(norm_sq_power(k) * SU2.generator(i)))
                if not matrices_equal(image, tau(i) * value):
                    return False, f"Q_D(||E||^{2 * k} E_{i}) does not evaluate to {value} tau_{i}"
        return True, "matches ((2/3)k+1)/((k+1) 2^k) for k <= 5"

    def check_even_power_spinhalf(self) -> tuple[bool, str]:
        for k in range(6):
            value = scalar_part(rep_half(q_duflo(norm_sq_power(k))))
            if value != to_gauss(duflo_closed_spinhalf(k, False)):
                return False, f"spin-1/2 value of Q_D(||E||^{2 * k}) is {value}"
        return True, "1/2^k for k <= 5"

    def check_invariant_isomorphism(self) -> tuple[bool, str]:
        shifted = SU2_ALGEBRA.casimir() + QQ(1, 8)
        for a in range(5):
            for b in range(5 - a):
                lhs = q_duflo(norm_sq_power(a + b))
                if lhs != q_duflo(norm_sq_power(a)) * q_duflo(norm_sq_power(b)):
                    return False, f"Q_D is not multiplicative on ||E||^{2 * a} * ||E||^{2 * b}"
        for k in range(5):
            if q_duflo(norm_sq_power(k)) != shifted ** k:
                return False, f"Q_D(||E||^{2 * k}) != (Delta + 1/8)^{k}"
        return True, "multiplicative for a+b <= 4, equals (Delta + 1/8)^k"

    def check_diffop_closed_form(self) -> tuple[bool, str]:
        for k in range(7):
            with_generator = jhalf_apply(norm_sq_power(k) * SU2.generator(1))
            expected = sum((norm_sq_power(k - n) * SU2.generator(1) * c for n, c in enumerate(diffop_closed(k))),
                           SU2.sym_ring.zero)
            if with_generator != expected:
                return False, f"j^(1/2) on ||E||^{2 * k} E_1 differs from the closed coefficients"
            plain = jhalf_apply(norm_sq_power(k))
            expected = sum((norm_sq_power(k - n) * c for n, c in enumerate(diffop_closed(k, with_generator=False))),
                           SU2.sym_ring.zero)
            if plain != expected:
                return False, f"j^(1/2) on ||E||^{2 * k} differs from the closed coefficients"
        return True, "closed coefficients agree for k <= 6"

    def check_laplacian_eigenvalues(self) -> tuple[bool, str]:
        for k in range(1, 7):
            radial = norm_sq_power(k) * SU2.generator(1)
            if norm_partial_sq(radial) != norm_sq_power(k - 1) * SU2.generator(1) * ((2 * k + 3) * 2 * k):
                return False, f"||d||^2 on ||E||^{2 * k} E_1"
            if norm_partial_sq(norm_sq_power(k)) != norm_sq_power(k - 1) * (2 * k * (2 * k + 1)):
                return False, f"||d||^2 on ||E||^{2 * k}"
        return True, "(2k+3)(2k) and 2k(2k+1) for k <= 6"

    def check_structure_constants(self) -> tuple[bool, str]:
        if not satisfies_jacobi(SU2):
            return False, "Jacobi identity fails"
        e1, e2, e3 = SU2.generators
        if kks_bracket(e1, e2) != e3:
            return False, "{E_1, E_2} != E_3"
        return True, "Jacobi identity and KKS bracket on generators"
