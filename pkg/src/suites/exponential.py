from functools import cached_property
from .base import Suite
from config import acceptance_order, cross_series_order, map_grid
from numeric import taylor_oracle
from quantizer import Quantizer, build_quantizers
from expmap import (closed_form, decompose_pauli, epsilon_to_swap, kauffman_check, noui_cross_series, quantized_exp,
                    to_intertwiner)


class ExpmapSuite(Suite):
    name = "expmap"

    @cached_property
    def quantizer_list(self) -> list[Quantizer]:
        return build_quantizers(map_grid)

    def check_closed_forms(self) -> tuple[bool, str]:
        for quantizer in self.quantizer_list:
            kind = quantizer.kind
            if decompose_pauli(quantized_exp(kind, acceptance_order)) != closed_form(kind, acceptance_order):
                return False, f"{kind}: Pauli coefficients differ from the closed form"
        return True, f"{len(self.quantizer_list)} maps match through u^{acceptance_order - 1}"

    def check_parity(self) -> tuple[bool, str]:
        for quantizer in self.quantizer_list:
            alpha, beta = decompose_pauli(quantized_exp(quantizer.kind, acceptance_order))
            if not alpha.only_even_powers() or not beta.only_odd_powers():
                return False, f"{quantizer.kind}: parity of the Pauli coefficients is broken"
        return True, "alpha even, beta odd"

    def check_cross_series(self) -> tuple[bool, str]:
        for quantizer in self.quantizer_list:
            kind = quantizer.kind
            if noui_cross_series(kind, cross_series_order) != quantized_exp(kind, cross_series_order):
                return False, f"{kind}: tensor series differs from the quantized exponential"
        return True, f"agree through u^{cross_series_order - 1}"

    def check_basis_consistency(self) -> tuple[bool, str]:
        for quantizer in self.quantizer_list:
            m = quantized_exp(quantizer.kind, acceptance_order)
            if epsilon_to_swap(*to_intertwiner(m, "epsilon")) != to_intertwiner(m, "swap"):
                return False, f"{quantizer.kind}: recoupled epsilon coefficients differ from the swap basis"
        return True, "recoupling agrees for all maps"

    def check_kauffman(self) -> tuple[bool, str]:
        passing = [quantizer.kind for quantizer in self.quantizer_list
                   if kauffman_check(quantizer.kind, acceptance_order).passes_kauffman]
        if passing != ["npp"]:
            return False, f"skein relation holds for {passing}"
        report = kauffman_check("npp", acceptance_order)
        if report.a_series != taylor_oracle("exp_i", 1, acceptance_order):
            return False, "A is not e^{iu}"
        return True, "only npp reproduces the Kauffman bracket, A = e^{iu}"
