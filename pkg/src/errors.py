# Base class for every error raised by the engine
class DufloError(Exception):
    pass


class NonzeroConstantTerm(DufloError):
    pass


class ZeroConstantTerm(DufloError):
    pass


class UnknownForm(DufloError):
    pass


class NotCentral(DufloError):
    pass


class NotPolynomialInCasimir(DufloError):
    pass


class DegreeTooLarge(DufloError):
    pass


class NotRadial(DufloError):
    pass


class IndexOutOfRange(DufloError):
    pass


class ResidualNotInSpan(DufloError):
    pass


class UnsupportedAlgebra(DufloError):
    pass


class ExprSyntaxError(DufloError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class ExponentNegative(DufloError):
    def __init__(self, position: int):
        super().__init__(f"negative exponent at position {position}")
        self.position = position
