class QuotDegreeError(Exception):
    exit_code: int = 4

    def __init__(self, message: str):
        self.message = message
        super().__init__(message)


class ParameterError(QuotDegreeError, ValueError):
    exit_code = 2


class DimensionPositive(QuotDegreeError):
    exit_code = 3

    def __init__(self, eps: int):
        self.eps = eps
        super().__init__(
            f"Quot scheme has positive dimension eps={eps}; Holla formula inapplicable"
        )


class NonInvertible(QuotDegreeError, ArithmeticError):
    pass


class NonIntegerSign(QuotDegreeError, ArithmeticError):
    pass


class NonRationalResult(QuotDegreeError, ArithmeticError):
    pass


class CrossPathMismatch(QuotDegreeError, ArithmeticError):
    pass


class OracleError(QuotDegreeError):
    pass


class VerificationError(QuotDegreeError):
    pass


class ModulusMismatch(QuotDegreeError, ValueError):
    pass
