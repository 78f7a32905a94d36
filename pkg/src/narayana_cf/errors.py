"""Exception hierarchy shared by all modules."""


class AlgebraError(ArithmeticError):
    pass


class NotDivisible(AlgebraError):
    """Exact division left a nonzero remainder."""


class DivisionByZero(AlgebraError, ZeroDivisionError):
    pass


class DomainMismatch(AlgebraError, TypeError):
    pass


class NonInvertibleConstantTerm(AlgebraError):
    pass


class BadConstantTerm(AlgebraError):
    pass


class NonzeroConstantTerm(AlgebraError):
    pass


class ZShiftNonzero(AlgebraError):
    """Division by a power of z was asked of a series whose low coefficients are not zero."""


class InsufficientMoments(ValueError):
    pass


class SingularMoment(ArithmeticError):
    """A norm L(p_n^2) vanished during extraction.

    Carries the coefficients recovered before the failure so callers can
    still report a prefix.
    """

    def __init__(self, index, s, t):
        super().__init__(f"L(p_{index}^2) = 0: Hankel determinant of order {index + 1} vanishes")
        self.index = index
        self.s = list(s)
        self.t = list(t)


class UnknownId(KeyError):
    def __str__(self):
        return f"unknown id: {self.args[0]!r}"
