"""Exception hierarchy.

Every failure raised by the library derives from :class:`DesignError`, so the
CLI can map any of them to exit code 2 (precondition) or 3 (verification).
"""


class DesignError(Exception):
    """Base class for all library errors."""


# finite fields
class NotPrime(DesignError):
    pass


class NotPrimePower(DesignError):
    pass


class DegreeZero(DesignError):
    pass


class FieldTooLarge(DesignError):
    pass


class FieldMismatch(DesignError):
    pass


class DivisionByZero(DesignError, ZeroDivisionError):
    pass


class DlogOfZero(DesignError):
    pass


# matrix assembly
class DimensionMismatch(DesignError):
    pass


class OverlappingSupports(DesignError):
    pass


class SymbolOutOfRange(DesignError):
    pass


class WrongRowCount(DesignError):
    pass


class NotSquareAfterBorder(DesignError):
    pass


# orthogonal arrays
class AgreementViolation(DesignError):
    def __init__(self, row_a, row_b, count, expected=None):
        self.row_a, self.row_b, self.count = row_a, row_b, count
        super().__init__(
            f"rows {row_a} and {row_b} agree in {count} columns"
            + ("" if expected is None else f" (expected {expected})")
        )


class ColumnImbalance(DesignError):
    def __init__(self, col, symbol, count):
        self.col, self.symbol, self.count = col, symbol, count
        super().__init__(f"symbol {symbol} occurs {count} times in column {col}")


# seeds and constructions
class NotADivisor(DesignError):
    pass


class EvenCharacteristic(DesignError):
    pass


class NoPaleyDesign(DesignError):
    pass


class NotSymmetric(DesignError):
    pass


class NoTwin(DesignError):
    pass


class UnknownSeed(DesignError):
    pass


class ParseError(DesignError):
    pass


class NotAWeighingMatrix(DesignError):
    pass


class IngredientUnavailable(DesignError):
    pass


class IngredientMismatch(DesignError):
    pass


class VerificationFailed(DesignError):
    def __init__(self, message, report=None):
        self.report = report
        super().__init__(message)


# association schemes
class NotABGW(DesignError):
    pass


class AxiomViolation(DesignError):
    def __init__(self, axiom, witness):
        self.axiom, self.witness = axiom, witness
        super().__init__(f"axiom {axiom} fails at {witness}")


class EigenMismatch(DesignError):
    def __init__(self, row, col, delta):
        self.row, self.col, self.delta = row, col, delta
        super().__init__(f"eigen check ({row}, {col}) off by {delta:.3g}")


class NotCanonical(DesignError):
    pass
