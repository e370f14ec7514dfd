"""Exception types with stable error codes for CLI diagnostics."""


class VerifierError(Exception):
    """Base class; ``code`` is machine readable, ``field`` names the culprit."""

    code = "ERROR"

    def __init__(self, message, field=None):
        super().__init__(message)
        self.field = field

    def diagnostic(self):
        if self.field:
            return f"{self.code}: {self} (field: {self.field})"
        return f"{self.code}: {self}"


class ParseError(VerifierError):
    code = "PARSE_ERROR"

    def __init__(self, message, position=None, field=None):
        super().__init__(message, field=field)
        self.position = position

    def diagnostic(self):
        loc = f" at position {self.position}" if self.position is not None else ""
        base = f"{self.code}: {self}{loc}"
        if self.field:
            base += f" (field: {self.field})"
        return base


class NotInCone(VerifierError):
    code = "NOT_IN_CONE"


class BadHVector(VerifierError):
    code = "BAD_H_DEGREES"


class NonHermitianD(VerifierError):
    code = "NON_HERMITIAN_D"


class BadJSquare(VerifierError):
    code = "BAD_J_SQUARE"


class GammaFails(VerifierError):
    code = "GAMMA_FAILS"


class OrderOneViolated(VerifierError):
    code = "ORDER_ONE_VIOLATED"


class BadFactor(VerifierError):
    code = "BAD_FACTOR"


class NotSelfadjoint(VerifierError):
    code = "NOT_SELFADJOINT"


class TwistIncompatible(VerifierError):
    code = "TWIST_INCOMPATIBLE"


class NotInTable(VerifierError):
    code = "NOT_IN_TABLE"


class ConfigError(VerifierError):
    code = "CONFIG_ERROR"
