#####################################################################
#
# Exception hierarchy shared by every gaugeforge module.
#
# Each error class carries the exit code the command line front end
# reports for it: 2 for usage, parse, configuration and lookup
# problems, 3 for numeric and domain failures. Verification failures
# are not exceptions; they travel as report objects.
#
# Author: gaugeforge developers
# Date: October 2026
#
#####################################################################


class GaugeForgeError(Exception):
    """ Base class of all gaugeforge errors.
    """
    exit_code = 3


class ParseError(GaugeForgeError, ValueError):
    """ Raised when expression text cannot be parsed.

    :param message: Human readable description
    :param offset: Byte offset of the offending token in the input
    :param expected: Description of what the parser expected there
    """
    exit_code = 2

    def __init__(self, message, offset=0, expected=''):
        self.offset = offset
        self.expected = expected
        detail = f"{message} at byte {offset}"
        if expected:
            detail += f" (expected {expected})"
        super().__init__(detail)


class ExpressionSyntaxError(ParseError):
    pass


class NestingDepthError(GaugeForgeError):
    """ Raised when an expression is nested deeper than the recursive
    tree walks can follow.
    """
    exit_code = 2


class UnknownFunctionError(ParseError):

    def __init__(self, name, offset=0, known=()):
        self.name = name
        expected = 'one of ' + ', '.join(known) if known else ''
        super().__init__(f"unknown function '{name}'", offset, expected)


class UnboundNameError(GaugeForgeError, LookupError):
    """ Raised when an expression mentions a name the binding lacks.
    """
    exit_code = 2

    def __init__(self, name):
        self.name = name
        super().__init__(f"name '{name}' is not bound")


class EvaluationDomainError(GaugeForgeError, ArithmeticError):
    """ Raised when numeric evaluation leaves the real domain.

    :param subtree: Printed form of the subexpression that failed
    :param reason: What went wrong (log of non-positive, division by zero, ...)
    """

    def __init__(self, subtree, reason):
        self.subtree = subtree
        self.reason = reason
        super().__init__(f"{reason} in '{subtree}'")


class SimplificationError(GaugeForgeError, ArithmeticError):
    pass


class GaugeFunctionError(GaugeForgeError, ValueError):
    exit_code = 2


class LagrangianError(GaugeForgeError, ValueError):
    exit_code = 2


class FamilySpecError(GaugeForgeError, ValueError):
    exit_code = 2


class DegenerateLagrangianError(GaugeForgeError):
    """ Raised when a Lagrangian does not involve the acceleration at all,
    so it defines no equation of motion (null Lagrangians alone are such).
    """


class NonlinearAccelerationError(GaugeForgeError):
    pass


class IntegrationError(GaugeForgeError):
    """ Raised when time stepping fails.

    :param message: What failed
    :param time: Time at which the failure happened, if known
    """

    def __init__(self, message, time=None):
        self.time = time
        if time is not None:
            message = f"{message} at t = {time!r}"
        super().__init__(message)


class QuadratureError(GaugeForgeError, ValueError):
    pass


class UnknownEntryError(GaugeForgeError, LookupError):
    exit_code = 2

    def __init__(self, entry_id, valid_ids):
        self.entry_id = entry_id
        self.valid_ids = tuple(valid_ids)
        super().__init__(f"unknown catalog entry '{entry_id}'; valid ids: "
                         + ', '.join(self.valid_ids))


class ConfigError(GaugeForgeError, ValueError):
    exit_code = 2
