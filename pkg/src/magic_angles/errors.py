"""Exception types.

Hypothesis violations are caller misuse (the component or vein does not meet
the formula's assumptions). Domain errors are data dependent (the angle is not
in the set where the formula applies). The harness counts the two separately.
"""


class MagicAnglesError(ValueError):
    pass


class NotDyadicError(MagicAnglesError):
    pass


class DegenerateIntervalError(MagicAnglesError):
    pass


class AngleParseError(MagicAnglesError):
    def __init__(self, text: str, position: int, reason: str):
        self.text = text
        self.position = position
        self.reason = reason
        super().__init__(f"cannot parse {text!r} at position {position}: {reason}")


class IncidentLeavesError(MagicAnglesError):
    pass


class CrossingLeavesError(MagicAnglesError):
    pass


class TreeDidNotCloseError(MagicAnglesError):
    pass


class RefineAlphaError(MagicAnglesError):
    pass


class HypothesisError(MagicAnglesError):
    """The component/vein pair violates the assumptions of the formula."""

    exit_code = 4


class LowerHalfPlaneError(HypothesisError):
    exit_code = 4


class HalfLimbError(HypothesisError):
    exit_code = 5


class WrongVeinError(HypothesisError):
    exit_code = 6


class PeriodTooSmallError(HypothesisError):
    exit_code = 8


class DomainError(MagicAnglesError):
    """The input angle lies outside the domain of the formula."""

    exit_code = 7


class AngleNotOnUpperPartError(DomainError):
    exit_code = 7


class NotInSectorsError(DomainError):
    exit_code = 7


class NotTunedAngleError(DomainError):
    exit_code = 7
