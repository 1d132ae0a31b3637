"""
Exception hierarchy for the workbench.
Each class also derives from the builtin it specializes so callers can
catch either.
"""

from typing import Any, Optional


class WorkbenchError(Exception):
    """Base class for all workbench errors."""


class FormatError(WorkbenchError, ValueError):
    """Malformed input: bad JSON shape, out-of-range index, bad word syntax."""


class PreconditionError(WorkbenchError, ValueError):
    """An operation was called outside its precondition."""


class GroupAxiomError(PreconditionError):
    """A table handed over as a group is not a group."""


class AxiomError(PreconditionError):
    """A local group failing its axioms was passed where a valid one is needed."""

    def __init__(self, message: str, violations: Optional[list] = None):
        super().__init__(message)
        self.violations = violations or []


class InapplicableMoveError(WorkbenchError, ValueError):
    """A word move whose side condition does not hold."""

    def __init__(self, message: str, condition: str):
        super().__init__(message)
        self.condition = condition


class NeatnessError(WorkbenchError):
    """The commutation construction needs a neat local group."""


class MorphismError(WorkbenchError, ValueError):
    """Proposed images do not satisfy the morphism laws."""

    def __init__(self, message: str, violation: Any = None):
        super().__init__(message)
        self.violation = violation


class PrecisionError(WorkbenchError, ArithmeticError):
    """A p-adic computation needs digits beyond the tracked precision."""


class ResourceLimitError(WorkbenchError, RuntimeError):
    """A configured limit was hit before the computation could finish."""


class CompletionLimitError(ResourceLimitError):
    """Knuth-Bendix completion ran out of room; carries the partial system."""

    def __init__(self, message: str, partial: Any = None):
        super().__init__(message)
        self.partial = partial


class IncompleteSystemError(WorkbenchError, RuntimeError):
    """A normal form was requested from a system without a confluence certificate."""


class PipelineStageError(WorkbenchError):
    """A stage of the structure pipeline failed."""

    def __init__(self, message: str, stage: str, report: Any = None, undecided: bool = False):
        super().__init__(message)
        self.stage = stage
        self.report = report
        # the stage ran out of budget rather than failing
        self.undecided = undecided
