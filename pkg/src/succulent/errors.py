"""Exception hierarchy.

Structural failures (``StructureError`` subclasses) mean a lemma-level
guarantee did not hold on the instance; they indicate a bug upstream, not
bad input.
"""


class SucculentError(Exception):
    """Base class for every error raised by this package."""


class InputError(SucculentError):
    """Malformed or unsupported input graph / end specification."""


class ParseError(InputError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.message = message


class NotConnected(InputError):
    pass


class OverlappingEnds(InputError):
    pass


class UnknownTerminalVertex(InputError):
    pass


class MarkerInCut(InputError):
    pass


class InfeasibleSeparator(SucculentError):
    pass


class BudgetExceeded(SucculentError):
    pass


class TooLarge(BudgetExceeded):
    pass


class NotDividing(SucculentError):
    pass


class StructureError(SucculentError):
    """A structural invariant failed."""


class CentreMismatch(StructureError):
    pass


class UnequalHalves(StructureError):
    pass


class NotTransitive(StructureError):
    pass


class AxiomViolation(StructureError):
    def __init__(self, axiom: int, message: str = ""):
        super().__init__(f"axiom {axiom} violated" + (f": {message}" if message else ""))
        self.axiom = axiom


class EmbeddingFailed(StructureError):
    pass


class CornerNotIsolated(StructureError):
    pass


class CorrespondenceFailure(StructureError):
    pass


class NotATree(StructureError):
    pass


class NotASucculent(StructureError):
    pass


class FMapIncomplete(StructureError):
    pass


class GMapNotBijective(StructureError):
    pass


class NonEdgeCutArtifact(StructureError):
    pass
