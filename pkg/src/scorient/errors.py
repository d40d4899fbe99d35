"""Exception hierarchy shared by every module of the package."""


class ScorientError(Exception):
    """Base class for all errors raised by scorient."""


class ParseError(ScorientError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class FormatViolation(ParseError):
    """Input parsed but violates the simple-graph invariants (loops, duplicates)."""


class DisconnectedContractionSet(ScorientError):
    pass


class NotSinglyConnected(ScorientError):
    pass


class TooLarge(ScorientError):
    pass


class ImproperColoring(ScorientError):
    pass


class InvalidPartition(ScorientError):
    pass


class RestrictionViolated(ScorientError):
    def __init__(self, step, message):
        self.step = step
        super().__init__(f"step {step}: {message}")


class BadParameter(ScorientError):
    pass


class InconsistentTranscript(ScorientError):
    pass


class OverlappingMarkedEdges(ScorientError):
    pass


class GadgetPrecondition(ScorientError):
    """A coupling gadget candidate is not sc-orientable or its marked edges are invalid."""
