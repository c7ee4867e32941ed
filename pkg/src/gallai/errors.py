"""Exception hierarchy shared by all modules."""


class GallaiError(Exception):
    """Base class for all library errors."""


# -- graph construction / IO -------------------------------------------------

class GraphError(GallaiError):
    pass


class SelfLoopError(GraphError):
    pass


class VertexOutOfRangeError(GraphError):
    pass


class DuplicateRoleError(GraphError):
    pass


class ZeroLengthError(GraphError):
    pass


class EdgeAbsentError(GraphError):
    pass


class DisconnectedError(GraphError):
    pass


class ParseError(GallaiError):
    """Bad input file.  Carries a 1-based line (and column when known)."""

    def __init__(self, message, line=None, column=None):
        loc = ""
        if line is not None:
            loc = f" (line {line}" + (f", column {column}" if column is not None else "") + ")"
        super().__init__(message + loc)
        self.line = line
        self.column = column


# -- cnf ----------------------------------------------------------------------

class CnfError(GallaiError):
    pass


class ClauseTooWideError(CnfError):
    pass


class TooManyVariablesError(CnfError):
    pass


class PromiseViolatedError(CnfError):
    pass


class OddLengthError(CnfError):
    pass


# -- solvers -------------------------------------------------------------------

class SolveError(GallaiError):
    pass


class BudgetExceededError(SolveError):
    """Search-node budget exhausted before the answer was certain."""

    def __init__(self, message="node budget exhausted", best=None, nodes=None):
        super().__init__(message)
        self.best = best
        self.nodes = nodes


class AcyclicError(SolveError):
    pass


class BlockTooLargeError(SolveError):
    pass


# -- gadget builders ------------------------------------------------------------

class GadgetError(GallaiError):
    pass


class GadgetTooSmallError(GadgetError):
    pass


class TargetTooSmallError(GadgetError):
    pass


class UncertifiedGadgetError(GadgetError):
    pass


class AnchorNotLongestPathEndpointError(GadgetError):
    pass


class AnchorNotOnLongestCycleError(GadgetError):
    pass
