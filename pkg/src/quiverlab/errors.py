"""Domain exceptions shared across the package.

Exceptions marked "internal" signal states the theory rules out; hitting one
means an implementation bug, not bad user input.
"""


class QuiverLabError(Exception):
    """Base class for all domain errors."""


class DimensionMismatch(QuiverLabError):
    """Operands live in rings with different variable counts."""


class NotDivisible(QuiverLabError):
    """Exact Laurent division left a nonzero remainder."""


class ParseError(QuiverLabError):
    """Malformed polynomial or literal text; carries the offending position."""

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class LoopPresent(QuiverLabError):
    """An arrow from a vertex to itself."""


class TwoCyclePresent(QuiverLabError):
    """Arrows i->j and j->i both present."""


class BadLabel(QuiverLabError):
    """Vertex label outside 1..n."""


class BadDirection(QuiverLabError):
    """Mutation direction outside 1..n."""


class NotSkewSymmetric(QuiverLabError):
    """Matrix fails b_ij == -b_ji."""


class CyclicQuiver(QuiverLabError):
    """Operation requires an acyclic quiver."""


class NotTypeA(QuiverLabError):
    """Operation requires the underlying graph to be an A_n path."""


class QuiverMismatch(QuiverLabError):
    """Module descriptors attached to different quivers."""


class InfiniteLattice(QuiverLabError):
    """The module has infinitely many submodules."""


class NotExtOrthogonal(QuiverLabError):
    """Input modules are not pairwise Ext-orthogonal."""


class HomCycle(QuiverLabError):
    """Internal: Hom-arrows among ext-orthogonal modules formed a cycle."""


class RecursionUngrounded(QuiverLabError):
    """Character recursion hit a module it cannot ground."""


class NotAFace(QuiverLabError):
    """The remaining summands are not mutually compatible."""


class MissingCharacter(QuiverLabError):
    """Character table does not cover a requested module."""


class UnsupportedRank(QuiverLabError):
    """Stability pictures are drawn for ranks 2 and 3 only."""


class SignIncoherent(QuiverLabError):
    """Internal: a c-vector column carried both signs."""


class NoChamber(QuiverLabError):
    """Internal: a direction off every wall matched no chamber cone."""


class NZViolation(QuiverLabError):
    """Internal: the g/c duality check failed."""
