"""Exception types shared across the package."""


class HookBoundError(Exception):
    """Base class for all errors raised by this package."""


class CellOutOfDiagramError(HookBoundError):
    """A cell coordinate lies outside the Young diagram."""

    def __init__(self, cell, partition):
        self.cell = cell
        self.partition = partition
        super().__init__(f"cell {tuple(cell)} not in diagram {partition}")


class RemovalError(HookBoundError):
    """A requested cell removal does not peel corners of the running diagram."""

    def __init__(self, cell, message):
        self.cell = cell
        super().__init__(f"cannot remove {tuple(cell)}: {message}")


class EmptySampleSpaceError(HookBoundError):
    """No partition satisfies the requested sampling constraints."""


class GuardExceededError(HookBoundError):
    """A brute-force oracle was asked to run beyond its hard size guard."""

    def __init__(self, what, n, limit):
        self.n = n
        self.limit = limit
        super().__init__(f"{what}: n={n} exceeds guard n<={limit}")


class HypothesisError(HookBoundError):
    """A bound was requested on input violating its stated hypotheses.

    ``condition`` names the first failing hypothesis.
    """

    def __init__(self, condition, detail=""):
        self.condition = condition
        msg = f"hypothesis violated: {condition}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class ConsistencyError(HookBoundError):
    """An internal invariant of a certified construction failed.

    This signals a bug in the construction (or an input outside the regime
    where the construction is sound), never a legitimate FAIL verdict.
    """
