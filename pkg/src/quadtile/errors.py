"""Exception hierarchy shared by all quadtile modules."""


class TilingError(Exception):
    """Base class for every error raised by quadtile."""


# field arithmetic

class NonPositive(TilingError, ValueError):
    pass


class PerfectSquare(TilingError, ValueError):
    pass


class RadicandMismatch(TilingError, ValueError):
    pass


class DivisionByZero(TilingError, ZeroDivisionError):
    pass


# geometry

class NonPositiveScale(TilingError, ValueError):
    pass


class AspectMismatch(TilingError, ValueError):
    pass


# decisions

class TooFewRatios(TilingError, ValueError):
    pass


class PairPreconditionViolated(TilingError, ValueError):
    def __init__(self, pair, kind):
        self.pair = pair
        self.kind = kind
        super().__init__(f"ratios {pair[0]} and {pair[1]}: {kind} is rational")


class BoundaryViolated(TilingError, ValueError):
    pass


# constructions

class CaseMismatch(TilingError, ValueError):
    pass


class DegenerateRatio(TilingError, ValueError):
    pass


class Infeasible(TilingError):
    """No tiling exists; ``decision`` carries the violated condition when known."""

    def __init__(self, message, decision=None):
        super().__init__(message)
        self.decision = decision


class NotStrict(Infeasible):
    pass


class SearchExhausted(TilingError, RuntimeError):
    pass
