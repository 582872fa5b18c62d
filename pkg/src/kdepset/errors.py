"""Exception hierarchy shared by all kdepset modules."""

from __future__ import annotations


class KDepError(Exception):
    """Base class for every error raised by kdepset."""


class ParseError(KDepError, ValueError):
    """Malformed edge-list or matchings input."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NotBipartite(KDepError, ValueError):
    """The graph contains an odd cycle; ``cycle`` holds one witness."""

    def __init__(self, cycle: list[int]):
        self.cycle = list(cycle)
        super().__init__(f"graph is not bipartite; odd cycle {self.cycle}")


class EdgeNotPresent(KDepError, KeyError):
    def __init__(self, edge: tuple[int, int]):
        self.edge = edge
        super().__init__(f"edge {edge} is not in the graph")

    def __str__(self) -> str:
        return self.args[0]


class InvalidMatching(KDepError, ValueError):
    """A set of pairs is not a matching of the graph it was checked against."""


class NotMaximumMatching(KDepError, ValueError):
    """An augmenting path exists, so the supplied matching is not maximum."""


class InvalidProvider(KDepError, ValueError):
    """A matching provider yielded something other than a maximum matching."""


class InvalidK(KDepError, ValueError):
    pass


class NotOptimal(KDepError, ValueError):
    """The set passed as an optimum is not even k-dependent."""


class TooLarge(KDepError, ValueError):
    """Instance exceeds the configured brute-force threshold."""


class NotKE(KDepError, ValueError):
    """Graph is not Konig-Egervary (maximum matching smaller than minimum cover)."""


class ConstructionFailure(KDepError, RuntimeError):
    """A generated worst-case matching failed validation."""


class TightnessViolation(KDepError, AssertionError):
    """The worst-case run did not reach the expected ratio; ``trace`` is attached."""

    def __init__(self, message: str, trace=None):
        self.trace = trace
        super().__init__(message)
