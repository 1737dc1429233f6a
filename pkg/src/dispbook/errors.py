"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class DispbookError(Exception):
    """Base class for all errors raised by dispbook."""


class GraphError(DispbookError, ValueError):
    """An input graph is malformed."""


class LoopRejected(GraphError):
    def __init__(self, vertex: int, edge_index: int | None = None) -> None:
        where = f" (edge {edge_index})" if edge_index is not None else ""
        super().__init__(f"loop at vertex {vertex}{where}; multigraphs must be loopless")
        self.vertex = vertex
        self.edge_index = edge_index


class BadIndex(GraphError):
    def __init__(self, vertex: int, n: int) -> None:
        super().__init__(f"vertex index {vertex} out of range 0..{n - 1}")
        self.vertex = vertex
        self.n = n


class HypothesisError(DispbookError, ValueError):
    """The graph does not satisfy a hypothesis required by an algorithm."""


class NotBipartite(HypothesisError):
    def __init__(self, cycle: list[int]) -> None:
        super().__init__(f"not bipartite: odd cycle {cycle}")
        self.cycle = cycle


class NotCubic(HypothesisError):
    def __init__(self, vertex: int, degree: int) -> None:
        super().__init__(f"not cubic: vertex {vertex} has degree {degree}")
        self.vertex = vertex
        self.degree = degree


class NotCubicBipartite(HypothesisError):
    pass


class NotConnected(HypothesisError):
    pass


class NotPlanar(HypothesisError):
    def __init__(self, witness=None) -> None:
        detail = f": contains a {witness.kind} subdivision" if witness is not None else ""
        super().__init__(f"not planar{detail}")
        self.witness = witness


class SearchExhausted(DispbookError):
    """The exact search hit its node limit before reaching a verdict."""

    def __init__(self, node_limit: int) -> None:
        super().__init__(f"search exhausted after {node_limit} nodes")
        self.node_limit = node_limit


class NoneWithinBudget(DispbookError):
    """Search completed and proved that no embedding uses at most ``budget`` pages."""

    def __init__(self, budget: int) -> None:
        super().__init__(f"no matching book embedding with at most {budget} pages")
        self.budget = budget


class NoWitnessFound(DispbookError):
    """The complete search space was explored without finding a witness."""


class BaseCaseExhausted(SearchExhausted):
    pass


class EntanglementViolated(DispbookError, AssertionError):
    pass


class CombineVerificationFailed(DispbookError, AssertionError):
    pass


class ParseError(DispbookError, ValueError):
    def __init__(self, message: str, line: int | None = None) -> None:
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)
        self.line = line


class EmbeddingMismatch(ParseError):
    """An embedding file does not fit the graph it is paired with."""
