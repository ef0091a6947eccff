from django.core.exceptions import ValidationError


class GraphFormatError(ValidationError):
    """Edge-list input that does not describe a simple graph"""


class GraphAnalysisError(Exception):
    """Base class for failures of the graph analysis services"""


class InvalidGraphError(GraphAnalysisError, ValueError):
    """Adjacency that breaks the simple undirected graph invariants"""


class InvalidVertexError(GraphAnalysisError, ValueError):
    """Vertex id out of range, or an empty set where members are required"""


class DisconnectedGraphError(GraphAnalysisError):
    """Solver called on a disconnected graph"""


class SearchCapExceededError(GraphAnalysisError):
    """Graph order above the configured exact-search cap"""

    def __init__(self, order: int, cap: int, search: str = 'exact search'):
        self.order = order
        self.cap = cap
        super().__init__(f"{search} refused: {order} vertices exceeds the cap of {cap}")


class TrivialGraphError(GraphAnalysisError):
    """The single-vertex graph has no eccentricity to lower"""


class InvalidTeamError(GraphAnalysisError):
    """A construction was handed a set that is not a comfortable team"""


class HypothesisError(GraphAnalysisError):
    """A construction was called outside the hypothesis it relies on"""


class ConstructionFailedError(GraphAnalysisError):
    """A team construction produced a set that fails the comfortable-team check"""

    def __init__(self, message: str, team=None, diagnosis=None):
        self.team = team
        self.diagnosis = diagnosis
        super().__init__(message)


class CorpusBoundsError(GraphAnalysisError, ValueError):
    """Corpus specification outside its allowed bounds"""


class UnknownCheckError(GraphAnalysisError, ValueError):
    """Check id not among the known theorem and property checks"""
