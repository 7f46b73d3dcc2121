"""Path covers of the X side of bipartite graphs, with deficiency certificates."""

from .bigraph import BiGraph, GraphError, Side, VertexRef, build, girth, max_degree
from .cover import PathXCover, certify, min_cover_oracle, verify_cover
from .cubic import solve_cubic
from .deficiency import (
    DeficiencyCertificate,
    LambdaIndependentSet,
    alpha_lambda,
    deficiency_of,
    lambda_set,
    max_deficiency,
)
from .forest import solve_forest
from .highgirth import check_girth_condition, dependency_audit, solve_high_girth
from .hypergraph import Hypergraph, incidence_graph, strong_independence, subhypergraph, to_berge_cover
from .maxdeg3 import solve_maxdeg3

__all__ = [
    "BiGraph", "GraphError", "Side", "VertexRef", "build", "girth", "max_degree",
    "PathXCover", "certify", "min_cover_oracle", "verify_cover",
    "DeficiencyCertificate", "LambdaIndependentSet", "alpha_lambda", "deficiency_of",
    "lambda_set", "max_deficiency",
    "solve_forest", "solve_cubic", "solve_maxdeg3",
    "check_girth_condition", "dependency_audit", "solve_high_girth",
    "Hypergraph", "incidence_graph", "strong_independence", "subhypergraph", "to_berge_cover",
]
