"""Densest sub-hypergraph extraction under per-edge weight tables.

Exact flow-based search, a (1 - eps) geometric search, greedy and batched
peeling, the all-concave closed form, LP certificate tools and a brute-force
oracle. Densities are exact :class:`fractions.Fraction` values.
"""

from .errors import (EmptyGraphError, EmptySetError, HyperdenseError, NotConcaveError,
                     NotConvexError, ParseError, SizeLimitError, TooLargeError,
                     ValidationError)
from .flow import CutResult, CutVariant, FlowNetwork, alpha_coefficients, build_network, min_cut
from .hypergraph import (Hypergraph, Shape, ShiftedWeightWarning, Solution, WeightedHypergraph,
                         WeightFn, density, induced_weight, removal_delta)
from .io import dumps_json, dumps_text, load_instance
from .lp import (FractionalSolution, Verdict, check_feasible, export_lp, indicator_solution,
                 separate, sweep_round)
from .oracle import OracleResult, brute_force, random_instance
from .peel import PeelStep, removal_csv, solve_concave, solve_greedy, solve_para
from .search import SearchTrace, solve_eps, solve_exact

__version__ = "0.1.0"

__all__ = [
    "EmptyGraphError",
    "EmptySetError",
    "HyperdenseError",
    "NotConcaveError",
    "NotConvexError",
    "ParseError",
    "SizeLimitError",
    "TooLargeError",
    "ValidationError",
    "CutResult",
    "CutVariant",
    "FlowNetwork",
    "alpha_coefficients",
    "build_network",
    "min_cut",
    "Hypergraph",
    "Shape",
    "ShiftedWeightWarning",
    "Solution",
    "WeightedHypergraph",
    "WeightFn",
    "density",
    "induced_weight",
    "removal_delta",
    "dumps_json",
    "dumps_text",
    "load_instance",
    "FractionalSolution",
    "Verdict",
    "check_feasible",
    "export_lp",
    "indicator_solution",
    "separate",
    "sweep_round",
    "OracleResult",
    "brute_force",
    "random_instance",
    "PeelStep",
    "removal_csv",
    "solve_concave",
    "solve_greedy",
    "solve_para",
    "SearchTrace",
    "solve_eps",
    "solve_exact",
]
