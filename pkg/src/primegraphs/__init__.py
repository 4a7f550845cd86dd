"""Prime graphs, chains, type trees and the configurations every large prime graph contains."""

from .bigbound import BigBound
from .bounds import bound_report, compare_bounds, f_fn, g_fn, h_fn
from .configs import (THEOREM_FAMILIES, ConfigKind, Witness, build_config, detect_any, find_induced,
                      ladder_index, max_height, verify_witness)
from .errors import Budget, BudgetExhausted, InputError, InvariantViolation, ParseError, Refusal
from .formats import emit_adjlist, emit_graph6, parse_adjlist, parse_graph6, to_dot
from .graph import (Graph, complement, complete_bipartite, complete_graph, cycle_graph, empty_graph,
                    induced_subgraph, is_complete, is_independent, is_mixed, line_graph, path_graph,
                    random_graph, star_graph, subdivision)
from .modules import (Chain, PrimalityReport, chain_radius, find_chain, is_chain, is_module, is_prime,
                      module_closure, shrink_to_prime_chain)
from .oracles import oracle_check
from .pipeline import PipelineResult, Route, RunConfig, find_witness, run_corpus
from .ramsey import brute_force_ramsey_holds, find_mono_clique, ramsey_exact, ramsey_upper
from .typetree import (RankHeightReport, SpinePairs, TypeTree, arrange_full, build_tree_graph, element_rank,
                       extract_config_from_tree, extract_homogeneous, longest_branch, spine_pairs,
                       tree_height_exact, tree_rank_witness, verify_rank_height)

__version__ = "0.1.0"

__all__ = [
    "arrange_full",
    "BigBound",
    "bound_report",
    "brute_force_ramsey_holds",
    "Budget",
    "BudgetExhausted",
    "build_config",
    "build_tree_graph",
    "Chain",
    "chain_radius",
    "compare_bounds",
    "complement",
    "complete_bipartite",
    "complete_graph",
    "ConfigKind",
    "cycle_graph",
    "detect_any",
    "element_rank",
    "emit_adjlist",
    "emit_graph6",
    "empty_graph",
    "extract_config_from_tree",
    "extract_homogeneous",
    "f_fn",
    "find_chain",
    "find_induced",
    "find_mono_clique",
    "find_witness",
    "g_fn",
    "Graph",
    "h_fn",
    "induced_subgraph",
    "InputError",
    "InvariantViolation",
    "is_chain",
    "is_complete",
    "is_independent",
    "is_mixed",
    "is_module",
    "is_prime",
    "ladder_index",
    "line_graph",
    "longest_branch",
    "max_height",
    "module_closure",
    "oracle_check",
    "parse_adjlist",
    "parse_graph6",
    "ParseError",
    "path_graph",
    "PipelineResult",
    "PrimalityReport",
    "ramsey_exact",
    "ramsey_upper",
    "random_graph",
    "RankHeightReport",
    "Refusal",
    "Route",
    "run_corpus",
    "RunConfig",
    "shrink_to_prime_chain",
    "spine_pairs",
    "SpinePairs",
    "star_graph",
    "subdivision",
    "THEOREM_FAMILIES",
    "to_dot",
    "tree_height_exact",
    "tree_rank_witness",
    "TypeTree",
    "verify_rank_height",
    "verify_witness",
    "Witness",
]
