"""Graph pebbling toolkit: exact solvers, flow and weight-function bounds,
closed-form formulas, zero-sum constructions, and model-checker emission."""

from .configs import (
    Config,
    config_from_json,
    config_from_pairs,
    config_from_text,
    config_to_text,
    enumerate_configs,
    enumerate_configs_with_support,
    extract_blocks,
    extract_single_block,
    reduced_size,
    size,
    support,
    support_count,
)
from .errors import PebblingError, SearchCapExceeded
from .flows import (
    PebbleFlow,
    flow_from_steps,
    flow_from_text,
    flow_to_text,
    is_feasible,
    is_realized,
    realize,
    solve_via_flow,
    unidirectional,
)
from .formulas import (
    PathPartition,
    classify_diameter2,
    config_count,
    diameter2_bound,
    max_path_partition,
    pi_complete,
    pi_complete_bipartite,
    pi_cycle,
    pi_grid,
    pi_instar,
    pi_tree,
    pi_weighted_hypercube,
)
from .graphs import (
    Graph,
    Homomorphism,
    arrow_divisor_hom,
    arrow_graph,
    cartesian_product,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    divisor_lattice,
    graph_from_text,
    grid_graph,
    hypercube_graph,
    instar_graph,
    lemke_graph,
    make_family,
    path_graph,
    petersen_graph,
    pullback_config,
    pushforward_steps,
    star_graph,
    validate_homomorphism,
)
from .smv import SmvModel, emit_2pp_model, emit_pebbling_model
from .solver import (
    SolveResult,
    apply_step,
    has_2pp,
    is_solvable,
    optimal_pebbling_number,
    pebbling_number,
    pebbling_number_graph,
    replay,
    unsolvable_witness,
    verify_tau,
)
from .weights import (
    LinearProgram,
    WeightFunction,
    covering_bound,
    cycle_weight_functions,
    lp_bound,
    random_weight_function,
    simplex_max,
    validate_weight_function,
    wfl_solve,
)
from .zerosum import (
    divisor_zero_sum,
    erdos_lemke,
    gcd_zero_sum,
    pebbling_construction,
    zero_sum_mod,
)

__all__ = [name for name in dir() if not name.startswith("_")]
