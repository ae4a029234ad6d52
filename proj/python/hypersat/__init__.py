"""Exact hypergraph counting and cycle supersaturation experiments."""

from ._hypersat import (
    BudgetExceeded,
    Error,
    Hypergraph,
    ParseError,
    PreconditionError,
    __version__,
    automorphism_count,
    berge_girth,
    blow_up,
    bound_values,
    brute_berge_girth,
    brute_copies,
    brute_hom,
    certificate_problem,
    complete_hypergraph,
    complete_partite,
    edge_exponent,
    format_hypergraph,
    gap_estimate,
    greedy_count,
    greedy_high_girth,
    hom_count,
    labeled_copy_count,
    linear_cycle,
    linear_path,
    parse_hypergraph,
    random_uniform,
    read_hypergraph,
    run_cli,
    sidorenko_check,
    single_edge,
    steiner_triple_9,
    supersat,
    tensor_product,
    write_hypergraph,
)

__all__ = [name for name in dir() if not name.startswith("_")]
