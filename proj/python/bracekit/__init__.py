"""Matching structure of cubic bipartite graphs: 2-factors, tight cuts, Pfaffian orientations."""

from ._core import (
    BudgetExceeded,
    Error,
    Graph,
    NotMatchingCovered,
    ParseError,
    PreconditionError,
    TooSmall,
    UnknownFixture,
    are_isomorphic,
    bridges,
    count_perfect_matchings,
    decompose,
    fixture,
    fixture_names,
    from_graph6,
    girth,
    is_bipartite,
    is_brace,
    is_connected,
    is_k_extendable,
    is_matching_covered,
    is_pfaffian,
    is_two_factor_hamiltonian,
    lemma_suite,
    nice_cycles,
    perfect_matchings,
    pfaffian_orientation,
    scan,
    star_product,
    to_graph6,
)

__all__ = [name for name in dir() if not name.startswith("_")]
