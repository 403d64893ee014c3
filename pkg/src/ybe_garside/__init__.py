"""Garside structure of finite set-theoretic Yang-Baxter solutions.

The package decides the solution axioms, converts between solutions and
tableau presentations of their structure monoids, runs the complement and
word-reversing calculus, computes Garside elements, simple elements,
exponents, purity and decomposability, handles non-involutive permutation
solutions through quotients, and enumerates all solutions up to
isomorphism at small sizes.
"""

from .solution import (
    AxiomError,
    Solution,
    SolutionReport,
    are_isomorphic,
    canonical_form,
    derive_f_from_g,
    eval_S,
    is_braided,
    is_involutive,
    is_nondegenerate,
    is_square_free,
    relabel,
    solution_report,
)
from .presentation import (
    Relation,
    TableauPresentation,
    are_t_isomorphic,
    presentation_to_solution,
    solution_to_presentation,
    validate_tableau_conditions,
)
from .reversing import (
    ComplementTable,
    Word,
    build_complement_table,
    canonical_word,
    check_coherence,
    check_left_coherence,
    multi_lcm,
    reverse_words,
    right_lcm,
    words_equal_in_M,
)
from .garside import (
    PurityReport,
    SimpleSet,
    complement_closure_set,
    decomposition,
    exponent,
    garside_element,
    invariant_subset_check,
    is_delta_pure,
    is_indecomposable,
    purity_report,
    simples,
)
from .permsol import (
    PermutationSolution,
    QuotientMap,
    cancellation_witness,
    delta_from_cycles,
    induced_involutive_solution,
    iterate_S_closed_form,
    perm_axioms,
    quotient_solution,
)
from .census import CensusEntry, CensusReport, enumerate_solutions, verify_census

__version__ = "0.1.0"

__all__ = [
    "AxiomError",
    "CensusEntry",
    "CensusReport",
    "ComplementTable",
    "PermutationSolution",
    "PurityReport",
    "QuotientMap",
    "Relation",
    "SimpleSet",
    "Solution",
    "SolutionReport",
    "TableauPresentation",
    "Word",
    "are_isomorphic",
    "are_t_isomorphic",
    "build_complement_table",
    "cancellation_witness",
    "canonical_form",
    "canonical_word",
    "check_coherence",
    "check_left_coherence",
    "complement_closure_set",
    "decomposition",
    "delta_from_cycles",
    "derive_f_from_g",
    "enumerate_solutions",
    "eval_S",
    "exponent",
    "garside_element",
    "induced_involutive_solution",
    "invariant_subset_check",
    "is_braided",
    "is_delta_pure",
    "is_indecomposable",
    "is_involutive",
    "is_nondegenerate",
    "is_square_free",
    "iterate_S_closed_form",
    "multi_lcm",
    "perm_axioms",
    "presentation_to_solution",
    "purity_report",
    "quotient_solution",
    "relabel",
    "reverse_words",
    "right_lcm",
    "simples",
    "solution_report",
    "solution_to_presentation",
    "validate_tableau_conditions",
    "verify_census",
    "words_equal_in_M",
]
