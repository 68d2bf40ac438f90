"""Permutations generated by a bounded stack feeding an unbounded stack.

Three independent characterizations are exposed: an exhaustive machine search,
a deterministic rule-driven algorithm, and avoidance of a finite basis of
forbidden patterns. Permutations are passed as strings: compact digits for
lengths up to 9 ("52314"), comma-separated values beyond ("10,3,1,2").
"""

from ._core import (
    MAX_SEARCH_LENGTH,
    algorithm_accepts,
    apply_codeword,
    avoids_basis,
    basis_table,
    check,
    contains,
    delete_entry,
    enumerate_generable,
    generable,
    lemma1_extend,
    mine_basis,
    rule_sequence,
    standardize,
    trace,
    verify_theorem,
)

__all__ = [
    "MAX_SEARCH_LENGTH",
    "algorithm_accepts",
    "apply_codeword",
    "avoids_basis",
    "basis_table",
    "check",
    "contains",
    "delete_entry",
    "enumerate_generable",
    "generable",
    "lemma1_extend",
    "mine_basis",
    "rule_sequence",
    "standardize",
    "trace",
    "verify_theorem",
]
