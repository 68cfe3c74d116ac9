"""Jacobians of multigraphs, the monodromy pairing, and the pairing attack on
the discrete logarithm problem in Jac(G).

Divisors and vertex functions are lists of Python ints indexed by vertex;
pairing values are ``fractions.Fraction`` in [0, 1).
"""

from ._core import (
    Graph,
    GraphjacError,
    Jacobian,
    analyze,
    brute_force_dlp,
    degree,
    determinant,
    dhar_reduce,
    div_of_function,
    enumerate_group,
    equivalent,
    families,
    generate_instance,
    is_principal,
    monodromy_pairing,
    pairing_by_definition,
    smith_normal_form,
    spanning_tree_count,
    spanning_trees_by_enumeration,
)

__all__ = [
    "Graph",
    "GraphjacError",
    "Jacobian",
    "analyze",
    "brute_force_dlp",
    "degree",
    "determinant",
    "dhar_reduce",
    "div_of_function",
    "enumerate_group",
    "equivalent",
    "families",
    "generate_instance",
    "is_principal",
    "monodromy_pairing",
    "pairing_by_definition",
    "smith_normal_form",
    "spanning_tree_count",
    "spanning_trees_by_enumeration",
]
