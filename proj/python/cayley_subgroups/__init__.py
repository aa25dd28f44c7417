"""Subgroups of prescribed order in finite abelian groups given by Cayley tables."""

from ._core import (
    Branch,
    CayleyTable,
    GroupError,
    Subgroup,
    TraceStep,
    __version__,
    bench,
    check_associativity,
    closure,
    cyclic_subgroup,
    element_order,
    factorize,
    find_subgroup,
    find_subgroup_traced,
    format_table,
    inverse,
    is_abelian,
    power,
    primary_part,
    quotient,
    retained_generators,
    subgroup_of_order,
    subgroup_table,
    sylow_component,
    testkit,
)

__all__ = [
    "Branch",
    "CayleyTable",
    "GroupError",
    "Subgroup",
    "TraceStep",
    "bench",
    "check_associativity",
    "closure",
    "cyclic_subgroup",
    "element_order",
    "factorize",
    "find_subgroup",
    "find_subgroup_traced",
    "format_table",
    "inverse",
    "is_abelian",
    "power",
    "primary_part",
    "quotient",
    "retained_generators",
    "subgroup_of_order",
    "subgroup_table",
    "sylow_component",
    "testkit",
]
