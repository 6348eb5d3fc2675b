"""Finite-group toolkit for the maximum centralizer index and its order bounds."""
from .catalog import load_catalog, load_group, parse_catalog
from .constructions import (
    SemidirectSpec,
    cyclic,
    dihedral,
    elementary_abelian,
    modular_example,
    nonabelian_pq,
    quaternion8,
    semidirect_cyclic,
)
from .group import (
    Element,
    Group,
    GroupError,
    GroupMismatchError,
    Subgroup,
    center,
    centralizer,
    cyclic_subgroup,
    derived_subgroup,
    direct_product,
    generated_subgroup,
    is_abelian,
    is_normal,
    normalizer,
    quotient,
)
from .mci import bad_primes, build_ledger, f0_explicit, mci, prime_graph

__all__ = [
    "Element", "Group", "GroupError", "GroupMismatchError", "SemidirectSpec", "Subgroup",
    "bad_primes", "build_ledger", "center", "centralizer", "cyclic", "cyclic_subgroup",
    "derived_subgroup", "dihedral", "direct_product", "elementary_abelian", "f0_explicit",
    "generated_subgroup", "is_abelian", "is_normal", "load_catalog", "load_group", "mci",
    "modular_example", "nonabelian_pq", "normalizer", "parse_catalog", "prime_graph",
    "quaternion8", "quotient", "semidirect_cyclic",
]
