"""
Quivers, representations and the catalogue of indecomposables.
"""

from typing import List

from quiverdeg.representations.catalog import (
    Catalog,
    catalog,
    decompose,
    ext_dim,
    find_isomorphism,
    hom,
    in_radical,
    indecomposable,
    realize,
)
from quiverdeg.representations.quiver import (
    Arrow,
    DimVector,
    DynkinType,
    Quiver,
    classify,
    dynkin_quiver,
    euler_form,
    orientations,
    positive_roots,
    reflect,
    symmetric_form,
    tits_form,
)
from quiverdeg.representations.representation import (
    ModuleSpec,
    Morphism,
    Representation,
    cokernel,
    direct_sum,
    hom_dim,
    hom_space,
    kernel,
)

__all__: List[str] = [
    "Arrow",
    "Catalog",
    "DimVector",
    "DynkinType",
    "ModuleSpec",
    "Morphism",
    "Quiver",
    "Representation",
    "catalog",
    "classify",
    "cokernel",
    "decompose",
    "direct_sum",
    "dynkin_quiver",
    "euler_form",
    "ext_dim",
    "find_isomorphism",
    "hom",
    "hom_dim",
    "hom_space",
    "in_radical",
    "indecomposable",
    "kernel",
    "orientations",
    "positive_roots",
    "realize",
    "reflect",
    "symmetric_form",
    "tits_form",
]
