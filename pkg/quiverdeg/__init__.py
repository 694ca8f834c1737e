"""
Exact arithmetic for degenerations of representations of Dynkin quivers.
"""

from typing import List

from quiverdeg.degenerations import (
    Certificate,
    Certifier,
    Verdict,
    VerdictKind,
    certify,
    codim,
    deg_poset,
    gencriterion,
    is_degeneration,
    validate,
)
from quiverdeg.representations import (
    ModuleSpec,
    Morphism,
    Quiver,
    Representation,
    catalog,
    decompose,
    dynkin_quiver,
    positive_roots,
)

# Public API
__all__: List[str] = [
    "Certificate",
    "Certifier",
    "ModuleSpec",
    "Morphism",
    "Quiver",
    "Representation",
    "Verdict",
    "VerdictKind",
    "catalog",
    "certify",
    "codim",
    "decompose",
    "deg_poset",
    "dynkin_quiver",
    "gencriterion",
    "is_degeneration",
    "positive_roots",
    "validate",
]


# Metadata
__version__ = "0.1.0"
__license__ = "MIT"
__status__ = "Alpha"
