"""
Degeneration order, extensions, witnesses and regularity certificates.
"""

from typing import List

from quiverdeg.degenerations.certificate import (
    Certificate,
    Certifier,
    Step,
    Verdict,
    VerdictKind,
    certify,
    validate,
)
from quiverdeg.degenerations.extensions import (
    Cocycle,
    GenCriterion,
    ShortExactSequence,
    calE_dim,
    cocycle_of,
    delta_prime_sigma,
    delta_sigma,
    ext_quotient,
    gencriterion,
    pullback,
    pushout,
    sequence_of,
    splits,
)
from quiverdeg.degenerations.order import (
    DegPair,
    codim,
    deg_poset,
    delta,
    delta_prime,
    enumerate_specs,
    is_degeneration,
    orbit_dim,
    split_common,
)
from quiverdeg.degenerations.witness import (
    DualZWitness,
    WitnessSearch,
    ZWitness,
    find_dual_zwitness,
    find_zwitness,
)

__all__: List[str] = [
    "Certificate",
    "Certifier",
    "Cocycle",
    "DegPair",
    "DualZWitness",
    "GenCriterion",
    "ShortExactSequence",
    "Step",
    "Verdict",
    "VerdictKind",
    "WitnessSearch",
    "ZWitness",
    "calE_dim",
    "certify",
    "cocycle_of",
    "codim",
    "deg_poset",
    "delta",
    "delta_prime",
    "delta_prime_sigma",
    "delta_sigma",
    "enumerate_specs",
    "ext_quotient",
    "find_dual_zwitness",
    "find_zwitness",
    "gencriterion",
    "is_degeneration",
    "orbit_dim",
    "pullback",
    "pushout",
    "sequence_of",
    "split_common",
    "splits",
    "validate",
]
