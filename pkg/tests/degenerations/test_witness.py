"""
Tests for the witness searches.
"""

import itertools
import random

import pytest

from quiverdeg.degenerations.witness import (
    WitnessSearch,
    find_dual_zwitness,
    find_zwitness,
    search_epimorphism,
    search_monomorphism,
)
from quiverdeg.degenerations.order import deg_poset
from quiverdeg.errors import NotADegenerationError
from quiverdeg.representations.catalog import decompose, realize
from quiverdeg.representations.quiver import dynkin_quiver
from quiverdeg.representations.representation import ModuleSpec

A2 = dynkin_quiver("A", 2)
S2 = ModuleSpec(A2, [1, 0, 0])
S1 = ModuleSpec(A2, [0, 1, 0])
P = ModuleSpec(A2, [0, 0, 1])


def test_search_defaults() -> None:
    """
    Ensures default search budgets have not changed.
    """
    search = WitnessSearch()
    assert search.seed == 0
    assert search.trials == 200
    assert search.zmult == 3
    assert search.__repr__() == "WitnessSearch(seed=0, trials=200, zmult=3)"
    assert search.__str__() == (
        "Witness Search Parameters: \n\n" "seed: 0\n" "trials: 200\n" "zmult: 3\n"
    )

    with pytest.raises(ValueError):
        WitnessSearch(trials=-1)

    with pytest.raises(ValueError):
        WitnessSearch(zmult=-1)


def test_search_monomorphism() -> None:
    """
    S2 embeds in P with cokernel S1 and not otherwise.
    """
    rng = random.Random(0)
    f = search_monomorphism(realize(S2), realize(P), S1, rng, 10)
    assert f is not None
    assert f.is_injective()
    assert search_monomorphism(realize(S1), realize(P), S2, rng, 10) is None
    assert search_monomorphism(realize(S2), realize(P), P, rng, 10) is None

    g = search_epimorphism(realize(P), realize(S1), S2, rng, 10)
    assert g is not None
    assert g.is_surjective()
    assert search_epimorphism(realize(P), realize(S2), S1, rng, 10) is None


def test_zwitness_codim_one() -> None:
    """
    0 -> S2 -> S2 + P -> S2 + S1 -> 0 witnesses P ~> S1 + S2.
    """
    n = S1 + S2
    witness = find_zwitness(P, n)
    assert witness is not None
    assert witness.z == S2
    assert witness.verify(P, n)
    assert decompose(witness.quotient) == n

    dual = find_dual_zwitness(P, n)
    assert dual is not None
    assert dual.z == S1
    assert dual.verify(P, n)
    assert decompose(dual.sub) == n


def test_zwitness_with_common_summand() -> None:
    """
    The common summand S1 of P + S1 ~> S2 + S1^2 is carried along.
    """
    m = P + S1
    n = S2 + S1 + S1
    witness = WitnessSearch(seed=7).find_zwitness(m, n)
    assert witness is not None
    assert witness.verify(m, n)
    dual = WitnessSearch(seed=7).find_dual_zwitness(m, n)
    assert dual is not None
    assert dual.verify(m, n)


def test_witness_input_checks() -> None:
    """
    Witnesses are only searched for proper degenerations.
    """
    with pytest.raises(ValueError):
        find_zwitness(P, P)

    with pytest.raises(NotADegenerationError):
        find_zwitness(S1 + S2, P)

    with pytest.raises(NotADegenerationError):
        find_dual_zwitness(S1 + S2, P)


@pytest.mark.parametrize("family, rank", [("A", 2), ("A", 3)])
def test_zwitness_on_every_cover(family: str, rank: int) -> None:
    """
    Every cover of the degeneration order up to total dimension four has
    a verified witness sequence.
    """
    quiver = dynkin_quiver(family, rank)
    covers = 0
    for d in itertools.product(range(5), repeat=rank):
        if not 0 < sum(d) <= 4:
            continue
        for m, n in deg_poset(quiver, d).edges:
            witness = find_zwitness(m, n)
            assert witness is not None
            assert witness.verify(m, n)
            covers += 1
    assert covers > 0
