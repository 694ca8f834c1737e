"""
Tests for cocycles, short exact sequences, pushouts, pullbacks and the
generic regularity criterion.
"""

import itertools
import random
from fractions import Fraction
from typing import List, Tuple

import pytest

from quiverdeg.common import Matrix
from quiverdeg.degenerations.extensions import (
    Cocycle,
    ShortExactSequence,
    calE_dim,
    coboundary_space,
    cocycle_of,
    cocycle_space,
    delta_prime_sigma,
    delta_sigma,
    ext_quotient,
    f_sets,
    gencriterion,
    in_calE,
    is_coboundary,
    pullback,
    pushout,
    pushout_square,
    sequence_of,
    split_off,
    splits,
    standcriterion,
    umv_degeneration,
)
from quiverdeg.degenerations.order import codim, delta, delta_prime, enumerate_specs
from quiverdeg.errors import InconsistencyError
from quiverdeg.representations.catalog import realize
from quiverdeg.representations.quiver import Quiver, dynkin_quiver
from quiverdeg.representations.representation import (
    ModuleSpec,
    Morphism,
    hom_space,
)

A2 = dynkin_quiver("A", 2)
S2 = ModuleSpec(A2, [1, 0, 0])
S1 = ModuleSpec(A2, [0, 1, 0])
P = ModuleSpec(A2, [0, 0, 1])


def _almost_split() -> ShortExactSequence:
    """
    The non-split sequence 0 -> S2 -> P -> S1 -> 0.
    """
    dimension, (z,) = ext_quotient(realize(S1), realize(S2))
    assert dimension == 1
    return sequence_of(z)


def test_cocycle_spaces() -> None:
    """
    Cocycles and coboundaries of the simple and projective modules.
    """
    assert len(cocycle_space(realize(S1), realize(S2))) == 1
    assert coboundary_space(realize(S1), realize(S2)) == []
    assert len(cocycle_space(realize(P), realize(P))) == 1
    assert len(coboundary_space(realize(P), realize(P))) == 1
    assert ext_quotient(realize(P), realize(P)) == (0, [])
    assert ext_quotient(realize(S2), realize(S1))[0] == 0


def test_cocycle_validation() -> None:
    """
    Components must have the shape of their arrow.
    """
    z = Cocycle(realize(S1), realize(S2))
    assert z.is_zero()
    assert z.components["a1"].shape == (1, 1)
    assert Cocycle.from_vector(realize(S1), realize(S2), [1]).vector() == [1]

    with pytest.raises(ValueError):
        Cocycle(realize(S1), realize(S2), {"a1": Matrix([[1, 0]])})

    with pytest.raises(ValueError):
        Cocycle.from_vector(realize(S1), realize(S2), [1, 2])


def test_sequence_of_cocycle() -> None:
    """
    The nonzero class of Ext(S1, S2) has middle term P.
    """
    s = _almost_split()
    assert s.specs() == (S2, P, S1)
    assert not splits(s)
    assert umv_degeneration(s)

    trivial = sequence_of(Cocycle(realize(S1), realize(S2)))
    assert trivial.specs() == (S2, S1 + S2, S1)
    assert splits(trivial)


def test_cocycle_of_sequence() -> None:
    """
    Cocycle form of a sequence is an isomorphic standard extension.
    """
    s = _almost_split()
    z, isomorphism = cocycle_of(s)
    assert not is_coboundary(z)
    assert isomorphism.is_isomorphism()
    assert isomorphism.is_homomorphism()
    assert sequence_of(z).specs() == s.specs()


def test_exactness_is_checked() -> None:
    """
    Sequences that are not exact are rejected.
    """
    p, s1, s2 = realize(P), realize(S1), realize(S2)
    (into,) = hom_space(s2, p)
    (onto,) = hom_space(p, s1)
    assert ShortExactSequence(into, onto).specs() == (S2, P, S1)

    with pytest.raises(InconsistencyError):
        ShortExactSequence(into, Morphism.zero(p, s1))

    with pytest.raises(InconsistencyError):
        ShortExactSequence(Morphism.zero(s2, p), onto)


def test_sequence_documents() -> None:
    """
    A sequence reloads from its document with exactness checked again.
    """
    s = _almost_split()
    again = ShortExactSequence.from_dict(A2, s.to_dict())
    assert again.specs() == s.specs()
    assert again.inj == s.inj
    assert again.surj == s.surj


def test_delta_sigma() -> None:
    """
    delta_sigma of 0 -> U -> W -> V -> 0 equals delta of W ~> U + V.
    """
    s = _almost_split()
    n = S1 + S2
    for x in (S1, S2, P):
        assert delta_sigma(s, x) == delta(P, n, x)
        assert delta_prime_sigma(s, x) == delta_prime(P, n, x)
    assert delta_sigma(s, S2) == 1
    assert delta_prime_sigma(s, S1) == 1


def test_pushout_and_pullback() -> None:
    """
    Pushouts into the injective P and pullbacks from the projective P split.
    """
    s = _almost_split()
    p, s1, s2 = realize(P), realize(S1), realize(S2)

    (f,) = hom_space(s2, p)
    pushed, square = pushout_square(s, f)
    assert pushed.specs() == (P, P + S1, S1)
    assert square.is_homomorphism()
    assert (square @ s.inj).maps == (pushed.inj @ f).maps
    assert (pushed.surj @ square).maps == s.surj.maps

    assert pushout(s, Morphism.identity(s2)).specs() == s.specs()
    assert splits(pushout(s, Morphism.zero(s2, s2)))

    (g,) = hom_space(p, s1)
    assert pullback(s, g).specs() == (S2, S2 + P, P)

    with pytest.raises(ValueError):
        pushout_square(s, Morphism.identity(p))

    with pytest.raises(ValueError):
        pullback(s, Morphism.identity(p))


def test_split_off() -> None:
    """
    Only summands of the right term with vanishing delta' split off.
    """
    s = _almost_split()
    assert split_off(s, ModuleSpec.zero(A2)) is s

    with pytest.raises(ValueError):
        split_off(s, S1)

    with pytest.raises(ValueError):
        split_off(s, P)


def test_f_sets() -> None:
    """
    Indecomposables with vanishing delta and delta' for P ~> S1 + S2.
    """
    f_set, f_prime_set = f_sets(P, S1 + S2)
    assert f_set == [S1, P]
    assert f_prime_set == [S2, P]


def test_calE() -> None:
    """
    E(N, N) of a codimension one pair is one-dimensional.
    """
    n = S1 + S2
    dimension, basis = calE_dim(P, n, S1, S2)
    assert dimension == 1
    assert all(in_calE(P, n, z) for z in basis)
    assert calE_dim(P, n, S2, S1) == (0, [])

    outcome = gencriterion(P, n)
    assert outcome.e_dim == 1
    assert outcome.codim == 1
    assert outcome.regular_certified


def test_gencriterion_bound() -> None:
    """
    dim E(N, N) is never below the codimension.
    """
    m = S1 + P
    n = S2 + S1 + S1
    outcome = gencriterion(m, n)
    assert outcome.codim == codim(m, n) == 2
    assert outcome.e_dim >= outcome.codim
    assert outcome.regular_certified == (outcome.e_dim == 2)


def test_standcriterion_shapes() -> None:
    """
    The standard criterion only applies to sequences of the right shape.
    """
    assert not standcriterion(P, S1 + S2, _almost_split())


def _end_terms(quiver: Quiver, max_total: int) -> List[Tuple[ModuleSpec, ModuleSpec]]:
    """
    Pairs :math:`(V, U)` of nonzero modules with total dimension of
    :math:`U \\oplus V` at most ``max_total``.
    """
    modules = [
        spec
        for d in itertools.product(range(max_total), repeat=len(quiver.vertices))
        if 0 < sum(d) < max_total
        for spec in enumerate_specs(quiver, d)
    ]
    return [
        (v, u)
        for v, u in itertools.product(modules, repeat=2)
        if v.total_dim + u.total_dim <= max_total
    ]


def _random_cocycles(v: ModuleSpec, u: ModuleSpec, seed: int) -> List[Cocycle]:
    """
    Seeded cocycles mixing coboundaries with arbitrary arrow matrices.
    """
    rng = random.Random(seed)
    v_rep, u_rep = realize(v), realize(u)
    boundaries = [b.vector() for b in coboundary_space(v_rep, u_rep)]
    length = len(Cocycle(v_rep, u_rep).vector())
    cocycles = []
    for _ in range(100):
        vector = [Fraction(0)] * length
        for b in boundaries:
            c = rng.randint(-2, 2)
            vector = [x + c * y for x, y in zip(vector, b)]
        if rng.random() < 0.5:
            vector = [x + rng.randint(-2, 2) for x in vector]
        cocycles.append(Cocycle.from_vector(v_rep, u_rep, vector))
    return cocycles


A3 = dynkin_quiver("A", 3)
END_TERMS = _end_terms(A2, 4) + [
    (ModuleSpec.indecomposable(A3, i), ModuleSpec.indecomposable(A3, j))
    for i in range(6)
    for j in range(6)
]


@pytest.mark.parametrize("v, u", END_TERMS)
def test_split_iff_coboundary(v: ModuleSpec, u: ModuleSpec) -> None:
    """
    The extension of a cocycle splits exactly when the cocycle is a
    coboundary.
    """
    for z in _random_cocycles(v, u, seed=sum(v) * 31 + sum(u)):
        assert splits(sequence_of(z)) == is_coboundary(z)
    for b in coboundary_space(realize(v), realize(u)):
        assert splits(sequence_of(b))


@pytest.mark.parametrize("v, u", END_TERMS)
def test_sequence_invariants_nonnegative(v: ModuleSpec, u: ModuleSpec) -> None:
    """
    Both invariants of a constructed sequence are nonnegative on every
    indecomposable.
    """
    _, classes = ext_quotient(realize(v), realize(u))
    sequences = [sequence_of(z) for z in classes]
    sequences += [sequence_of(z) for z in _random_cocycles(v, u, seed=7)[:10]]
    for s in sequences:
        for index in range(len(v)):
            x = ModuleSpec.indecomposable(v.quiver, index)
            assert delta_sigma(s, x) >= 0
            assert delta_prime_sigma(s, x) >= 0
