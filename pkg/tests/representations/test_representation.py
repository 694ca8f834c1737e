"""
Tests for representations, morphisms and multiplicity vectors.
"""

import pytest

from quiverdeg.common import Matrix
from quiverdeg.errors import QuiverError, QuiverMismatchError
from quiverdeg.representations.quiver import dynkin_quiver
from quiverdeg.representations.representation import (
    ModuleSpec,
    Morphism,
    Representation,
    cokernel,
    combine,
    direct_sum,
    hom_dim,
    hom_space,
    inclusion,
    kernel,
    projection,
    representation_ext_dim,
)

A2 = dynkin_quiver("A", 2)


def _projective() -> Representation:
    return Representation(A2, [1, 1], {"a1": [[1]]})


def test_representation_defaults() -> None:
    """
    Arrows left out act by zero and shapes are checked.
    """
    s = Representation(A2, [2, 1])
    assert s.matrix("a1") == Matrix.zeros(1, 2)
    assert s.total_dim == 3
    assert Representation.zero(A2).is_zero()
    assert Representation.simple(A2, "2").dim == (0, 1)
    assert s.__repr__() == "Representation(dim=(2, 1))"

    with pytest.raises(QuiverError):
        Representation(A2, [1, 1], {"a1": [[1, 0]]})

    with pytest.raises(QuiverError):
        Representation(A2, [1, 1], {"b": [[1]]})

    with pytest.raises(TypeError):
        Representation("A2", [1, 1])  # type: ignore[arg-type]


def test_morphism_validation() -> None:
    """
    Vertex maps must commute with the arrows.
    """
    p = _projective()
    s1 = Representation.simple(A2, "1")
    s2 = Representation.simple(A2, "2")
    into = Morphism(s2, p, [Matrix.zeros(1, 0), Matrix([[1]])])
    assert into.is_injective()
    assert not into.is_surjective()

    with pytest.raises(QuiverError):
        Morphism(s1, p, [Matrix([[1]]), Matrix.zeros(1, 0)])

    onto = Morphism(p, s1, {"1": Matrix([[1]]), "2": Matrix.zeros(0, 1)})
    assert (onto @ into).is_zero()
    assert Morphism.identity(p).is_isomorphism()
    assert Morphism.identity(p).inverse() == Morphism.identity(p)

    with pytest.raises(ValueError):
        onto.inverse()


def test_hom_spaces() -> None:
    """
    Hom dimensions between the indecomposables of A2.
    """
    p = _projective()
    s1 = Representation.simple(A2, "1")
    s2 = Representation.simple(A2, "2")
    assert hom_dim(s2, p) == 1
    assert hom_dim(p, s1) == 1
    assert hom_dim(p, s2) == 0
    assert hom_dim(s1, s2) == 0
    assert hom_dim(p, p) == 1
    assert representation_ext_dim(s1, s2) == 1
    assert representation_ext_dim(s2, s1) == 0

    basis = hom_space(s2, p)
    assert len(basis) == 1
    assert basis[0].is_homomorphism()
    assert combine(basis, [3]) == basis[0].scale(3)

    with pytest.raises(ValueError):
        combine([], [])


def test_direct_sum_maps() -> None:
    """
    Inclusions and projections of a direct sum are sections of each other.
    """
    p = _projective()
    s1 = Representation.simple(A2, "1")
    parts = [p, s1]
    total = direct_sum(parts)
    assert total.dim == (2, 1)
    for k in range(2):
        assert (projection(parts, k) @ inclusion(parts, k)).maps == Morphism.identity(
            parts[k]
        ).maps
    assert (projection(parts, 1) @ inclusion(parts, 0)).is_zero()
    assert direct_sum([], quiver=A2).is_zero()
    assert direct_sum([p]) is p

    with pytest.raises(ValueError):
        direct_sum([])


def test_kernel_and_cokernel() -> None:
    """
    The projective of A2 is an extension of the two simples.
    """
    p = _projective()
    s1 = Representation.simple(A2, "1")
    s2 = Representation.simple(A2, "2")
    onto = Morphism(p, s1, [Matrix([[1]]), Matrix.zeros(0, 1)])
    k, into = kernel(onto)
    assert k.dim == (0, 1)
    assert into.is_injective()
    assert (onto @ into).is_zero()

    c, out = cokernel(Morphism(s2, p, [Matrix.zeros(1, 0), Matrix([[1]])]))
    assert c.dim == (1, 0)
    assert out.is_surjective()


def test_module_spec_arithmetic() -> None:
    """
    Multiplicity vectors add, subtract and compare.
    """
    m = ModuleSpec(A2, [0, 1, 1])
    n = ModuleSpec(A2, {0: 1, 1: 2})
    assert n == ModuleSpec(A2, [1, 2, 0])
    assert m.dim == (2, 1)
    assert n.dim == (2, 1)
    assert m.minimum(n) == ModuleSpec(A2, [0, 1, 0])
    assert not m.is_disjoint(n)
    assert m - ModuleSpec.indecomposable(A2, 1) == ModuleSpec.of_root(A2, (1, 1))
    assert (m + n).summand_count == 5
    assert m.support() == [1, 2]
    assert [s.index() for s in n.summands()] == [0, 1, 1]
    assert str(n) == "(0,1) + (1,0)^2"
    assert str(ModuleSpec.zero(A2)) == "0"
    assert m.__repr__() == "ModuleSpec([0, 1, 1])"
    assert ModuleSpec.indecomposable(A2, 2).is_indecomposable()

    with pytest.raises(ValueError):
        m - n

    with pytest.raises(ValueError):
        m.index()

    with pytest.raises(ValueError):
        ModuleSpec(A2, [0, -1, 0])

    with pytest.raises(ValueError):
        ModuleSpec(A2, {3: 1})

    with pytest.raises(QuiverMismatchError):
        ModuleSpec(A2, [1, 1])

    with pytest.raises(QuiverMismatchError):
        m + ModuleSpec(dynkin_quiver("A", 3), [0] * 6)

    with pytest.raises(ValueError):
        ModuleSpec.of_root(A2, (2, 1))
