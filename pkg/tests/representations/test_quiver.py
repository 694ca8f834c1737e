"""
Tests for quivers, the Euler form, Dynkin classification and roots.
"""

import pytest

from quiverdeg.errors import NotDynkinError, QuiverError, QuiverMismatchError
from quiverdeg.representations.quiver import (
    Arrow,
    DynkinType,
    Quiver,
    classify,
    dynkin_quiver,
    euler_form,
    orientations,
    parse_quiver,
    positive_roots,
    quiver_to_dict,
    reflect,
    tits_form,
)


def test_quiver_construction() -> None:
    """
    Checks validation of vertices and arrows.
    """
    q = Quiver(["1", "2"], [("a", "1", "2")])
    assert q.index("2") == 1
    assert q.arrow("a") == Arrow("a", "1", "2")
    assert q.unit("1") == (1, 0)
    assert q.is_sink("2")
    assert not q.is_sink("1")
    assert q.__repr__() == "Quiver(vertices=['1', '2'], arrows=[a:1->2])"

    with pytest.raises(QuiverError):
        Quiver(["1", "1"])

    with pytest.raises(QuiverError):
        Quiver(["1"], [("a", "1", "2")])

    with pytest.raises(QuiverError):
        Quiver(["1", "2"], [("a", "1", "2"), ("a", "2", "1")])

    with pytest.raises(TypeError):
        Quiver("12")

    with pytest.raises(QuiverError):
        q.index("3")


def test_dim_vector() -> None:
    """
    Dimension vectors come as sequences or mappings.
    """
    q = dynkin_quiver("A", 3)
    assert q.dim_vector([1, 0, 2]) == (1, 0, 2)
    assert q.dim_vector({"3": 2, "1": 1}) == (1, 0, 2)

    with pytest.raises(QuiverMismatchError):
        q.dim_vector([1, 2])

    with pytest.raises(ValueError):
        q.dim_vector([1, -1, 0])

    with pytest.raises(TypeError):
        q.dim_vector([1, 1.0, 0])


def test_euler_form() -> None:
    """
    Tests the Euler form of the path 1 -> 2.
    """
    q = dynkin_quiver("A", 2)
    assert euler_form(q, (1, 0), (0, 1)) == -1
    assert euler_form(q, (0, 1), (1, 0)) == 0
    assert euler_form(q, (1, 1), (1, 1)) == 1
    assert tits_form(q, (2, 2)) == 4

    with pytest.raises(QuiverMismatchError):
        euler_form(q, (1, 0, 0), (1, 0))


@pytest.mark.parametrize(
    "family, rank, roots",
    [("A", 2, 3), ("A", 3, 6), ("A", 5, 15), ("D", 4, 12), ("D", 5, 20), ("E", 6, 36)],
)
def test_positive_root_counts(family: str, rank: int, roots: int) -> None:
    """
    Positive roots come in the known numbers and all have Tits form one.
    """
    q = dynkin_quiver(family, rank)
    found = positive_roots(q)
    assert len(found) == roots
    assert all(tits_form(q, root) == 1 for root in found)
    assert [sum(root) for root in found] == sorted(sum(root) for root in found)


def test_positive_root_order() -> None:
    """
    Roots of the path 1 -> 2 are ordered by total dimension, then
    lexicographically.
    """
    assert positive_roots(dynkin_quiver("A", 2)) == ((0, 1), (1, 0), (1, 1))


def test_classify() -> None:
    """
    Checks Dynkin classification of underlying graphs.
    """
    assert classify(dynkin_quiver("A", 4)) == DynkinType("A", 4)
    assert classify(dynkin_quiver("D", 5)) == DynkinType("D", 5)
    assert classify(dynkin_quiver("E", 8)) == DynkinType("E", 8)
    assert str(classify(dynkin_quiver("E", 7))) == "E7"

    kronecker = Quiver(["1", "2"], [("a", "1", "2"), ("b", "1", "2")])
    assert classify(kronecker) is None
    cycle = Quiver(["1", "2", "3"], [("a", "1", "2"), ("b", "2", "3"), ("c", "3", "1")])
    assert classify(cycle) is None
    loop = Quiver(["1"], [("a", "1", "1")])
    assert classify(loop) is None
    star = Quiver(
        ["0", "1", "2", "3", "4"],
        [("a", "1", "0"), ("b", "2", "0"), ("c", "3", "0"), ("d", "4", "0")],
    )
    assert classify(star) is None

    with pytest.raises(NotDynkinError):
        positive_roots(kronecker)


def test_dynkin_type_validation() -> None:
    """
    Only simply laced Dynkin labels exist.
    """
    with pytest.raises(ValueError):
        DynkinType("B", 3)

    with pytest.raises(ValueError):
        DynkinType("E", 9)

    with pytest.raises(ValueError):
        DynkinType("D", 3)


def test_reflect_and_orientations() -> None:
    """
    Reflection reverses the arrows at a vertex; orientations enumerate
    every flip.
    """
    q = dynkin_quiver("A", 3)
    reflected = reflect(q, "2")
    assert reflected.arrow("a1") == Arrow("a1", "2", "1")
    assert reflected.arrow("a2") == Arrow("a2", "3", "2")
    assert reflect(reflected, "2") == q

    found = list(orientations(q))
    assert len(found) == 4
    assert found[0] == q
    assert len(set(found)) == 4
    assert all(classify(o) == DynkinType("A", 3) for o in found)


def test_root_count_independent_of_orientation() -> None:
    """
    Every orientation of D4 has twelve positive roots.
    """
    for q in orientations(dynkin_quiver("D", 4)):
        assert len(positive_roots(q)) == 12


def test_quiver_documents() -> None:
    """
    Quiver documents reload to equal quivers.
    """
    q = dynkin_quiver("D", 4)
    assert parse_quiver(quiver_to_dict(q)) == q

    with pytest.raises(QuiverError):
        parse_quiver([])

    with pytest.raises(QuiverError):
        parse_quiver({"arrows": []})
