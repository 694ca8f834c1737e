"""
Tests for JSON documents and poset export.
"""

import pathlib

import networkx as nx
import pytest

from quiverdeg.common import Matrix
from quiverdeg.degenerations.order import deg_poset
from quiverdeg.errors import QuiverError
from quiverdeg.representations.catalog import realize
from quiverdeg.representations.quiver import dynkin_quiver
from quiverdeg.representations.representation import ModuleSpec
from quiverdeg.serialization import (
    dump_json,
    matrix_from_json,
    parse_spec,
    poset_to_gml,
    representation_from_dict,
    representation_to_dict,
    spec_from_list,
    spec_to_list,
)

A2 = dynkin_quiver("A", 2)
DATA = pathlib.Path(__file__).parent.resolve() / "data"


def test_matrix_documents() -> None:
    """
    Matrices are written with exact string entries.
    """
    assert matrix_from_json([["1/2", 3]], 2) == Matrix([["1/2", "3/1"]])
    assert matrix_from_json([], 4).shape == (0, 4)

    with pytest.raises(QuiverError):
        matrix_from_json("1/2", 1)


def test_representation_documents() -> None:
    """
    A realized module reloads bit-exactly.
    """
    w = realize(ModuleSpec(A2, [1, 1, 1]))
    document = representation_to_dict(w)
    assert document["dim"] == [2, 2]
    assert all(
        isinstance(entry, str) for row in document["matrices"]["a1"] for entry in row
    )
    assert representation_from_dict(A2, document) == w

    partial = representation_from_dict(A2, {"dim": [1, 1]})
    assert partial.matrix("a1").is_zero()

    with pytest.raises(QuiverError):
        representation_from_dict(A2, [])

    with pytest.raises(QuiverError):
        representation_from_dict(A2, {"matrices": {}})

    with pytest.raises(QuiverError):
        representation_from_dict(A2, {"dim": [1, 1], "matrices": {"b": [[1]]}})


def test_parse_spec() -> None:
    """
    Modules are given by multiplicities or by a representation file.
    """
    assert parse_spec(A2, "0,0,2") == ModuleSpec(A2, [0, 0, 2])
    assert parse_spec(A2, f"@{DATA / 'rank_one.json'}") == ModuleSpec(A2, [1, 1, 1])
    assert spec_from_list(A2, spec_to_list(ModuleSpec(A2, [2, 0, 1]))) == ModuleSpec(
        A2, [2, 0, 1]
    )

    with pytest.raises(QuiverError):
        parse_spec(A2, "0,x,2")

    with pytest.raises(QuiverError):
        parse_spec(A2, "@does/not/exist.json")

    with pytest.raises(QuiverError):
        spec_from_list(A2, "0,0,2")


def test_poset_to_gml() -> None:
    """
    The exported poset parses back with its attributes.
    """
    text = poset_to_gml(deg_poset(A2, (2, 2)))
    graph = nx.parse_gml(text)
    assert sorted(graph.nodes) == ["0,0,2", "1,1,1", "2,2,0"]
    assert graph.nodes["1,1,1"]["orbit_dim"] == 3
    assert graph.edges["0,0,2", "1,1,1"]["codim"] == 1
    assert graph.edges["1,1,1", "2,2,0"]["codim"] == 3


def test_dump_json(tmp_path: pathlib.Path) -> None:
    """
    Documents end with a newline and are written when a path is given.
    Keys come out sorted.
    """
    path = tmp_path / "out.json"
    text = dump_json({"b": 1, "a": [1, 2]}, path)
    assert text.endswith("}\n")
    assert path.read_text() == text
    assert text.index('"a"') < text.index('"b"')
    assert dump_json({"b": 1, "a": 2}) == dump_json({"a": 2, "b": 1})
