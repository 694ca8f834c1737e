"""
JSON documents for representations, morphisms, sequences and module specs,
and graph export of degeneration posets.

Rational entries are always written as :code:`"p/q"` strings so that every
document reloads bit-exactly.
"""

import json
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional

import networkx as nx

from quiverdeg.common import Matrix
from quiverdeg.errors import QuiverError
from quiverdeg.representations.catalog import decompose
from quiverdeg.representations.quiver import Quiver
from quiverdeg.representations.representation import (
    ModuleSpec,
    Morphism,
    Representation,
)

__all__: List[str] = [
    "cocycle_components_to_dict",
    "dump_json",
    "matrix_from_json",
    "matrix_to_json",
    "morphism_maps_from_json",
    "morphism_maps_to_json",
    "parse_spec",
    "poset_to_gml",
    "representation_from_dict",
    "representation_to_dict",
    "spec_from_list",
    "spec_to_list",
]


def matrix_to_json(matrix: Matrix) -> List[List[str]]:
    return matrix.to_strings()


def matrix_from_json(rows: Any, ncols: int) -> Matrix:
    """
    :param rows: A list of rows of rational entries.
    :param ncols: Number of columns, needed for matrices without rows.
    :return: The :class:`Matrix`.
    """
    if not isinstance(rows, list):
        raise QuiverError(
            f"Matrix must be a list of rows, not '{rows.__class__.__name__}'."
        )
    return Matrix(rows, ncols=ncols if not rows else None)


def representation_to_dict(representation: Representation) -> Dict[str, Any]:
    return {
        "dim": list(representation.dim),
        "matrices": {
            arrow.id: matrix_to_json(representation.matrices[arrow.id])
            for arrow in representation.quiver.arrows
        },
    }


def representation_from_dict(quiver: Quiver, data: Any) -> Representation:
    """
    Load a representation document.

    :param quiver: The quiver the representation lives over.
    :param data: A mapping with :code:`dim` and :code:`matrices` fields;
                 arrows left out act by zero.
    :return: A :class:`Representation`.
    """
    if not isinstance(data, Mapping):
        raise QuiverError(
            f"Representation document must be an object, "
            f"not '{data.__class__.__name__}'."
        )
    try:
        dim = quiver.dim_vector(data["dim"])
        raw = data.get("matrices", {})
        matrices = {}
        for id, rows in raw.items():
            arrow = quiver.arrow(id)
            matrices[id] = matrix_from_json(rows, dim[quiver.index(arrow.source)])
    except (KeyError, TypeError, AttributeError) as error:
        raise QuiverError(f"Malformed representation document: {error}.") from None
    return Representation(quiver, dim, matrices)


def morphism_maps_to_json(f: Morphism) -> List[List[List[str]]]:
    return [matrix_to_json(matrix) for matrix in f.maps]


def morphism_maps_from_json(
    source: Representation, target: Representation, data: Any
) -> Morphism:
    """
    Load the vertex maps of a morphism between known representations.

    :raises QuiverError: if the data has the wrong number of maps.
    """
    if not isinstance(data, list) or len(data) != len(source.dim):
        raise QuiverError(
            f"Morphism must list {len(source.dim)} vertex maps."
        )
    maps = [matrix_from_json(rows, d) for rows, d in zip(data, source.dim)]
    return Morphism(source, target, maps)


def cocycle_components_to_dict(components: Mapping[str, Matrix]) -> Dict[str, Any]:
    return {id: matrix_to_json(matrix) for id, matrix in components.items()}


def spec_to_list(spec: ModuleSpec) -> List[int]:
    return list(spec.multiplicities)


def spec_from_list(quiver: Quiver, data: Any) -> ModuleSpec:
    if not isinstance(data, list):
        raise QuiverError(
            f"Module spec must be a list of multiplicities, "
            f"not '{data.__class__.__name__}'."
        )
    return ModuleSpec(quiver, data)


def parse_spec(quiver: Quiver, text: str) -> ModuleSpec:
    """
    Parse a module given on the command line.

    :param quiver: A Dynkin quiver.
    :param text: Comma separated multiplicities in root order, such as
                 :code:`"0,0,2"`, or :code:`"@path.json"` naming a
                 representation document which is then decomposed.
    :return: A :class:`ModuleSpec`.
    """
    text = text.strip()
    if text.startswith("@"):
        path = Path(text[1:])
        try:
            data = json.loads(path.read_text())
        except (OSError, json.JSONDecodeError) as error:
            raise QuiverError(f"Cannot read representation {path}: {error}") from None
        return decompose(representation_from_dict(quiver, data))
    try:
        values = [int(part) for part in text.split(",")] if text else []
    except ValueError:
        raise QuiverError(f"Malformed module spec '{text}'.") from None
    return ModuleSpec(quiver, values)


def poset_to_gml(poset: nx.DiGraph) -> str:
    """
    Render a degeneration poset in GML.

    Nodes are labelled by their multiplicity vectors and carry the
    readable module and its orbit dimension; edges carry the codimension.
    """
    graph = nx.DiGraph()
    for spec, attributes in poset.nodes(data=True):
        graph.add_node(
            ",".join(str(mu) for mu in spec),
            module=str(spec),
            orbit_dim=attributes["orbit_dim"],
        )
    for m, n, attributes in poset.edges(data=True):
        graph.add_edge(
            ",".join(str(mu) for mu in m),
            ",".join(str(mu) for mu in n),
            codim=attributes["codim"],
        )
    return "\n".join(nx.generate_gml(graph)) + "\n"


def dump_json(data: Any, path: Optional[Path] = None) -> str:
    """
    Serialize a document with a stable layout, optionally writing it.

    :return: The serialized text.
    """
    text = json.dumps(data, indent=2, sort_keys=True) + "\n"
    if path is not None:
        path.write_text(text)
    return text
