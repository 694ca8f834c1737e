"""Quivers

Finite quivers, dimension vectors, the Euler form, Dynkin classification
and positive roots.
"""

import itertools
import logging
from collections import deque
from functools import lru_cache
from typing import Any, Dict, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

import networkx as nx

from quiverdeg.errors import NotDynkinError, QuiverError, QuiverMismatchError

__all__: List[str] = [
    "Arrow",
    "DimVector",
    "DynkinType",
    "Quiver",
    "classify",
    "dynkin_quiver",
    "euler_form",
    "orientations",
    "parse_quiver",
    "positive_roots",
    "quiver_to_dict",
    "reflect",
    "symmetric_form",
    "tits_form",
]

logger = logging.getLogger(__name__)

DimVector = Tuple[int, ...]


class Arrow:
    """
    An arrow of a quiver.
    """

    __slots__ = ("id", "source", "target")

    def __init__(self, id: str, source: str, target: str):
        """
        :param id: Unique name of the arrow.
        :param source: The vertex :math:`s(\\alpha)`.
        :param target: The vertex :math:`e(\\alpha)`.
        """
        for name, value in (("id", id), ("source", source), ("target", target)):
            if not isinstance(value, str):
                raise TypeError(
                    f"Argument '{name}' must be of type 'str', "
                    f"not '{value.__class__.__name__}'."
                )
        self.id: str = id
        self.source: str = source
        self.target: str = target

    def __repr__(self) -> str:
        return f"Arrow(id={self.id!r}, source={self.source!r}, target={self.target!r})"

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Arrow):
            return (self.id, self.source, self.target) == (
                other.id,
                other.source,
                other.target,
            )
        else:
            return NotImplemented

    def __hash__(self) -> int:
        return hash((self.id, self.source, self.target))

    def reversed(self) -> "Arrow":
        return Arrow(self.id, self.target, self.source)


class DynkinType:
    """
    A simply laced Dynkin diagram.
    """

    _minimum_rank = {"A": 1, "D": 4, "E": 6}

    def __init__(self, family: str, rank: int):
        """
        :param family: One of :code:`"A"`, :code:`"D"` or :code:`"E"`.
        :param rank: Number of vertices of the diagram.
        """
        if family not in self._minimum_rank:
            raise ValueError(
                f"Argument 'family' must be 'A', 'D' or 'E', not {family!r}."
            )
        if isinstance(rank, bool) or not isinstance(rank, int):
            raise TypeError(
                f"Argument 'rank' must be of type 'int', "
                f"not '{rank.__class__.__name__}'."
            )
        if rank < self._minimum_rank[family] or (family == "E" and rank > 8):
            raise ValueError(f"There is no Dynkin diagram {family}{rank}.")
        self.family: str = family
        self.rank: int = rank

    def __repr__(self) -> str:
        return f"DynkinType(family={self.family!r}, rank={self.rank})"

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"

    def __eq__(self, other: object) -> bool:
        if isinstance(other, DynkinType):
            return self.family == other.family and self.rank == other.rank
        else:
            return NotImplemented

    def __hash__(self) -> int:
        return hash((self.family, self.rank))


class Quiver:
    """
    A finite quiver :math:`Q = (Q_0, Q_1, s, e)`.

    Vertices and arrows are ordered; the order fixes the coordinates of
    dimension vectors. Orientation is part of the identity of a quiver.
    """

    def __init__(
        self,
        vertices: Sequence[str],
        arrows: Sequence[Union[Arrow, Tuple[str, str, str]]] = (),
    ):
        """
        :param vertices: Vertex ids in order.
        :param arrows: Arrows, either :class:`Arrow` objects or
                       :code:`(id, source, target)` triples.
        """
        if isinstance(vertices, str) or not isinstance(vertices, Sequence):
            raise TypeError(
                f"Argument 'vertices' must be a sequence of 'str', "
                f"not '{vertices.__class__.__name__}'."
            )
        for vertex in vertices:
            if not isinstance(vertex, str):
                raise TypeError(
                    f"Argument 'vertices' must be a sequence of 'str', "
                    f"not '{vertex.__class__.__name__}'."
                )
        if len(set(vertices)) != len(vertices):
            raise QuiverError("Vertex ids must be unique.")

        converted = []
        for arrow in arrows:
            if isinstance(arrow, Arrow):
                converted.append(arrow)
            elif isinstance(arrow, (tuple, list)) and len(arrow) == 3:
                converted.append(Arrow(*arrow))
            else:
                raise TypeError(
                    f"Argument 'arrows' must contain 'Arrow' objects or triples, "
                    f"not '{arrow.__class__.__name__}'."
                )
        if len({arrow.id for arrow in converted}) != len(converted):
            raise QuiverError("Arrow ids must be unique.")

        self.vertices: Tuple[str, ...] = tuple(vertices)
        self.arrows: Tuple[Arrow, ...] = tuple(converted)
        self._index: Dict[str, int] = {v: i for i, v in enumerate(self.vertices)}
        for arrow in self.arrows:
            for end in (arrow.source, arrow.target):
                if end not in self._index:
                    raise QuiverError(
                        f"Arrow {arrow.id!r} uses the undeclared vertex {end!r}."
                    )

    def __repr__(self) -> str:
        arrows = ", ".join(f"{a.id}:{a.source}->{a.target}" for a in self.arrows)
        return f"Quiver(vertices={list(self.vertices)}, arrows=[{arrows}])"

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Quiver):
            return self.vertices == other.vertices and self.arrows == other.arrows
        else:
            return NotImplemented

    def __hash__(self) -> int:
        return hash((self.vertices, self.arrows))

    def index(self, vertex: str) -> int:
        """
        Position of a vertex in the vertex order.

        :param vertex: A vertex id.
        :return: The coordinate of the vertex in dimension vectors.
        """
        try:
            return self._index[vertex]
        except KeyError:
            raise QuiverError(f"Unknown vertex {vertex!r}.") from None

    def arrow(self, id: str) -> Arrow:
        for arrow in self.arrows:
            if arrow.id == id:
                return arrow
        raise QuiverError(f"Unknown arrow {id!r}.")

    def dim_vector(self, entries: Union[Sequence[int], Mapping[str, int]]) -> DimVector:
        """
        Validate a dimension vector over this quiver.

        :param entries: Either a sequence in vertex order or a mapping from
                        vertex ids to natural numbers. Missing vertices of a
                        mapping count as zero.
        :return: The dimension vector as a tuple in vertex order.
        """
        if isinstance(entries, Mapping):
            for vertex in entries:
                self.index(vertex)
            values = [entries.get(vertex, 0) for vertex in self.vertices]
        else:
            values = list(entries)
            if len(values) != len(self.vertices):
                raise QuiverMismatchError(
                    f"Argument 'entries' must have {len(self.vertices)} elements, "
                    f"not {len(values)}."
                )
        for value in values:
            if isinstance(value, bool) or not isinstance(value, int):
                raise TypeError(
                    f"Argument 'entries' must contain 'int' values, "
                    f"not '{value.__class__.__name__}'."
                )
            if value < 0:
                raise ValueError(
                    f"Argument 'entries' must be nonnegative, not {value}."
                )
        return tuple(values)

    def unit(self, vertex: Union[str, int]) -> DimVector:
        k = vertex if isinstance(vertex, int) else self.index(vertex)
        return tuple(1 if i == k else 0 for i in range(len(self.vertices)))

    def is_sink(self, vertex: str) -> bool:
        return all(arrow.source != vertex for arrow in self.arrows)

    def to_digraph(self) -> nx.MultiDiGraph:
        """
        The quiver as a networkx multigraph; arrow ids are edge keys.

        :return: A :class:`networkx.MultiDiGraph`.
        """
        graph: nx.MultiDiGraph = nx.MultiDiGraph()
        graph.add_nodes_from(self.vertices)
        for arrow in self.arrows:
            graph.add_edge(arrow.source, arrow.target, key=arrow.id)
        return graph

    def sink_order(self) -> List[str]:
        """
        An admissible sink ordering of an acyclic quiver.

        Each vertex is a sink of the quiver obtained by reflecting at all
        vertices before it. Reflecting at all vertices in this order gives
        the quiver back.

        :return: The vertex ids, targets before sources.
        """
        graph = nx.DiGraph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from((a.source, a.target) for a in self.arrows)
        if not nx.is_directed_acyclic_graph(graph):
            raise QuiverError("Quiver has an oriented cycle.")
        order = list(nx.lexicographical_topological_sort(graph, key=self.index))
        return order[::-1]


def _check_vector(q: Quiver, x: Sequence[int], name: str) -> None:
    if len(x) != len(q.vertices):
        raise QuiverMismatchError(
            f"Argument '{name}' must have {len(q.vertices)} elements, not {len(x)}."
        )


def euler_form(q: Quiver, x: Sequence[int], y: Sequence[int]) -> int:
    """
    The Euler form :math:`\\langle x, y \\rangle` of the path algebra.

    :param q: A quiver.
    :param x: A dimension vector over :code:`q`.
    :param y: A dimension vector over :code:`q`.
    :return: :math:`\\sum_i x_i y_i - \\sum_\\alpha x_{s(\\alpha)} y_{e(\\alpha)}`.
    """
    _check_vector(q, x, "x")
    _check_vector(q, y, "y")
    total = sum(a * b for a, b in zip(x, y))
    for arrow in q.arrows:
        total -= x[q.index(arrow.source)] * y[q.index(arrow.target)]
    return total


def tits_form(q: Quiver, d: Sequence[int]) -> int:
    """
    The quadratic form :math:`q(d) = \\langle d, d \\rangle`.
    """
    return euler_form(q, d, d)


def symmetric_form(q: Quiver, x: Sequence[int], y: Sequence[int]) -> int:
    """
    The symmetrized Euler form
    :math:`(x, y) = \\langle x, y \\rangle + \\langle y, x \\rangle`.
    """
    return euler_form(q, x, y) + euler_form(q, y, x)


def classify(q: Quiver) -> Optional[DynkinType]:
    """
    Dynkin type of the underlying graph.

    :param q: A quiver.
    :return: The :class:`DynkinType`, or :code:`None` if the underlying graph
             is not a simply laced Dynkin diagram.
    """
    if not q.vertices:
        return None
    edges = set()
    for arrow in q.arrows:
        if arrow.source == arrow.target:
            return None
        edge = frozenset((arrow.source, arrow.target))
        if edge in edges:
            return None
        edges.add(edge)

    graph = nx.Graph()
    graph.add_nodes_from(q.vertices)
    graph.add_edges_from(tuple(edge) for edge in edges)
    if not nx.is_tree(graph):
        return None

    n = len(q.vertices)
    degrees = dict(graph.degree())
    branch = [v for v in q.vertices if degrees[v] >= 3]
    if not branch:
        return DynkinType("A", n)
    if len(branch) > 1 or degrees[branch[0]] > 3:
        return None

    center = branch[0]
    arms = []
    for neighbour in graph.neighbors(center):
        length, previous, current = 1, center, neighbour
        while degrees[current] == 2:
            following = next(w for w in graph.neighbors(current) if w != previous)
            previous, current = current, following
            length += 1
        arms.append(length)
    arms.sort()
    if arms[0] == 1 and arms[1] == 1:
        return DynkinType("D", n)
    if arms[0] == 1 and arms[1] == 2 and arms[2] in (2, 3, 4):
        return DynkinType("E", n)
    return None


def _require_dynkin(q: Quiver) -> DynkinType:
    kind = classify(q)
    if kind is None:
        raise NotDynkinError(f"{q!r} is not a Dynkin quiver.")
    return kind


def _reflect_vector(q: Quiver, beta: Tuple[int, ...], k: int) -> Tuple[int, ...]:
    unit = q.unit(k)
    pairing = symmetric_form(q, beta, unit)
    return tuple(b - pairing * u for b, u in zip(beta, unit))


@lru_cache(maxsize=None)
def positive_roots(q: Quiver) -> Tuple[DimVector, ...]:
    """
    All positive roots of a Dynkin quiver.

    Roots are found as the closure of the simple roots under simple
    reflections, then sorted by total dimension and lexicographically.

    :param q: A Dynkin quiver.
    :return: Tuple of dimension vectors, the index order of
             :class:`~quiverdeg.representations.representation.ModuleSpec`.
    """
    _require_dynkin(q)
    n = len(q.vertices)
    seen = {q.unit(k) for k in range(n)}
    queue = deque(sorted(seen))
    while queue:
        beta = queue.popleft()
        for k in range(n):
            gamma = _reflect_vector(q, beta, k)
            if any(g < 0 for g in gamma) or not any(gamma) or gamma in seen:
                continue
            seen.add(gamma)
            queue.append(gamma)
    roots = tuple(sorted(seen, key=lambda d: (sum(d), d)))
    logger.debug("%d positive roots for %r", len(roots), q)
    return roots


def reflect(q: Quiver, vertex: str) -> Quiver:
    """
    Reverse every arrow incident to a vertex.

    :param q: A quiver.
    :param vertex: The vertex :math:`k`.
    :return: The reflected quiver :math:`\\sigma_k Q` with the same arrow ids.
    """
    q.index(vertex)
    return Quiver(
        q.vertices,
        [
            arrow.reversed() if vertex in (arrow.source, arrow.target) else arrow
            for arrow in q.arrows
        ],
    )


def orientations(q: Quiver) -> Iterator[Quiver]:
    """
    Every reorientation of a quiver.

    :param q: A quiver.
    :return: An iterator over :math:`2^{|Q_1|}` quivers, starting with
             :code:`q` itself.
    """
    for flips in itertools.product((False, True), repeat=len(q.arrows)):
        yield Quiver(
            q.vertices,
            [a.reversed() if flip else a for a, flip in zip(q.arrows, flips)],
        )


def dynkin_quiver(family: str, rank: int) -> Quiver:
    """
    A standard orientation of a Dynkin diagram.

    Vertices are :code:`"1"` to :code:`"n"`. Type A is the path
    :math:`1 \\to 2 \\to \\cdots \\to n`. Type D adds the arrow
    :math:`n-2 \\to n` to the path on :math:`n-1` vertices, and type E
    adds :math:`3 \\to n` to the path on :math:`n-1` vertices.

    :param family: One of :code:`"A"`, :code:`"D"` or :code:`"E"`.
    :param rank: Number of vertices.
    :return: A :class:`Quiver`.
    """
    DynkinType(family, rank)
    vertices = [str(i) for i in range(1, rank + 1)]
    path_length = rank if family == "A" else rank - 1
    arrows: List[Tuple[str, str, str]] = [
        (f"a{i}", str(i), str(i + 1)) for i in range(1, path_length)
    ]
    if family == "D":
        arrows.append((f"a{rank - 1}", str(rank - 2), str(rank)))
    elif family == "E":
        arrows.append((f"a{rank - 1}", "3", str(rank)))
    return Quiver(vertices, arrows)


def parse_quiver(data: Any) -> Quiver:
    """
    Build a quiver from its JSON document.

    :param data: A mapping with :code:`vertices` and :code:`arrows` fields.
    :return: A :class:`Quiver`.
    """
    if not isinstance(data, Mapping):
        raise QuiverError(
            f"Quiver document must be an object, not '{data.__class__.__name__}'."
        )
    try:
        vertices = [str(v) for v in data["vertices"]]
        arrows = [
            (str(a["id"]), str(a["source"]), str(a["target"]))
            for a in data.get("arrows", [])
        ]
    except (KeyError, TypeError) as error:
        raise QuiverError(f"Malformed quiver document: {error}.") from None
    return Quiver(vertices, arrows)


def quiver_to_dict(q: Quiver) -> Dict[str, Any]:
    return {
        "vertices": list(q.vertices),
        "arrows": [
            {"id": a.id, "source": a.source, "target": a.target} for a in q.arrows
        ],
    }
