"""Catalogue of Indecomposables

The indecomposable representations of a Dynkin quiver, the table of
their Hom dimensions, and the operations built on it: Krull-Schmidt
decomposition, realization of multiplicity vectors and radical
membership.
"""

import logging
import random
import threading
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple, Union

import networkx as nx

from quiverdeg.common import Matrix
from quiverdeg.errors import (
    InconsistencyError,
    QuiverMismatchError,
    SearchExhaustedError,
)
from quiverdeg.representations.quiver import (
    DimVector,
    Quiver,
    euler_form,
    positive_roots,
    reflect,
    symmetric_form,
)
from quiverdeg.representations.representation import (
    ModuleSpec,
    Morphism,
    Representation,
    combine,
    direct_sum,
    hom_dim,
    hom_space,
    representation_ext_dim,
)

__all__: List[str] = [
    "Catalog",
    "catalog",
    "decompose",
    "ext_dim",
    "find_isomorphism",
    "hom",
    "in_radical",
    "indecomposable",
    "realize",
]

logger = logging.getLogger(__name__)

Module = Union[ModuleSpec, Representation]


def _source_reflection(
    y: Representation, quiver: Quiver, vertex: str
) -> Representation:
    """
    The reflection functor :math:`S_k^-` at a source.

    :param y: A representation of a quiver in which :code:`vertex` is a source.
    :param quiver: The quiver with every arrow at :code:`vertex` reversed, so
                   that :code:`vertex` is a sink.
    :param vertex: The vertex :math:`k`.
    :return: A representation of :code:`quiver` whose space at :math:`k` is
             the cokernel of :math:`Y_k \\to \\bigoplus_{k \\to j} Y_j`.
    """
    source_quiver = y.quiver
    k = source_quiver.index(vertex)
    outgoing = [a for a in source_quiver.arrows if a.source == vertex]
    stacked = Matrix.vstack(
        [y.matrices[a.id] for a in outgoing], ncols=y.dim[k]
    )
    quotient = Matrix(stacked.left_nullspace(), ncols=stacked.nrows)

    dim = list(y.dim)
    dim[k] = quotient.nrows
    matrices: Dict[str, Matrix] = {}
    offset = 0
    for arrow in source_quiver.arrows:
        if arrow.source != vertex:
            matrices[arrow.id] = y.matrices[arrow.id]
    for arrow in outgoing:
        width = y.dim[source_quiver.index(arrow.target)]
        matrices[arrow.id] = quotient.submatrix(
            0, quotient.nrows, offset, offset + width
        )
        offset += width
    return Representation(quiver, dim, matrices)


def _construct_indecomposable(quiver: Quiver, root: DimVector) -> Representation:
    """
    Build an indecomposable representation by reflection functors.

    The root is pushed along an admissible sink sequence by simple
    reflections until it becomes the simple root of the current sink. The
    simple representation there is then carried back by source reflections.
    """
    order = quiver.sink_order()
    n = len(order)
    limit = n * (len(positive_roots(quiver)) + 1)

    path: List[Tuple[Quiver, str]] = []
    current, beta = quiver, tuple(root)
    for step in range(limit):
        vertex = order[step % n]
        if beta == current.unit(vertex):
            break
        unit = current.unit(vertex)
        pairing = symmetric_form(current, beta, unit)
        beta = tuple(b - pairing * u for b, u in zip(beta, unit))
        if any(b < 0 for b in beta):
            raise InconsistencyError(f"{root} left the positive roots.")
        path.append((current, vertex))
        current = reflect(current, vertex)
    else:
        raise InconsistencyError(
            f"No reflection sequence reduces {root} to a simple root."
        )

    representation = Representation.simple(current, vertex)
    for previous, reflected_at in reversed(path):
        representation = _source_reflection(representation, previous, reflected_at)
    return representation


class Catalog:
    """
    Build-once table of the indecomposables of a Dynkin quiver.

    Instances are shared through :func:`catalog` and never mutated after
    construction except for the realization cache, which a lock guards.
    """

    def __init__(self, quiver: Quiver):
        """
        :param quiver: A Dynkin quiver.
        """
        self.quiver: Quiver = quiver
        self.roots: Tuple[DimVector, ...] = positive_roots(quiver)
        self.indecomposables: List[Representation] = []
        for root in self.roots:
            representation = _construct_indecomposable(quiver, root)
            if representation.dim != root:
                raise InconsistencyError(
                    f"Indecomposable for {root} has dimension {representation.dim}."
                )
            if hom_dim(representation, representation) != 1:
                raise InconsistencyError(f"Indecomposable for {root} is not a brick.")
            self.indecomposables.append(representation)

        self.hom_table: List[List[int]] = [
            [hom_dim(x, y) for y in self.indecomposables] for x in self.indecomposables
        ]
        size = len(self.roots)
        table = Matrix(self.hom_table, ncols=size)
        if table.rank() != size:
            raise InconsistencyError("Hom table of indecomposables is singular.")
        self._decomposition_system: Matrix = table.transpose()

        graph = nx.DiGraph()
        graph.add_nodes_from(range(size))
        graph.add_edges_from(
            (i, j)
            for i in range(size)
            for j in range(size)
            if i != j and self.hom_table[i][j] > 0
        )
        if not nx.is_directed_acyclic_graph(graph):
            raise InconsistencyError("Hom relation on indecomposables has a cycle.")
        self.directed_order: List[int] = list(
            nx.lexicographical_topological_sort(graph)
        )
        self.position: Dict[int, int] = {
            index: place for place, index in enumerate(self.directed_order)
        }
        self._realizations: Dict[Tuple[int, ...], Representation] = {}
        self._realizations_lock = threading.Lock()
        logger.debug("Built catalogue of %d indecomposables for %r", size, quiver)

    def __repr__(self) -> str:
        return f"Catalog(quiver={self.quiver!r})"

    def __len__(self) -> int:
        return len(self.roots)

    def _check(self, *modules: ModuleSpec) -> None:
        for module in modules:
            if module.quiver != self.quiver:
                raise QuiverMismatchError("Module lives over a different quiver.")

    def hom(self, x: ModuleSpec, y: ModuleSpec) -> int:
        """
        :math:`[X, Y] = \\sum_{i,j} \\mu(X, Y_i) \\mu(Y, Y_j) [Y_i, Y_j]`.
        """
        self._check(x, y)
        total = 0
        for i in x.support():
            row = self.hom_table[i]
            for j in y.support():
                total += x[i] * y[j] * row[j]
        return total

    def ext(self, x: ModuleSpec, y: ModuleSpec) -> int:
        result = self.hom(x, y) - euler_form(self.quiver, x.dim, y.dim)
        if result < 0:
            raise InconsistencyError(f"Negative Ext dimension {result}.")
        return result

    def decompose(self, w: Representation) -> ModuleSpec:
        """
        The multiplicity vector of a representation.

        Solves :math:`[W, Y_j] = \\sum_i \\mu(W, Y_i) [Y_i, Y_j]` for all
        indecomposables :math:`Y_j`.

        :param w: A representation of the catalogue's quiver.
        :return: The :class:`ModuleSpec` of :code:`w`.
        """
        if w.quiver != self.quiver:
            raise QuiverMismatchError("Representation lives over a different quiver.")
        counts = [hom_dim(w, y) for y in self.indecomposables]
        solution = self._decomposition_system.solve(counts)
        if solution is None:
            raise InconsistencyError(f"Hom counts {counts} have no decomposition.")
        multiplicities = []
        for value in solution:
            if value.denominator != 1 or value < 0:
                raise InconsistencyError(f"Decomposition {solution} is not natural.")
            multiplicities.append(int(value))
        spec = ModuleSpec(self.quiver, multiplicities)
        if spec.dim != w.dim:
            raise InconsistencyError(
                f"Decomposition of dimension {spec.dim} for {w.dim}."
            )
        return spec

    def summands(self, m: ModuleSpec) -> List[Representation]:
        """
        Indecomposable summands of :code:`realize(m)`, in root order.
        """
        self._check(m)
        return [
            self.indecomposables[i]
            for i, mu in enumerate(m.multiplicities)
            for _ in range(mu)
        ]

    def realize(self, m: ModuleSpec) -> Representation:
        """
        The direct sum of indecomposables with the given multiplicities.
        """
        self._check(m)
        with self._realizations_lock:
            cached = self._realizations.get(m.multiplicities)
            if cached is None:
                cached = direct_sum(self.summands(m), quiver=self.quiver)
                self._realizations[m.multiplicities] = cached
        return cached

    def in_radical(self, f: Morphism) -> bool:
        """
        Whether a homomorphism splits off no common summand.

        As :math:`\\mathrm{End}(T) = k` for every indecomposable :math:`T`, this
        holds iff :math:`b \\circ f \\circ a = 0` for all :math:`a: T \\to X`
        and :math:`b: Y \\to T`.
        """
        source = self.decompose(f.source)
        target = self.decompose(f.target)
        for index in source.minimum(target).support():
            t = self.indecomposables[index]
            into = hom_space(t, f.source)
            out = hom_space(f.target, t)
            for a in into:
                image = f @ a
                for b in out:
                    if not (b @ image).is_zero():
                        return False
        return True

    def find_isomorphism(
        self,
        x: Representation,
        y: Representation,
        rng: Optional[random.Random] = None,
        trials: int = 200,
    ) -> Optional[Morphism]:
        """
        An invertible homomorphism between two representations.

        :param x: The source.
        :param y: The target.
        :param rng: Random source for combinations of basis morphisms.
        :param trials: Number of random combinations tried after the basis.
        :return: An isomorphism, or :code:`None` when the two are not isomorphic.
        """
        if x.dim != y.dim or self.decompose(x) != self.decompose(y):
            return None
        basis = hom_space(x, y)
        if not basis:
            return Morphism.identity(x)
        candidates = list(basis)
        candidates.append(combine(basis, [1] * len(basis)))
        for candidate in candidates:
            if candidate.is_isomorphism():
                return candidate
        rng = rng or random.Random(0)
        for _ in range(trials):
            coefficients = [rng.randint(-3, 3) for _ in basis]
            candidate = combine(basis, coefficients)
            if candidate.is_isomorphism():
                return candidate
        raise SearchExhaustedError("No isomorphism found within budget.")


@lru_cache(maxsize=None)
def catalog(quiver: Quiver) -> Catalog:
    """
    The shared :class:`Catalog` of a Dynkin quiver.
    """
    return Catalog(quiver)


def indecomposable(quiver: Quiver, root: Sequence[int]) -> Representation:
    """
    The indecomposable representation with a given dimension vector.

    :param quiver: A Dynkin quiver.
    :param root: A positive root of :code:`quiver`.
    :return: A :class:`Representation` with one-dimensional endomorphism ring.
    """
    table = catalog(quiver)
    try:
        return table.indecomposables[table.roots.index(tuple(root))]
    except ValueError:
        raise ValueError(f"{tuple(root)} is not a positive root.") from None


def decompose(w: Representation) -> ModuleSpec:
    return catalog(w.quiver).decompose(w)


def realize(m: ModuleSpec) -> Representation:
    return catalog(m.quiver).realize(m)


def in_radical(f: Morphism) -> bool:
    return catalog(f.source.quiver).in_radical(f)


def find_isomorphism(
    x: Representation,
    y: Representation,
    rng: Optional[random.Random] = None,
    trials: int = 200,
) -> Optional[Morphism]:
    return catalog(x.quiver).find_isomorphism(x, y, rng=rng, trials=trials)


def hom(x: Module, y: Module) -> int:
    """
    :math:`[X, Y]` for modules given either way.
    """
    if isinstance(x, ModuleSpec) and isinstance(y, ModuleSpec):
        return catalog(x.quiver).hom(x, y)
    return hom_dim(_as_representation(x), _as_representation(y))


def ext_dim(x: Module, y: Module) -> int:
    """
    :math:`\\dim \\mathrm{Ext}^1(X, Y) = [X, Y] - \\langle \\dim X, \\dim Y \\rangle`.

    :param x: A :class:`ModuleSpec` or :class:`Representation`.
    :param y: A :class:`ModuleSpec` or :class:`Representation`.
    :return: A natural number.
    """
    if isinstance(x, ModuleSpec) and isinstance(y, ModuleSpec):
        return catalog(x.quiver).ext(x, y)
    return representation_ext_dim(_as_representation(x), _as_representation(y))


def _as_representation(x: Module) -> Representation:
    if isinstance(x, ModuleSpec):
        return realize(x)
    if isinstance(x, Representation):
        return x
    raise TypeError(f"Cannot accept '{x.__class__.__name__}' type.")


