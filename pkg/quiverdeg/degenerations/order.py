"""Degeneration Order

The hom-order on modules over a Dynkin quiver, the invariants
:math:`\\delta` and :math:`\\delta'`, orbit dimensions and the poset of
orbits with a fixed dimension vector.
"""

import logging
from typing import List, Sequence, Tuple

import networkx as nx

from quiverdeg.errors import (
    InconsistencyError,
    NotADegenerationError,
    QuiverMismatchError,
)
from quiverdeg.representations.catalog import catalog
from quiverdeg.representations.quiver import DimVector, Quiver, positive_roots
from quiverdeg.representations.representation import ModuleSpec

__all__: List[str] = [
    "DegPair",
    "check_cancel",
    "codim",
    "deg_poset",
    "delta",
    "delta_prime",
    "delta_table",
    "enumerate_specs",
    "is_degeneration",
    "module_variety_codim",
    "orbit_dim",
    "orbit_dim_module",
    "split_common",
]

logger = logging.getLogger(__name__)


def _check_pair(*modules: ModuleSpec) -> None:
    for module in modules:
        if not isinstance(module, ModuleSpec):
            raise TypeError(
                f"Argument must be of type 'ModuleSpec', "
                f"not '{module.__class__.__name__}'."
            )
    if len({module.quiver for module in modules}) > 1:
        raise QuiverMismatchError("Modules live over different quivers.")


def delta(m: ModuleSpec, n: ModuleSpec, x: ModuleSpec) -> int:
    """
    :math:`\\delta_{M,N}(X) = [N, X] - [M, X]`.
    """
    _check_pair(m, n, x)
    table = catalog(m.quiver)
    return table.hom(n, x) - table.hom(m, x)


def delta_prime(m: ModuleSpec, n: ModuleSpec, x: ModuleSpec) -> int:
    """
    :math:`\\delta'_{M,N}(X) = [X, N] - [X, M]`.
    """
    _check_pair(m, n, x)
    table = catalog(m.quiver)
    return table.hom(x, n) - table.hom(x, m)


def delta_table(m: ModuleSpec, n: ModuleSpec) -> List[Tuple[int, int]]:
    """
    The pairs :math:`(\\delta(Y), \\delta'(Y))` for every indecomposable
    :math:`Y`, in root order.
    """
    _check_pair(m, n)
    return [
        (
            delta(m, n, ModuleSpec.indecomposable(m.quiver, i)),
            delta_prime(m, n, ModuleSpec.indecomposable(m.quiver, i)),
        )
        for i in range(len(m))
    ]


def is_degeneration(m: ModuleSpec, n: ModuleSpec) -> bool:
    """
    Whether :math:`N` is a degeneration of :math:`M`.

    Over a Dynkin quiver this is the hom-order: equal dimension vectors and
    :math:`[X, N] \\geq [X, M]` as well as :math:`[N, X] \\geq [M, X]` for
    every indecomposable :math:`X`.

    :param m: The module :math:`M`.
    :param n: The module :math:`N`.
    :return: :code:`True` iff
             :math:`\\mathcal{O}_N \\subseteq \\overline{\\mathcal{O}}_M`.
    """
    _check_pair(m, n)
    if m.dim != n.dim:
        return False
    if m == n:
        return True
    table = catalog(m.quiver)
    for i in range(len(table)):
        x = ModuleSpec.indecomposable(m.quiver, i)
        if table.hom(x, n) < table.hom(x, m) or table.hom(n, x) < table.hom(m, x):
            return False
    return True


def orbit_dim(m: ModuleSpec) -> int:
    """
    Dimension of the orbit in the representation space,
    :math:`\\sum_i d_i^2 - [M, M]`.
    """
    return sum(d * d for d in m.dim) - catalog(m.quiver).hom(m, m)


def orbit_dim_module(m: ModuleSpec) -> int:
    """
    Dimension of the :math:`GL(d)`-orbit in the module variety,
    :math:`d^2 - [M, M]` with :math:`d` the total dimension.
    """
    return m.total_dim**2 - catalog(m.quiver).hom(m, m)


def codim(m: ModuleSpec, n: ModuleSpec) -> int:
    """
    :math:`\\dim \\mathcal{O}_M - \\dim \\mathcal{O}_N = [N, N] - [M, M]`.

    :raises NotADegenerationError: if :math:`N` is not a degeneration of :math:`M`.
    """
    if not is_degeneration(m, n):
        raise NotADegenerationError(f"{n} is not a degeneration of {m}.")
    table = catalog(m.quiver)
    return table.hom(n, n) - table.hom(m, m)


def module_variety_codim(m: ModuleSpec, n: ModuleSpec) -> int:
    """
    The codimension computed in the module variety. It agrees with
    :func:`codim`.
    """
    if not is_degeneration(m, n):
        raise NotADegenerationError(f"{n} is not a degeneration of {m}.")
    return orbit_dim_module(m) - orbit_dim_module(n)


class DegPair:
    """
    A pair of modules with :math:`\\mathcal{O}_N \\subseteq \\overline{\\mathcal{O}}_M`.
    """

    def __init__(self, m: ModuleSpec, n: ModuleSpec):
        """
        :param m: The module :math:`M`.
        :param n: A degeneration :math:`N` of :math:`M`.
        """
        self.m: ModuleSpec = m
        self.n: ModuleSpec = n
        self.codim: int = codim(m, n)

    def __repr__(self) -> str:
        return f"DegPair(m={self.m!r}, n={self.n!r}, codim={self.codim})"

    def __str__(self) -> str:
        return f"{self.m} ~> {self.n} (codim {self.codim})"

    def __eq__(self, other: object) -> bool:
        if isinstance(other, DegPair):
            return self.m == other.m and self.n == other.n
        else:
            return NotImplemented

    def __hash__(self) -> int:
        return hash((self.m, self.n))

    @property
    def is_disjoint(self) -> bool:
        return self.m.is_disjoint(self.n)


def split_common(
    m: ModuleSpec, n: ModuleSpec
) -> Tuple[ModuleSpec, ModuleSpec, ModuleSpec]:
    """
    Remove the maximal common direct summand.

    :param m: The module :math:`M = M' \\oplus X`.
    :param n: The module :math:`N = N' \\oplus X`.
    :return: The disjoint pair :math:`M', N'` and the summand :math:`X`.
    """
    _check_pair(m, n)
    x = m.minimum(n)
    return m - x, n - x, x


def check_cancel(m: ModuleSpec, n: ModuleSpec, x: ModuleSpec) -> DegPair:
    """
    Cancel a common summand :math:`X` with :math:`\\delta(X) = 0` or
    :math:`\\delta'(X) = 0`.

    :param m: The module :math:`M' \\oplus X`.
    :param n: A degeneration :math:`N' \\oplus X` of :math:`M`.
    :param x: The common summand.
    :return: The residual pair :math:`(M', N')`, itself a degeneration.
    :raises ValueError: if both :math:`\\delta(X)` and :math:`\\delta'(X)`
                        are positive, or :math:`X` is no common summand.
    """
    if not is_degeneration(m, n):
        raise NotADegenerationError(f"{n} is not a degeneration of {m}.")
    if delta(m, n, x) != 0 and delta_prime(m, n, x) != 0:
        raise ValueError("Cancellation needs delta(X) = 0 or delta'(X) = 0.")
    residual_m, residual_n = m - x, n - x
    if not is_degeneration(residual_m, residual_n):
        raise InconsistencyError("Cancelled pair is not a degeneration.")
    return DegPair(residual_m, residual_n)


def enumerate_specs(quiver: Quiver, d: Sequence[int]) -> List[ModuleSpec]:
    """
    All modules with a given dimension vector.

    :param quiver: A Dynkin quiver.
    :param d: A dimension vector.
    :return: The :class:`ModuleSpec` objects, sorted by multiplicity vector.
    """
    target: DimVector = quiver.dim_vector(d)
    roots = positive_roots(quiver)
    found: List[ModuleSpec] = []
    multiplicities = [0] * len(roots)

    def search(index: int, remaining: Tuple[int, ...]) -> None:
        if not any(remaining):
            found.append(ModuleSpec(quiver, multiplicities))
            return
        if index == len(roots):
            return
        root = roots[index]
        count = 0
        current = remaining
        while True:
            search(index + 1, current)
            current = tuple(r - a for r, a in zip(current, root))
            if any(c < 0 for c in current):
                break
            count += 1
            multiplicities[index] = count
        multiplicities[index] = 0

    search(0, target)
    return sorted(found)


def deg_poset(quiver: Quiver, d: Sequence[int]) -> nx.DiGraph:
    """
    The Hasse diagram of the degeneration order on a dimension vector.

    Nodes are :class:`ModuleSpec` objects carrying an :code:`orbit_dim`
    attribute; an edge :math:`M \\to N` is a cover and carries its
    :code:`codim`.

    :param quiver: A Dynkin quiver.
    :param d: A dimension vector.
    :return: A :class:`networkx.DiGraph`.
    """
    specs = enumerate_specs(quiver, d)
    order = nx.DiGraph()
    order.add_nodes_from(specs)
    for m in specs:
        for n in specs:
            if m != n and is_degeneration(m, n):
                order.add_edge(m, n)
    covers = nx.transitive_reduction(order)
    poset = nx.DiGraph()
    for spec in specs:
        poset.add_node(spec, orbit_dim=orbit_dim(spec))
    for m, n in sorted(covers.edges()):
        poset.add_edge(m, n, codim=codim(m, n))
    logger.debug(
        "Poset for %s: %d orbits, %d covers",
        d,
        poset.number_of_nodes(),
        poset.number_of_edges(),
    )
    return poset
