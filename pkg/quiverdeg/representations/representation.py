"""Representations

Representations of quivers by exact rational matrices, their
homomorphisms and multiplicity vectors.
"""

from fractions import Fraction
from typing import Any, Dict, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from quiverdeg.common import Matrix, Rational
from quiverdeg.errors import InconsistencyError, QuiverError, QuiverMismatchError
from quiverdeg.representations.quiver import (
    DimVector,
    Quiver,
    euler_form,
    positive_roots,
)

__all__: List[str] = [
    "ModuleSpec",
    "Morphism",
    "Representation",
    "cokernel",
    "combine",
    "direct_sum",
    "hom_dim",
    "hom_space",
    "inclusion",
    "intertwining_matrix",
    "kernel",
    "projection",
    "representation_ext_dim",
]


class Representation:
    """
    A representation :math:`V = (V_\\alpha)` of a quiver.

    The space at vertex :math:`i` is :math:`k^{d_i}` and the arrow
    :math:`\\alpha` acts by a :math:`d_{e(\\alpha)} \\times d_{s(\\alpha)}`
    matrix.
    """

    def __init__(
        self,
        quiver: Quiver,
        dim: Union[Sequence[int], Mapping[str, int]],
        matrices: Optional[Mapping[str, Any]] = None,
    ):
        """
        :param quiver: The underlying :class:`Quiver`.
        :param dim: The dimension vector.
        :param matrices: Map from arrow id to a :class:`Matrix` or to rows of
                         rational entries. Arrows left out act by zero.
        """
        if not isinstance(quiver, Quiver):
            raise TypeError(
                f"Argument 'quiver' must be of type 'Quiver', "
                f"not '{quiver.__class__.__name__}'."
            )
        self.quiver: Quiver = quiver
        self.dim: DimVector = quiver.dim_vector(dim)
        matrices = dict(matrices or {})
        for id in matrices:
            quiver.arrow(id)

        converted: Dict[str, Matrix] = {}
        for arrow in quiver.arrows:
            rows = self.dim[quiver.index(arrow.target)]
            cols = self.dim[quiver.index(arrow.source)]
            value = matrices.get(arrow.id)
            if value is None:
                matrix = Matrix.zeros(rows, cols)
            elif isinstance(value, Matrix):
                matrix = value
            else:
                matrix = Matrix(value, ncols=cols if not value else None)
            if matrix.shape != (rows, cols):
                raise QuiverError(
                    f"Arrow {arrow.id!r} must act by a {rows}x{cols} matrix, "
                    f"not {matrix.nrows}x{matrix.ncols}."
                )
            converted[arrow.id] = matrix
        self.matrices: Dict[str, Matrix] = converted

    def __repr__(self) -> str:
        return f"Representation(dim={self.dim})"

    def __str__(self) -> str:
        lines = [f"Representation of dimension {self.dim}:"]
        for arrow in self.quiver.arrows:
            lines.append(f"{arrow.id}: {arrow.source} -> {arrow.target}")
            lines.append(str(self.matrices[arrow.id]))
        return "\n".join(lines)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Representation):
            return (
                self.quiver == other.quiver
                and self.dim == other.dim
                and self.matrices == other.matrices
            )
        else:
            return NotImplemented

    def __hash__(self) -> int:
        return hash((self.quiver, self.dim, tuple(self.matrices.values())))

    def matrix(self, arrow: str) -> Matrix:
        return self.matrices[arrow]

    @property
    def total_dim(self) -> int:
        return sum(self.dim)

    def is_zero(self) -> bool:
        return not any(self.dim)

    @classmethod
    def zero(cls, quiver: Quiver) -> "Representation":
        return cls(quiver, [0] * len(quiver.vertices))

    @classmethod
    def simple(cls, quiver: Quiver, vertex: str) -> "Representation":
        """
        The simple representation :math:`S_i`.

        :param quiver: A quiver without loops.
        :param vertex: The vertex :math:`i`.
        :return: A :class:`Representation` of dimension vector :math:`e_i`.
        """
        return cls(quiver, quiver.unit(vertex))


def _check_same_quiver(*representations: Representation) -> None:
    for representation in representations:
        if not isinstance(representation, Representation):
            raise TypeError(
                f"Cannot accept '{representation.__class__.__name__}' type."
            )
    quivers = {representation.quiver for representation in representations}
    if len(quivers) > 1:
        raise QuiverMismatchError("Representations live over different quivers.")


class Morphism:
    """
    A homomorphism :math:`f: X \\to Y` given by one matrix per vertex.
    """

    def __init__(
        self,
        source: Representation,
        target: Representation,
        maps: Union[Sequence[Matrix], Mapping[str, Matrix]],
        check: bool = True,
    ):
        """
        :param source: The representation :math:`X`.
        :param target: The representation :math:`Y`.
        :param maps: The matrices :math:`f_i` of shape
                     :math:`\\dim Y_i \\times \\dim X_i`, in vertex order or
                     keyed by vertex id.
        :param check: Verify
                      :math:`f_{e(\\alpha)} X_\\alpha = Y_\\alpha f_{s(\\alpha)}`.
        """
        _check_same_quiver(source, target)
        quiver = source.quiver
        if isinstance(maps, Mapping):
            maps = [maps[vertex] for vertex in quiver.vertices]
        if len(maps) != len(quiver.vertices):
            raise ValueError(
                f"Argument 'maps' must have {len(quiver.vertices)} elements, "
                f"not {len(maps)}."
            )
        for i, matrix in enumerate(maps):
            if matrix.shape != (target.dim[i], source.dim[i]):
                raise QuiverError(
                    f"Map at vertex {quiver.vertices[i]!r} must be "
                    f"{target.dim[i]}x{source.dim[i]}, "
                    f"not {matrix.nrows}x{matrix.ncols}."
                )
        self.source: Representation = source
        self.target: Representation = target
        self.maps: Tuple[Matrix, ...] = tuple(maps)
        if check and not self.is_homomorphism():
            raise QuiverError("Vertex maps do not commute with the arrows.")

    def __repr__(self) -> str:
        return f"Morphism(source={self.source!r}, target={self.target!r})"

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Morphism):
            return (
                self.source == other.source
                and self.target == other.target
                and self.maps == other.maps
            )
        else:
            return NotImplemented

    def __hash__(self) -> int:
        return hash(self.maps)

    def __matmul__(self, other: "Morphism") -> "Morphism":
        """
        Composition :code:`self @ other` is
        :math:`\\mathrm{self} \\circ \\mathrm{other}`.
        """
        if other.target.dim != self.source.dim:
            raise QuiverError("Morphisms are not composable.")
        return Morphism(
            other.source,
            self.target,
            [a @ b for a, b in zip(self.maps, other.maps)],
            check=False,
        )

    def __add__(self, other: "Morphism") -> "Morphism":
        return Morphism(
            self.source,
            self.target,
            [a + b for a, b in zip(self.maps, other.maps)],
            check=False,
        )

    def __sub__(self, other: "Morphism") -> "Morphism":
        return self + other.scale(-1)

    def scale(self, factor: Rational) -> "Morphism":
        return Morphism(
            self.source, self.target, [m.scale(factor) for m in self.maps], check=False
        )

    def is_homomorphism(self) -> bool:
        quiver = self.source.quiver
        for arrow in quiver.arrows:
            s = quiver.index(arrow.source)
            e = quiver.index(arrow.target)
            left = self.maps[e] @ self.source.matrices[arrow.id]
            right = self.target.matrices[arrow.id] @ self.maps[s]
            if left != right:
                return False
        return True

    def is_zero(self) -> bool:
        return all(m.is_zero() for m in self.maps)

    def is_injective(self) -> bool:
        return all(m.rank() == m.ncols for m in self.maps)

    def is_surjective(self) -> bool:
        return all(m.rank() == m.nrows for m in self.maps)

    def is_isomorphism(self) -> bool:
        return all(m.nrows == m.ncols and m.rank() == m.ncols for m in self.maps)

    def inverse(self) -> "Morphism":
        if not self.is_isomorphism():
            raise ValueError("Morphism is not invertible.")
        return Morphism(
            self.target, self.source, [m.inverse() for m in self.maps], check=False
        )

    def vector(self) -> List[Fraction]:
        """
        Coordinates of the morphism, vertex blocks in row-major order.
        """
        return [entry for matrix in self.maps for entry in matrix.vector()]

    def rank(self) -> int:
        return sum(m.rank() for m in self.maps)

    @classmethod
    def zero(cls, source: Representation, target: Representation) -> "Morphism":
        return cls(
            source,
            target,
            [Matrix.zeros(b, a) for a, b in zip(source.dim, target.dim)],
            check=False,
        )

    @classmethod
    def identity(cls, representation: Representation) -> "Morphism":
        return cls(
            representation,
            representation,
            [Matrix.identity(d) for d in representation.dim],
            check=False,
        )

    @classmethod
    def from_vector(
        cls,
        source: Representation,
        target: Representation,
        vector: Sequence[Rational],
        check: bool = True,
    ) -> "Morphism":
        maps = []
        offset = 0
        for a, b in zip(source.dim, target.dim):
            maps.append(Matrix.from_vector(vector[offset : offset + a * b], b, a))
            offset += a * b
        return cls(source, target, maps, check=check)


def _unknown_offsets(x: Representation, y: Representation) -> List[int]:
    offsets = []
    total = 0
    for a, b in zip(x.dim, y.dim):
        offsets.append(total)
        total += a * b
    offsets.append(total)
    return offsets


def intertwining_matrix(x: Representation, y: Representation) -> Matrix:
    """
    The linear map
    :math:`h \\mapsto (h_{e(\\alpha)} X_\\alpha - Y_\\alpha h_{s(\\alpha)})_\\alpha`.

    Columns are indexed by the entries of :math:`h_i` (vertex blocks,
    row-major) and rows by the entries of each arrow component (arrow
    blocks, row-major). Its kernel is :math:`\\mathrm{Hom}(X, Y)` and its
    image is the space of coboundaries :math:`\\mathbb{B}^1(X, Y)`.

    :param x: The representation :math:`X`.
    :param y: The representation :math:`Y`.
    :return: A :class:`Matrix`.
    """
    _check_same_quiver(x, y)
    quiver = x.quiver
    offsets = _unknown_offsets(x, y)
    unknowns = offsets[-1]
    rows: List[List[Fraction]] = []
    zero = Fraction(0)
    for arrow in quiver.arrows:
        s = quiver.index(arrow.source)
        e = quiver.index(arrow.target)
        xs, xe, ys, ye = x.dim[s], x.dim[e], y.dim[s], y.dim[e]
        x_alpha = x.matrices[arrow.id]
        y_alpha = y.matrices[arrow.id]
        for p in range(ye):
            for q in range(xs):
                row = [zero] * unknowns
                # h_e X_alpha
                for r in range(xe):
                    row[offsets[e] + p * xe + r] += x_alpha[r, q]
                # - Y_alpha h_s
                for r in range(ys):
                    row[offsets[s] + r * xs + q] -= y_alpha[p, r]
                rows.append(row)
    return Matrix(rows, ncols=unknowns)


def hom_space(x: Representation, y: Representation) -> List[Morphism]:
    """
    A basis of :math:`\\mathrm{Hom}(X, Y)`.

    :param x: The source representation.
    :param y: The target representation.
    :return: A list of :class:`Morphism` objects.
    """
    system = intertwining_matrix(x, y)
    return [
        Morphism.from_vector(x, y, vector, check=False) for vector in system.nullspace()
    ]


def hom_dim(x: Representation, y: Representation) -> int:
    """
    The dimension :math:`[X, Y]` of :math:`\\mathrm{Hom}(X, Y)`.
    """
    system = intertwining_matrix(x, y)
    return system.ncols - system.rank()


def representation_ext_dim(x: Representation, y: Representation) -> int:
    """
    :math:`\\dim \\mathrm{Ext}^1(X, Y) = [X, Y] - \\langle \\dim X, \\dim Y \\rangle`.
    """
    result = hom_dim(x, y) - euler_form(x.quiver, x.dim, y.dim)
    if result < 0:
        raise InconsistencyError(f"Negative Ext dimension {result}.")
    return result


def combine(
    basis: Sequence[Morphism], coefficients: Sequence[Rational]
) -> Morphism:
    """
    A linear combination of morphisms with common source and target.
    """
    if not basis:
        raise ValueError("Argument 'basis' must not be empty.")
    result = Morphism.zero(basis[0].source, basis[0].target)
    for morphism, coefficient in zip(basis, coefficients):
        if coefficient:
            result = result + morphism.scale(coefficient)
    return result


def direct_sum(
    xs: Sequence[Representation], quiver: Optional[Quiver] = None
) -> Representation:
    """
    The direct sum :math:`X_1 \\oplus \\cdots \\oplus X_r`.

    :param xs: Representations over one quiver.
    :param quiver: Needed only when :code:`xs` is empty.
    :return: A :class:`Representation` with block diagonal arrow matrices.
    """
    if not xs:
        if quiver is None:
            raise ValueError("Argument 'quiver' is required for an empty sum.")
        return Representation.zero(quiver)
    _check_same_quiver(*xs)
    if len(xs) == 1:
        return xs[0]
    quiver = xs[0].quiver
    dim = [sum(x.dim[i] for x in xs) for i in range(len(quiver.vertices))]
    matrices = {
        arrow.id: Matrix.block_diagonal([x.matrices[arrow.id] for x in xs])
        for arrow in quiver.arrows
    }
    return Representation(quiver, dim, matrices)


def inclusion(xs: Sequence[Representation], k: int) -> Morphism:
    """
    The canonical inclusion :math:`X_k \\to X_1 \\oplus \\cdots \\oplus X_r`.
    """
    total = direct_sum(xs)
    maps = []
    for i in range(len(total.quiver.vertices)):
        blocks = [
            (
                Matrix.identity(x.dim[i])
                if j == k
                else Matrix.zeros(x.dim[i], xs[k].dim[i])
            )
            for j, x in enumerate(xs)
        ]
        maps.append(Matrix.vstack(blocks, ncols=xs[k].dim[i]))
    return Morphism(xs[k], total, maps, check=False)


def projection(xs: Sequence[Representation], k: int) -> Morphism:
    """
    The canonical projection :math:`X_1 \\oplus \\cdots \\oplus X_r \\to X_k`.
    """
    total = direct_sum(xs)
    maps = []
    for i in range(len(total.quiver.vertices)):
        blocks = [
            (
                Matrix.identity(x.dim[i])
                if j == k
                else Matrix.zeros(xs[k].dim[i], x.dim[i])
            )
            for j, x in enumerate(xs)
        ]
        maps.append(Matrix.hstack(blocks, nrows=xs[k].dim[i]))
    return Morphism(total, xs[k], maps, check=False)


def _columns(vectors: List[List[Fraction]], length: int) -> Matrix:
    if not vectors:
        return Matrix.zeros(length, 0)
    return Matrix(vectors).transpose()


def kernel(f: Morphism) -> Tuple[Representation, Morphism]:
    """
    The kernel of a homomorphism with its inclusion.

    :param f: A :class:`Morphism` :math:`X \\to Y`.
    :return: The pair :math:`(K, K \\hookrightarrow X)`.
    """
    x = f.source
    quiver = x.quiver
    bases = [
        _columns(f.maps[i].nullspace(), x.dim[i]) for i in range(len(quiver.vertices))
    ]
    matrices = {}
    for arrow in quiver.arrows:
        s = quiver.index(arrow.source)
        e = quiver.index(arrow.target)
        image = x.matrices[arrow.id] @ bases[s]
        matrices[arrow.id] = bases[e].left_inverse() @ image
    k = Representation(quiver, [b.ncols for b in bases], matrices)
    return k, Morphism(k, x, bases)


def cokernel(f: Morphism) -> Tuple[Representation, Morphism]:
    """
    The cokernel of a homomorphism with its projection.

    :param f: A :class:`Morphism` :math:`X \\to Y`.
    :return: The pair :math:`(C, Y \\twoheadrightarrow C)`.
    """
    y = f.target
    quiver = y.quiver
    quotients = []
    for i in range(len(quiver.vertices)):
        rows = f.maps[i].left_nullspace()
        quotients.append(Matrix(rows, ncols=y.dim[i]))
    matrices = {}
    for arrow in quiver.arrows:
        s = quiver.index(arrow.source)
        e = quiver.index(arrow.target)
        lift = quotients[s].right_inverse()
        matrices[arrow.id] = quotients[e] @ y.matrices[arrow.id] @ lift
    c = Representation(quiver, [q.nrows for q in quotients], matrices)
    return c, Morphism(y, c, quotients)


class ModuleSpec:
    """
    A module over a Dynkin quiver up to isomorphism.

    Stored as the multiplicity :math:`\\mu(L, Y)` of every indecomposable
    :math:`Y`, indexed by the order of
    :func:`~quiverdeg.representations.quiver.positive_roots`.
    """

    def __init__(
        self,
        quiver: Quiver,
        multiplicities: Union[Sequence[int], Mapping[int, int]],
    ):
        """
        :param quiver: A Dynkin quiver.
        :param multiplicities: Either one natural number per positive root or
                               a sparse map from root index to multiplicity.
        """
        roots = positive_roots(quiver)
        if isinstance(multiplicities, Mapping):
            values = [0] * len(roots)
            for index, value in multiplicities.items():
                if not 0 <= index < len(roots):
                    raise ValueError(
                        f"Argument 'multiplicities' has root index {index} "
                        f"outside 0..{len(roots) - 1}."
                    )
                values[index] = value
        else:
            values = list(multiplicities)
            if len(values) != len(roots):
                raise QuiverMismatchError(
                    f"Argument 'multiplicities' must have {len(roots)} elements, "
                    f"not {len(values)}."
                )
        for value in values:
            if isinstance(value, bool) or not isinstance(value, int):
                raise TypeError(
                    f"Argument 'multiplicities' must contain 'int' values, "
                    f"not '{value.__class__.__name__}'."
                )
            if value < 0:
                raise ValueError(
                    f"Argument 'multiplicities' must be nonnegative, not {value}."
                )
        self.quiver: Quiver = quiver
        self.multiplicities: Tuple[int, ...] = tuple(values)

    def __repr__(self) -> str:
        return f"ModuleSpec({list(self.multiplicities)})"

    def __str__(self) -> str:
        roots = positive_roots(self.quiver)
        parts = []
        for root, mu in zip(roots, self.multiplicities):
            if mu:
                label = "(" + ",".join(str(d) for d in root) + ")"
                parts.append(label if mu == 1 else f"{label}^{mu}")
        return " + ".join(parts) if parts else "0"

    def __eq__(self, other: object) -> bool:
        if isinstance(other, ModuleSpec):
            return (
                self.quiver == other.quiver
                and self.multiplicities == other.multiplicities
            )
        else:
            return NotImplemented

    def __hash__(self) -> int:
        return hash((self.quiver, self.multiplicities))

    def __lt__(self, other: "ModuleSpec") -> bool:
        if isinstance(other, ModuleSpec):
            return self.multiplicities < other.multiplicities
        else:
            raise ValueError("You can only compare ModuleSpec objects with each other.")

    def __getitem__(self, index: int) -> int:
        return self.multiplicities[index]

    def __len__(self) -> int:
        return len(self.multiplicities)

    def __iter__(self) -> Iterator[int]:
        return iter(self.multiplicities)

    def _check(self, other: "ModuleSpec") -> None:
        if not isinstance(other, ModuleSpec):
            raise TypeError(f"Cannot accept '{other.__class__.__name__}' type.")
        if self.quiver != other.quiver:
            raise QuiverMismatchError("Modules live over different quivers.")

    def __add__(self, other: "ModuleSpec") -> "ModuleSpec":
        self._check(other)
        return ModuleSpec(
            self.quiver,
            [a + b for a, b in zip(self.multiplicities, other.multiplicities)],
        )

    def __sub__(self, other: "ModuleSpec") -> "ModuleSpec":
        self._check(other)
        values = [a - b for a, b in zip(self.multiplicities, other.multiplicities)]
        if any(v < 0 for v in values):
            raise ValueError(f"{other!r} is not a direct summand of {self!r}.")
        return ModuleSpec(self.quiver, values)

    def scale(self, factor: int) -> "ModuleSpec":
        return ModuleSpec(self.quiver, [factor * a for a in self.multiplicities])

    def minimum(self, other: "ModuleSpec") -> "ModuleSpec":
        """
        The maximal common direct summand.
        """
        self._check(other)
        return ModuleSpec(
            self.quiver,
            [min(a, b) for a, b in zip(self.multiplicities, other.multiplicities)],
        )

    def contains(self, other: "ModuleSpec") -> bool:
        self._check(other)
        return all(a >= b for a, b in zip(self.multiplicities, other.multiplicities))

    def is_disjoint(self, other: "ModuleSpec") -> bool:
        """
        :return: :code:`True` iff the modules share no indecomposable summand.
        """
        return self.minimum(other).is_zero()

    def is_zero(self) -> bool:
        return not any(self.multiplicities)

    def support(self) -> List[int]:
        return [i for i, mu in enumerate(self.multiplicities) if mu]

    def summands(self) -> List["ModuleSpec"]:
        """
        Indecomposable summands with multiplicity, in root order.
        """
        return [
            ModuleSpec.indecomposable(self.quiver, i)
            for i, mu in enumerate(self.multiplicities)
            for _ in range(mu)
        ]

    @property
    def summand_count(self) -> int:
        """
        The number :math:`s(L)` of indecomposable summands.
        """
        return sum(self.multiplicities)

    @property
    def dim(self) -> DimVector:
        roots = positive_roots(self.quiver)
        total = [0] * len(self.quiver.vertices)
        for root, mu in zip(roots, self.multiplicities):
            for i, d in enumerate(root):
                total[i] += mu * d
        return tuple(total)

    @property
    def total_dim(self) -> int:
        return sum(self.dim)

    def is_indecomposable(self) -> bool:
        return self.summand_count == 1

    def index(self) -> int:
        """
        Root index of an indecomposable module.
        """
        if not self.is_indecomposable():
            raise ValueError(f"{self!r} is not indecomposable.")
        return self.support()[0]

    @classmethod
    def zero(cls, quiver: Quiver) -> "ModuleSpec":
        return cls(quiver, [0] * len(positive_roots(quiver)))

    @classmethod
    def indecomposable(cls, quiver: Quiver, index: int) -> "ModuleSpec":
        return cls(quiver, {index: 1})

    @classmethod
    def of_root(cls, quiver: Quiver, root: Sequence[int]) -> "ModuleSpec":
        """
        The indecomposable module with a given dimension vector.
        """
        roots = positive_roots(quiver)
        try:
            return cls.indecomposable(quiver, roots.index(tuple(root)))
        except ValueError:
            raise ValueError(f"{tuple(root)} is not a positive root.") from None
