"""Extensions

Normalized cocycles, coboundaries, short exact sequences with explicit
maps, pushouts and pullbacks, the invariants :math:`\\delta_\\sigma` and
:math:`\\delta'_\\sigma`, and the subspace :math:`\\mathcal{E}_{M,N}` of
:math:`\\mathrm{Ext}^1` behind the generic regularity criterion.

A cocycle :math:`Z \\in \\mathbb{Z}^1(V, U)` is stored by its arrow
components :math:`Z_\\alpha: V_{s(\\alpha)} \\to U_{e(\\alpha)}`; its
coordinate vector concatenates the components in arrow order, each
row-major.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

from quiverdeg.common import Matrix, Rational, complete_basis, span_contains
from quiverdeg.degenerations.order import (
    delta,
    delta_prime,
    is_degeneration,
)
from quiverdeg.errors import InconsistencyError, QuiverError, QuiverMismatchError
from quiverdeg.representations.catalog import (
    catalog,
    decompose,
    find_isomorphism,
    realize,
)
from quiverdeg.representations.quiver import Quiver
from quiverdeg.representations.representation import (
    ModuleSpec,
    Morphism,
    Representation,
    direct_sum,
    hom_space,
    inclusion,
    intertwining_matrix,
    representation_ext_dim,
)
from quiverdeg.serialization import (
    morphism_maps_from_json,
    morphism_maps_to_json,
    representation_from_dict,
    representation_to_dict,
)

__all__: List[str] = [
    "Cocycle",
    "GenCriterion",
    "ShortExactSequence",
    "calE_dim",
    "coboundary_space",
    "cocycle_of",
    "cocycle_space",
    "delta_prime_sigma",
    "delta_sigma",
    "ext_quotient",
    "f_sets",
    "gencriterion",
    "in_calE",
    "is_coboundary",
    "pullback",
    "pullback_square",
    "pushout",
    "pushout_square",
    "sequence_of",
    "split_off",
    "splits",
    "standcriterion",
    "umv_degeneration",
]

logger = logging.getLogger(__name__)


class Cocycle:
    """
    A normalized cocycle :math:`Z \\in \\mathbb{Z}^1(V, U)`.
    """

    def __init__(
        self,
        v: Representation,
        u: Representation,
        components: Optional[Mapping[str, Matrix]] = None,
    ):
        """
        :param v: The representation :math:`V`, the quotient of the extension.
        :param u: The representation :math:`U`, the submodule of the extension.
        :param components: Map from arrow id to a matrix of shape
                           :math:`\\dim U_{e(\\alpha)} \\times \\dim V_{s(\\alpha)}`.
                           Arrows left out have zero component.
        """
        if v.quiver != u.quiver:
            raise QuiverMismatchError("Representations live over different quivers.")
        quiver = v.quiver
        components = dict(components or {})
        converted: Dict[str, Matrix] = {}
        for arrow in quiver.arrows:
            shape = (
                u.dim[quiver.index(arrow.target)],
                v.dim[quiver.index(arrow.source)],
            )
            matrix = components.get(arrow.id, Matrix.zeros(*shape))
            if matrix.shape != shape:
                raise ValueError(
                    f"Component at {arrow.id!r} must be {shape[0]}x{shape[1]}, "
                    f"not {matrix.nrows}x{matrix.ncols}."
                )
            converted[arrow.id] = matrix
        self.v: Representation = v
        self.u: Representation = u
        self.components: Dict[str, Matrix] = converted

    def __repr__(self) -> str:
        return f"Cocycle(v={self.v!r}, u={self.u!r})"

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Cocycle):
            return (
                self.v == other.v
                and self.u == other.u
                and self.components == other.components
            )
        else:
            return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(self.components.values()))

    def vector(self) -> List[Fraction]:
        return [
            entry
            for arrow in self.v.quiver.arrows
            for entry in self.components[arrow.id].vector()
        ]

    def is_zero(self) -> bool:
        return all(matrix.is_zero() for matrix in self.components.values())

    @classmethod
    def from_vector(
        cls, v: Representation, u: Representation, vector: Sequence[Rational]
    ) -> "Cocycle":
        quiver = v.quiver
        components = {}
        offset = 0
        for arrow in quiver.arrows:
            rows = u.dim[quiver.index(arrow.target)]
            cols = v.dim[quiver.index(arrow.source)]
            components[arrow.id] = Matrix.from_vector(
                vector[offset : offset + rows * cols], rows, cols
            )
            offset += rows * cols
        if offset != len(vector):
            raise ValueError(f"Argument 'vector' must have {offset} elements.")
        return cls(v, u, components)

    def pushforward(self, f: Morphism) -> "Cocycle":
        """
        The cocycle :math:`f Z` of the pushout along :math:`f: U \\to X`.
        """
        quiver = self.v.quiver
        return Cocycle(
            self.v,
            f.target,
            {
                arrow.id: f.maps[quiver.index(arrow.target)] @ self.components[arrow.id]
                for arrow in quiver.arrows
            },
        )

    def pullback(self, g: Morphism) -> "Cocycle":
        """
        The cocycle :math:`Z g` of the pullback along :math:`g: Y \\to V`.
        """
        quiver = self.v.quiver
        return Cocycle(
            g.source,
            self.u,
            {
                arrow.id: self.components[arrow.id] @ g.maps[quiver.index(arrow.source)]
                for arrow in quiver.arrows
            },
        )


def _cocycle_length(v: Representation, u: Representation) -> int:
    quiver = v.quiver
    return sum(
        u.dim[quiver.index(a.target)] * v.dim[quiver.index(a.source)]
        for a in quiver.arrows
    )


def cocycle_space(v: Representation, u: Representation) -> List[Cocycle]:
    """
    A basis of the cocycles :math:`\\mathbb{Z}^1(V, U)`, the sum over arrows
    of :math:`\\mathrm{Hom}_k(V_{s(\\alpha)}, U_{e(\\alpha)})`.

    :param v: The representation :math:`V`.
    :param u: The representation :math:`U`.
    :return: The unit cocycles, in coordinate order.
    """
    length = _cocycle_length(v, u)
    return [
        Cocycle.from_vector(v, u, [1 if j == i else 0 for j in range(length)])
        for i in range(length)
    ]


def _coboundary_vectors(v: Representation, u: Representation) -> List[List[Fraction]]:
    system = intertwining_matrix(v, u)
    columns = system.transpose()
    return [list(columns.rows[p]) for p in system.pivot_columns()]


def coboundary_space(v: Representation, u: Representation) -> List[Cocycle]:
    """
    A basis of :math:`\\mathbb{B}^1(V, U) = \\{ hV - Uh \\}`.

    :param v: The representation :math:`V`.
    :param u: The representation :math:`U`.
    :return: A list of :class:`Cocycle` objects.
    """
    return [Cocycle.from_vector(v, u, vector) for vector in _coboundary_vectors(v, u)]


def is_coboundary(z: Cocycle) -> bool:
    return span_contains(_coboundary_vectors(z.v, z.u), z.vector())


def ext_quotient(v: Representation, u: Representation) -> Tuple[int, List[Cocycle]]:
    """
    :math:`\\mathrm{Ext}^1(V, U)` as cocycles modulo coboundaries.

    :param v: The representation :math:`V`.
    :param u: The representation :math:`U`.
    :return: The dimension and unit cocycles completing a basis of the
             coboundaries to one of all cocycles.
    :raises InconsistencyError: if the dimension disagrees with the Euler form.
    """
    coboundaries = _coboundary_vectors(v, u)
    representatives = complete_basis(coboundaries, _cocycle_length(v, u))
    expected = representation_ext_dim(v, u)
    if len(representatives) != expected:
        raise InconsistencyError(
            f"Cocycle quotient has dimension {len(representatives)}, "
            f"Euler form gives {expected}."
        )
    return expected, [Cocycle.from_vector(v, u, r) for r in representatives]


class ShortExactSequence:
    """
    An exact sequence :math:`0 \\to U \\to W \\to V \\to 0` with explicit maps.

    Exactness is verified on construction.
    """

    def __init__(self, inj: Morphism, surj: Morphism):
        """
        :param inj: The injection :math:`U \\to W`.
        :param surj: The surjection :math:`W \\to V`.
        :raises InconsistencyError: if the sequence is not exact.
        """
        if inj.target != surj.source:
            raise InconsistencyError("Maps of the sequence are not composable.")
        if not inj.is_injective():
            raise InconsistencyError("Left map of the sequence is not injective.")
        if not surj.is_surjective():
            raise InconsistencyError("Right map of the sequence is not surjective.")
        if not (surj @ inj).is_zero():
            raise InconsistencyError("Maps of the sequence do not compose to zero.")
        for a, b, w in zip(inj.maps, surj.maps, inj.target.dim):
            if a.rank() + b.rank() != w:
                raise InconsistencyError("Sequence is not exact in the middle.")
        self.inj: Morphism = inj
        self.surj: Morphism = surj
        self._specs: Optional[Tuple[ModuleSpec, ModuleSpec, ModuleSpec]] = None

    @property
    def left(self) -> Representation:
        return self.inj.source

    @property
    def middle(self) -> Representation:
        return self.inj.target

    @property
    def right(self) -> Representation:
        return self.surj.target

    def __repr__(self) -> str:
        return (
            f"ShortExactSequence(left={self.left.dim}, middle={self.middle.dim}, "
            f"right={self.right.dim})"
        )

    def specs(self) -> Tuple[ModuleSpec, ModuleSpec, ModuleSpec]:
        """
        Decompositions of left, middle and right term.
        """
        if self._specs is None:
            self._specs = (
                decompose(self.left),
                decompose(self.middle),
                decompose(self.right),
            )
        return self._specs

    def to_dict(self) -> Dict[str, Any]:
        """
        The three terms and both maps, with :code:`"p/q"` entries.
        """
        return {
            "left": representation_to_dict(self.left),
            "middle": representation_to_dict(self.middle),
            "right": representation_to_dict(self.right),
            "inj": morphism_maps_to_json(self.inj),
            "surj": morphism_maps_to_json(self.surj),
        }

    @classmethod
    def from_dict(cls, quiver: Quiver, data: Any) -> "ShortExactSequence":
        """
        Rebuild a sequence from :meth:`to_dict` output; exactness is checked
        again.

        :raises QuiverError: on malformed data.
        :raises InconsistencyError: if the maps do not form an exact sequence.
        """
        if not isinstance(data, Mapping):
            raise QuiverError(
                f"Sequence document must be an object, "
                f"not '{data.__class__.__name__}'."
            )
        try:
            left = representation_from_dict(quiver, data["left"])
            middle = representation_from_dict(quiver, data["middle"])
            right = representation_from_dict(quiver, data["right"])
            inj = morphism_maps_from_json(left, middle, data["inj"])
            surj = morphism_maps_from_json(middle, right, data["surj"])
        except KeyError as error:
            raise QuiverError(f"Sequence document misses {error}.") from None
        return cls(inj, surj)


def sequence_of(z: Cocycle) -> ShortExactSequence:
    """
    The extension :math:`0 \\to U \\to W_Z \\to V \\to 0` of a cocycle.

    :math:`W_Z` has vertex spaces :math:`U_i \\oplus V_i` and arrow matrices
    :math:`\\begin{pmatrix} U_\\alpha & Z_\\alpha \\\\ 0 & V_\\alpha \\end{pmatrix}`.
    """
    u, v = z.u, z.v
    quiver = u.quiver
    matrices = {}
    for arrow in quiver.arrows:
        s = quiver.index(arrow.source)
        e = quiver.index(arrow.target)
        top = Matrix.hstack(
            [u.matrices[arrow.id], z.components[arrow.id]], nrows=u.dim[e]
        )
        bottom = Matrix.hstack(
            [Matrix.zeros(v.dim[e], u.dim[s]), v.matrices[arrow.id]], nrows=v.dim[e]
        )
        matrices[arrow.id] = Matrix.vstack([top, bottom], ncols=u.dim[s] + v.dim[s])
    middle = Representation(
        quiver, [a + b for a, b in zip(u.dim, v.dim)], matrices
    )
    inj = Morphism(
        u,
        middle,
        [
            Matrix.vstack([Matrix.identity(a), Matrix.zeros(b, a)], ncols=a)
            for a, b in zip(u.dim, v.dim)
        ],
    )
    surj = Morphism(
        middle,
        v,
        [
            Matrix.hstack([Matrix.zeros(b, a), Matrix.identity(b)], nrows=b)
            for a, b in zip(u.dim, v.dim)
        ],
    )
    return ShortExactSequence(inj, surj)


def cocycle_of(s: ShortExactSequence) -> Tuple[Cocycle, Morphism]:
    """
    Put a short exact sequence in cocycle form.

    At every vertex the injection is completed by a section of the
    surjection to a basis :math:`T_i = [\\iota_i \\mid \\sigma_i]` of the
    middle term. The cocycle is the upper right block of
    :math:`T_{e(\\alpha)}^{-1} W_\\alpha T_{s(\\alpha)}`.

    :param s: A :class:`ShortExactSequence`.
    :return: The cocycle :math:`Z` and the isomorphism :math:`W \\to W_Z`
             compatible with both maps of the sequences.
    """
    u, w, v = s.left, s.middle, s.right
    quiver = w.quiver
    bases = []
    for i in range(len(quiver.vertices)):
        section = s.surj.maps[i].right_inverse()
        bases.append(Matrix.hstack([s.inj.maps[i], section], nrows=w.dim[i]))
    inverses = [basis.inverse() for basis in bases]
    components = {}
    for arrow in quiver.arrows:
        si = quiver.index(arrow.source)
        ei = quiver.index(arrow.target)
        block = inverses[ei] @ w.matrices[arrow.id] @ bases[si]
        components[arrow.id] = block.submatrix(0, u.dim[ei], u.dim[si], block.ncols)
    z = Cocycle(v, u, components)
    standard = sequence_of(z)
    isomorphism = Morphism(w, standard.middle, inverses)
    return z, isomorphism


def splits(s: ShortExactSequence) -> bool:
    """
    Whether :math:`W \\simeq U \\oplus V`.
    """
    left, middle, right = s.specs()
    return middle == left + right


def umv_degeneration(s: ShortExactSequence) -> bool:
    """
    Whether :math:`U \\oplus V` is a degeneration of :math:`W`; true for every
    exact sequence.
    """
    left, middle, right = s.specs()
    return is_degeneration(middle, left + right)


def delta_sigma(s: ShortExactSequence, x: ModuleSpec) -> int:
    """
    :math:`\\delta_\\sigma(X) = [U \\oplus V, X] - [W, X]`.

    :raises InconsistencyError: if the value is negative.
    """
    left, middle, right = s.specs()
    table = catalog(middle.quiver)
    value = table.hom(left + right, x) - table.hom(middle, x)
    if value < 0:
        raise InconsistencyError(f"delta_sigma({x}) = {value} is negative.")
    return value


def delta_prime_sigma(s: ShortExactSequence, x: ModuleSpec) -> int:
    """
    :math:`\\delta'_\\sigma(X) = [X, U \\oplus V] - [X, W]`.

    :raises InconsistencyError: if the value is negative.
    """
    left, middle, right = s.specs()
    table = catalog(middle.quiver)
    value = table.hom(x, left + right) - table.hom(x, middle)
    if value < 0:
        raise InconsistencyError(f"delta_prime_sigma({x}) = {value} is negative.")
    return value


def _block_diagonal_morphism(
    source: Representation,
    target: Representation,
    first: Sequence[Matrix],
    second: Sequence[Matrix],
) -> Morphism:
    return Morphism(
        source,
        target,
        [Matrix.block_diagonal([a, b]) for a, b in zip(first, second)],
    )


def pushout_square(
    s: ShortExactSequence, f: Morphism
) -> Tuple[ShortExactSequence, Morphism]:
    """
    The pushout of a sequence along :math:`f: U \\to X`.

    :param s: The sequence :math:`0 \\to U \\to W \\to V \\to 0`.
    :param f: A morphism out of :code:`s.left`.
    :return: The sequence :math:`0 \\to X \\to W' \\to V \\to 0` and the
             morphism :math:`W \\to W'` completing the square.
    """
    if f.source != s.left:
        raise ValueError("Argument 'f' must start at the left term of the sequence.")
    z, isomorphism = cocycle_of(s)
    image = sequence_of(z.pushforward(f))
    identity = [Matrix.identity(d) for d in s.right.dim]
    to_image = _block_diagonal_morphism(
        isomorphism.target, image.middle, f.maps, identity
    )
    return image, to_image @ isomorphism


def pushout(s: ShortExactSequence, f: Morphism) -> ShortExactSequence:
    return pushout_square(s, f)[0]


def pullback_square(
    s: ShortExactSequence, g: Morphism
) -> Tuple[ShortExactSequence, Morphism]:
    """
    The pullback of a sequence along :math:`g: Y \\to V`.

    :param s: The sequence :math:`0 \\to U \\to W \\to V \\to 0`.
    :param g: A morphism into :code:`s.right`.
    :return: The sequence :math:`0 \\to U \\to W'' \\to Y \\to 0` and the
             morphism :math:`W'' \\to W` completing the square.
    """
    if g.target != s.right:
        raise ValueError("Argument 'g' must end at the right term of the sequence.")
    z, isomorphism = cocycle_of(s)
    image = sequence_of(z.pullback(g))
    identity = [Matrix.identity(d) for d in s.left.dim]
    to_standard = _block_diagonal_morphism(
        image.middle, isomorphism.target, identity, g.maps
    )
    return image, isomorphism.inverse() @ to_standard


def pullback(s: ShortExactSequence, g: Morphism) -> ShortExactSequence:
    return pullback_square(s, g)[0]


def split_off(s: ShortExactSequence, v1: ModuleSpec) -> ShortExactSequence:
    """
    Remove a summand :math:`V_1` of the right term with
    :math:`\\delta'_\\sigma(V_1) = 0`.

    The sequence is pulled back along :math:`V_2 \\to V` for a complement
    :math:`V = V_1 \\oplus V_2`; the middle term then loses exactly the
    summand :math:`V_1`.

    :param s: A sequence :math:`0 \\to U \\to W \\to V_1 \\oplus V_2 \\to 0`.
    :param v1: The summand to remove.
    :return: A sequence :math:`0 \\to U \\to W_2 \\to V_2 \\to 0` with
             :math:`W \\simeq V_1 \\oplus W_2`.
    :raises ValueError: if :math:`V_1` is not a summand or
                        :math:`\\delta'_\\sigma(V_1) \\neq 0`.
    """
    left, middle, right = s.specs()
    if not right.contains(v1):
        raise ValueError(f"{v1} is not a direct summand of the right term.")
    if delta_prime_sigma(s, v1) != 0:
        raise ValueError(f"delta_prime_sigma({v1}) must vanish to split it off.")
    if v1.is_zero():
        return s
    v2 = right - v1
    parts = [realize(v1), realize(v2)]
    isomorphism = find_isomorphism(direct_sum(parts), s.right)
    if isomorphism is None:
        raise InconsistencyError("Right term is not isomorphic to its decomposition.")
    reduced = pullback(s, isomorphism @ inclusion(parts, 1))
    if middle != v1 + reduced.specs()[1]:
        raise InconsistencyError(f"Splitting off {v1} changed the middle term.")
    return reduced


def f_sets(m: ModuleSpec, n: ModuleSpec) -> Tuple[List[ModuleSpec], List[ModuleSpec]]:
    """
    The indecomposables :math:`X` with :math:`\\delta_{M,N}(X) = 0` and those
    with :math:`\\delta'_{M,N}(X) = 0`.

    :param m: The module :math:`M`.
    :param n: A degeneration :math:`N` of :math:`M`.
    :return: The lists :math:`\\mathcal{F}_{M,N}` and :math:`\\mathcal{F}'_{M,N}`.
    """
    indecomposables = [ModuleSpec.indecomposable(m.quiver, i) for i in range(len(m))]
    return (
        [x for x in indecomposables if delta(m, n, x) == 0],
        [y for y in indecomposables if delta_prime(m, n, y) == 0],
    )


def _annihilator(v: Representation, u: Representation) -> Matrix:
    """
    Rows spanning the linear forms that vanish on :math:`\\mathbb{B}^1(V, U)`.
    """
    system = intertwining_matrix(v, u)
    return Matrix(system.left_nullspace(), ncols=system.nrows)


def _calE_constraints(
    m: ModuleSpec,
    n: ModuleSpec,
    v: Representation,
    u: Representation,
    representatives: Sequence[Cocycle],
) -> List[List[Fraction]]:
    """
    Linear conditions on coefficients :math:`c` so that
    :math:`\\sum_k c_k Z_k` lies in :math:`\\mathcal{E}_{M,N}(V, U)`.
    """
    rows: List[List[Fraction]] = []
    table = catalog(m.quiver)
    f_set, f_prime_set = f_sets(m, n)
    for x in f_set:
        target = table.indecomposables[x.index()]
        maps = hom_space(u, target)
        if not maps:
            continue
        annihilator = _annihilator(v, target)
        for f in maps:
            images = [
                annihilator @ Matrix([z.pushforward(f).vector()]).transpose()
                for z in representatives
            ]
            for r in range(annihilator.nrows):
                rows.append([image[r, 0] for image in images])
    for y in f_prime_set:
        source = table.indecomposables[y.index()]
        maps = hom_space(source, v)
        if not maps:
            continue
        annihilator = _annihilator(source, u)
        for g in maps:
            images = [
                annihilator @ Matrix([z.pullback(g).vector()]).transpose()
                for z in representatives
            ]
            for r in range(annihilator.nrows):
                rows.append([image[r, 0] for image in images])
    return rows


def calE_dim(
    m: ModuleSpec, n: ModuleSpec, v: ModuleSpec, u: ModuleSpec
) -> Tuple[int, List[Cocycle]]:
    """
    Dimension of :math:`\\mathcal{E}_{M,N}(V, U) \\subseteq \\mathrm{Ext}^1(V, U)`.

    The subspace is the intersection of the kernels of
    :math:`\\mathrm{Ext}^1(V, f)` for :math:`f: U \\to X`,
    :math:`X \\in \\mathcal{F}_{M,N}`
    and of :math:`\\mathrm{Ext}^1(g, U)` for :math:`g: Y \\to V`,
    :math:`Y \\in \\mathcal{F}'_{M,N}`.

    :param m: The module :math:`M`.
    :param n: A degeneration :math:`N` of :math:`M`.
    :param v: The module :math:`V`.
    :param u: The module :math:`U`.
    :return: The dimension and cocycles representing a basis.
    """
    vv, uu = realize(v), realize(u)
    dimension, representatives = ext_quotient(vv, uu)
    if not dimension:
        return 0, []
    rows = _calE_constraints(m, n, vv, uu, representatives)
    if rows:
        solutions = Matrix(rows, ncols=dimension).nullspace()
    else:
        solutions = [
            [Fraction(1 if j == i else 0) for j in range(dimension)]
            for i in range(dimension)
        ]
    basis = []
    for coefficients in solutions:
        total = [Fraction(0)] * len(representatives[0].vector())
        for c, z in zip(coefficients, representatives):
            if c:
                total = [t + c * e for t, e in zip(total, z.vector())]
        basis.append(Cocycle.from_vector(vv, uu, total))
    logger.debug("dim E(%s, %s) = %d for %s ~> %s", v, u, len(basis), m, n)
    return len(basis), basis


def in_calE(m: ModuleSpec, n: ModuleSpec, z: Cocycle) -> bool:
    """
    Whether the class of a cocycle lies in :math:`\\mathcal{E}_{M,N}(V, U)`.
    """
    return not any(any(row) for row in _calE_constraints(m, n, z.v, z.u, [z]))


@dataclass(frozen=True)
class GenCriterion:
    """
    Outcome of the generic criterion for a degeneration pair.
    """

    e_dim: int
    codim: int
    regular_certified: bool


def gencriterion(m: ModuleSpec, n: ModuleSpec) -> GenCriterion:
    """
    Compare :math:`\\dim \\mathcal{E}_{M,N}(N, N)` with :math:`[N, N] - [M, M]`.

    The dimension is never smaller than the codimension, and equality
    certifies that :math:`\\mathcal{O}_M` is regular along :math:`\\mathcal{O}_N`.

    :raises InconsistencyError: if the dimension is below the codimension.
    """
    table = catalog(m.quiver)
    codimension = table.hom(n, n) - table.hom(m, m)
    e_dim, _ = calE_dim(m, n, n, n)
    if e_dim < codimension:
        raise InconsistencyError(
            f"dim E(N, N) = {e_dim} is below the codimension {codimension}."
        )
    return GenCriterion(e_dim, codimension, e_dim == codimension)


def standcriterion(m: ModuleSpec, n: ModuleSpec, s: ShortExactSequence) -> bool:
    """
    The standard criterion for regularity.

    Holds for a sequence :math:`0 \\to Z \\to Z \\oplus M \\to N \\to 0` with
    :math:`\\delta'_{M,N}(Z \\oplus M) = 0`, or for a sequence
    :math:`0 \\to N \\to M \\oplus Z' \\to Z' \\to 0` with
    :math:`\\delta_{M,N}(M \\oplus Z') = 0`.

    :param m: The module :math:`M`.
    :param n: A degeneration :math:`N` of :math:`M`.
    :param s: A sequence of either shape.
    :return: :code:`True` iff the sequence has one of the shapes and the
             matching invariant vanishes.
    """
    left, middle, right = s.specs()
    if right == n and middle == left + m:
        return delta_prime(m, n, middle) == 0
    if left == n and middle == m + right:
        return delta(m, n, middle) == 0
    return False
