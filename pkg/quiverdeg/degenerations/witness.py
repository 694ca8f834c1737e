"""Witness Search

Explicit exact sequences :math:`0 \\to Z \\to Z \\oplus M \\to N \\to 0` and
:math:`0 \\to N \\to M \\oplus Z' \\to Z' \\to 0` with radical maps, which
exhibit :math:`N` as a degeneration of :math:`M`.

Searches are bounded and seeded. Running out of budget is reported as
:code:`None` and never means that no witness exists.
"""

import logging
import random
from typing import Iterator, List, Optional, Sequence, Tuple

from quiverdeg.common import Rational
from quiverdeg.degenerations.order import is_degeneration, split_common
from quiverdeg.errors import NotADegenerationError
from quiverdeg.representations.catalog import catalog, decompose, in_radical
from quiverdeg.representations.quiver import Quiver, positive_roots
from quiverdeg.representations.representation import (
    ModuleSpec,
    Morphism,
    Representation,
    cokernel,
    combine,
    direct_sum,
    hom_space,
    inclusion,
    kernel,
    projection,
)

__all__: List[str] = [
    "DualZWitness",
    "WitnessSearch",
    "ZWitness",
    "find_dual_zwitness",
    "find_zwitness",
    "search_epimorphism",
    "search_monomorphism",
]

logger = logging.getLogger(__name__)


def _candidates(
    basis: Sequence[Morphism], rng: random.Random, trials: int
) -> Iterator[Morphism]:
    """
    Basis elements first, then random integer combinations with
    coefficients in :math:`[-3, 3]`.
    """
    yield from basis
    if len(basis) < 2:
        return
    for _ in range(trials):
        coefficients: List[Rational] = [rng.randint(-3, 3) for _ in basis]
        if any(coefficients):
            yield combine(basis, coefficients)


def search_monomorphism(
    u: Representation,
    target: Representation,
    quotient: ModuleSpec,
    rng: random.Random,
    trials: int,
) -> Optional[Morphism]:
    """
    An injection :math:`U \\to W` whose cokernel decomposes as :code:`quotient`.

    :param u: The representation :math:`U`.
    :param target: The representation :math:`W`.
    :param quotient: The wanted cokernel.
    :param rng: Random source.
    :param trials: Number of random combinations after the basis sweep.
    :return: A :class:`Morphism`, or :code:`None` when the budget runs out.
    """
    if quotient.dim != tuple(w - a for w, a in zip(target.dim, u.dim)):
        return None
    if u.is_zero():
        return Morphism.zero(u, target) if decompose(target) == quotient else None
    for f in _candidates(hom_space(u, target), rng, trials):
        if f.is_injective() and decompose(cokernel(f)[0]) == quotient:
            return f
    return None


def search_epimorphism(
    source: Representation,
    v: Representation,
    sub: ModuleSpec,
    rng: random.Random,
    trials: int,
) -> Optional[Morphism]:
    """
    A surjection :math:`W \\to V` whose kernel decomposes as :code:`sub`.

    :param source: The representation :math:`W`.
    :param v: The representation :math:`V`.
    :param sub: The wanted kernel.
    :param rng: Random source.
    :param trials: Number of random combinations after the basis sweep.
    :return: A :class:`Morphism`, or :code:`None` when the budget runs out.
    """
    if sub.dim != tuple(w - a for w, a in zip(source.dim, v.dim)):
        return None
    if v.is_zero():
        return Morphism.zero(source, v) if decompose(source) == sub else None
    for g in _candidates(hom_space(source, v), rng, trials):
        if g.is_surjective() and decompose(kernel(g)[0]) == sub:
            return g
    return None


def _radical_endomorphisms(
    parts: Sequence[Representation], indices: Sequence[int]
) -> List[Morphism]:
    """
    A basis of :math:`\\mathrm{rad}(Z, Z)` for :math:`Z` the direct sum of
    indecomposable :code:`parts` with root :code:`indices`.
    """
    basis = []
    for a, (part_a, index_a) in enumerate(zip(parts, indices)):
        out = projection(parts, a)
        for b, (part_b, index_b) in enumerate(zip(parts, indices)):
            if index_a == index_b:
                continue
            into = inclusion(parts, b)
            for h in hom_space(part_a, part_b):
                basis.append(into @ h @ out)
    return basis


class ZWitness:
    """
    An exact sequence :math:`0 \\to Z \\xrightarrow{f} Z \\oplus M \\to N \\to 0`
    with :math:`f` in the radical.
    """

    def __init__(self, z: ModuleSpec, f: Morphism):
        """
        :param z: The module :math:`Z`.
        :param f: The injection into a representation of :math:`Z \\oplus M`.
        """
        self.z: ModuleSpec = z
        self.f: Morphism = f
        quotient, self.g = cokernel(f)
        self.quotient: Representation = quotient

    def __repr__(self) -> str:
        return f"ZWitness(z={self.z!r})"

    def verify(self, m: ModuleSpec, n: ModuleSpec) -> bool:
        """
        Recheck injectivity, radical membership and both decompositions.
        """
        return (
            self.f.is_injective()
            and decompose(self.f.source) == self.z
            and decompose(self.f.target) == self.z + m
            and decompose(self.quotient) == n
            and in_radical(self.f)
        )


class DualZWitness:
    """
    An exact sequence :math:`0 \\to N \\to M \\oplus Z' \\xrightarrow{g} Z' \\to 0`
    with :math:`g` in the radical.
    """

    def __init__(self, z: ModuleSpec, g: Morphism):
        """
        :param z: The module :math:`Z'`.
        :param g: The surjection from a representation of :math:`M \\oplus Z'`.
        """
        self.z: ModuleSpec = z
        self.g: Morphism = g
        sub, self.f = kernel(g)
        self.sub: Representation = sub

    def __repr__(self) -> str:
        return f"DualZWitness(z={self.z!r})"

    def verify(self, m: ModuleSpec, n: ModuleSpec) -> bool:
        return (
            self.g.is_surjective()
            and decompose(self.g.target) == self.z
            and decompose(self.g.source) == m + self.z
            and decompose(self.sub) == n
            and in_radical(self.g)
        )


def _proper_summands(n: ModuleSpec) -> List[ModuleSpec]:
    """
    Nonzero proper direct summands, by total dimension.
    """
    found = [ModuleSpec.zero(n.quiver)]
    for index in n.support():
        found = [
            spec + ModuleSpec.indecomposable(n.quiver, index).scale(k)
            for spec in found
            for k in range(n[index] + 1)
        ]
    return sorted(
        (s for s in found if not s.is_zero() and s != n),
        key=lambda s: (s.total_dim, s.multiplicities),
    )


def _bounded_specs(quiver: Quiver, zmult: int, max_total: int) -> Iterator[ModuleSpec]:
    """
    Nonzero modules with multiplicities at most :code:`zmult`, by total
    dimension up to :code:`max_total`.
    """
    weights = [sum(root) for root in positive_roots(quiver)]

    def fill(index: int, remaining: int, prefix: List[int]) -> Iterator[List[int]]:
        if index == len(weights):
            if remaining == 0:
                yield prefix
            return
        for mu in range(min(zmult, remaining // weights[index]) + 1):
            yield from fill(index + 1, remaining - mu * weights[index], prefix + [mu])

    for total in range(1, max_total + 1):
        for multiplicities in fill(0, total, []):
            yield ModuleSpec(quiver, multiplicities)


class WitnessSearch:
    """
    Budgeted search for the exact sequences characterizing degenerations.
    """

    def __init__(self, seed: int = 0, trials: int = 200, zmult: int = 3):
        """
        :param seed: Seed of the random combinations.
        :param trials: Random combinations tried per candidate :math:`Z`.
        :param zmult: Largest multiplicity allowed in a generic candidate :math:`Z`.
        """
        if trials < 0 or zmult < 0:
            raise ValueError("Search budgets must be nonnegative.")
        self.seed: int = seed
        self.trials: int = trials
        self.zmult: int = zmult

    def __repr__(self) -> str:
        return (
            f"WitnessSearch(seed={self.seed}, trials={self.trials}, "
            f"zmult={self.zmult})"
        )

    def __str__(self) -> str:
        return (
            f"Witness Search Parameters: \n\n"
            f"seed: {self.seed}\n"
            f"trials: {self.trials}\n"
            f"zmult: {self.zmult}\n"
        )

    def _check(self, m: ModuleSpec, n: ModuleSpec) -> None:
        if m == n:
            raise ValueError("A witness needs two different modules.")
        if not is_degeneration(m, n):
            raise NotADegenerationError(f"{n} is not a degeneration of {m}.")

    def _extension_splits(
        self, m: ModuleSpec, n: ModuleSpec
    ) -> Iterator[Tuple[ModuleSpec, ModuleSpec, ModuleSpec, Representation, Morphism]]:
        """
        Sequences :math:`0 \\to U \\to M' \\to V \\to 0` with :math:`N' = U \\oplus V`.

        Yields :math:`(U, V, X)` together with the representation
        :math:`M' \\oplus X` and the injection :math:`U \\to M' \\oplus X`.
        """
        table = catalog(m.quiver)
        rng = random.Random(self.seed)
        m_prime, n_prime, x = split_common(m, n)
        parts = [table.realize(m_prime), table.realize(x)]
        ambient = direct_sum(parts)
        for u in _proper_summands(n_prime):
            v = n_prime - u
            iota = search_monomorphism(
                table.realize(u), parts[0], v, rng, self.trials
            )
            if iota is not None:
                yield u, v, x, ambient, inclusion(parts, 0) @ iota

    def find_zwitness(self, m: ModuleSpec, n: ModuleSpec) -> Optional[ZWitness]:
        """
        Search an exact sequence :math:`0 \\to Z \\to Z \\oplus M \\to N \\to 0`.

        Extensions :math:`0 \\to U \\to M' \\to V \\to 0` inside :math:`M` are
        tried first with :math:`Z = U`; then generic candidates :math:`Z` with
        multiplicities at most :code:`zmult` and total dimension at most three
        times that of :math:`M`.

        :param m: The module :math:`M`.
        :param n: A degeneration :math:`N \\neq M` of :math:`M`.
        :return: A verified :class:`ZWitness`, or :code:`None` when the budget
                 is exhausted.
        """
        self._check(m, n)
        table = catalog(m.quiver)
        for u, _, _, ambient, iota in self._extension_splits(m, n):
            z_rep = table.realize(u)
            parts = [z_rep, ambient]
            f = inclusion(parts, 1) @ iota
            witness = ZWitness(u, f)
            if witness.verify(m, n):
                logger.debug("Z-witness %s for %s ~> %s from an extension", u, m, n)
                return witness

        rng = random.Random(self.seed)
        m_rep = table.realize(m)
        for z in _bounded_specs(m.quiver, self.zmult, 3 * m.total_dim):
            summands = z.summands()
            z_parts = [table.realize(s) for s in summands]
            parts = [table.realize(z), m_rep]
            into_z, into_m = inclusion(parts, 0), inclusion(parts, 1)
            radical = _radical_endomorphisms(z_parts, [s.index() for s in summands])
            basis = [into_z @ r for r in radical]
            basis += [into_m @ h for h in hom_space(parts[0], m_rep)]
            for f in _candidates(basis, rng, self.trials):
                if not f.is_injective():
                    continue
                witness = ZWitness(z, f)
                if decompose(witness.quotient) == n and in_radical(f):
                    logger.debug("Z-witness %s for %s ~> %s", z, m, n)
                    return witness
        logger.warning("No Z-witness for %s ~> %s within %r", m, n, self)
        return None

    def find_dual_zwitness(
        self, m: ModuleSpec, n: ModuleSpec
    ) -> Optional[DualZWitness]:
        """
        Search an exact sequence :math:`0 \\to N \\to M \\oplus Z' \\to Z' \\to 0`.

        :param m: The module :math:`M`.
        :param n: A degeneration :math:`N \\neq M` of :math:`M`.
        :return: A verified :class:`DualZWitness`, or :code:`None` when the
                 budget is exhausted.
        """
        self._check(m, n)
        table = catalog(m.quiver)
        rng = random.Random(self.seed)
        m_prime, n_prime, x = split_common(m, n)
        for v in _proper_summands(n_prime):
            u = n_prime - v
            pi = search_epimorphism(
                table.realize(m_prime), table.realize(v), u, rng, self.trials
            )
            if pi is None:
                continue
            parts = [table.realize(m_prime), table.realize(x), table.realize(v)]
            g = pi @ projection(parts, 0)
            witness = DualZWitness(v, g)
            if witness.verify(m, n):
                logger.debug("Dual Z-witness %s for %s ~> %s", v, m, n)
                return witness

        m_rep = table.realize(m)
        for z in _bounded_specs(m.quiver, self.zmult, 3 * m.total_dim):
            summands = z.summands()
            z_parts = [table.realize(s) for s in summands]
            parts = [m_rep, table.realize(z)]
            from_m, from_z = projection(parts, 0), projection(parts, 1)
            radical = _radical_endomorphisms(z_parts, [s.index() for s in summands])
            basis = [r @ from_z for r in radical]
            basis += [h @ from_m for h in hom_space(m_rep, parts[1])]
            for g in _candidates(basis, rng, self.trials):
                if not g.is_surjective():
                    continue
                witness = DualZWitness(z, g)
                if decompose(witness.sub) == n and in_radical(g):
                    return witness
        logger.warning("No dual Z-witness for %s ~> %s within %r", m, n, self)
        return None


def find_zwitness(
    m: ModuleSpec, n: ModuleSpec, search: Optional[WitnessSearch] = None
) -> Optional[ZWitness]:
    return (search or WitnessSearch()).find_zwitness(m, n)


def find_dual_zwitness(
    m: ModuleSpec, n: ModuleSpec, search: Optional[WitnessSearch] = None
) -> Optional[DualZWitness]:
    return (search or WitnessSearch()).find_dual_zwitness(m, n)
