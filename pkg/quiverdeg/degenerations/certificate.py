"""Certificates

Decide regularity of :math:`\\overline{\\mathcal{O}}_M` along
:math:`\\mathcal{O}_N` for degenerations of codimension one and two.

Every rule that fires is recorded as a :class:`Step` holding the numbers
and exact sequences it rests on. :func:`validate` replays a certificate
from scratch: it recomputes each recorded fact, compares it with the
stored one and checks that the rules form one of the chains

* ``Codim1``
* ``Aux1-Case1``
* ``Aux1-Cancel`` followed by a disjoint chain

where a disjoint chain is ``Aux2-S3``, ``SpecialUV FromUtoV CorCriterion``
or ``SpecialUV FromUtoV LongProp GenCriterion``.
"""

import enum
import logging
import random
from dataclasses import dataclass, field
from typing import Any, Dict, Iterator, List, Optional, Tuple

from quiverdeg.common import Matrix, span_contains
from quiverdeg.degenerations.extensions import (
    ShortExactSequence,
    calE_dim,
    delta_prime_sigma,
    delta_sigma,
    gencriterion,
    pushout_square,
    splits,
)
from quiverdeg.degenerations.order import (
    DegPair,
    check_cancel,
    codim,
    delta,
    delta_prime,
    is_degeneration,
    split_common,
)
from quiverdeg.degenerations.witness import search_epimorphism, search_monomorphism
from quiverdeg.errors import (
    InconsistencyError,
    NotADegenerationError,
    QuiverError,
    SearchExhaustedError,
)
from quiverdeg.representations.catalog import catalog, find_isomorphism
from quiverdeg.representations.quiver import Quiver, parse_quiver, quiver_to_dict
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
from quiverdeg.serialization import spec_from_list, spec_to_list

__all__: List[str] = [
    "AUX1_CANCEL",
    "AUX1_CASE1",
    "AUX2_S3",
    "CODIM1",
    "COR_CRITERION",
    "Certificate",
    "Certifier",
    "FROM_U_TO_V",
    "GEN_CRITERION",
    "LONG_PROP",
    "RULES",
    "SPECIAL_UV",
    "Step",
    "Verdict",
    "VerdictKind",
    "certify",
    "validate",
]

logger = logging.getLogger(__name__)

CODIM1 = "Codim1"
AUX1_CANCEL = "Aux1-Cancel"
AUX1_CASE1 = "Aux1-Case1"
AUX2_S3 = "Aux2-S3"
SPECIAL_UV = "SpecialUV"
FROM_U_TO_V = "FromUtoV"
COR_CRITERION = "CorCriterion"
LONG_PROP = "LongProp"
GEN_CRITERION = "GenCriterion"

RULES: Tuple[str, ...] = (
    CODIM1,
    AUX1_CANCEL,
    AUX1_CASE1,
    AUX2_S3,
    SPECIAL_UV,
    FROM_U_TO_V,
    COR_CRITERION,
    LONG_PROP,
    GEN_CRITERION,
)

_LONGPROP_HYPOTHESES: Dict[str, int] = {
    "delta_u": 1,
    "delta_m": 1,
    "delta_v": 0,
    "delta_prime_u": 0,
    "delta_prime_m": 1,
    "delta_prime_v": 1,
}

_LONGPROP_STEP2: Dict[str, int] = {
    "delta_sigma1_u": 1,
    "delta_sigma1_m": 0,
    "delta_prime_sigma1_u": 0,
    "delta_sigma2_v": 0,
    "delta_prime_sigma2_u": 0,
    "delta_prime_sigma2_v": 1,
}


@dataclass
class Step:
    """
    One applied rule with the data substantiating it.
    """

    rule: str
    data: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.rule not in RULES:
            raise ValueError(f"Unknown rule '{self.rule}'.")

    def to_dict(self) -> Dict[str, Any]:
        return {"rule": self.rule, "data": self.data}


class Certificate:
    """
    An ordered chain of rules concluding that :math:`\\mathcal{O}_M` is
    regular along :math:`\\mathcal{O}_N`.
    """

    def __init__(
        self, m: ModuleSpec, n: ModuleSpec, steps: Optional[List[Step]] = None
    ):
        """
        :param m: The module :math:`M`.
        :param n: The degeneration :math:`N` of :math:`M`.
        :param steps: The applied rules, in order.
        """
        if m.quiver != n.quiver:
            raise QuiverError("Modules live over different quivers.")
        self.quiver: Quiver = m.quiver
        self.m: ModuleSpec = m
        self.n: ModuleSpec = n
        self.steps: List[Step] = list(steps or [])

    def __repr__(self) -> str:
        return f"Certificate(m={self.m!r}, n={self.n!r}, rules={self.rules})"

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Certificate):
            return (
                self.m == other.m and self.n == other.n and self.steps == other.steps
            )
        else:
            return NotImplemented

    def __hash__(self) -> int:
        return hash((self.m, self.n, tuple(self.rules)))

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def rules(self) -> List[str]:
        return [step.rule for step in self.steps]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "quiver": quiver_to_dict(self.quiver),
            "m": spec_to_list(self.m),
            "n": spec_to_list(self.n),
            "steps": [step.to_dict() for step in self.steps],
        }

    @classmethod
    def from_dict(cls, data: Any) -> "Certificate":
        """
        Load a certificate document.

        :raises QuiverError: if the document is malformed.
        """
        if not isinstance(data, dict):
            raise QuiverError(
                f"Certificate must be an object, not '{data.__class__.__name__}'."
            )
        try:
            quiver = parse_quiver(data["quiver"])
            m = spec_from_list(quiver, data["m"])
            n = spec_from_list(quiver, data["n"])
            steps = [Step(step["rule"], dict(step["data"])) for step in data["steps"]]
        except (KeyError, TypeError) as error:
            raise QuiverError(f"Malformed certificate: {error}.") from None
        return cls(m, n, steps)


class VerdictKind(enum.Enum):
    REG_CERTIFIED = "RegCertified"
    SAME_ORBIT = "SameOrbit"
    NOT_DEGENERATION = "NotDegeneration"
    CODIM_OUT_OF_SCOPE = "CodimOutOfScope"
    INCONCLUSIVE = "Inconclusive"

    @property
    def exit_code(self) -> int:
        return _EXIT_CODES[self]


_EXIT_CODES: Dict[VerdictKind, int] = {
    VerdictKind.REG_CERTIFIED: 0,
    VerdictKind.SAME_ORBIT: 0,
    VerdictKind.NOT_DEGENERATION: 3,
    VerdictKind.CODIM_OUT_OF_SCOPE: 4,
    VerdictKind.INCONCLUSIVE: 5,
}


@dataclass(frozen=True)
class Verdict:
    """
    Outcome of :meth:`Certifier.certify`.
    """

    kind: VerdictKind
    certificate: Optional[Certificate] = None
    codim: Optional[int] = None
    reason: Optional[str] = None

    @property
    def exit_code(self) -> int:
        return self.kind.exit_code

    def __str__(self) -> str:
        if self.kind is VerdictKind.CODIM_OUT_OF_SCOPE:
            return f"{self.kind.value}({self.codim})"
        if self.kind is VerdictKind.INCONCLUSIVE:
            return f"{self.kind.value}({self.reason})"
        return self.kind.value


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise InconsistencyError(message)


def _pair_deltas(m: ModuleSpec, n: ModuleSpec, x: ModuleSpec) -> Tuple[int, int]:
    return delta(m, n, x), delta_prime(m, n, x)


def _codim1_facts(m: ModuleSpec, n: ModuleSpec) -> Dict[str, Any]:
    delta_m, delta_prime_m = _pair_deltas(m, n, m)
    delta_n, delta_prime_n = _pair_deltas(m, n, n)
    return {
        "codim": codim(m, n),
        "delta_m": delta_m,
        "delta_prime_m": delta_prime_m,
        "delta_n": delta_n,
        "delta_prime_n": delta_prime_n,
    }


def _check_codim1(facts: Dict[str, Any]) -> None:
    _require(
        facts
        == {
            "codim": 1,
            "delta_m": 0,
            "delta_prime_m": 0,
            "delta_n": 1,
            "delta_prime_n": 1,
        },
        f"Codimension one pair with invariants {facts}.",
    )


def _aux1_facts(m: ModuleSpec, n: ModuleSpec) -> Dict[str, Any]:
    m_prime, n_prime, x = split_common(m, n)
    if x.is_zero():
        raise ValueError("Cancellation needs a common direct summand.")
    _require(
        is_degeneration(m_prime, n_prime),
        f"Residual pair {m_prime} ~> {n_prime} is not a degeneration.",
    )
    delta_x, delta_prime_x = _pair_deltas(m, n, x)
    return {
        "x": spec_to_list(x),
        "m_prime": spec_to_list(m_prime),
        "n_prime": spec_to_list(n_prime),
        "residual_codim": codim(m_prime, n_prime),
        "delta_x": delta_x,
        "delta_prime_x": delta_prime_x,
    }


def _aux2_facts(m: ModuleSpec, n: ModuleSpec) -> Dict[str, Any]:
    quiver = m.quiver
    summands = []
    u, v, rest = (ModuleSpec.zero(quiver) for _ in range(3))
    for index in n.support():
        y = ModuleSpec.indecomposable(quiver, index)
        delta_y, delta_prime_y = _pair_deltas(m, n, y)
        summands.append(
            {
                "index": index,
                "multiplicity": n[index],
                "delta": delta_y,
                "delta_prime": delta_prime_y,
            }
        )
        part = y.scale(n[index])
        if delta_prime_y == 0:
            u = u + part
        elif delta_y == 0:
            v = v + part
        else:
            rest = rest + part
    delta_m, delta_prime_m = _pair_deltas(m, n, m)
    return {
        "codim": codim(m, n),
        "summand_count": n.summand_count,
        "delta_m": delta_m,
        "delta_prime_m": delta_prime_m,
        "summands": summands,
        "u": spec_to_list(u),
        "v": spec_to_list(v),
        "l": spec_to_list(rest),
    }


def _check_aux2(facts: Dict[str, Any]) -> None:
    count = facts["summand_count"]
    _require(count <= 4, f"Disjoint codimension two pair with {count} summands.")
    _require(count >= 3, "Too few summands for the summand count rule.")
    summands = facts["summands"]
    sum_delta = sum(s["multiplicity"] * s["delta"] for s in summands)
    sum_delta_prime = sum(s["multiplicity"] * s["delta_prime"] for s in summands)
    _require(
        facts["codim"] == 2
        and facts["delta_m"] + sum_delta_prime == 2
        and facts["delta_prime_m"] + sum_delta == 2,
        "Summand invariants do not add up to the codimension.",
    )
    _require(
        all(s["delta"] + s["delta_prime"] >= 1 for s in summands),
        "A summand of N has vanishing invariants.",
    )
    rest = [s for s in summands if s["delta"] > 0 and s["delta_prime"] > 0]
    _require(
        not rest
        or (
            len(rest) == 1
            and rest[0]["multiplicity"] == 1
            and rest[0]["delta"] == 1
            and rest[0]["delta_prime"] == 1
        ),
        "Remaining summand L has the wrong invariants.",
    )


def _special_uv_facts(
    m: ModuleSpec, n: ModuleSpec, u: ModuleSpec, v: ModuleSpec
) -> Dict[str, Any]:
    for name, y in (("u", u), ("v", v)):
        if not y.is_indecomposable() or not n.contains(y):
            raise ValueError(
                f"Argument '{name}' must be an indecomposable summand of N."
            )
    delta_u, delta_prime_u = _pair_deltas(m, n, u)
    delta_v, delta_prime_v = _pair_deltas(m, n, v)
    return {
        "u": spec_to_list(u),
        "v": spec_to_list(v),
        "delta_u": delta_u,
        "delta_prime_u": delta_prime_u,
        "delta_v": delta_v,
        "delta_prime_v": delta_prime_v,
    }


def _check_special_uv(facts: Dict[str, Any]) -> None:
    _require(
        facts["delta_u"] > 0
        and facts["delta_prime_u"] == 0
        and facts["delta_v"] == 0
        and facts["delta_prime_v"] > 0,
        f"Summands U and V have the wrong invariants {facts}.",
    )


def _from_u_to_v_facts(
    m: ModuleSpec, n: ModuleSpec, sigma: ShortExactSequence
) -> Dict[str, Any]:
    u, w, v = sigma.specs()
    _require(w == m, f"Middle term {w} of the sequence is not {m}.")
    _require(u + v == n, f"End terms {u}, {v} of the sequence do not sum to {n}.")
    return {
        "u": spec_to_list(u),
        "v": spec_to_list(v),
        "delta_prime_u": delta_prime(m, n, u),
        "delta_v": delta(m, n, v),
    }


def _corcriterion_facts(sigma: ShortExactSequence) -> Dict[str, int]:
    u, w, v = sigma.specs()
    return {
        "delta_prime_um": delta_prime_sigma(sigma, u + w),
        "delta_mv": delta_sigma(sigma, w + v),
    }


def _sigma_values(
    sigma: ShortExactSequence, u: ModuleSpec, m: ModuleSpec, v: ModuleSpec
) -> Dict[str, int]:
    return {
        "delta_u": delta_sigma(sigma, u),
        "delta_m": delta_sigma(sigma, m),
        "delta_v": delta_sigma(sigma, v),
        "delta_prime_u": delta_prime_sigma(sigma, u),
        "delta_prime_m": delta_prime_sigma(sigma, m),
        "delta_prime_v": delta_prime_sigma(sigma, v),
    }


def _longprop_facts(
    m: ModuleSpec,
    n: ModuleSpec,
    sigma: ShortExactSequence,
    sigma1: ShortExactSequence,
    sigma2: ShortExactSequence,
    sigma3: ShortExactSequence,
) -> Dict[str, Any]:
    """
    Every number behind the constructive trace, after checking that the
    sequences :math:`\\sigma_1, \\sigma_2, \\sigma_3` are built from
    :math:`\\sigma`.
    """
    u, w, v = sigma.specs()
    _require(w == m and u + v == n, "Sequence does not match the pair.")
    m1, x = sigma2.specs()[0], sigma2.specs()[1]
    _require(
        m1.is_indecomposable() and m.contains(m1),
        f"{m1} is not an indecomposable summand of {m}.",
    )
    m_prime = m - m1
    pair = [sigma.middle, sigma2.left]
    _require(
        sigma1.left == sigma.left
        and sigma1.middle == direct_sum(pair)
        and sigma1.right == sigma2.middle
        and sigma2.right == sigma.right
        and sigma3.left == sigma.left,
        "Terms of the traced sequences do not fit together.",
    )
    _require(
        projection(pair, 0) @ sigma1.inj == sigma.inj,
        "First sequence does not extend the injection of the original one.",
    )
    _require(
        (sigma1.surj @ inclusion(pair, 1) + sigma2.inj).is_zero(),
        "First and second sequence do not come from one pushout.",
    )
    _require(
        sigma3.specs() == (u, x + m_prime, v + v),
        "Third sequence has the wrong terms.",
    )
    table = catalog(m.quiver)
    additive = True
    for index in range(len(table)):
        y = ModuleSpec.indecomposable(m.quiver, index)
        additive = additive and (
            delta_sigma(sigma, y) == delta_sigma(sigma1, y) + delta_sigma(sigma2, y)
            and delta_prime_sigma(sigma, y)
            == delta_prime_sigma(sigma1, y) + delta_prime_sigma(sigma2, y)
        )
    return {
        "hypotheses": _sigma_values(sigma, u, m, v),
        "m1": spec_to_list(m1),
        "m_prime": spec_to_list(m_prime),
        "x": spec_to_list(x),
        "delta_sigma_m1": delta_sigma(sigma, m1),
        "delta_sigma_m_prime": delta_sigma(sigma, m_prime),
        "sigma1_splits": splits(sigma1),
        "sigma2_splits": splits(sigma2),
        "step2": {
            "delta_sigma1_u": delta_sigma(sigma1, u),
            "delta_sigma1_m": delta_sigma(sigma1, m),
            "delta_prime_sigma1_u": delta_prime_sigma(sigma1, u),
            "delta_sigma2_v": delta_sigma(sigma2, v),
            "delta_prime_sigma2_u": delta_prime_sigma(sigma2, u),
            "delta_prime_sigma2_v": delta_prime_sigma(sigma2, v),
        },
        "additive": additive,
        "step3": {"delta_sigma1_x": delta_sigma(sigma1, x)},
        "step4": {"delta_prime_sigma2_m": delta_prime_sigma(sigma2, m)},
        "step5": {"delta_sigma_x": delta_sigma(sigma, x)},
        "step6": {"delta_x_m_prime": delta(m, n, x + m_prime)},
        "step7": {
            "e_dim_vu": calE_dim(m, n, v, u)[0],
            "delta_prime_sigma3_v": delta_prime_sigma(sigma3, v),
        },
        "step8": {
            "e_dim_uu": calE_dim(m, n, u, u)[0],
            "e_dim_uv": calE_dim(m, n, u, v)[0],
            "e_dim_vv": calE_dim(m, n, v, v)[0],
            "codim": codim(m, n),
        },
    }


def _check_longprop(facts: Dict[str, Any]) -> None:
    _require(
        facts["hypotheses"] == _LONGPROP_HYPOTHESES,
        f"Sequence invariants {facts['hypotheses']} are not the expected ones.",
    )
    _require(
        facts["delta_sigma_m1"] == 1 and facts["delta_sigma_m_prime"] == 0,
        "Summand M1 does not carry the invariant of M.",
    )
    _require(
        not facts["sigma1_splits"] and not facts["sigma2_splits"],
        "A pushout sequence splits.",
    )
    _require(facts["step2"] == _LONGPROP_STEP2, f"Step 2 fails: {facts['step2']}.")
    _require(facts["additive"], "Invariants of the pushout sequences do not add up.")
    _require(facts["step3"]["delta_sigma1_x"] == 0, "Step 3 fails.")
    _require(facts["step4"]["delta_prime_sigma2_m"] == 0, "Step 4 fails.")
    _require(facts["step5"]["delta_sigma_x"] == 0, "Step 5 fails.")
    _require(facts["step6"]["delta_x_m_prime"] == 0, "Step 6 fails.")
    step7 = facts["step7"]
    _require(
        step7["delta_prime_sigma3_v"] == 2
        and step7["e_dim_vu"] <= step7["delta_prime_sigma3_v"],
        f"Step 7 fails: {step7}.",
    )
    step8 = facts["step8"]
    _require(
        step8 == {"e_dim_uu": 0, "e_dim_uv": 0, "e_dim_vv": 0, "codim": 2},
        f"Step 8 fails: {step8}.",
    )


def _gencriterion_facts(m: ModuleSpec, n: ModuleSpec) -> Dict[str, Any]:
    outcome = gencriterion(m, n)
    return {
        "e_dim": outcome.e_dim,
        "codim": outcome.codim,
        "regular_certified": outcome.regular_certified,
    }


def _check_gencriterion(facts: Dict[str, Any], e_dim_vu: int) -> None:
    _require(
        facts["regular_certified"] and facts["e_dim"] == facts["codim"] == 2,
        f"Generic criterion gives {facts}.",
    )
    _require(
        facts["e_dim"] == e_dim_vu,
        "E(N, N) differs from its only nonzero block E(V, U).",
    )


def _middle_as_realized(sigma: ShortExactSequence) -> ShortExactSequence:
    """
    The same sequence with middle term the catalogue realization.
    """
    middle = sigma.specs()[1]
    table = catalog(middle.quiver)
    realized = table.realize(middle)
    if sigma.middle == realized:
        return sigma
    isomorphism = find_isomorphism(realized, sigma.middle)
    if isomorphism is None:
        raise InconsistencyError("Middle term is not isomorphic to its decomposition.")
    return ShortExactSequence(
        isomorphism.inverse() @ sigma.inj, sigma.surj @ isomorphism
    )


class Certifier:
    """
    The pipeline deciding :math:`\\mathrm{Sing}(M, N) = \\mathrm{Reg}` in
    codimension at most two.

    Rules are applied in a fixed order: codimension one, cancellation of a
    common summand, the summand count rule, and finally an exact sequence
    :math:`0 \\to U \\to M \\to V \\to 0` treated by the short criterion or
    the long constructive trace.
    """

    def __init__(self, seed: int = 0, trials: int = 500, zmult: int = 3):
        """
        :param seed: Seed of every randomized search.
        :param trials: Random combinations tried after each basis sweep.
        :param zmult: Largest multiplicity of a generic candidate :math:`Z`
                      in witness searches.
        """
        if trials < 0 or zmult < 0:
            raise ValueError("Search budgets must be nonnegative.")
        self.seed: int = seed
        self.trials: int = trials
        self.zmult: int = zmult

    def __repr__(self) -> str:
        return f"Certifier(seed={self.seed}, trials={self.trials}, zmult={self.zmult})"

    def __str__(self) -> str:
        return (
            f"Certifier Parameters: \n\n"
            f"seed: {self.seed}\n"
            f"trials: {self.trials}\n"
            f"zmult: {self.zmult}\n"
        )

    def certify(self, m: ModuleSpec, n: ModuleSpec) -> Verdict:
        """
        Classify a pair and certify regularity when the codimension is one
        or two.

        :param m: The module :math:`M`.
        :param n: The module :math:`N` over the same quiver.
        :return: A :class:`Verdict`; :code:`Inconclusive` only when a bounded
                 search ran out of budget.
        """
        if m == n:
            return Verdict(VerdictKind.SAME_ORBIT)
        if not is_degeneration(m, n):
            return Verdict(VerdictKind.NOT_DEGENERATION)
        c = codim(m, n)
        if c >= 3:
            return Verdict(VerdictKind.CODIM_OUT_OF_SCOPE, codim=c)
        certificate = Certificate(m, n)
        try:
            certificate.steps.extend(self._chain(m, n))
        except SearchExhaustedError as error:
            logger.warning("Inconclusive for %s ~> %s: %s", m, n, error)
            return Verdict(VerdictKind.INCONCLUSIVE, reason=str(error))
        logger.debug("Certified %s ~> %s by %s", m, n, certificate.rules)
        return Verdict(VerdictKind.REG_CERTIFIED, certificate=certificate)

    def _chain(self, m: ModuleSpec, n: ModuleSpec, depth: int = 0) -> List[Step]:
        if codim(m, n) == 1:
            return [self.rule_codim1(m, n)]
        if m.is_disjoint(n):
            return self._disjoint_chain(m, n)
        if depth > 0:
            raise InconsistencyError("Residual pair still shares a direct summand.")
        step, residual = self.rule_aux1(m, n)
        if residual is None:
            return [step]
        return [step] + self._chain(residual.m, residual.n, depth + 1)

    def _disjoint_chain(self, m: ModuleSpec, n: ModuleSpec) -> List[Step]:
        step = self.rule_aux2(m, n)
        if step is not None:
            return [step]
        u, v = self.find_special_uv(m, n)
        steps = [Step(SPECIAL_UV, _special_uv_facts(m, n, u, v))]
        _require(u + v == n, f"{n} has more summands than U and V.")
        sigma = self.build_umv(u, m, v)
        data = _from_u_to_v_facts(m, n, sigma)
        data["sequence"] = sigma.to_dict()
        steps.append(Step(FROM_U_TO_V, data))
        step = self.rule_corcriterion(sigma)
        if step is not None:
            return steps + [step]
        return steps + self.rule_longprop(sigma)

    def rule_codim1(self, m: ModuleSpec, n: ModuleSpec) -> Step:
        """
        Record :math:`\\delta(M) = \\delta'(M) = 0` and
        :math:`\\delta(N) = \\delta'(N) = 1` for a pair of codimension one.

        :raises ValueError: if the codimension is not one.
        :raises InconsistencyError: if the invariants differ.
        """
        facts = _codim1_facts(m, n)
        if facts["codim"] != 1:
            raise ValueError(f"Pair has codimension {facts['codim']}, not 1.")
        _check_codim1(facts)
        return Step(CODIM1, facts)

    def rule_aux1(self, m: ModuleSpec, n: ModuleSpec) -> Tuple[Step, Optional[DegPair]]:
        """
        Cancel the maximal common summand :math:`X` of a codimension two pair.

        :return: The step and, when the residual pair still has codimension
                 two, that disjoint pair; :code:`None` when the residual pair
                 has codimension one.
        :raises InconsistencyError: if the residual codimension is not 1 or 2
                                    or :math:`X` cannot be cancelled.
        """
        facts = _aux1_facts(m, n)
        residual_codim = facts["residual_codim"]
        if residual_codim == 1:
            return Step(AUX1_CASE1, facts), None
        _require(residual_codim == 2, f"Residual codimension {residual_codim}.")
        _require(
            facts["delta_x"] == 0 and facts["delta_prime_x"] == 0,
            "Common summand has nonzero invariants.",
        )
        x = split_common(m, n)[2]
        return Step(AUX1_CANCEL, facts), check_cancel(m, n, x)

    def rule_aux2(self, m: ModuleSpec, n: ModuleSpec) -> Optional[Step]:
        """
        Conclude for a disjoint pair when :math:`N` has at least three
        indecomposable summands.

        :return: The step, or :code:`None` when :math:`s(N) \\leq 2`.
        :raises InconsistencyError: if :math:`s(N) \\geq 5` or the invariants
                                    of the summands do not add up.
        """
        if not m.is_disjoint(n):
            raise ValueError("Summand count rule needs disjoint modules.")
        if n.summand_count < 3:
            return None
        facts = _aux2_facts(m, n)
        _check_aux2(facts)
        return Step(AUX2_S3, facts)

    def find_special_uv(
        self, m: ModuleSpec, n: ModuleSpec
    ) -> Tuple[ModuleSpec, ModuleSpec]:
        """
        Indecomposable summands :math:`U, V` of :math:`N` with
        :math:`\\delta(U) > 0, \\delta'(U) = 0` and
        :math:`\\delta(V) = 0, \\delta'(V) > 0`.

        :math:`U` is the first candidate and :math:`V` the last one in the
        directed order of indecomposables.

        :raises ValueError: if the modules are equal or share a summand.
        :raises InconsistencyError: if no candidate exists.
        """
        if m == n or not m.is_disjoint(n):
            raise ValueError("Special summands need disjoint different modules.")
        if not is_degeneration(m, n):
            raise NotADegenerationError(f"{n} is not a degeneration of {m}.")
        table = catalog(m.quiver)
        u_candidates, v_candidates = [], []
        for index in n.support():
            delta_y, delta_prime_y = _pair_deltas(
                m, n, ModuleSpec.indecomposable(m.quiver, index)
            )
            if delta_y > 0 and delta_prime_y == 0:
                u_candidates.append(index)
            if delta_y == 0 and delta_prime_y > 0:
                v_candidates.append(index)
        _require(
            bool(u_candidates) and bool(v_candidates),
            f"No special summands in {n}.",
        )
        u = min(u_candidates, key=table.position.__getitem__)
        v = max(v_candidates, key=table.position.__getitem__)
        return (
            ModuleSpec.indecomposable(m.quiver, u),
            ModuleSpec.indecomposable(m.quiver, v),
        )

    def build_umv(
        self, u: ModuleSpec, m: ModuleSpec, v: ModuleSpec
    ) -> ShortExactSequence:
        """
        An exact sequence :math:`0 \\to U \\to M \\to V \\to 0`.

        Injections :math:`U \\to M` with cokernel :math:`V` are searched
        first, surjections :math:`M \\to V` with kernel :math:`U` second.

        :raises ValueError: if :math:`\\delta'_{M,U \\oplus V}(U)` or
                            :math:`\\delta_{M,U \\oplus V}(V)` is nonzero.
        :raises SearchExhaustedError: if both searches run out of budget.
        """
        n = u + v
        if delta_prime(m, n, u) != 0 or delta(m, n, v) != 0:
            raise ValueError("Invariants of U and V do not allow a sequence.")
        table = catalog(m.quiver)
        rng = random.Random(self.seed)
        u_rep, m_rep, v_rep = table.realize(u), table.realize(m), table.realize(v)
        f = search_monomorphism(u_rep, m_rep, v, rng, self.trials)
        if f is not None:
            return ShortExactSequence(f, cokernel(f)[1])
        g = search_epimorphism(m_rep, v_rep, u, rng, self.trials)
        if g is not None:
            return ShortExactSequence(kernel(g)[1], g)
        raise SearchExhaustedError(
            f"No sequence 0 -> {u} -> {m} -> {v} -> 0 within {self.trials} trials."
        )

    def rule_corcriterion(self, sigma: ShortExactSequence) -> Optional[Step]:
        """
        Conclude when :math:`\\delta'_\\sigma(U \\oplus M) = 0` or
        :math:`\\delta_\\sigma(M \\oplus V) = 0`.

        :return: The step, or :code:`None` when both are positive.
        """
        facts = _corcriterion_facts(sigma)
        if facts["delta_prime_um"] == 0 or facts["delta_mv"] == 0:
            return Step(COR_CRITERION, facts)
        return None

    def rule_longprop(self, sigma: ShortExactSequence) -> List[Step]:
        """
        The constructive trace for a sequence
        :math:`\\sigma: 0 \\to U \\to M \\to V \\to 0` with
        :math:`\\delta_\\sigma = (1, 1, 0)` and :math:`\\delta'_\\sigma = (0, 1, 1)`
        on :math:`(U, M, V)`.

        Splits :math:`M = M_1 \\oplus M'`, pushes :math:`\\sigma` out along a
        map :math:`h: U \\to M_1` not factoring through :math:`\\sigma`, builds
        the sequences :math:`\\sigma_1, \\sigma_2, \\sigma_3` and bounds
        :math:`\\dim \\mathcal{E}_{M,N}(N, N)` by the codimension.

        :return: The :code:`LongProp` and :code:`GenCriterion` steps.
        :raises InconsistencyError: if any recorded identity fails.
        """
        sigma = _middle_as_realized(sigma)
        u, m, v = sigma.specs()
        n = u + v
        _require(m.is_disjoint(n), "Sequence ends share a summand with the middle.")
        hypotheses = _sigma_values(sigma, u, m, v)
        _require(
            hypotheses == _LONGPROP_HYPOTHESES,
            f"Sequence invariants {hypotheses} are not the expected ones.",
        )
        quiver = m.quiver
        table = catalog(quiver)
        m1_index = self._unit_summand(sigma, m)
        parts = table.summands(m)
        k = sum(m[j] for j in range(m1_index))
        rest_positions = [p for p in range(len(parts)) if p != k]
        rest = [parts[p] for p in rest_positions]
        m1_rep = parts[k]
        m_prime_rep = direct_sum(rest, quiver=quiver)
        into_rest = Morphism.zero(m_prime_rep, sigma.middle)
        out_rest = Morphism.zero(sigma.middle, m_prime_rep)
        for i, p in enumerate(rest_positions):
            into_rest = into_rest + inclusion(parts, p) @ projection(rest, i)
            out_rest = out_rest + inclusion(rest, i) @ projection(parts, p)

        h = self._non_factoring_map(sigma, m1_rep)
        sigma2, h_prime = pushout_square(sigma, h)
        pair = [sigma.middle, m1_rep]
        sigma1 = ShortExactSequence(
            inclusion(pair, 0) @ sigma.inj + inclusion(pair, 1) @ h,
            h_prime @ projection(pair, 0) - sigma2.inj @ projection(pair, 1),
        )

        g1 = sigma.surj @ inclusion(parts, k)
        j = self._factor_through(g1, sigma2.inj, sigma.right)
        three = [sigma2.middle, m_prime_rep]
        targets = [sigma.right, sigma.right]
        f1 = projection(parts, k) @ sigma.inj
        sigma3 = ShortExactSequence(
            inclusion(three, 0) @ sigma2.inj @ f1
            + inclusion(three, 1) @ out_rest @ sigma.inj,
            inclusion(targets, 0) @ sigma2.surj @ projection(three, 0)
            + inclusion(targets, 1)
            @ (
                j @ projection(three, 0)
                + sigma.surj @ into_rest @ projection(three, 1)
            ),
        )

        facts = _longprop_facts(m, n, sigma, sigma1, sigma2, sigma3)
        _check_longprop(facts)
        data = dict(facts)
        data["sigma"] = sigma.to_dict()
        data["sigma1"] = sigma1.to_dict()
        data["sigma2"] = sigma2.to_dict()
        data["sigma3"] = sigma3.to_dict()
        closing = _gencriterion_facts(m, n)
        _check_gencriterion(closing, facts["step7"]["e_dim_vu"])
        return [Step(LONG_PROP, data), Step(GEN_CRITERION, closing)]

    @staticmethod
    def _unit_summand(sigma: ShortExactSequence, m: ModuleSpec) -> int:
        """
        Root index of the summand :math:`M_1` of :math:`M` carrying
        :math:`\\delta_\\sigma(M) = 1`.
        """
        found = [
            index
            for index in m.support()
            if delta_sigma(sigma, ModuleSpec.indecomposable(m.quiver, index)) > 0
        ]
        _require(len(found) == 1, f"Summands {found} carry the invariant of M.")
        return found[0]

    @staticmethod
    def _non_factoring_map(
        sigma: ShortExactSequence, target: Representation
    ) -> Morphism:
        """
        A basis morphism :math:`U \\to M_1` outside the image of
        :math:`\\mathrm{Hom}(M, M_1) \\to \\mathrm{Hom}(U, M_1)`.
        """
        image = [(a @ sigma.inj).vector() for a in hom_space(sigma.middle, target)]
        basis = hom_space(sigma.left, target)
        for h in basis:
            if not span_contains(image, h.vector()):
                return h
        raise InconsistencyError("Every map U -> M1 factors through the sequence.")

    @staticmethod
    def _factor_through(
        g: Morphism, f: Morphism, target: Representation
    ) -> Morphism:
        """
        A morphism :math:`j` with :math:`j \\circ f = g`.
        """
        source = f.target
        if g.is_zero():
            return Morphism.zero(source, target)
        basis = hom_space(source, target)
        if not basis:
            raise InconsistencyError("Map does not factor through the injection.")
        columns = Matrix([(b @ f).vector() for b in basis]).transpose()
        coefficients = columns.solve(g.vector())
        if coefficients is None:
            raise InconsistencyError("Map does not factor through the injection.")
        return combine(basis, coefficients)


def _next_step(steps: Iterator[Step], *rules: str) -> Step:
    step = next(steps, None)
    if step is None:
        raise ValueError(f"Certificate ends before one of {rules}.")
    if step.rule not in rules:
        raise ValueError(f"Expected one of {rules}, found '{step.rule}'.")
    return step


def _match(step: Step, facts: Dict[str, Any]) -> None:
    for key, value in facts.items():
        if step.data.get(key) != value:
            raise ValueError(f"{step.rule}: recorded '{key}' does not recompute.")


def _replay_disjoint(
    quiver: Quiver, m: ModuleSpec, n: ModuleSpec, steps: Iterator[Step]
) -> None:
    step = _next_step(steps, AUX2_S3, SPECIAL_UV)
    if step.rule == AUX2_S3:
        facts = _aux2_facts(m, n)
        _match(step, facts)
        _check_aux2(facts)
        return
    u = spec_from_list(quiver, step.data.get("u"))
    v = spec_from_list(quiver, step.data.get("v"))
    facts = _special_uv_facts(m, n, u, v)
    _match(step, facts)
    _check_special_uv(facts)

    step = _next_step(steps, FROM_U_TO_V)
    sigma = ShortExactSequence.from_dict(quiver, step.data.get("sequence"))
    facts = _from_u_to_v_facts(m, n, sigma)
    _match(step, facts)
    _require(
        spec_from_list(quiver, facts["u"]) == u
        and spec_from_list(quiver, facts["v"]) == v,
        "Sequence ends are not the special summands.",
    )
    _require(
        facts["delta_prime_u"] == 0 and facts["delta_v"] == 0,
        "Sequence ends have the wrong invariants.",
    )

    step = _next_step(steps, COR_CRITERION, LONG_PROP)
    if step.rule == COR_CRITERION:
        facts = _corcriterion_facts(sigma)
        _match(step, facts)
        _require(
            facts["delta_prime_um"] == 0 or facts["delta_mv"] == 0,
            "Neither invariant of the short criterion vanishes.",
        )
        return
    traced = ShortExactSequence.from_dict(quiver, step.data.get("sigma"))
    _require(
        traced.specs() == sigma.specs(),
        "Traced sequence differs from the recorded one.",
    )
    facts = _longprop_facts(
        m,
        n,
        traced,
        ShortExactSequence.from_dict(quiver, step.data.get("sigma1")),
        ShortExactSequence.from_dict(quiver, step.data.get("sigma2")),
        ShortExactSequence.from_dict(quiver, step.data.get("sigma3")),
    )
    _match(step, facts)
    _check_longprop(facts)

    closing = _next_step(steps, GEN_CRITERION)
    closing_facts = _gencriterion_facts(m, n)
    _match(closing, closing_facts)
    _check_gencriterion(closing_facts, facts["step7"]["e_dim_vu"])


def _replay(certificate: Certificate) -> None:
    m, n, quiver = certificate.m, certificate.n, certificate.quiver
    if m == n or not is_degeneration(m, n):
        raise ValueError("Certificate pair is not a proper degeneration.")
    steps = iter(certificate.steps)
    c = codim(m, n)
    if c == 1:
        step = _next_step(steps, CODIM1)
        facts = _codim1_facts(m, n)
        _match(step, facts)
        _check_codim1(facts)
    elif c == 2:
        if not m.is_disjoint(n):
            step = _next_step(steps, AUX1_CASE1, AUX1_CANCEL)
            facts = _aux1_facts(m, n)
            _match(step, facts)
            if step.rule == AUX1_CASE1:
                _require(facts["residual_codim"] == 1, "Residual codimension is not 1.")
            else:
                _require(
                    facts["residual_codim"] == 2
                    and facts["delta_x"] == 0
                    and facts["delta_prime_x"] == 0,
                    "Common summand cannot be cancelled.",
                )
                m, n, _ = split_common(m, n)
                _replay_disjoint(quiver, m, n, steps)
        else:
            _replay_disjoint(quiver, m, n, steps)
    else:
        raise ValueError(f"No certificate covers codimension {c}.")
    if next(steps, None) is not None:
        raise ValueError("Certificate has steps after its conclusion.")


def validate(certificate: Certificate, m: ModuleSpec, n: ModuleSpec) -> bool:
    """
    Recompute every claim of a certificate.

    :param certificate: A :class:`Certificate`, usually loaded from disk.
    :param m: The module :math:`M` the certificate is meant for.
    :param n: The module :math:`N` the certificate is meant for.
    :return: :code:`True` iff the rule chain is well formed and every
             recorded value recomputes identically.
    """
    if certificate.m != m or certificate.n != n:
        logger.info("Certificate is for %s ~> %s", certificate.m, certificate.n)
        return False
    try:
        _replay(certificate)
    except (ValueError, RuntimeError, KeyError, TypeError, AttributeError) as error:
        logger.info("Certificate rejected: %s", error)
        return False
    return True


def certify(
    m: ModuleSpec, n: ModuleSpec, certifier: Optional[Certifier] = None
) -> Verdict:
    return (certifier or Certifier()).certify(m, n)
