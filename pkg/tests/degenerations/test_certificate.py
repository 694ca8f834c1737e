"""
Tests for the regularity certifier and certificate validation.
"""

import json
from typing import List

import pytest

from quiverdeg.degenerations.certificate import (
    RULES,
    Certificate,
    Certifier,
    Step,
    Verdict,
    VerdictKind,
    certify,
    validate,
)
from quiverdeg.degenerations.order import codim, enumerate_specs, is_degeneration
from quiverdeg.errors import QuiverError
from quiverdeg.representations.quiver import dynkin_quiver
from quiverdeg.representations.representation import ModuleSpec

A2 = dynkin_quiver("A", 2)
A3 = dynkin_quiver("A", 3)
D4 = dynkin_quiver("D", 4)

LONG_PAIR = (
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
    [0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0],
)


@pytest.mark.parametrize(
    "quiver, m, n, rules",
    [
        (A2, [0, 0, 2], [1, 1, 1], ["Codim1"]),
        (A2, [0, 1, 1], [1, 2, 0], ["Aux1-Case1"]),
        (A3, [0, 0, 0, 0, 0, 1], [1, 0, 0, 0, 1, 0], ["Codim1"]),
        (A3, [0, 0, 0, 0, 0, 1], [1, 1, 1, 0, 0, 0], ["Aux2-S3"]),
        (A3, [0, 0, 0, 0, 0, 2], [1, 1, 1, 0, 0, 1], ["Aux1-Cancel", "Aux2-S3"]),
        (
            D4,
            *LONG_PAIR,
            ["SpecialUV", "FromUtoV", "LongProp", "GenCriterion"],
        ),
    ],
)
def test_certify_rules(quiver, m: List[int], n: List[int], rules: List[str]) -> None:
    """
    Small pairs are certified by the expected rule chains and the
    certificates validate.
    """
    m_spec, n_spec = ModuleSpec(quiver, m), ModuleSpec(quiver, n)
    verdict = Certifier().certify(m_spec, n_spec)
    assert verdict.kind is VerdictKind.REG_CERTIFIED
    assert verdict.exit_code == 0
    assert str(verdict) == "RegCertified"
    assert verdict.certificate is not None
    assert verdict.certificate.rules == rules
    assert validate(verdict.certificate, m_spec, n_spec)


def test_verdicts_outside_certification() -> None:
    """
    Same orbit, non-degenerations and codimension three.
    """
    generic = ModuleSpec(A2, [0, 0, 2])
    middle = ModuleSpec(A2, [1, 1, 1])
    zero = ModuleSpec(A2, [2, 2, 0])

    assert certify(middle, middle).kind is VerdictKind.SAME_ORBIT
    assert certify(middle, middle).exit_code == 0

    verdict = certify(zero, middle)
    assert verdict.kind is VerdictKind.NOT_DEGENERATION
    assert verdict.exit_code == 3
    assert verdict.certificate is None

    verdict = certify(middle, zero)
    assert verdict.kind is VerdictKind.CODIM_OUT_OF_SCOPE
    assert verdict.codim == 3
    assert verdict.exit_code == 4
    assert str(verdict) == "CodimOutOfScope(3)"

    assert certify(generic, zero).codim == 4

    inconclusive = Verdict(VerdictKind.INCONCLUSIVE, reason="budget")
    assert str(inconclusive) == "Inconclusive(budget)"
    assert inconclusive.exit_code == 5


def test_certifier_defaults() -> None:
    """
    Ensures default certifier budgets have not changed.
    """
    certifier = Certifier()
    assert certifier.seed == 0
    assert certifier.trials == 500
    assert certifier.zmult == 3
    assert certifier.__repr__() == "Certifier(seed=0, trials=500, zmult=3)"
    assert certifier.__str__() == (
        "Certifier Parameters: \n\n" "seed: 0\n" "trials: 500\n" "zmult: 3\n"
    )

    with pytest.raises(ValueError):
        Certifier(trials=-5)


def test_certificate_round_trip() -> None:
    """
    A certificate written as JSON reloads equal and still validates.
    """
    m = ModuleSpec(A3, [0, 0, 0, 0, 0, 2])
    n = ModuleSpec(A3, [1, 1, 1, 0, 0, 1])
    certificate = certify(m, n).certificate
    assert certificate is not None

    text = json.dumps(certificate.to_dict())
    reloaded = Certificate.from_dict(json.loads(text))
    assert reloaded == certificate
    assert len(reloaded) == 2
    assert reloaded.quiver == A3
    assert validate(reloaded, m, n)


def test_tampered_certificates_fail() -> None:
    """
    Altered invariants, missing or extra steps and wrong pairs are rejected.
    """
    m = ModuleSpec(A2, [0, 0, 2])
    n = ModuleSpec(A2, [1, 1, 1])
    certificate = certify(m, n).certificate
    assert certificate is not None

    data = json.loads(json.dumps(certificate.to_dict()))
    data["steps"][0]["data"]["delta_n"] = 2
    assert not validate(Certificate.from_dict(data), m, n)

    data = json.loads(json.dumps(certificate.to_dict()))
    data["steps"][0]["rule"] = "Aux2-S3"
    assert not validate(Certificate.from_dict(data), m, n)

    data = json.loads(json.dumps(certificate.to_dict()))
    data["steps"].append(data["steps"][0])
    assert not validate(Certificate.from_dict(data), m, n)

    assert not validate(Certificate(m, n, []), m, n)
    assert not validate(certificate, m, ModuleSpec(A2, [2, 2, 0]))

    m = ModuleSpec(A3, [0, 0, 0, 0, 0, 2])
    n = ModuleSpec(A3, [1, 1, 1, 0, 0, 1])
    certificate = certify(m, n).certificate
    assert certificate is not None
    data = json.loads(json.dumps(certificate.to_dict()))
    del data["steps"][1]
    assert not validate(Certificate.from_dict(data), m, n)

    data = json.loads(json.dumps(certificate.to_dict()))
    data["steps"][1]["data"]["summands"][0]["delta"] += 1
    assert not validate(Certificate.from_dict(data), m, n)

    m, n = ModuleSpec(D4, LONG_PAIR[0]), ModuleSpec(D4, LONG_PAIR[1])
    certificate = certify(m, n).certificate
    assert certificate is not None
    position = certificate.rules.index("LongProp")

    data = json.loads(json.dumps(certificate.to_dict()))
    data["steps"][position]["data"]["step7"]["delta_prime_sigma3_v"] += 1
    assert not validate(Certificate.from_dict(data), m, n)

    data = json.loads(json.dumps(certificate.to_dict()))
    data["steps"][position]["data"]["sigma3"] = data["steps"][position]["data"][
        "sigma1"
    ]
    assert not validate(Certificate.from_dict(data), m, n)

    data = json.loads(json.dumps(certificate.to_dict()))
    del data["steps"][position + 1]
    assert not validate(Certificate.from_dict(data), m, n)


def test_certificate_documents() -> None:
    """
    Malformed certificate documents raise :class:`QuiverError`.
    """
    with pytest.raises(QuiverError):
        Certificate.from_dict([])

    with pytest.raises(QuiverError):
        Certificate.from_dict({"quiver": {"vertices": ["1"]}, "m": [1]})

    with pytest.raises(ValueError):
        Step("Unknown")

    assert [Step(rule).to_dict()["rule"] for rule in RULES] == list(RULES)
    assert len(RULES) == 9


def test_certifier_over_small_dimensions() -> None:
    """
    Every pair of codimension one or two over A3 up to total dimension
    four is certified and validates.
    """
    certifier = Certifier()
    for d in [(1, 1, 1), (1, 2, 1), (2, 1, 1), (1, 1, 2), (2, 2, 0), (0, 2, 2)]:
        specs = enumerate_specs(A3, d)
        for m in specs:
            for n in specs:
                if m == n or not is_degeneration(m, n) or codim(m, n) > 2:
                    continue
                verdict = certifier.certify(m, n)
                assert verdict.kind is VerdictKind.REG_CERTIFIED
                assert verdict.certificate is not None
                assert validate(verdict.certificate, m, n)
