"""
Tests for the command line interface.
"""

import json
import pathlib

import pytest

from quiverdeg.cli import JobConfig, build_parser, main, run_sweep
from quiverdeg.degenerations.certificate import Certifier

DATA = pathlib.Path(__file__).parent.resolve() / "data"


def test_job_config() -> None:
    """
    Ensures default invocation parameters have not changed.
    """
    config = JobConfig(command="roots", quiver="A2")
    assert config.seed == 0
    assert config.trials == 500
    assert config.zmult == 3
    assert config.format == "text"
    assert config.budgets() == {"trials": 500, "zmult": 3}
    assert config.to_dict()["out"] is None

    args = build_parser().parse_args(["certify", "D4", "1,0", "0,1", "--seed", "4"])
    assert args.seed == 4
    assert args.budget_trials == 500


def test_roots(capsys: pytest.CaptureFixture[str]) -> None:
    """
    Roots are listed in index order.
    """
    assert main(["roots", "A2"]) == 0
    assert capsys.readouterr().out == "0\t0,1\n1\t1,0\n2\t1,1\n"

    assert main(["roots", str(DATA / "a2_reversed.json")]) == 0
    assert capsys.readouterr().out == "0\t0,1\n1\t1,0\n2\t1,1\n"


def test_hom(capsys: pytest.CaptureFixture[str]) -> None:
    """
    Hom and Ext dimensions with the delta table of a degeneration.
    """
    assert main(["hom", "A2", "0,0,2", "1,1,1"]) == 0
    out = capsys.readouterr().out
    assert "[X,Y]\t4\n" in out
    assert "Ext(Y,X)\t0\n" in out
    assert "codim\t1\n" in out
    assert "0\t0,1\t1\t0\n" in out

    assert main(["hom", "A2", "1,1,1", "0,0,2"]) == 0
    assert "degeneration\tno\n" in capsys.readouterr().out


def test_decompose(capsys: pytest.CaptureFixture[str]) -> None:
    """
    A representation file is decomposed into indecomposables.
    """
    assert main(["decompose", "A2", str(DATA / "rank_one.json")]) == 0
    assert capsys.readouterr().out == "1,1,1\t(0,1) + (1,0) + (1,1)\n"


def test_poset(capsys: pytest.CaptureFixture[str], tmp_path: pathlib.Path) -> None:
    """
    The poset of dimension vector (2, 2) has three orbits and two covers.
    """
    assert main(["poset", "A2", "2,2"]) == 0
    out = capsys.readouterr().out
    assert "orbits\t3\n" in out
    assert "covers\t2\n" in out
    assert "codim 1\t1\n" in out
    assert "codim 3\t1\n" in out
    assert "1,1,1\t(0,1) + (1,0) + (1,1)\torbit_dim=3\n" in out

    path = tmp_path / "poset.gml"
    assert main(["poset", "A2", "2,2", "--format", "graph", "--out", str(path)]) == 0
    assert path.read_text().startswith("graph [")
    assert "orbits\t3\n" in capsys.readouterr().out


def test_ext_and_edim(capsys: pytest.CaptureFixture[str]) -> None:
    """
    Ext from the Euler form and from cocycles agree.
    """
    assert main(["ext", "A2", "0,1,0", "1,0,0"]) == 0
    document = json.loads(capsys.readouterr().out)
    assert document["euler"] == document["cocycles"] == 1
    assert document["representatives"] == [{"a1": [["1/1"]]}]

    assert main(["E-dim", "A2", "0,0,2", "1,1,1"]) == 0
    document = json.loads(capsys.readouterr().out)
    assert document == {"e_dim": 1, "codim": 1, "regular_certified": True}

    assert main(["E-dim", "A2", "1,1,1", "0,0,2"]) == 3


def test_witness(capsys: pytest.CaptureFixture[str]) -> None:
    """
    A witness sequence is printed with seed and budgets.
    """
    assert main(["witness", "A2", "0,0,2", "1,1,1", "--seed", "2"]) == 0
    document = json.loads(capsys.readouterr().out)
    assert document["seed"] == 2
    assert document["budgets"] == {"trials": 500, "zmult": 3}
    assert document["z"] == [1, 0, 0]

    assert main(["witness", "A2", "1,1,1", "0,0,2"]) == 3


def test_certify_and_validate(
    capsys: pytest.CaptureFixture[str], tmp_path: pathlib.Path
) -> None:
    """
    Certificates written by certify pass validate until they are altered.
    """
    path = tmp_path / "certificate.json"
    assert main(["certify", "A2", "0,0,2", "1,1,1", "--out", str(path)]) == 0
    assert capsys.readouterr().out == "RegCertified\nCodim1\n"
    document = json.loads(path.read_text())
    assert document["verdict"] == "RegCertified"
    assert document["seed"] == 0
    assert document["certificate"]["m"] == [0, 0, 2]

    assert main(["validate", "A2", str(path)]) == 0
    assert capsys.readouterr().out == "valid\n"

    document["certificate"]["steps"][0]["data"]["delta_m"] = 1
    path.write_text(json.dumps(document))
    assert main(["validate", "A2", str(path)]) == 3
    assert capsys.readouterr().out == "invalid\n"

    assert main(["validate", "A3", str(path)]) == 3


def test_certify_verdicts(capsys: pytest.CaptureFixture[str]) -> None:
    """
    Exit codes of the verdicts outside certification.
    """
    assert main(["certify", "A2", "1,1,1", "2,2,0"]) == 4
    assert capsys.readouterr().out == "CodimOutOfScope(3)\n"
    assert main(["certify", "A2", "2,2,0", "1,1,1"]) == 3
    assert capsys.readouterr().out == "NotDegeneration\n"
    assert main(["certify", "A2", "1,1,1", "1,1,1"]) == 0
    assert capsys.readouterr().out == "SameOrbit\n"


def test_input_errors(capsys: pytest.CaptureFixture[str]) -> None:
    """
    Malformed input and non-Dynkin quivers exit with code 2.
    """
    assert main(["roots", str(DATA / "kronecker.json")]) == 2
    assert "not a Dynkin quiver" in capsys.readouterr().err
    assert main(["roots", str(DATA / "missing.json")]) == 2
    assert main(["hom", "A2", "0,x,2", "1,1,1"]) == 2
    assert main(["hom", "A2", "0,2", "1,1,1"]) == 2
    assert main(["poset", "A2", "2,two"]) == 2
    assert main(["sweep", str(DATA / "a2_reversed.json"), "2"]) == 2
    assert main(["roots", "B3"]) == 2

    with pytest.raises(SystemExit):
        main(["roots"])


def test_sweep(capsys: pytest.CaptureFixture[str]) -> None:
    """
    Both orientations of A2 up to total dimension two have one codimension
    one pair each.
    """
    assert main(["sweep", "A2", "2"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["orientations"] == 2
    assert report["dimension_vectors"] == 10
    assert report["pairs"] == 2
    assert report["verdicts"]["RegCertified"] == 2
    assert report["rules"]["Codim1"] == 2
    assert report["gencriterion"] == {"equal": 2, "greater": 0}
    assert report["failures"] == []


def test_sweep_is_deterministic() -> None:
    """
    Identical seeds and budgets give identical reports.
    """
    first = run_sweep("A", 3, 3, Certifier(seed=1))
    second = run_sweep("A", 3, 3, Certifier(seed=1))
    assert first == second
    assert first["failures"] == []
    assert first["verdicts"]["Inconclusive"] == 0


@pytest.mark.slow
@pytest.mark.parametrize("family, rank", [("A", 4), ("D", 4)])
def test_sweep_to_dimension_six(family: str, rank: int) -> None:
    """
    Every codimension one or two pair over all orientations of A4 and D4
    up to total dimension six is certified, and over D4 the long
    construction is reached.
    """
    report = run_sweep(family, rank, 6, Certifier())
    assert report["orientations"] == 8
    assert report["failures"] == []
    assert report["verdicts"]["RegCertified"] == report["pairs"]
    if family == "D":
        assert report["rules"]["SpecialUV"] > 0
        assert report["rules"]["LongProp"] > 0
        assert report["rules"]["GenCriterion"] == report["rules"]["LongProp"]
