"""
Command line interface.

Every subcommand takes a quiver first: either a Dynkin label such as
:code:`A3` or :code:`D4` for the standard orientation, or the path of a
quiver JSON document. Modules are comma separated multiplicities in root
order, or :code:`@file.json` naming a representation document.

Exit codes:

* 0: success, regularity certified or same orbit
* 1: internal inconsistency
* 2: malformed input or a quiver which is not Dynkin
* 3: not a degeneration, or an invalid certificate
* 4: codimension out of scope
* 5: inconclusive, a search budget ran out
"""

import argparse
import itertools
import json
import logging
import re
import sys
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

from quiverdeg.degenerations.certificate import (
    LONG_PROP,
    RULES,
    Certificate,
    Certifier,
    VerdictKind,
    validate,
)
from quiverdeg.degenerations.extensions import ext_quotient, gencriterion
from quiverdeg.degenerations.order import (
    codim,
    deg_poset,
    delta_table,
    enumerate_specs,
    is_degeneration,
)
from quiverdeg.degenerations.witness import WitnessSearch
from quiverdeg.errors import (
    InconsistencyError,
    NotADegenerationError,
    QuiverError,
    SearchExhaustedError,
)
from quiverdeg.representations.catalog import catalog, decompose, realize
from quiverdeg.representations.quiver import (
    Quiver,
    classify,
    dynkin_quiver,
    euler_form,
    orientations,
    parse_quiver,
    positive_roots,
    quiver_to_dict,
)
from quiverdeg.representations.representation import ModuleSpec
from quiverdeg.serialization import (
    cocycle_components_to_dict,
    dump_json,
    morphism_maps_to_json,
    parse_spec,
    poset_to_gml,
    representation_from_dict,
    spec_to_list,
)

__all__: List[str] = ["JobConfig", "build_parser", "main", "run_sweep"]

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_INPUT = 2
EXIT_INVALID = 3
EXIT_OUT_OF_SCOPE = 4
EXIT_INCONCLUSIVE = 5

_DYNKIN_LABEL = re.compile(r"([ADE])(\d+)")


@dataclass(frozen=True)
class JobConfig:
    """
    One command line invocation.
    """

    command: str
    quiver: str
    operands: Tuple[str, ...] = ()
    seed: int = 0
    trials: int = 500
    zmult: int = 3
    out: Optional[Path] = None
    format: str = "text"
    verbose: int = 0

    def budgets(self) -> Dict[str, int]:
        return {"trials": self.trials, "zmult": self.zmult}

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data["operands"] = list(self.operands)
        data["out"] = str(self.out) if self.out is not None else None
        return data


def load_quiver(text: str) -> Quiver:
    """
    A quiver from a Dynkin label or a JSON document.

    :raises QuiverError: if the file cannot be read or parsed.
    """
    match = _DYNKIN_LABEL.fullmatch(text.strip())
    if match:
        return dynkin_quiver(match.group(1), int(match.group(2)))
    path = Path(text)
    try:
        data = json.loads(path.read_text())
    except (OSError, json.JSONDecodeError) as error:
        raise QuiverError(f"Cannot read quiver {path}: {error}") from None
    return parse_quiver(data)


def _emit(config: JobConfig, text: str, artifact: Optional[str] = None) -> None:
    """
    Print a report; the artifact, or the report itself, goes to
    :code:`--out` when given.
    """
    sys.stdout.write(text)
    if config.out is not None:
        config.out.write_text(artifact if artifact is not None else text)


def _specs(config: JobConfig, quiver: Quiver) -> List[ModuleSpec]:
    return [parse_spec(quiver, operand) for operand in config.operands]


def cmd_roots(config: JobConfig) -> int:
    quiver = load_quiver(config.quiver)
    lines = [
        f"{index}\t{','.join(str(d) for d in root)}"
        for index, root in enumerate(positive_roots(quiver))
    ]
    _emit(config, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_hom(config: JobConfig) -> int:
    quiver = load_quiver(config.quiver)
    x, y = _specs(config, quiver)
    table = catalog(quiver)
    lines = [
        f"[X,Y]\t{table.hom(x, y)}",
        f"[Y,X]\t{table.hom(y, x)}",
        f"Ext(X,Y)\t{table.ext(x, y)}",
        f"Ext(Y,X)\t{table.ext(y, x)}",
        f"disjoint\t{'yes' if x.is_disjoint(y) else 'no'}",
    ]
    if is_degeneration(x, y):
        lines.append(f"codim\t{codim(x, y)}")
        lines.append("index\troot\tdelta\tdelta_prime")
        for index, (root, (d, dp)) in enumerate(
            zip(positive_roots(quiver), delta_table(x, y))
        ):
            lines.append(f"{index}\t{','.join(str(r) for r in root)}\t{d}\t{dp}")
    else:
        lines.append("degeneration\tno")
    _emit(config, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_decompose(config: JobConfig) -> int:
    quiver = load_quiver(config.quiver)
    (path,) = config.operands
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as error:
        raise QuiverError(f"Cannot read representation {path}: {error}") from None
    spec = decompose(representation_from_dict(quiver, data))
    _emit(config, f"{','.join(str(mu) for mu in spec)}\t{spec}\n")
    return EXIT_OK


def cmd_poset(config: JobConfig) -> int:
    quiver = load_quiver(config.quiver)
    (vector,) = config.operands
    try:
        d = [int(part) for part in vector.split(",")]
    except ValueError:
        raise QuiverError(f"Malformed dimension vector '{vector}'.") from None
    poset = deg_poset(quiver, d)
    histogram: Dict[int, int] = {}
    for _, _, c in poset.edges(data="codim"):
        histogram[c] = histogram.get(c, 0) + 1
    summary = [
        f"orbits\t{poset.number_of_nodes()}",
        f"covers\t{poset.number_of_edges()}",
    ]
    summary += [f"codim {c}\t{histogram[c]}" for c in sorted(histogram)]
    if config.format == "graph":
        gml = poset_to_gml(poset)
        if config.out is None:
            sys.stdout.write(gml)
        else:
            config.out.write_text(gml)
            sys.stdout.write("\n".join(summary) + "\n")
        return EXIT_OK
    lines = [
        f"{','.join(str(mu) for mu in spec)}\t{spec}\torbit_dim={orbit}"
        for spec, orbit in poset.nodes(data="orbit_dim")
    ]
    lines += [
        f"{','.join(str(mu) for mu in m)} -> {','.join(str(mu) for mu in n)}\tcodim={c}"
        for m, n, c in poset.edges(data="codim")
    ]
    _emit(config, "\n".join(lines + summary) + "\n")
    return EXIT_OK


def cmd_ext(config: JobConfig) -> int:
    quiver = load_quiver(config.quiver)
    v, u = _specs(config, quiver)
    from_euler = catalog(quiver).hom(v, u) - euler_form(quiver, v.dim, u.dim)
    dimension, representatives = ext_quotient(realize(v), realize(u))
    document = {
        "euler": from_euler,
        "cocycles": dimension,
        "representatives": [
            cocycle_components_to_dict(z.components) for z in representatives
        ],
    }
    _emit(config, dump_json(document))
    return EXIT_OK


def cmd_edim(config: JobConfig) -> int:
    quiver = load_quiver(config.quiver)
    m, n = _specs(config, quiver)
    if not is_degeneration(m, n):
        raise NotADegenerationError(f"{n} is not a degeneration of {m}.")
    outcome = gencriterion(m, n)
    document = {
        "e_dim": outcome.e_dim,
        "codim": outcome.codim,
        "regular_certified": outcome.regular_certified,
    }
    _emit(config, dump_json(document))
    return EXIT_OK


def cmd_witness(config: JobConfig) -> int:
    quiver = load_quiver(config.quiver)
    m, n = _specs(config, quiver)
    search = WitnessSearch(seed=config.seed, trials=config.trials, zmult=config.zmult)
    witness = search.find_zwitness(m, n)
    if witness is None:
        sys.stderr.write(f"No witness within {search!r}.\n")
        return EXIT_INCONCLUSIVE
    document = {
        "seed": config.seed,
        "budgets": config.budgets(),
        "z": spec_to_list(witness.z),
        "f": morphism_maps_to_json(witness.f),
        "g": morphism_maps_to_json(witness.g),
    }
    _emit(config, dump_json(document))
    return EXIT_OK


def cmd_certify(config: JobConfig) -> int:
    quiver = load_quiver(config.quiver)
    m, n = _specs(config, quiver)
    certifier = Certifier(seed=config.seed, trials=config.trials, zmult=config.zmult)
    verdict = certifier.certify(m, n)
    report = f"{verdict}\n"
    if verdict.certificate is not None:
        report += " ".join(verdict.certificate.rules) + "\n"
        document = {
            "verdict": verdict.kind.value,
            "seed": config.seed,
            "budgets": config.budgets(),
            "certificate": verdict.certificate.to_dict(),
        }
        _emit(config, report, dump_json(document))
    else:
        sys.stdout.write(report)
    return verdict.exit_code


def cmd_validate(config: JobConfig) -> int:
    quiver = load_quiver(config.quiver)
    (path,) = config.operands
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as error:
        raise QuiverError(f"Cannot read certificate {path}: {error}") from None
    if isinstance(data, dict) and "certificate" in data:
        data = data["certificate"]
    certificate = Certificate.from_dict(data)
    valid = certificate.quiver == quiver and validate(
        certificate, certificate.m, certificate.n
    )
    sys.stdout.write("valid\n" if valid else "invalid\n")
    return EXIT_OK if valid else EXIT_INVALID


def _dimension_vectors(quiver: Quiver, max_total: int) -> List[Tuple[int, ...]]:
    vectors = [
        d
        for d in itertools.product(range(max_total + 1), repeat=len(quiver.vertices))
        if 1 <= sum(d) <= max_total
    ]
    return sorted(vectors, key=lambda d: (sum(d), d))


def run_sweep(
    family: str, rank: int, max_total: int, certifier: Certifier
) -> Dict[str, Any]:
    """
    Certify every pair of codimension one or two over all orientations of
    a Dynkin diagram and all dimension vectors up to a total dimension.

    :param family: One of :code:`"A"`, :code:`"D"` or :code:`"E"`.
    :param rank: Number of vertices.
    :param max_total: Largest total dimension.
    :param certifier: The :class:`Certifier` carrying seed and budgets.
    :return: The report; identical inputs give identical reports.
    """
    verdicts = {kind.value: 0 for kind in VerdictKind}
    rules = {rule: 0 for rule in RULES}
    criterion = {"equal": 0, "greater": 0}
    failures: List[Dict[str, Any]] = []
    pairs = vectors = 0
    quivers = list(orientations(dynkin_quiver(family, rank)))
    for number, quiver in enumerate(quivers):
        for d in _dimension_vectors(quiver, max_total):
            vectors += 1
            specs = enumerate_specs(quiver, d)
            for m, n in itertools.permutations(specs, 2):
                if not is_degeneration(m, n) or codim(m, n) > 2:
                    continue
                pairs += 1
                record = {
                    "orientation": number,
                    "quiver": quiver_to_dict(quiver),
                    "m": spec_to_list(m),
                    "n": spec_to_list(n),
                }
                try:
                    verdict = certifier.certify(m, n)
                    outcome = gencriterion(m, n)
                except (InconsistencyError, SearchExhaustedError) as error:
                    failures.append({**record, "reason": str(error)})
                    continue
                verdicts[verdict.kind.value] += 1
                criterion["equal" if outcome.regular_certified else "greater"] += 1
                certificate = verdict.certificate
                if certificate is None:
                    failures.append({**record, "reason": str(verdict)})
                    continue
                for rule in certificate.rules:
                    rules[rule] += 1
                if not validate(certificate, m, n):
                    failures.append({**record, "reason": "invalid certificate"})
                needs_equality = codim(m, n) == 1 or LONG_PROP in certificate.rules
                if needs_equality and not outcome.regular_certified:
                    failures.append({**record, "reason": "generic criterion not sharp"})
        logger.info(
            "Orientation %d of %d done, %d pairs", number + 1, len(quivers), pairs
        )
    return {
        "family": f"{family}{rank}",
        "max_total_dim": max_total,
        "seed": certifier.seed,
        "budgets": {"trials": certifier.trials, "zmult": certifier.zmult},
        "orientations": len(quivers),
        "dimension_vectors": vectors,
        "pairs": pairs,
        "verdicts": verdicts,
        "rules": rules,
        "gencriterion": criterion,
        "failures": failures,
    }


def cmd_sweep(config: JobConfig) -> int:
    match = _DYNKIN_LABEL.fullmatch(config.quiver.strip())
    if not match:
        raise QuiverError(f"Sweep needs a Dynkin label, not '{config.quiver}'.")
    (max_total,) = config.operands
    certifier = Certifier(seed=config.seed, trials=config.trials, zmult=config.zmult)
    report = run_sweep(match.group(1), int(match.group(2)), int(max_total), certifier)
    _emit(config, dump_json(report))
    inconclusive = report["verdicts"][VerdictKind.INCONCLUSIVE.value]
    if len(report["failures"]) > inconclusive:
        return EXIT_INVALID
    return EXIT_INCONCLUSIVE if inconclusive else EXIT_OK


_COMMANDS = {
    "roots": (cmd_roots, (), "List the positive roots in index order."),
    "hom": (cmd_hom, ("x", "y"), "Hom and Ext dimensions and the delta table."),
    "decompose": (
        cmd_decompose,
        ("representation",),
        "Decompose a representation file.",
    ),
    "poset": (
        cmd_poset,
        ("dimension",),
        "The degeneration poset of a dimension vector.",
    ),
    "ext": (cmd_ext, ("v", "u"), "Ext^1(V, U) from the Euler form and from cocycles."),
    "E-dim": (cmd_edim, ("m", "n"), "The generic regularity criterion for a pair."),
    "witness": (
        cmd_witness,
        ("m", "n"),
        "An exact sequence witnessing a degeneration.",
    ),
    "certify": (cmd_certify, ("m", "n"), "Certify regularity in codimension two."),
    "validate": (cmd_validate, ("certificate",), "Recheck a certificate file."),
    "sweep": (
        cmd_sweep,
        ("max_total_dim",),
        "Certify all small pairs of a Dynkin type.",
    ),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--seed", type=int, default=0, help="Seed of randomized searches."
    )
    common.add_argument(
        "--budget-trials",
        type=int,
        default=500,
        help="Random combinations tried after each basis sweep.",
    )
    common.add_argument(
        "--budget-zmult",
        type=int,
        default=3,
        help="Largest multiplicity in generic witness candidates.",
    )
    common.add_argument("--out", type=Path, default=None, help="Output file.")
    common.add_argument(
        "--format", choices=("text", "graph"), default="text", help="Poset output."
    )
    common.add_argument(
        "-v", "--verbose", action="count", default=0, help="More log output on stderr."
    )

    parser = argparse.ArgumentParser(
        prog="quiverdeg",
        description="Degenerations of representations of Dynkin quivers.",
    )
    commands = parser.add_subparsers(dest="command", required=True)
    for name, (_, operands, summary) in _COMMANDS.items():
        sub = commands.add_parser(name, parents=[common], help=summary)
        sub.add_argument("quiver", help="Dynkin label like D4, or a quiver JSON file.")
        for operand in operands:
            sub.add_argument(operand)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    _, operands, _ = _COMMANDS[args.command]
    config = JobConfig(
        command=args.command,
        quiver=args.quiver,
        operands=tuple(getattr(args, operand) for operand in operands),
        seed=args.seed,
        trials=args.budget_trials,
        zmult=args.budget_zmult,
        out=args.out,
        format=args.format,
        verbose=args.verbose,
    )
    logging.basicConfig(
        level=max(logging.WARNING - 10 * config.verbose, logging.DEBUG),
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
    handler = _COMMANDS[config.command][0]
    try:
        if config.command != "sweep" and classify(load_quiver(config.quiver)) is None:
            raise QuiverError(f"{config.quiver} is not a Dynkin quiver.")
        return handler(config)
    except NotADegenerationError as error:
        sys.stderr.write(f"quiverdeg: {error}\n")
        return EXIT_INVALID
    except (QuiverError, ValueError, TypeError) as error:
        sys.stderr.write(f"quiverdeg: {error}\n")
        return EXIT_INPUT
    except SearchExhaustedError as error:
        sys.stderr.write(f"quiverdeg: {error}\n")
        return EXIT_INCONCLUSIVE
    except InconsistencyError as error:
        logger.exception("Internal inconsistency")
        sys.stderr.write(f"quiverdeg: internal error: {error}\n")
        return EXIT_INTERNAL
