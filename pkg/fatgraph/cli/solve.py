"""Solve, oracle and verify subcommands."""

import sys
from pathlib import Path
from typing import Any, Dict, List, Optional

import click

from fatgraph.cli.base import (
    EXIT_INFEASIBLE,
    EXIT_VERIFICATION,
    BaseSubcommand,
    config_option,
    echo_summary,
    load_graph_input,
    verbose_option,
)
from fatgraph.contraction import partition_from_classes
from fatgraph.cubewiring.matching import WiringInstance
from fatgraph.cubewiring.paths import Wiring
from fatgraph.cubewiring.verify import verify_wiring
from fatgraph.domain.errors import InvalidInputError
from fatgraph.domain.types import PROBLEMS, ProblemInstance, SolveResult
from fatgraph.geometry.io import graph_from_dict
from fatgraph.oracle import brute_force
from fatgraph.solvers.registry import solve as run_solver
from fatgraph.solvers.verify import verify_witness
from fatgraph.treedecomp.nice import TraditionalTreeDecomposition
from fatgraph.treedecomp.validate import validate_decomposition
from fatgraph.treedecomp.weighted import WeightedTreeDecomposition
from fatgraph.utils.cli_utils import parse_int_list
from fatgraph.utils.file_utils import read_json, write_json


def problem_options(func):
    """Options shared by solve and oracle."""
    options = [
        click.option("-i", "--input", "input_path", type=click.Path(exists=True, path_type=Path), required=True,
                     metavar="PATH", help="Instance or graph JSON."),
        click.option("-p", "--problem", type=click.Choice(PROBLEMS, case_sensitive=False), required=True,
                     help="Problem to solve."),
        click.option("--r", "r", type=int, default=1, show_default=True, help="Domination radius (rds)."),
        click.option("--terminals", type=str, metavar="LIST", help="Steiner terminals, e.g. 0,3,7 (or a file)."),
        click.option("--budget", type=int, default=None, help="Steiner decision budget."),
        click.option("-o", "--out", type=click.Path(path_type=Path), metavar="PATH", help="Output result JSON."),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def build_instance(input_path: Path, problem: str, r: int, terminals: Optional[str],
                   budget: Optional[int]) -> ProblemInstance:
    graph, objects = load_graph_input(input_path)
    return ProblemInstance(
        graph=graph,
        problem=problem,
        r=r,
        terminals=tuple(parse_int_list(terminals)),
        budget=budget,
        objects=objects,
    )


def result_document(inst: ProblemInstance, result: SolveResult) -> Dict[str, Any]:
    document = result.to_dict()
    document["parameters"] = {"r": inst.r, "terminals": list(inst.terminals), "budget": inst.budget}
    return document


def report_result(inst: ProblemInstance, result: SolveResult, out: Optional[Path], label: str) -> None:
    if result.feasible:
        echo_summary(label, problem=inst.problem, optimum=result.optimum, witness=sorted(result.witness))
    else:
        click.echo(f"{label}: problem={inst.problem} is infeasible")
    if out:
        write_json(out, result_document(inst, result))
        click.echo(f"Written to: {out}")
    if not result.feasible:
        sys.exit(EXIT_INFEASIBLE)


@click.command()
@problem_options
@click.option("--method", type=click.Choice(["blowup", "separator"]), default=None,
              help="Weighted decomposition method. Default: from config.")
@click.option("--gamma", type=str, default=None, help="Clique weight function. Default: from config.")
@click.option("--c", "c", type=float, default=None, help="Base-case constant of the separator recursion.")
@click.option("--prune/--no-prune", default=None, help="Per-class selection caps. Default: from config.")
@click.option("--exact-h0", is_flag=True, help="Exhaustive base-hypercube search regardless of size.")
@config_option
@verbose_option
def solve(input_path, problem, r, terminals, budget, out, method, gamma, c, prune, exact_h0, config, verbose):
    """Solve a problem exactly on an instance or graph.

    \b
    Problems:
      is, vc          independent set, vertex cover
      ds, rds         (distance-r) dominating set
      steiner         node-weighted Steiner tree (needs --terminals)
      mif, fvs        maximum induced forest, feedback vertex set
      cvc             connected vertex cover
      is-separator    independent set by separator recursion (needs geometry)

    \b
    Exit codes: 0 solved, 2 invalid input, 3 infeasible, 4 verification failure.

    \b
    Examples:
      fatgraph solve -i inst.json -p is -o result.json
      fatgraph solve -i graph.json -p rds --r 2
      fatgraph solve -i inst.json -p steiner --terminals 0,3,7 --budget 5
    """
    command = BaseSubcommand(config, verbose)
    try:
        inst = build_instance(input_path, problem, r, terminals, budget)
        settings = command.solver_settings(gamma=gamma, method=method, c=c, exact_h0=exact_h0, prune=prune)
        result = run_solver(inst, **settings)
    except Exception as e:
        command.handle_error(e)
        return
    report_result(inst, result, out, "Result")


@click.command()
@problem_options
@config_option
@verbose_option
def oracle(input_path, problem, r, terminals, budget, out, config, verbose):
    """Solve a small instance by exhaustive enumeration.

    \b
    Examples:
      fatgraph oracle -i inst.json -p ds
    """
    command = BaseSubcommand(config, verbose)
    try:
        inst = build_instance(input_path, problem, r, terminals, budget)
        max_n, max_n_connectivity = command.config.oracle_limits()
        result = brute_force(inst, max_n=max_n, max_n_connectivity=max_n_connectivity)
    except Exception as e:
        command.handle_error(e)
        return
    report_result(inst, result, out, "Oracle")


def verify_document(data: Dict[str, Any], input_path: Optional[Path] = None,
                    partition_path: Optional[Path] = None) -> List[str]:
    """Violations of a wiring, decomposition or result document."""
    if not isinstance(data, dict):
        raise InvalidInputError("Artifact must be a JSON object")
    if "wires" in data:
        instance = WiringInstance.from_dict(read_json(input_path)) if input_path else None
        return verify_wiring(Wiring.from_dict(data), instance)
    if "weighted" in data and "nice" in data:
        source = read_json(partition_path) if partition_path else data
        try:
            graph = graph_from_dict(source["graph"])
            kappa = partition_from_classes(graph, source["partition"]["classes"], source.get("gamma", "log"))
        except (KeyError, TypeError) as e:
            raise InvalidInputError(f"Decomposition needs its graph and partition: {e}")
        reports = [
            validate_decomposition(WeightedTreeDecomposition.from_dict(data["weighted"]), kappa.contracted),
            validate_decomposition(TraditionalTreeDecomposition.from_dict(data["nice"]), graph),
        ]
        return [v for report in reports for v in report.violations]
    if "problem" in data and "optimum" in data:
        if input_path is None:
            raise InvalidInputError("Verifying a result needs --input with its instance or graph")
        result = SolveResult.from_dict(data)
        parameters = data.get("parameters", {})
        graph, objects = load_graph_input(input_path)
        inst = ProblemInstance(
            graph=graph,
            problem=result.problem,
            r=int(parameters.get("r", 1)),
            terminals=tuple(parameters.get("terminals", ())),
            budget=parameters.get("budget"),
            objects=objects,
        )
        if not result.feasible:
            return []
        if not verify_witness(inst, result.witness, result.optimum):
            return [f"Witness {sorted(result.witness)} is not a feasible {result.problem} solution of size {result.optimum}"]
        return []
    raise InvalidInputError("Unrecognized artifact: expected a wiring, decomposition or result document")


@click.command()
@click.argument("artifact", type=click.Path(exists=True, path_type=Path), metavar="ARTIFACT")
@click.option("-i", "--input", "input_path", type=click.Path(exists=True, path_type=Path), metavar="PATH",
              help="Instance/graph for a result, or matching for a wiring.")
@click.option("--partition", "partition_path", type=click.Path(exists=True, path_type=Path), metavar="PATH",
              help="Partition JSON for a decomposition (defaults to the one stored inside it).")
@config_option
@verbose_option
def verify(artifact, input_path, partition_path, config, verbose):
    """Re-validate a wiring, decomposition or result artifact.

    \b
    Examples:
      fatgraph verify wiring.json -i matching.json
      fatgraph verify td.json
      fatgraph verify result.json -i inst.json
    """
    command = BaseSubcommand(config, verbose)
    try:
        violations = verify_document(read_json(artifact), input_path, partition_path)
    except Exception as e:
        command.handle_error(e)
        return
    if violations:
        for violation in violations:
            click.echo(f"  - {violation}", err=True)
        click.echo(f"Verification failed: {len(violations)} violation(s)", err=True)
        sys.exit(EXIT_VERIFICATION)
    click.echo("Verification passed")
