"""Tests for the command-line interface."""

import json

import networkx as nx
import pytest
import yaml
from click.testing import CliRunner

from fatgraph.cli import cli
from fatgraph.cli.base import EXIT_INFEASIBLE, EXIT_INVALID, EXIT_VERIFICATION
from fatgraph.cli.selftest import random_partition_set
from fatgraph.cubewiring import WiringInstance
from fatgraph.geometry.io import graph_to_dict

from tests.conftest import graph_of


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def config_file(temp_dir):
    """Quiet config so runs never read the user's home directory."""
    path = temp_dir / "config.yaml"
    path.write_text(yaml.safe_dump({"logging": {"level": "ERROR"}}))
    return str(path)


@pytest.fixture
def instance_file(runner, temp_dir, config_file):
    path = temp_dir / "inst.json"
    result = runner.invoke(cli, ["gen", "--d", "2", "--n", "12", "--seed", "3", "-o", str(path),
                                 "--config", config_file])
    assert result.exit_code == 0, result.output
    return path


def test_version_and_help(runner):
    """Test the group's version and help output."""
    assert runner.invoke(cli, ["--version"]).exit_code == 0
    result = runner.invoke(cli, ["-h"])
    assert result.exit_code == 0
    assert "solve" in result.output
    assert "reduce-selftest" not in result.output


def test_gen_writes_instance(instance_file):
    """Test that gen writes a 12-object planar instance."""
    data = json.loads(instance_file.read_text())
    assert data["dimension"] == 2
    assert len(data["objects"]) == 12


def test_graph_prints_json(runner, instance_file, config_file):
    """Test the graph command without an output file."""
    result = runner.invoke(cli, ["graph", "-i", str(instance_file), "--config", config_file])
    assert result.exit_code == 0
    assert json.loads(result.output)["n"] == 12


def test_solve_and_verify_result(runner, instance_file, temp_dir, config_file):
    """Test solve, oracle agreement and result verification."""
    out = temp_dir / "result.json"
    result = runner.invoke(cli, ["solve", "-i", str(instance_file), "-p", "is", "-o", str(out),
                                 "--config", config_file])
    assert result.exit_code == 0, result.output
    document = json.loads(out.read_text())
    oracle_out = temp_dir / "oracle.json"
    result = runner.invoke(cli, ["oracle", "-i", str(instance_file), "-p", "is", "-o", str(oracle_out),
                                 "--config", config_file])
    assert result.exit_code == 0
    assert json.loads(oracle_out.read_text())["optimum"] == document["optimum"]

    result = runner.invoke(cli, ["verify", str(out), "-i", str(instance_file), "--config", config_file])
    assert result.exit_code == 0
    assert "Verification passed" in result.output


def test_tampered_result_fails_verification(runner, instance_file, temp_dir, config_file):
    """Test that a result with a wrong optimum exits with the verification code."""
    out = temp_dir / "result.json"
    runner.invoke(cli, ["solve", "-i", str(instance_file), "-p", "vc", "-o", str(out), "--config", config_file])
    document = json.loads(out.read_text())
    document["optimum"] += 1
    out.write_text(json.dumps(document))
    result = runner.invoke(cli, ["verify", str(out), "-i", str(instance_file), "--config", config_file])
    assert result.exit_code == EXIT_VERIFICATION


def test_solve_on_graph_document(runner, write_doc, config_file):
    """Test solving r-domination on a plain graph document."""
    path = write_doc("c6.json", graph_to_dict(graph_of(nx.cycle_graph(6))))
    result = runner.invoke(cli, ["solve", "-i", str(path), "-p", "rds", "--r", "2", "--config", config_file])
    assert result.exit_code == 0, result.output
    assert "optimum=2" in result.output


def test_infeasible_steiner_exit_code(runner, write_doc, config_file):
    """Test exit code 3 for terminals in different components."""
    graph = nx.disjoint_union(nx.path_graph(2), nx.path_graph(2))
    path = write_doc("split.json", graph_to_dict(graph_of(graph)))
    result = runner.invoke(cli, ["solve", "-i", str(path), "-p", "steiner", "--terminals", "0,3",
                                 "--config", config_file])
    assert result.exit_code == EXIT_INFEASIBLE


def test_invalid_input_exit_code(runner, write_doc, config_file):
    """Test exit code 2 for bad terminals and oversized oracle runs."""
    path = write_doc("p3.json", graph_to_dict(graph_of(nx.path_graph(3))))
    result = runner.invoke(cli, ["solve", "-i", str(path), "-p", "steiner", "--terminals", "0,9",
                                 "--config", config_file])
    assert result.exit_code == EXIT_INVALID
    big = write_doc("p30.json", graph_to_dict(graph_of(nx.path_graph(30))))
    result = runner.invoke(cli, ["oracle", "-i", str(big), "-p", "is", "--config", config_file])
    assert result.exit_code == EXIT_INVALID
    assert "brute-force limit" in result.output


def test_separator_needs_geometry(runner, write_doc, config_file):
    """Test that is-separator on a plain graph is refused."""
    path = write_doc("p3.json", graph_to_dict(graph_of(nx.path_graph(3))))
    result = runner.invoke(cli, ["solve", "-i", str(path), "-p", "is-separator", "--config", config_file])
    assert result.exit_code == EXIT_INVALID


def test_separate_partition_decompose_verify(runner, instance_file, temp_dir, config_file):
    """Test the separator, partition and decomposition pipeline end to end."""
    sep = temp_dir / "sep.json"
    svg = temp_dir / "sep.svg"
    result = runner.invoke(cli, ["separate", "-i", str(instance_file), "-o", str(sep), "--svg", str(svg),
                                 "--config", config_file])
    assert result.exit_code == 0, result.output
    assert "cliques" in json.loads(sep.read_text())
    assert svg.exists()

    part = temp_dir / "part.json"
    result = runner.invoke(cli, ["partition", "-i", str(instance_file), "-o", str(part), "--config", config_file])
    assert result.exit_code == 0, result.output

    for method in ("blowup", "separator"):
        td = temp_dir / f"td-{method}.json"
        result = runner.invoke(cli, ["decompose", "-i", str(part), "--method", method, "-o", str(td),
                                     "--config", config_file])
        assert result.exit_code == 0, result.output
        result = runner.invoke(cli, ["verify", str(td), "--config", config_file])
        assert result.exit_code == 0, result.output


def test_wire_and_verify(runner, temp_dir, write_doc, config_file):
    """Test wiring a given matching and checking it twice."""
    matching = write_doc("m.json", WiringInstance.random_permutation(3, (2, 2), seed=1).to_dict())
    out = temp_dir / "wiring.json"
    svg = temp_dir / "layer.svg"
    result = runner.invoke(cli, ["wire", "--matching", str(matching), "-o", str(out),
                                 "--svg-layer", "2", "--svg", str(svg), "--config", config_file])
    assert result.exit_code == 0, result.output
    assert svg.exists()
    result = runner.invoke(cli, ["wire", "verify", str(out), "--matching", str(matching), "--config", config_file])
    assert result.exit_code == 0, result.output
    assert "Wiring valid" in result.output
    result = runner.invoke(cli, ["verify", str(out), "-i", str(matching), "--config", config_file])
    assert result.exit_code == 0


def test_broken_wiring_exit_code(runner, temp_dir, config_file):
    """Test that a wiring with a jump exits with the verification code."""
    out = temp_dir / "wiring.json"
    runner.invoke(cli, ["wire", "--n", "2,2", "-o", str(out), "--config", config_file])
    document = json.loads(out.read_text())
    path = document["wires"][0]["path"]
    document["wires"][0]["path"] = [path[0], path[-1]]
    out.write_text(json.dumps(document))
    result = runner.invoke(cli, ["wire", "verify", str(out), "--config", config_file])
    assert result.exit_code == EXIT_VERIFICATION


def test_wire_rejects_planar_grid(runner, config_file):
    """Test exit code 2 for d=2 wiring."""
    result = runner.invoke(cli, ["wire", "--d", "2", "--n", "4", "--config", config_file])
    assert result.exit_code == EXIT_INVALID


def test_bench_writes_tables(runner, temp_dir, config_file):
    """Test a tiny independent-set sweep with oracle agreement."""
    csv_path = temp_dir / "is.csv"
    json_path = temp_dir / "is.json"
    result = runner.invoke(cli, ["bench", "is", "--n", "6,8", "--seeds", "2", "--csv", str(csv_path),
                                 "--json", str(json_path), "--config", config_file])
    assert result.exit_code == 0, result.output
    assert "4 run(s)" in result.output
    summary = json.loads(json_path.read_text())["summary"]
    assert all(row["oracle_agree"] == row["oracle_checked"] == 2 for row in summary)
    assert csv_path.read_text().startswith("suite,")


def test_reduce_selftest(runner):
    """Test the hidden reduce self-check."""
    result = runner.invoke(cli, ["reduce-selftest", "--count", "40", "--max-universe", "5"])
    assert result.exit_code == 0
    assert "40/40 partition sets passed" in result.output


def test_random_partition_set_sizes():
    """Test the self-check's random partition sets."""
    import random

    partitions = random_partition_set(4, random.Random(0))
    assert 1 <= len(partitions) <= 12
    assert all(len(p) == 4 for p in partitions.entries)


def test_config_show(runner, config_file):
    """Test that config show prints merged defaults."""
    result = runner.invoke(cli, ["config", "show", "--config", config_file])
    assert result.exit_code == 0
    assert "exact_h0_limit: 2000" in result.output
    assert "level: ERROR" in result.output


def test_config_show_single_key(runner, config_file):
    """Test printing one value and rejecting an unknown key."""
    result = runner.invoke(cli, ["config", "show", "--config", config_file, "--key", "oracle.max_n"])
    assert result.exit_code == 0
    assert result.output.strip() == "24"
    result = runner.invoke(cli, ["config", "show", "--config", config_file, "--key", "oracle.nothing"])
    assert result.exit_code == 2
