"""End-to-end CLI tests, driven through the HOMTREES_CLI binary."""

import os
import subprocess

import pytest

CLI = os.environ.get("HOMTREES_CLI")

pytestmark = pytest.mark.skipif(CLI is None, reason="HOMTREES_CLI not set")


def run(*args, **kwargs):
    return subprocess.run([CLI, *args], capture_output=True, text=True, **kwargs)


@pytest.fixture()
def graphs(tmp_path):
    (tmp_path / "S3.txt").write_text("4 3\n0 1\n0 2\n0 3\n")
    (tmp_path / "P2.txt").write_text("3 2\n0 1\n1 2\n")
    (tmp_path / "P4.txt").write_text("5 4\n0 1\n1 2\n2 3\n3 4\n")
    (tmp_path / "A.txt").write_text("2\n1 1\n1 2\n")
    return tmp_path


def test_count(graphs):
    res = run("count", "--source", str(graphs / "S3.txt"),
              "--image", str(graphs / "P2.txt"))
    assert res.returncode == 0
    assert res.stdout == "10\n"


def test_count_structured_schema(graphs):
    res = run("count", "--source", str(graphs / "S3.txt"),
              "--image", str(graphs / "P2.txt"), "--format", "structured")
    assert res.returncode == 0
    assert res.stdout.splitlines()[0] == "homtrees/v1 count"
    assert "value 10" in res.stdout


def test_verify_star_equality(graphs):
    res = run("verify", "--source", str(graphs / "S3.txt"),
              "--image", str(graphs / "P2.txt"))
    assert res.returncode == 0
    assert "PASS" in res.stdout


def test_transform_check_and_planted_violation(graphs):
    cert = graphs / "c.cert"
    res = run("transform", "--tree", str(graphs / "P4.txt"),
              "--image", str(graphs / "P2.txt"), "--certify", str(cert))
    assert res.returncode == 0
    assert run("check", "--certificate", str(cert)).returncode == 0

    mutated = graphs / "m.cert"
    mutated.write_text(cert.read_text().replace("hom-after 18", "hom-after 1"))
    planted = run("check", "--certificate", str(mutated))
    assert planted.returncode == 1


def test_trees_determinism():
    a = run("trees", "--k", "6", "--format", "structured")
    b = run("trees", "--k", "6", "--format", "structured")
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout
    assert a.stdout.splitlines()[1] == "k 6"


def test_order_requires_seed_for_random():
    res = run("order", "--k", "3", "--suite", "random:4,4,0.5")
    assert res.returncode == 2


def test_order_dot(tmp_path):
    dot = tmp_path / "h.dot"
    res = run("order", "--k", "3", "--suite", "all:3", "--dot", str(dot))
    assert res.returncode == 0
    text = dot.read_text()
    assert text.startswith("digraph hasse {")
    assert "->" in text


def test_brooms(graphs):
    res = run("brooms", "--k", "5", "--image", str(graphs / "P2.txt"))
    assert res.returncode == 0
    assert "B(2,2) hom = 16" in res.stdout
    assert "B(3,1) hom = 20" in res.stdout


def test_hoffman(graphs):
    res = run("hoffman", "--matrix", str(graphs / "A.txt"), "--k", "3")
    assert res.returncode == 0
    assert "34 <= 35 PASS" in res.stdout


def test_usage_errors(graphs):
    assert run("count", "--source", "missing.txt",
               "--image", str(graphs / "P2.txt")).returncode == 2
    assert run("nonsense").returncode == 2
    assert run("count").returncode == 2


def test_guard_env(graphs):
    (graphs / "K5.txt").write_text(
        "5 10\n" + "".join(f"{i} {j}\n" for i in range(5) for j in range(i + 1, 5))
    )
    env = dict(os.environ, HOMTREES_GUARD="2")
    res = subprocess.run(
        [CLI, "count", "--source", str(graphs / "K5.txt"),
         "--image", str(graphs / "K5.txt")],
        capture_output=True, text=True, env=env)
    assert res.returncode == 2
    assert "guard" in res.stderr
