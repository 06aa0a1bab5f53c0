import subprocess
import sys

import pytest

from succulent import cli, fixtures, io
from succulent.oracle import InstanceResult


@pytest.fixture
def grf(tmp_path):
    def write(name, text=None):
        if text is None:
            out = {**fixtures.VERTEX_FIXTURES, **fixtures.EDGE_FIXTURES}[name]()
            g, spec = out if isinstance(out, tuple) else (out, None)
            text = io.write_grf(g, spec)
        p = tmp_path / f"{name}.grf"
        p.write_text(text)
        return str(p)

    return write


def test_verify_f1(grf, capsys):
    assert cli.main(["verify", grf("wheel4")]) == 0
    out = capsys.readouterr().out
    assert "PASS" in out and "1/1 instances verified" in out


def test_cactus_finite_c4(grf, capsys):
    assert cli.main(["cactus", "--mode", "finite", grf("c4")]) == 0
    out = capsys.readouterr().out
    assert out.startswith('graph "cactus"') and out.count(" -- ") == 4


def test_disconnected_exit_2(grf, capsys):
    path = grf("dis", "e a b\ne c d\nend A a\nend C c\n")
    assert cli.main(["analyze", path]) == 2
    assert "graph not connected" in capsys.readouterr().err


def test_parse_error_exit_2(grf, capsys):
    assert cli.main(["analyze", grf("bad", "e a b\nend A x\nend B b\n")]) == 2
    assert "line 2" in capsys.readouterr().err


def test_budget_exit_3(grf, capsys):
    assert cli.main(["analyze", "--budget", "10", grf("wheel4")]) == 3


def test_verification_failure_exit_4(grf, capsys, monkeypatch):
    fake = InstanceResult("x", False, [("theorem", False, "forced")])
    monkeypatch.setattr(cli, "verify_instance", lambda *a, **k: fake)
    assert cli.main(["verify", grf("wheel4")]) == 4
    assert "FAIL" in capsys.readouterr().out


def test_analyze_outputs_are_byte_identical(grf, tmp_path):
    path = grf("wheel4-split-tail")
    for i in (1, 2):
        assert cli.main(["analyze", path, "--json", str(tmp_path / f"{i}.json"), "--dot", str(tmp_path / f"{i}.dot")]) == 0
    assert (tmp_path / "1.json").read_bytes() == (tmp_path / "2.json").read_bytes()
    assert (tmp_path / "1.dot").read_bytes() == (tmp_path / "2.dot").read_bytes()


def test_succulent_variant(grf, capsys):
    assert cli.main(["succulent", grf("series3"), "--variant"]) == 0
    assert "app:B2" not in capsys.readouterr().out
    assert cli.main(["succulent", grf("series3")]) == 0
    assert "app:B2" in capsys.readouterr().out


def test_gen_is_parseable(tmp_path, capsys):
    out = tmp_path / "r.grf"
    assert cli.main(["gen", "--seed", "4", "--profile", "hybrid", "-o", str(out)]) == 0
    g, spec = io.parse_graph_file(out)
    assert len(spec.ends) == 5
    assert cli.main(["gen", "--seed", "4", "--profile", "hybrid"]) == 0
    assert capsys.readouterr().out == out.read_text()


def test_verify_batch(capsys):
    assert cli.main(["verify", "--batch", "4", "--jobs", "2", "--seed", "7"]) == 0
    assert "4/4 instances verified" in capsys.readouterr().out


def test_module_entry_point(grf):
    r = subprocess.run([sys.executable, "-m", "succulent", "cactus", "--mode", "finite", grf("tree")],
                       capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout.count(" -- ") == 5
