import pathlib
import subprocess
import sys

import pytest

DEMOS = sorted((pathlib.Path(__file__).parent.parent / "demos").glob("*.py"))


@pytest.mark.parametrize("demo", DEMOS, ids=[d.name for d in DEMOS])
def test_demo_runs(demo):
    r = subprocess.run([sys.executable, str(demo)], capture_output=True, text=True, timeout=120)
    assert r.returncode == 0, r.stderr
    assert "FAIL" not in r.stdout and "ACCEPTED" not in r.stdout
