"""The narrative scripts under demos/ must run clean."""

import pathlib
import subprocess
import sys

import pytest

DEMOS = sorted((pathlib.Path(__file__).parent.parent / "demos").glob("*.py"))


def test_demos_exist():
    assert len(DEMOS) == 5


@pytest.mark.parametrize("script", DEMOS, ids=lambda p: p.name)
def test_demo_runs(script):
    proc = subprocess.run([sys.executable, str(script)],
                          capture_output=True, text=True, timeout=120)
    assert proc.returncode == 0, proc.stderr
    assert proc.stdout.strip()


def test_presentation_files_build():
    from artinv import build_algebra, load_presentation

    folder = pathlib.Path(__file__).parent.parent / "demos" / "presentations"
    files = sorted(folder.glob("*.alg"))
    assert len(files) == 7
    for path in files:
        algebra = build_algebra(load_presentation(path))
        assert algebra.dim >= 1
