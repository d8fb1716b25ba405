import pathlib
import subprocess
import sys

import pytest

SCRIPTS = pathlib.Path(__file__).resolve().parent.parent / "scripts"


@pytest.mark.parametrize(
    "argv",
    [
        ["worked_example.py"],
        ["circulant_survey.py", "--max-n", "6"],
        ["soundness_campaign.py", "--specs", "10", "--max-order", "6"],
        ["performance_envelope.py", "--max-order", "5", "--repeats", "1"],
    ],
)
def test_script_runs(argv, tmp_path):
    proc = subprocess.run(
        [sys.executable, str(SCRIPTS / argv[0]), *argv[1:]], capture_output=True, text=True, cwd=tmp_path
    )
    assert proc.returncode == 0, proc.stderr
    assert proc.stdout.strip()
