import subprocess
import sys
from pathlib import Path

SCRIPTS = Path(__file__).resolve().parent.parent / "scripts"


def run(name, *args):
    return subprocess.run([sys.executable, str(SCRIPTS / name), *args],
                          capture_output=True, text=True, timeout=300)


def test_sweep_script():
    proc = run("sweep.py", "roundtrip", "--count", "20", "--seed", "1")
    assert proc.returncode == 0
    assert proc.stdout.startswith("[PASS] roundtrip: 20 checked")


def test_census_script_small_box():
    proc = run("white3d_census.py", "--box", "1")
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[0] == "2 tetrahedra classes in [0,1]^3, 2 empty"
