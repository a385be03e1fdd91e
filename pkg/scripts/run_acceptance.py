"""Run the acceptance tests and print one PASS/FAIL line per criterion."""
import subprocess
import sys
from pathlib import Path

root = Path(__file__).resolve().parent.parent
sys.exit(subprocess.call([sys.executable, "-m", "pytest", "-q", "-s", str(root / "tests" / "test_acceptance.py")]))
