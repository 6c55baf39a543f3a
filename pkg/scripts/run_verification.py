"""
Run a verification suite from the repository root.

    python scripts/run_verification.py all --format markdown --out reports/all.md
"""
import os
import sys

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from src.api.main import main  # noqa: E402

if __name__ == "__main__":
    sys.exit(main())
