import os
import sys

# -------------------------------------------------
# Entry point: python app.py <command> ...
# -------------------------------------------------
sys.path.append(os.path.join(os.path.dirname(__file__), "src"))

from matroidkit.cli import run  # noqa: E402

if __name__ == "__main__":
    sys.exit(run(sys.argv[1:]))
