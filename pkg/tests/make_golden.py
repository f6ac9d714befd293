"""Regenerate the golden figure outputs under tests/golden/.

Run from the repository root after the rest of the test suite is green:

    python3 tests/make_golden.py
"""

from pathlib import Path

from figure_runs import FIGURE_RUNS

from qlgas.cli import main

GOLDEN_DIR = Path(__file__).parent / "golden"


def regenerate() -> None:
    GOLDEN_DIR.mkdir(exist_ok=True)
    for name, argv in FIGURE_RUNS.items():
        for fmt in ("csv", "pgm"):
            out = GOLDEN_DIR / f"{name}.{fmt}"
            code = main(argv + ["--format", fmt, "--output", str(out)])
            if code != 0:
                raise SystemExit(f"{name} ({fmt}) failed with exit code {code}")
            print(f"wrote {out} ({out.stat().st_size} bytes)")


if __name__ == "__main__":
    regenerate()
