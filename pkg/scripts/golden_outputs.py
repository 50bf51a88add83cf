"""Regenerate or check the golden CLI outputs in tests/golden.

    python3 scripts/golden_outputs.py           # compare, exit 1 on drift
    python3 scripts/golden_outputs.py --update  # rewrite the golden files
"""

from __future__ import annotations

import argparse
import contextlib
import io
import json
import sys
from pathlib import Path

from barett_rsk.cli import main as cli_main

GOLDEN = Path(__file__).resolve().parent.parent / "tests" / "golden"


def render(argv: list[str]) -> str:
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = cli_main(argv)
    if code != 0:
        raise RuntimeError(f"barett-rsk {' '.join(argv)} exited with {code}")
    return buf.getvalue()


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--update", action="store_true", help="overwrite the golden files")
    args = parser.parse_args()
    cases = json.loads((GOLDEN / "cases.json").read_text())
    drift = 0
    for name, argv in cases.items():
        path = GOLDEN / f"{name}.json"
        text = render(argv)
        if args.update:
            path.write_text(text)
            print(f"wrote {path.name}")
        elif not path.exists() or path.read_text() != text:
            drift += 1
            print(f"DRIFT {path.name}")
        else:
            print(f"ok    {path.name}")
    return 1 if drift else 0


if __name__ == "__main__":
    sys.exit(main())
