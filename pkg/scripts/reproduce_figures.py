#!/usr/bin/env python3
"""Regenerate every figure (f1..f10) as CSV + SVG.

Usage: python scripts/reproduce_figures.py [--out figures]

f3..f5 default to the degree-25 variant; add a second pass with --n100
for the degree-100 variant of the same node figures (written with an
`_n100` suffix so both coexist).
"""

import argparse
import shutil
from pathlib import Path

from stancu_lab.cli import main as cli


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="figures")
    ap.add_argument("--n100", action="store_true",
                    help="also emit the degree-100 variant of f3..f5")
    args = ap.parse_args()
    rc = 0
    for i in range(1, 11):
        rc |= cli(["figure", f"f{i}", "--out", args.out])
    if args.n100:
        variant = Path(args.out) / "n100"
        for fid in ("f3", "f4", "f5"):
            rc |= cli(["figure", fid, "--n", "100", "--out", str(variant)])
            for ext in (".csv", ".svg"):
                src = variant / f"{fid}{ext}"
                shutil.move(src, Path(args.out) / f"{fid}_n100{ext}")
        variant.rmdir()
    return rc


if __name__ == "__main__":
    raise SystemExit(main())
