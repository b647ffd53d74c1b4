"""Command-line interface: ``plotkit <run-dir> --kind K --out FILE``."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .render import KINDS, PlotSpec, RenderError, render


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="plotkit",
                                 description="render images from experiment bundles")
    ap.add_argument("run_dir", help="directory with the experiment CSV/JSON files")
    ap.add_argument("--kind", required=True, choices=KINDS)
    ap.add_argument("--out", required=True, help="output image path (.png, .pdf, .svg)")
    ap.add_argument("--title", default=None)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    run_dir = Path(args.run_dir)
    if not run_dir.is_dir():
        print(f"error: not a run directory: {run_dir}", file=sys.stderr)
        return 1
    try:
        out = render(PlotSpec(run_dir, args.kind, Path(args.out), title=args.title))
    except RenderError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
