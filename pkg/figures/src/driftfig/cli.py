"""Command line entry point.

    figures <kind> --run RUN_DIR --out FILE.png [--dpi N] [--format FMT]

Exits nonzero on missing or malformed artifacts.
"""

from __future__ import annotations

import argparse
import sys

import matplotlib.pyplot as plt

from . import plots


def build_parser():
    parser = argparse.ArgumentParser(prog="figures", description=__doc__.splitlines()[0])
    parser.add_argument("kind", choices=plots.KINDS)
    parser.add_argument("--run", required=True, metavar="RUN_DIR")
    parser.add_argument("--out", required=True, metavar="FILE")
    parser.add_argument("--dpi", type=int, default=150)
    parser.add_argument("--format", dest="fmt", default=None, help="image format (default: from FILE suffix)")
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    spec = plots.FigureSpec(run_dir=args.run, kind=args.kind, out=args.out, fmt=args.fmt, dpi=args.dpi)
    try:
        fig = plots.render(spec)
    except (OSError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    plt.close(fig)
    print(f"wrote {args.out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
