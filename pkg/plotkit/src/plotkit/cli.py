"""Command line entry point: ``plotkit <kind> --in <paths> --out <file>``.

Kinds:
    hist         mean +/- std histogram panels (duration/permanence/degree CSVs)
    scatter      (n, m) split sizes inside the feasible triangle
    dendro-size  dendrogram layout JSON, size axis
    dendro-time  dendrogram layout JSON, time axis
"""

import argparse
import sys

from plotkit import figures
from plotkit.schemas import SchemaError

KINDS = ("hist", "scatter", "dendro-size", "dendro-time")


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="plotkit",
                                     description="Render figures from netslice output files.")
    parser.add_argument("kind", choices=KINDS)
    parser.add_argument("--in", dest="inputs", nargs="+", required=True,
                        metavar="PATH", help="input CSV/JSON file(s)")
    parser.add_argument("--out", required=True, help="output image path")
    parser.add_argument("--cut", type=float, default=None,
                        help="region boundary for scatter plots (default: N/4)")
    return parser


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        if args.kind == "hist":
            figures.plot_hist(args.inputs, args.out)
        elif args.kind == "scatter":
            figures.plot_scatter_triangle(args.inputs, args.out, cut=args.cut)
        else:
            if len(args.inputs) != 1:
                print(f"plotkit: {args.kind} takes exactly one input file", file=sys.stderr)
                return 2
            axis = "size" if args.kind == "dendro-size" else "time"
            figures.plot_dendrogram(args.inputs[0], args.out, axis=axis)
    except (SchemaError, OSError) as exc:
        print(f"plotkit: {exc}", file=sys.stderr)
        return 1
    print(args.out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
