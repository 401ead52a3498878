import argparse
import sys
from pathlib import Path

from .render import FIGURES, FigureSpec, PlotInputError, render


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="plot_results",
        description="Render comparison figures from an eonsim results CSV",
    )
    parser.add_argument("input_csv", help="results CSV produced by `eonsim run`")
    parser.add_argument("--figure", required=True, choices=sorted(FIGURES))
    parser.add_argument("--topology", required=True, help="topology name to filter rows by")
    parser.add_argument("--out", required=True, help="output image path (png/svg/pdf)")
    args = parser.parse_args(argv)

    try:
        spec = FigureSpec(
            input_csv=Path(args.input_csv),
            figure=args.figure,
            topology_filter=args.topology,
            output_image=Path(args.out),
        )
        series = render(spec)
    except PlotInputError as exc:
        print(f"plot_results: {exc}", file=sys.stderr)
        return 1
    points = sum(len(p) for p in series.values())
    print(f"wrote {args.out}: {len(series)} series, {points} aggregated points")
    return 0


if __name__ == "__main__":
    sys.exit(main())
