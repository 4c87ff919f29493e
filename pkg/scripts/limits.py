# scripts/limits.py
import argparse

from dpk.cli import RunConfig, Table, emit, limits_table
from dpk.cli.commands import parse_probe


def main():
    parser = argparse.ArgumentParser(description="Convergence of the scaled Hermite kernel to its bulk or edge limit")
    parser.add_argument("--which", choices=["bulk", "edge"], default="bulk")
    parser.add_argument("--n", type=int, nargs="+", default=[100, 200, 400])
    parser.add_argument("--probe", action="append", default=None, help="sa:xa:sb:xb")
    parser.add_argument("--svg", help="also write an SVG of error against N")
    args = parser.parse_args()

    probes = [parse_probe(p) for p in (args.probe or ["0:0:0:0"])]
    table = limits_table(args.which, args.n, probes)
    params = {"which": args.which, "n_list": ",".join(map(str, args.n)), "probe": args.probe}
    emit(table, RunConfig(command="limits", parameters=params))
    if args.svg:
        plot = Table(["N", "error"], [[row[1], row[4]] for row in table.rows], title=table.title)
        emit(plot, RunConfig(command="limits", parameters=params, output="svg", output_path=args.svg))


if __name__ == "__main__":
    main()
