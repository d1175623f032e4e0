#      Minorforge builds dense minors of graphs with no independent set of size three.
#      Copyright (C) 2025 mldchan
#
#      This program is free software: you can redistribute it and/or modify
#      it under the terms of the GNU Affero General Public License as
#      published by the Free Software Foundation, either version 3 of the
#      License, or (at your option) any later version.
#
#      This program is distributed in the hope that it will be useful,
#      but WITHOUT ANY WARRANTY; without even the implied warranty of
#      MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
#      GNU Affero General Public License for more details.
#
#      You should have received a copy of the GNU Affero General Public License
#      along with this program.  If not, see <https://www.gnu.org/licenses/>.
#

import argparse
import logging
import sys

from dotenv import load_dotenv

load_dotenv()

from features import commands, monte_carlo
from utils.config import default_seed
from utils.errors import MinorforgeError
from utils.logging_util import setup_logging, setup_sentry
from utils.records import FORMATS, emit


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="text", help="text or JSON-lines records")
    common.add_argument("--timing", action="store_true", help="add wall time to records")

    parser = argparse.ArgumentParser(prog="minorforge",
                                     description="Dense minors of graphs with no independent set of size three")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", parents=[common], help="generate a graph file")
    source = gen.add_mutually_exclusive_group(required=True)
    source.add_argument("--family", choices=commands.FAMILIES)
    source.add_argument("--named")
    gen.add_argument("--n", type=int)
    gen.add_argument("--t", type=int)
    gen.add_argument("--s", type=int)
    gen.add_argument("--keep", type=float, default=0.7)
    gen.add_argument("--seed", type=int, default=None)
    gen.add_argument("--out", help="write the graph here instead of stdout")

    analyze = sub.add_parser("analyze", parents=[common], help="report clique and seagull structure")
    analyze.add_argument("graph")
    analyze.add_argument("--k", type=int, default=None)

    partition = sub.add_parser("partition", parents=[common], help="partition a graph into seagulls")
    partition.add_argument("graph")

    build = sub.add_parser("build-minor", parents=[common], help="run the minor construction")
    build.add_argument("graph")
    build.add_argument("--seed", type=int, default=None)
    build.add_argument("--lambda", dest="lambda_policy", default="n23", help="n23, clamped or a rational")
    build.add_argument("--mode", choices=("strict", "advisory"), default="strict")
    build.add_argument("--trials", type=int, default=1)
    build.add_argument("--jobs", type=int, default=1)
    build.add_argument("--clique", help="known maximum clique, 1-based, comma separated")
    build.add_argument("--out", help="prefix for the H graph and branch map files")

    mc = sub.add_parser("mc", parents=[common], help="run a Monte Carlo suite")
    mc.add_argument("suite", help=", ".join(monte_carlo.SUITES))
    mc.add_argument("--trials", type=int, default=None)
    mc.add_argument("--seed", type=int, default=None)
    mc.add_argument("--jobs", type=int, default=1)

    gamma = sub.add_parser("gamma", parents=[common], help="optimise the density constant")
    gamma.add_argument("--tolerance", type=float, default=1e-9)

    return parser


def run(args) -> list:
    seed = getattr(args, "seed", None)
    if seed is None:
        seed = default_seed()

    if args.command == "gen":
        text, record = commands.cmd_gen(args.family, args.named, args.n, args.t, args.s, args.keep, seed)
        if args.out is None:
            sys.stdout.write(text)
            return []
        with open(args.out, "w") as f:
            f.write(text)
        return [record]
    if args.command == "analyze":
        return [commands.cmd_analyze(args.graph, args.k)]
    if args.command == "partition":
        return [commands.cmd_partition(args.graph)]
    if args.command == "build-minor":
        return commands.cmd_build_minor(args.graph, seed, args.lambda_policy, args.mode, args.trials, args.jobs,
                                        args.clique, args.out)
    if args.command == "mc":
        return commands.cmd_mc(args.suite, args.trials, seed, args.jobs)
    return [commands.cmd_gamma(args.tolerance)]


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    setup_logging()
    setup_sentry()

    try:
        records, elapsed = commands.timed(run, args)
    except MinorforgeError as e:
        logging.error("%s: %s", type(e).__name__, e)
        return e.exit_code

    for record in records:
        if args.timing:
            record.wall_time = elapsed
        emit(record, args.format)
    return 0


if __name__ == "__main__":
    sys.exit(main())
