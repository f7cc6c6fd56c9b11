"""
Command-line front end.

    choifaces analyze FILE        rank, membership and face data of a channel
    choifaces decompose FILE      convex decomposition into extreme channels
    choifaces example NAME        print a catalog construction as a channel document
    choifaces census              histogram of face dimensions of random members

FILE may be ``-`` for standard input. Exit codes: 0 success, 1 usage, IO or
parse error, 2 input is not the Choi matrix of a channel.
"""
import argparse
import json
import sys
from collections import Counter
from concurrent.futures import ThreadPoolExecutor

from choifaces import fileio
from choifaces.caratheodory import decompose
from choifaces.channel import check_membership, choi_dim
from choifaces.constructions import CATALOG, build_example, random_member
from choifaces.errors import ChoiFacesError, UnknownExample
from choifaces.faces import analyze, face_dimension
from choifaces.linalg import Tolerances, numerical_rank

EXIT_OK, EXIT_ERROR, EXIT_NOT_MEMBER = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _tolerances(args):
    return Tolerances(rank_rel=args.tol_rank, psd_abs=args.tol_psd, equality_abs=args.tol_eq)


def _read_choi(path):
    if path == "-":
        return fileio.load(sys.stdin)
    with open(path) as fp:
        return fileio.load(fp)


def _emit(fields, as_json, out):
    if as_json:
        out.write(json.dumps(fields) + "\n")
    else:
        width = max(len(k) for k in fields)
        for key, value in fields.items():
            out.write(f"{key:<{width}}  {_fmt(value)}\n")


def _fmt(value):
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.6g}"
    return str(value)


def cmd_analyze(args, out=None):
    out = out or sys.stdout
    tol = _tolerances(args)
    c = _read_choi(args.input)
    report = check_membership(c, tol)
    fields = {
        "n": choi_dim(c),
        "is_member": report.is_member,
        "hermitian_residual": report.hermitian_residual,
        "min_eigenvalue": report.min_eigenvalue,
        "max_trace_condition_residual": report.max_trace_condition_residual,
        "rank": None,
        "face_dim": None,
        "is_extreme": None,
        "choi_criterion_extreme": None,
        "kernel_dim": None,
    }
    if report.is_member:
        face = analyze(c, tol)
        fields.update(
            rank=face.rank,
            face_dim=face.face_dim,
            is_extreme=face.is_extreme,
            choi_criterion_extreme=face.choi_criterion_extreme,
            kernel_dim=face.kernel_dim,
        )
    _emit(fields, args.json, out)
    if not report.is_member:
        print("input is not the Choi matrix of a quantum channel", file=sys.stderr)
        return EXIT_NOT_MEMBER
    return EXIT_OK


def cmd_decompose(args, out=None):
    out = out or sys.stdout
    tol = _tolerances(args)
    c = _read_choi(args.input)
    if not check_membership(c, tol).is_member:
        print("input is not the Choi matrix of a quantum channel", file=sys.stderr)
        return EXIT_NOT_MEMBER
    dec = decompose(c, tol, seed=args.seed)
    if args.json:
        doc = {
            "n": choi_dim(c),
            "residual": dec.residual,
            "points": [fileio.choi_document(p, weight=w) for w, p in zip(dec.weights, dec.points)],
        }
        out.write(json.dumps(doc) + "\n")
    else:
        out.write(f"n         {choi_dim(c)}\n")
        out.write(f"points    {len(dec)}\n")
        out.write(f"residual  {dec.residual:.3e}\n")
        out.write("weight        rank\n")
        for w, p in zip(dec.weights, dec.points):
            out.write(f"{w:<12.10f}  {numerical_rank(p, tol)}\n")
    return EXIT_OK


def cmd_example(args, out=None):
    out = out or sys.stdout
    tol = _tolerances(args)
    try:
        m = build_example(args.name, n=args.n, rank=args.rank, seed=args.seed,
                          c=args.c, s=args.s, y=args.y, tol=tol)
    except UnknownExample as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_ERROR
    doc = fileio.matrix_document(m) if args.name == "p" else fileio.choi_document(m)
    out.write(fileio.dumps(doc) + "\n")
    return EXIT_OK


def census(n, rank, samples, seed, tol, workers=1):
    """Face dimensions of ``samples`` random members, sample k seeded by ``(seed, k)``."""
    def one(k):
        return face_dimension(random_member(n, rank, (seed, k), tol), tol)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            dims = list(pool.map(one, range(samples)))
    else:
        dims = [one(k) for k in range(samples)]
    return Counter(dims)


def cmd_census(args, out=None):
    out = out or sys.stdout
    tol = _tolerances(args)
    if args.n < 1:
        raise _UsageError("--n must be at least 1")
    if not 1 <= args.rank <= args.n ** 2:
        raise _UsageError(f"--rank must lie in 1..{args.n ** 2}")
    if args.samples < 1:
        raise _UsageError("--samples must be positive")
    hist = census(args.n, args.rank, args.samples, args.seed, tol, workers=args.workers)
    if args.json:
        out.write(json.dumps({
            "n": args.n, "rank": args.rank, "samples": args.samples, "seed": args.seed,
            "histogram": {str(k): v for k, v in sorted(hist.items())},
        }) + "\n")
    else:
        out.write("face_dim  count\n")
        for dim, count in sorted(hist.items()):
            out.write(f"{dim:<8d}  {count}\n")
    return EXIT_OK


class _UsageError(Exception):
    pass


def build_parser():
    parser = _Parser(prog="choifaces", description="Face structure of the set of quantum channels.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol-rank", type=float, default=1e-9, help="relative rank cutoff")
    common.add_argument("--tol-psd", type=float, default=1e-9, help="allowed negative eigenvalue")
    common.add_argument("--tol-eq", type=float, default=1e-8, help="entrywise equality tolerance")
    common.add_argument("--json", action="store_true", help="structured JSON output")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("analyze", parents=[common], help="analyze a channel file")
    p.add_argument("input", help="channel document, or - for stdin")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("decompose", parents=[common], help="decompose into extreme channels")
    p.add_argument("input", help="channel document, or - for stdin")
    p.add_argument("--seed", type=int, default=None, help="randomize direction choice")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("example", parents=[common], help="emit a catalog construction",
                       epilog="names: " + ", ".join(CATALOG))
    p.add_argument("name")
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--rank", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--c", type=float, default=1.0)
    p.add_argument("--s", type=complex, default=0j)
    p.add_argument("--y", type=complex, default=0j)
    p.set_defaults(func=cmd_example)

    p = sub.add_parser("census", parents=[common], help="face dimensions of random members")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_census)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _tolerances(args)
        return args.func(args)
    except (OSError, fileio.ChannelFileError, _UsageError, ValueError, ChoiFacesError) as exc:
        print(f"choifaces {args.command}: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
