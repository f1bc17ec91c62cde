"""Command-line interface: ``btlat embedding-type | compute | verify``.

All input and output is JSON.  Output is canonical (sorted keys,
rationals as "p/q" strings), so identical input gives byte-identical
output.  Exit codes: 0 success, 1 verification failure, 2 usage or
schema error.
"""

import argparse
import json
import os
import sys
from fractions import Fraction

from . import verify
from .cyclic import canonicalize
from .descent import j_e, j_e_inverse
from .embedding import (LocalType, embedding_type_from_local_type, local_type_from_embedding_type,
                        local_type_of)
from .errors import BTLatticeError, InvalidInput
from .filtration import square_of
from .hermitian import bary, dual_norm
from .latticefn import invariant, rank
from .serialize import (decode_frame, decode_lattice_function, decode_local_type, decode_matrix,
                        dumps, encode)


def _read_input(path):
    try:
        if path is None or path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as err:
        raise InvalidInput(f"cannot read input: {err}") from err
    try:
        return json.loads(text)
    except json.JSONDecodeError as err:
        raise InvalidInput(f"invalid JSON: {err}") from err


def _get(data, key):
    if not isinstance(data, dict) or key not in data:
        raise InvalidInput(f"missing field {key!r}")
    return data[key]


def embedding_type(data):
    """Either direction of the correspondence, depending on the fields present."""
    if not isinstance(data, dict):
        raise InvalidInput("expected a JSON object")
    if "lambda" in data or "matrix" in data:
        cls = decode_matrix(data.get("lambda", data.get("matrix")))
        mu = local_type_from_embedding_type(cls)
        n = cls.rows * cls.cols
        return {"f": cls.rows, "r": cls.cols, "mu": encode(mu)["weights"],
                "scaledMu": list(mu.scaled(n).entries)}
    f = _get(data, "f")
    r = _get(data, "r")
    if not all(isinstance(x, int) and not isinstance(x, bool) and x > 0 for x in (f, r)):
        raise InvalidInput("f and r must be positive integers")
    if "scaledMu" in data:
        w = canonicalize(_get(data, "scaledMu"))
        if w.total != f * r:
            raise InvalidInput("scaledMu must sum to f * r")
        mu = LocalType([Fraction(x, f * r) for x in w.entries])
    else:
        mu = decode_local_type(_get(data, "mu"))
    cls = embedding_type_from_local_type(mu, f, r)
    return {"f": f, "r": r, **encode(cls)}


def _lattice(data):
    return decode_lattice_function(data["lattice"] if isinstance(data, dict) and "lattice" in data else data)


def _frame(data, lam):
    return decode_frame(_get(data, "frame"), d=lam.d)


def _degree(data):
    f = _get(data, "f")
    if not isinstance(f, int) or isinstance(f, bool):
        raise InvalidInput("f must be an integer")
    return f


def _op_dual(data):
    lam = _lattice(data)
    return encode(dual_norm(lam, _frame(data, lam)))


def _op_bary(data):
    lam = _lattice(data)
    return encode(bary(lam, _frame(data, lam)))


def _op_invariant(data):
    lam = _lattice(data)
    return {**encode(invariant(lam)), "rank": rank(lam)}


COMPUTE = {
    "dualNorm": _op_dual,
    "bary": _op_bary,
    "jE": lambda data: encode(j_e(_lattice(data), _degree(data))),
    "jEInverse": lambda data: encode(j_e_inverse(_lattice(data), _degree(data))),
    "squareOf": lambda data: encode(square_of(_lattice(data))),
    "invariant": _op_invariant,
    "localTypeOf": lambda data: encode(local_type_of(_lattice(data))),
}


def run_suite(name, args):
    seed = int(os.environ.get("BTLAT_SEED", "0"))
    if name == "main-theorem":
        return verify.check_main_theorem(args.f or 5, args.r or 3, args.m or 7)
    if name == "duality":
        return verify.check_duality(args.m or 4, tuple(range(1, (args.d or 2) + 1)), args.denominator or 6)
    if name == "clf":
        return verify.check_clf(args.d or 4, args.m or 4, args.denominator or 6)
    if name == "recovery":
        return verify.check_recovery(args.m or 6, seed=seed, eps=args.eps)
    if name == "uniqueness":
        return verify.check_uniqueness(max_m=args.m or 4)
    raise InvalidInput(f"unknown suite {name!r}; choose from {', '.join(verify.SUITES)}")


def build_parser():
    parser = argparse.ArgumentParser(prog="btlat", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("embedding-type", help="convert between local types and embedding types")
    p.add_argument("--input", help="JSON file (default: stdin)")

    p = sub.add_parser("compute", help="run one operation on JSON input")
    p.add_argument("op", choices=sorted(COMPUTE))
    p.add_argument("--input", help="JSON file (default: stdin)")

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite_name", nargs="?", metavar="SUITE")
    p.add_argument("--suite", help="suite name (alternative to the positional argument)")
    for flag in ("--f", "--r", "--m", "--d", "--denominator"):
        p.add_argument(flag, type=int, default=None)
    p.add_argument("--eps", type=int, choices=(1, -1), default=None,
                   help="restrict the recovery suite to one sign")
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "embedding-type":
            out = embedding_type(_read_input(args.input))
            code = 0
        elif args.command == "compute":
            out = COMPUTE[args.op](_read_input(args.input))
            code = 0
        else:
            name = args.suite or args.suite_name
            if name is None:
                raise InvalidInput("name a suite: " + ", ".join(verify.SUITES))
            if args.suite and args.suite_name and args.suite != args.suite_name:
                raise InvalidInput("conflicting suite names")
            report = run_suite(name, args)
            out = report.as_json()
            code = 0 if report.passed else 1
    except (BTLatticeError, TypeError, KeyError) as err:
        print(f"btlat: error: {err}", file=sys.stderr)
        return 2
    print(dumps(out))
    return code


if __name__ == "__main__":
    sys.exit(main())
