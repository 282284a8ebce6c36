"""Command line front end.

Matrices travel as JSON files (see matrix_to_dict for the wire format).
Exit codes: 0 for success (for ``check``: the relation holds), 1 for a
false verdict or failed fuzz property, 2 for any usage or input error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from .decomp import hartwig_spindelbock, svd
from .errors import MatOrderError
from .fuzz import RunConfig, run_all
from .matrix import (EQ_TOL, EXACT, FLOAT, Matrix, matrix_from_json,
                     matrix_to_dict)
from .orders import DIAMOND_ROUTES, RELATIONS
from .pinv import moore_penrose
from .poset import build_poset, to_dot
from .predecessors import (dagger_isotone, diamond_predecessor, is_bidagger,
                           predecessor_mp, random_idempotent,
                           reverse_order_law)


def _load(path: str) -> Matrix:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise MatOrderError("cannot read %s: %s" % (path, exc)) from exc
    return matrix_from_json(text)


def _resolve_backend(args, mats, need_float: bool = False):
    """Apply --backend to loaded matrices; exact can cast up to float only."""
    choice = args.backend
    if choice == FLOAT:
        mats = [m.to_float() for m in mats]
    elif choice == EXACT:
        if any(m.backend != EXACT for m in mats):
            raise MatOrderError("cannot cast float input to the exact backend")
    else:
        backends = {m.backend for m in mats}
        if len(backends) > 1:
            raise MatOrderError("inputs mix backends; pass --backend float to cast")
    if need_float and any(m.backend != FLOAT for m in mats):
        raise MatOrderError("this command needs float matrices; pass --backend float")
    return mats


def _emit(obj):
    print(json.dumps(obj, indent=2))


def cmd_check(args) -> int:
    a, b = _resolve_backend(args, [_load(args.a), _load(args.b)])
    if args.via != "definition" and args.order != "diamond":
        raise MatOrderError("--via only applies to --order diamond")
    if args.order == "diamond":
        fn = DIAMOND_ROUTES[args.via]
    else:
        fn = RELATIONS[args.order]
    report = fn(a, b, args.tol)
    _emit(report.to_dict())
    return 0 if report.verdict else 1


def cmd_pinv(args) -> int:
    (a,) = _resolve_backend(args, [_load(args.matrix)])
    _emit(matrix_to_dict(moore_penrose(a)))
    return 0


def cmd_decompose(args) -> int:
    (b,) = _resolve_backend(args, [_load(args.matrix)], need_float=True)
    if args.kind == "svd":
        form = svd(b)
        _emit({"u": matrix_to_dict(form.u), "sigma": list(form.sigma),
               "v": matrix_to_dict(form.v)})
    else:
        form = hartwig_spindelbock(b)
        _emit({"u": matrix_to_dict(form.u), "sigma": list(form.sigma),
               "k": matrix_to_dict(form.k), "l": matrix_to_dict(form.l),
               "rank": form.r})
    return 0


def _pick_idempotent(args, b: Matrix) -> Matrix:
    if args.t is not None:
        (t,) = _resolve_backend(args, [_load(args.t)], need_float=True)
        return t
    hs = hartwig_spindelbock(b)
    rng = random.Random(args.seed)
    k = args.rank if args.rank is not None else rng.randint(0, hs.r)
    return random_idempotent(hs.r, k, rng)


def cmd_predecessor(args) -> int:
    (b,) = _resolve_backend(args, [_load(args.matrix)], need_float=True)
    t = _pick_idempotent(args, b)
    a = diamond_predecessor(b, t, args.tol)
    _emit({"idempotent": matrix_to_dict(t),
           "predecessor": matrix_to_dict(a),
           "pinv": matrix_to_dict(predecessor_mp(b, t, args.tol))})
    return 0


def cmd_criteria(args) -> int:
    (b,) = _resolve_backend(args, [_load(args.matrix)], need_float=True)
    t = _pick_idempotent(args, b)
    a = diamond_predecessor(b, t, args.tol)
    rol = reverse_order_law(a, b, args.tol)
    bid = is_bidagger(b, args.tol)
    iso = dagger_isotone(b, t, args.tol)
    _emit({
        "idempotent": matrix_to_dict(t),
        "reverse_order_law": {"direct": rol[0], "criterion": rol[1]},
        "bidagger": {"direct": bid[0], "criterion": bid[1]},
        "dagger_isotone": {"direct": iso[0], "criterion": iso[1]},
    })
    return 0


def cmd_fuzz(args) -> int:
    cfg = RunConfig(backend=args.backend or EXACT, tol=args.tol,
                    seed=args.seed, trials=args.trials,
                    dim_min=args.dim_min, dim_max=args.dim_max)
    summary = run_all(cfg)
    _emit(summary)
    return 0 if summary["failures"] == 0 else 1


def cmd_poset(args) -> int:
    root = Path(args.directory)
    if not root.is_dir():
        raise MatOrderError("%s is not a directory" % args.directory)
    files = sorted(p for p in root.iterdir() if p.suffix == ".json")
    if not files:
        raise MatOrderError("no .json matrices under %s" % args.directory)
    mats = _resolve_backend(args, [_load(str(p)) for p in files])
    items = list(zip([p.stem for p in files], mats))
    graph = build_poset(items, args.order, args.tol)
    sys.stdout.write(to_dot(graph))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="matorder",
        description="Generalized inverses and matrix partial orders.")
    parser.add_argument("--backend", choices=[EXACT, FLOAT], default=None,
                        help="force a scalar backend (exact inputs can be "
                             "cast to float, never the reverse)")
    parser.add_argument("--tol", type=float, default=EQ_TOL,
                        help="relative comparison tolerance for the float "
                             "backend (default %g)" % EQ_TOL)
    parser.add_argument("--seed", type=int, default=0,
                        help="seed for anything randomized")
    sub = parser.add_subparsers(dest="command", metavar="command")
    sub.required = True

    p = sub.add_parser("check", help="decide an order relation for a pair")
    p.add_argument("--order", required=True, choices=sorted(RELATIONS))
    p.add_argument("--via", default="definition",
                   choices=sorted(DIAMOND_ROUTES),
                   help="alternative diamond characterization")
    p.add_argument("a", help="JSON file with the candidate lower matrix")
    p.add_argument("b", help="JSON file with the candidate upper matrix")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("pinv", help="print the pseudoinverse")
    p.add_argument("matrix")
    p.set_defaults(func=cmd_pinv)

    p = sub.add_parser("decompose", help="print a decomposition as JSON")
    p.add_argument("kind", choices=["svd", "hs"],
                   help="svd, or the unitary block form hs")
    p.add_argument("matrix")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("predecessor",
                       help="build a diamond-order lower neighbor")
    p.add_argument("matrix", help="square base matrix (float)")
    p.add_argument("--t", default=None,
                   help="JSON file with an r x r idempotent parameter")
    p.add_argument("--rank", type=int, default=None,
                   help="rank of a randomly drawn idempotent (default random)")
    p.set_defaults(func=cmd_predecessor)

    p = sub.add_parser("criteria",
                       help="reverse order law, square/pinv exchange, and "
                            "pinv monotonicity for a constructed pair")
    p.add_argument("matrix", help="square base matrix (float)")
    p.add_argument("--t", default=None)
    p.add_argument("--rank", type=int, default=None)
    p.set_defaults(func=cmd_criteria)

    p = sub.add_parser("fuzz", help="run the randomized property suites")
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--dim-min", type=int, default=1)
    p.add_argument("--dim-max", type=int, default=5)
    p.set_defaults(func=cmd_fuzz)

    p = sub.add_parser("poset",
                       help="DOT cover diagram of a directory of matrices")
    p.add_argument("directory")
    p.add_argument("--order", default="diamond", choices=sorted(RELATIONS))
    p.set_defaults(func=cmd_poset)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except MatOrderError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
