"""Command line front end.

Four subcommands: ``insert`` runs one of the insertion algorithms on a
word or factorization, ``graph`` exports the crystal component of a seed
as DOT or JSON, ``enumerate`` lists a finite family with its count, and
``verify`` runs the exhaustive check suites.

Exit codes: 0 success, 1 verification failure, 2 bad input, 3 vertex cap
exceeded (the cap honors the QCRYSTAL_MAX_VERTICES environment variable).
Results go to stdout, diagnostics to stderr; output is deterministic for
a fixed command line.
"""

import argparse
import json
import sys

from . import engine
from . import kraskiewicz as kw
from . import mixed
from . import models
from . import ptops
from . import tableaux as tb
from . import typeb
from . import verify as verify_mod


def _shape(text: str) -> tuple[int, ...]:
    try:
        shape = tuple(int(x) for x in text.split(",") if x)
        tb.check_strict(shape)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))
    return shape


def _require(args, names):
    for name in names:
        if getattr(args, name.replace("-", "_")) is None:
            raise ValueError(f"--{name} is required here")


def cmd_insert(args) -> int:
    if args.algo == "hm":
        p, q = mixed.hm(args.input)
        print("P:", tb.fmt_primed(p))
        print("Q:", tb.fmt_plain(q))
    elif args.algo == "kr":
        p, q = kw.kr(args.input)
        print("P:", tb.fmt_plain(p))
        print("Q:", tb.fmt_plain(q))
    else:
        p, t = kw.pkr(args.input)
        print("P:", tb.fmt_plain(p))
        print("T:", tb.fmt_primed(t))
    return 0


def _graph_model_and_seed(args):
    if args.model == "words":
        _require(args, ["n", "seed"])
        return models.model_words(args.n), args.seed
    if args.model == "pt":
        _require(args, ["n", "shape"])
        seed = (tb.parse_primed(args.seed) if args.seed
                else ptops.highest_pt(args.n, args.shape))
        return models.model_pt(args.n), seed
    if args.model == "ssdt":
        _require(args, ["n", "shape"])
        seed = (tb.parse_plain(args.seed) if args.seed
                else models.highest_ssdt(args.n, args.shape))
        return models.model_ssdt(args.n), seed
    if args.model == "spt":
        _require(args, ["m", "shape"])
        seed = (tb.parse_primed(args.seed) if args.seed
                else ptops.highest_pt(args.m, args.shape))
        return models.model_spt(args.m), seed
    _require(args, ["perm", "m"])
    perm = typeb.parse_perm(args.perm)
    seed = (typeb.parse_factorization(args.seed) if args.seed
            else models.seed_factorization(perm, args.m))
    if len(seed) != args.m:
        raise ValueError(f"seed has {len(seed)} factors, expected {args.m}")
    return models.model_fact(args.m), seed


def cmd_graph(args) -> int:
    model, seed = _graph_model_and_seed(args)
    g = engine.component(model, seed)
    if args.format == "dot":
        sys.stdout.write(engine.to_dot(g))
    else:
        print(json.dumps(engine.to_json(g), indent=2, sort_keys=True))
    return 0


def cmd_enumerate(args) -> int:
    if args.what == "reduced":
        _require(args, ["perm"])
        items = [typeb.fmt_word(w)
                 for w in typeb.enumerate_reduced(typeb.parse_perm(args.perm))]
    elif args.what == "factorizations":
        _require(args, ["perm", "m"])
        items = [typeb.fmt_factorization(f) for f in
                 typeb.enumerate_factorizations(
                     typeb.parse_perm(args.perm), args.m)]
    elif args.what == "pt":
        _require(args, ["n", "shape"])
        items = [tb.fmt_primed(t) for t in tb.enumerate_pt(args.n, args.shape)]
    else:
        _require(args, ["n", "shape"])
        items = [tb.fmt_plain(t)
                 for t in tb.enumerate_ssdt(args.n, args.shape)]
    for item in items:
        print(item)
    print(f"count {len(items)}")
    return 0


def cmd_verify(args) -> int:
    perm = typeb.parse_perm(args.perm) if args.perm else None
    if args.corrupt and args.suite != "axioms":
        raise ValueError("--corrupt only applies to --suite axioms")
    if args.suite == "axioms":
        report = verify_mod.verify_axioms(args.n, args.max_size,
                                          corrupt=args.corrupt)
    elif args.suite == "bijections":
        report = verify_mod.verify_bijections(args.n, args.max_size)
    elif args.suite == "equivalence":
        report = verify_mod.verify_equivalence(args.n, args.max_size,
                                               perm=perm, m=args.m)
    elif args.suite == "highlow":
        report = verify_mod.verify_highlow(args.n, args.max_size)
    else:
        report = verify_mod.verify_all(args.n, args.max_size,
                                       perm=perm, m=args.m)
    print(json.dumps(report, sort_keys=True))
    return 0 if not report["failures"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qcrystal",
        description="crystal combinatorics on words, shifted tableaux, "
                    "and signed unimodal factorizations",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("insert", help="run an insertion algorithm")
    p.add_argument("--algo", choices=("hm", "kr", "pkr"), required=True)
    p.add_argument("input", help="word (hm, kr) or factorization (pkr)")
    p.set_defaults(func=cmd_insert)

    p = sub.add_parser("graph", help="export the crystal component of a seed")
    p.add_argument("--model", choices=("words", "ssdt", "pt", "spt", "fact"),
                   required=True)
    p.add_argument("--n", type=int, help="alphabet size / rank")
    p.add_argument("--m", type=int, help="number of factors or entry bound")
    p.add_argument("--shape", type=_shape, help="strict partition like 3,1")
    p.add_argument("--perm", help="signed permutation like 3,2,-1")
    p.add_argument("--seed", help="start element (default: highest weight)")
    p.add_argument("--format", choices=("dot", "json"), default="dot")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("enumerate", help="list a finite family and count it")
    p.add_argument("--what", choices=("reduced", "factorizations",
                                      "pt", "ssdt"), required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--shape", type=_shape)
    p.add_argument("--perm")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=("axioms", "bijections", "equivalence",
                                       "highlow", "all"), required=True)
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--max-size", type=int, default=5)
    p.add_argument("--m", type=int)
    p.add_argument("--perm")
    p.add_argument("--corrupt", action="store_true",
                   help="negative control: break a model on purpose")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except engine.CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
