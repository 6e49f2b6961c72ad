"""Command-line workbench.

Exit status: 0 on success, 1 on a domain error (or a failed verification),
2 on a usage error.
"""

from __future__ import annotations

import argparse
import sys

from . import builders
from .errors import ChainformError, FileUnreadable, NotSymmetric, RankTooLarge
from .generating import METHODS, default_threads, fp
from .incidence import IncidenceElement, hopf_coproduct
from .poset import LabeledPoset, all_rank_sets, descent_set, flag_stats, iter_chains, load_poset, product
from .rank_selection import ehrenborg_ep, is_r_labeled, is_relative_r_labeled
from .symfunc import is_symmetric, m_to_schur, render_sym
from .verify import run_checks


def _set(I) -> str:
    return "{" + ",".join(map(str, I)) + "}"


def _load(path: str, args) -> LabeledPoset:
    try:
        P = load_poset(path)
    except OSError as exc:
        raise FileUnreadable(f"cannot read {path}: {exc.strerror}") from None
    _guard(P.rank, args)
    return P


def _guard(rank: int, args):
    if rank > args.max_rank:
        raise RankTooLarge(f"rank {rank} exceeds --max-rank {args.max_rank}")


def _emit(P: LabeledPoset, out: str | None):
    if out:
        with open(out, "w") as fh:
            fh.write(P.to_text())
    else:
        sys.stdout.write(P.to_text())


def _parts(text: str) -> tuple[int, ...]:
    text = text.strip()
    if text in ("", "0", "-", "()"):
        return ()
    return tuple(int(p) for p in text.replace(" ", ",").split(",") if p)


def build_from_spec(tokens: list[str]) -> LabeledPoset:
    """``boolean N``, ``chain L1,L2,...``, ``young MU / NU``, ``weak-order PERM``."""
    if not tokens:
        raise ValueError("empty builder spec")
    kind, rest = tokens[0], " ".join(tokens[1:])
    if kind == "boolean":
        return builders.boolean_poset(int(rest))
    if kind == "chain":
        return builders.chain_poset(_parts(rest))
    if kind == "young":
        if "/" not in rest:
            raise ValueError("young needs 'MU / NU'")
        mu, nu = rest.split("/", 1)
        return builders.young_interval(_parts(mu), _parts(nu))
    if kind == "weak-order":
        rest = rest.strip()
        perm = _parts(rest) if "," in rest else tuple(int(ch) for ch in rest)
        return builders.weak_order_interval(perm)
    raise ValueError(f"unknown builder {kind!r}")


# -- subcommands ---------------------------------------------------------------

def cmd_validate(args):
    P = _load(args.file, args)
    print(f"valid: elements={P.n_elems} rank={P.rank} covers={len(P.covers)}")


def cmd_chains(args):
    P = _load(args.file, args)
    for chain in iter_chains(P):
        elems = ",".join(map(str, chain.elements))
        word = ",".join(map(str, chain.word))
        print(f"elements={elems} word={word} descents={_set(descent_set(chain.word))}")


def cmd_stats(args):
    P = _load(args.file, args)
    stats = flag_stats(P)
    print(f"rank {P.rank}")
    f = stats.f
    for I in all_rank_sets(P.rank):
        print(f"I={_set(I)} d={stats.d[I]} f={f[I]}")


def cmd_fp(args):
    P = _load(args.file, args)
    qbasis = args.basis if args.basis in ("M", "F") else "M"
    F = fp(P, args.method, qbasis, threads=args.threads)
    if args.basis in ("M", "F"):
        print(F)
        return
    sym = is_symmetric(F)
    if sym is None:
        raise NotSymmetric("F_P is not symmetric; no m or s expansion")
    print(render_sym(sym if args.basis == "m" else m_to_schur(sym)))


def cmd_ep(args):
    P = _load(args.file, args)
    print(ehrenborg_ep(P))


def _bool(v):
    return "true" if v else "false"


def cmd_check(args):
    P = _load(args.file, args)
    F = fp(P, threads=args.threads)
    sym = is_symmetric(F)
    print(f"R-labeled: {_bool(is_r_labeled(P))}")
    print(f"relative-R-labeled: {_bool(is_relative_r_labeled(P))}")
    print(f"symmetric: {_bool(sym is not None)}")
    print(f"E_P==F_P: {_bool(ehrenborg_ep(P) == F)}")
    print(f"schur: {render_sym(m_to_schur(sym)) if sym is not None else 'n/a'}")


def cmd_product(args):
    P, Q = _load(args.file1, args), _load(args.file2, args)
    _guard(P.rank + Q.rank, args)
    _emit(product(P, Q), args.output)


def cmd_coproduct(args):
    P = _load(args.file, args)
    for ps, c in hopf_coproduct(IncidenceElement.of(P)).terms:
        print(f"{c:+d} " + " (x) ".join(Q.to_inline() for Q in ps))


def cmd_hopf_verify(args):
    failed = False
    for path in args.files:
        P = _load(path, args)
        for name, status in run_checks(P):
            failed |= status == "FAIL"
            print(f"{path}: {name}: {status}")
    return 1 if failed else 0


def cmd_build(args):
    try:
        P = build_from_spec(args.spec)
    except ValueError as exc:
        args.parser.error(f"bad builder spec {' '.join(args.spec)!r}: {exc}")
    _guard(P.rank, args)
    _emit(P, args.output)


def make_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-rank", type=int, default=12,
                        help="refuse posets of larger rank (default 12)")
    common.add_argument("--threads", type=int, default=None,
                        help="worker processes for chain enumeration (default $CHAINFORM_THREADS or 1)")

    parser = argparse.ArgumentParser(prog="chainform", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=fn, parser=p)
        return p

    add("validate", cmd_validate, "parse and validate a poset file").add_argument("file")
    add("chains", cmd_chains, "list maximal chains with words and descent sets").add_argument("file")
    add("stats", cmd_stats, "d and f tables").add_argument("file")
    p = add("fp", cmd_fp, "the quasi-symmetric function F_P")
    p.add_argument("file")
    p.add_argument("--basis", choices=["M", "F", "m", "s"], default="M")
    p.add_argument("--method", choices=list(METHODS), default="via_chains")
    add("ep", cmd_ep, "flag f-vector function E_P").add_argument("file")
    add("check", cmd_check, "R-labeling, symmetry and E_P == F_P").add_argument("file")
    p = add("product", cmd_product, "product poset with disjoint labels")
    p.add_argument("file1")
    p.add_argument("file2")
    p.add_argument("-o", "--output")
    add("coproduct", cmd_coproduct, "incidence coproduct, merged up to label-equivalence").add_argument("file")
    add("hopf-verify", cmd_hopf_verify, "run the identity checks").add_argument("files", nargs="+")
    p = add("build", cmd_build, "boolean N | chain L1,L2,... | young MU / NU | weak-order PERM")
    p.add_argument("spec", nargs="+")
    p.add_argument("-o", "--output")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    if args.threads is None:
        args.threads = default_threads()
    try:
        return args.func(args) or 0
    except ChainformError as exc:
        print(f"error: {exc.name}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
