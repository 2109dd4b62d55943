"""Command-line interface: tableau tools, Specht polynomials, decompositions and verification."""

from __future__ import annotations

import argparse
import json
import shlex
import sys
from typing import Any, Sequence

from .combinat import (
    Subset,
    Tableau,
    add_box_cc,
    add_box_ev,
    add_box_tableau,
    asl_dsl,
    check_partition,
    check_permutation,
    check_standard,
    cocharge,
    ct,
    ct_J,
    delta,
    dsi,
    dsic_sets,
    evacuation,
    external_corners,
    identity,
    iota_cc,
    iota_ev,
    iota_tableau,
    is_cct,
    q_tilde,
    rsk,
)
from .repdecomp import OVERFLOW_MODES, build_RnI, build_Rnk, enlarge_I, ext, ind_t
from .specht import DescentError, f_hom, f_w, f_w_I, specht_quotient, stable_truncation
from .verify import SUITES, run_suites

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DESCENT, EXIT_RANGE = 0, 1, 2, 3, 4


class UsageError(ValueError):
    """Malformed command-line input."""


class RangeError(ValueError):
    """``n`` beyond the configured bound."""


# parsing helpers


def parse_word(text: str, n: int | None = None) -> tuple[int, ...]:
    """A permutation in one-line notation: ``3,5,2``, ``352`` (n <= 9) or ``identity`` with ``n``."""
    text = text.strip()
    if text == "identity":
        if n is None:
            raise UsageError("--w identity needs --n")
        return identity(n)
    try:
        if "," in text:
            word = [int(x) for x in text.split(",") if x.strip()]
        elif text.isdigit():
            word = [int(c) for c in text]
        else:
            raise UsageError(f"cannot read permutation {text!r}")
        return check_permutation(word)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def parse_set(text: str | None) -> list[int]:
    if text is None or text.strip() in ("", "-", "{}"):
        return []
    try:
        return sorted({int(x) for x in text.replace("{", "").replace("}", "").split(",") if x.strip()})
    except ValueError as exc:
        raise UsageError(f"cannot read set {text!r}") from exc


def parse_tableau(text: str) -> Tableau:
    """Rows separated by ``/``; entries by commas or spaces."""
    try:
        rows = [[int(x) for x in row.replace(",", " ").split()] for row in text.split("/")]
        return Tableau.from_rows(rows)
    except ValueError as exc:
        raise UsageError(f"cannot read tableau {text!r}: {exc}") from exc


def parse_shape(text: str) -> tuple[int, ...]:
    try:
        return check_partition(int(x) for x in text.split(","))
    except ValueError as exc:
        raise UsageError(f"not a partition: {text!r}") from exc


def _standard(text: str) -> Tableau:
    try:
        return check_standard(parse_tableau(text))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _bound(n: int, limit: int, flag: str) -> None:
    if n > limit:
        raise RangeError(f"n = {n} exceeds the bound {limit}; raise it with {flag} {n}")


# subcommands


def cmd_tableau(args) -> Any:
    if args.op == "rsk":
        w = parse_word(args.w, args.n)
        P, Q = rsk(w)
        Qt = q_tilde(w)
        return {"w": list(w), "P": P.to_json(), "Q": Q.to_json(), "Qtilde": Qt.to_json(),
                "ct": ct(Qt).to_json(), "Dsl": list(asl_dsl(w)[1].sorted), "cocharge": cocharge(Qt)}
    if args.op == "ev":
        S = _standard(args.S)
        return {"S": S.to_json(), "ev": evacuation(S).to_json()}
    if args.op == "ct":
        S = _standard(args.S)
        if args.set is not None:
            J = Subset(parse_set(args.set), S.size)
            try:
                C = ct_J(S, J)
            except ValueError as exc:
                raise UsageError(str(exc)) from exc
        else:
            C = ct(S)
        return {"S": S.to_json(), "ct": C.to_json(), "sum": sum(C.reading_word), "is_cct": is_cct(C)}
    if args.op == "dsic":
        S = _standard(args.S)
        dc, ac = dsic_sets(S)
        return {"S": S.to_json(), "Dsi": list(dsi(S).sorted), "Dsic": list(dc.sorted), "Asic": list(ac.sorted)}
    if args.op == "iota":
        S = _standard(args.S)
        return {"S": S.to_json(), "iota": iota_tableau(S).to_json(), "iota_ev": iota_ev(S).to_json(),
                "iota_cc": iota_cc(ct(S)).to_json()}
    if args.op == "corners":
        if args.S is not None:
            S = _standard(args.S)
            shape = S.shape
        elif args.shape is not None:
            S, shape = None, parse_shape(args.shape)
        else:
            raise UsageError("corners needs --shape or --S")
        out = []
        for v in external_corners(shape):
            entry: dict[str, Any] = {"v": list(v)}
            if S is not None:
                Sp = add_box_ev(S, v)
                entry.update({"T_plus": add_box_tableau(S, v).to_json(), "S_plus": Sp.to_json(),
                              "C_plus": add_box_cc(ct(S), v).to_json(), "delta": delta(S, v),
                              "Dsic": list(dsic_sets(Sp)[0].sorted)})
            out.append(entry)
        return {"shape": list(shape), "corners": out}
    raise UsageError(f"unknown tableau operation {args.op!r}")


def cmd_specht(args) -> Any:
    w = parse_word(args.w, args.n)
    _bound(len(w), args.max_index_n, "--max-index-n")
    if args.op == "fw":
        return f_w(w).to_json()
    if args.op in ("fwI", "hom"):
        I = Subset(parse_set(args.set), len(w))
        poly, hvec = (f_w_I if args.op == "fwI" else f_hom)(w, I)
        return {"w": list(w), "I": list(I.sorted), "hvec": list(hvec), "degree": poly.degree(),
                "polynomial": poly.render()}
    if args.op == "quotient":
        P = rsk(w)[0]
        q = specht_quotient(P, q_tilde(w))
        return {"w": list(w), "T": P.to_json(), "degree": q.degree(), "polynomial": q.render()}
    if args.op == "stable":
        N = args.trunc if args.trunc is not None else len(w) + 1
        _bound(N, args.max_index_n, "--max-index-n")
        poly, cert = stable_truncation(w, N, samples=args.samples)
        return {"w": list(w), "N": N, "degree": poly.degree(), "polynomial": poly.render(),
                "certificate": cert.to_json()}
    raise UsageError(f"unknown specht operation {args.op!r}")


def cmd_decompose(args) -> Any:
    n = args.n
    if n is None or n < 1:
        raise UsageError("decompose needs --n >= 1")
    _bound(n, args.max_index_n, "--max-index-n")
    if args.realize:
        _bound(n + (1 if args.ind is not None or args.ext else 0), args.max_realized_n, "--max-realized-n")
    if (args.set is None) == (args.k is None):
        raise UsageError("give exactly one of --set or --k")
    try:
        if args.k is not None:
            dec = build_Rnk(n, args.k, args.hom)
        else:
            dec = build_RnI(n, parse_set(args.set), args.hom, args.mode)
        if args.enlarge is not None:
            dec = enlarge_I(dec, args.enlarge)
        if args.ind is not None:
            dec = ind_t(dec, args.ind)
        if args.ext:
            dec = ext(dec)
    except DescentError:
        raise
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    out = dec.to_json(realize=args.realize)
    out["display"] = str(dec)
    return out


def cmd_verify(args) -> tuple[Any, int]:
    names = sorted(SUITES) if args.suite == "all" else [args.suite]
    reports = run_suites(names, args.max_n, args.threads)
    ok = all(r.ok for r in reports)
    for r in reports:
        print(r.summary(), file=sys.stderr)
    payload = reports[0].to_json() if len(reports) == 1 else {"ok": ok, "suites": [r.to_json() for r in reports]}
    return payload, EXIT_OK if ok else EXIT_FAIL


# argument parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="pretty", action="store_false", help="compact canonical JSON (default)")
    fmt.add_argument("--pretty", dest="pretty", action="store_true", help="indented JSON")
    common.add_argument("--stdin", action="store_true", help="read further arguments from standard input")
    common.add_argument("--max-index-n", type=int, default=9, help="largest n for index-level work (default 9)")
    common.add_argument("--max-realized-n", type=int, default=6, help="largest n for realized bases (default 6)")
    common.set_defaults(pretty=False)

    parser = argparse.ArgumentParser(prog="higher-specht", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tableau", parents=[common], help="RSK, evacuation, cocharge and box additions")
    p.add_argument("op", choices=["rsk", "ev", "ct", "dsic", "iota", "corners"])
    p.add_argument("--w", help="permutation in one-line notation")
    p.add_argument("--n", type=int, help="size, for --w identity")
    p.add_argument("--S", help="standard tableau, rows separated by '/'")
    p.add_argument("--set", help="set J for generalized cocharge tableaux")
    p.add_argument("--shape", help="partition, comma separated")
    p.set_defaults(func=cmd_tableau)

    p = sub.add_parser("specht", parents=[common], help="higher Specht polynomials")
    p.add_argument("op", choices=["fw", "fwI", "hom", "quotient", "stable"])
    p.add_argument("--w", required=True, help="permutation in one-line notation, or 'identity'")
    p.add_argument("--n", type=int, help="size, for --w identity")
    p.add_argument("--set", help="the set I, comma separated")
    p.add_argument("--trunc", type=int, help="truncation size N for 'stable'")
    p.add_argument("--samples", type=int, default=50, help="sampled permutations for the invariance check")
    p.set_defaults(func=cmd_specht)

    p = sub.add_parser("decompose", parents=[common], help="decompositions of orbit representations")
    p.add_argument("--n", type=int)
    p.add_argument("--set", help="the set I, comma separated (use '' for the empty set)")
    p.add_argument("--k", type=int, help="number of blocks, for the whole R_(n,k)")
    p.add_argument("--hom", action="store_true", help="homogeneous multipliers")
    p.add_argument("--realize", action="store_true", help="include polynomial bases")
    p.add_argument("--ind", type=int, metavar="T", help="apply Ind_t")
    p.add_argument("--ext", action="store_true", help="apply Ext")
    p.add_argument("--enlarge", type=int, metavar="ELL", help="add ELL to I via the enlargement rules")
    p.add_argument("--mode", choices=OVERFLOW_MODES, default="reject", help="elements of I that are >= n")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("--suite", choices=sorted(SUITES) + ["all"], default="all")
    p.add_argument("--max-n", type=int, help="size bound (default: suite default capped by SPECHT_MAX_N)")
    p.add_argument("--threads", type=int, help="worker processes (default: CPU count)")
    p.set_defaults(func=cmd_verify)
    return parser


def dumps(obj: Any, pretty: bool = False) -> str:
    if pretty:
        return json.dumps(obj, indent=2, sort_keys=True)
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    if "--stdin" in argv:
        argv = argv + shlex.split(sys.stdin.read())
    args = build_parser().parse_args(argv)
    code = EXIT_OK
    try:
        result = args.func(args)
        if args.command == "verify":
            result, code = result
    except DescentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DESCENT
    except RangeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RANGE
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(dumps(result, args.pretty))
    return code


if __name__ == "__main__":
    sys.exit(main())
