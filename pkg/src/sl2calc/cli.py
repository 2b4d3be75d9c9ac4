"""Command-line front end with machine-readable, byte-stable output.

Every operation is exposed through a subcommand; JSON payloads use sorted
keys and sorted sparse quadruples so identical invocations are
byte-identical (timings, being nondeterministic, go to stderr).  Exit codes:
0 success, 2 invalid parameters (with a diagnostic naming the violated
precondition), 3 resource guard exceeded, 1 internal error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import CONVENTIONS_VERSION
from .cohomology import (h0_symN_E_twist, root_sequence, supernatural_check,
                         wedge_E_cohomology)
from .errors import ParameterError, ResourceGuardError
from .fields import field_of_characteristic
from .hankel import (eagon_northcott_betti, hilbert_series, mcm_data,
                     secant_invariants)
from .hermite import hermite_alpha, hermite_beta, hermite_gamma, \
    verify_compatibilities
from .oracle import koszul_tor_oracle
from .spaces import describe
from .verify import run_suite
from .weyman import bigraded_weyman, green_check, tor_profiles, weyman_dim

CONVENTIONS = """\
sl2calc conventions, version {version}

Bases.  U has ordered basis [1, x] (weights -1, +1); Sym^d U basis x^0..x^d
with x^j of weight 2j-d; D^m U basis x^(0)..x^(m), dual to the monomial
basis, so <x^(k), x^j> = delta_kj.  Composite spaces enumerate recursively:
Sym/D use weakly decreasing tuples of inner ordinals, Wedge uses strictly
decreasing tuples (signs from the standard permutation sign when sorting),
Tensor uses row-major pairs.  Tuples are listed in ascending lexicographic
order; a basis vector's ordinal is its position in that list.

Matrices.  Rows are codomain ordinals, columns domain ordinals; compose(A, B)
is the product A.B.  Kernel vectors are normalized to leading coefficient 1
and ordered by free column.  JSON matrices serialize as sorted
[row, col, numerator, denominator] quadruples (denominator 1 over prime
fields).

Normalizations.  beta and gamma are the inverses of multiplication from the
free-module generators x^(m-1) ^ ... ^ 1 and 1; graded shifts of the MCM
resolutions put generators in degree 0; the Weyman first layer uses the
primitive integral inclusion (Wronskian transpose); Sym^N E twists outside a
single-row cohomology window are rejected rather than mixed.
""".format(version=CONVENTIONS_VERSION)


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def _matrix_payload(m):
    return {
        "rows": m.rows,
        "cols": m.cols,
        "domain": describe(m.domain) if m.domain is not None else None,
        "codomain": describe(m.codomain) if m.codomain is not None else None,
        "entries": [list(q) for q in m.triples()],
    }


def _betti_payload(table):
    return {"entries": [list(e) for e in table.entries()]}


def _result(op, params, result, char=0):
    return {
        "op": op,
        "params": {k: v for k, v in sorted(params.items())},
        "result": result,
        "metadata": {
            "field": field_of_characteristic(char).name,
            "conventions_version": CONVENTIONS_VERSION,
        },
    }


def _cmd_hermite(args):
    char = args.char
    alpha = hermite_alpha(args.m, args.n, char)
    beta = hermite_beta(args.m, args.n, char)
    gamma = hermite_gamma(args.m, args.n, char)
    result = {
        "alpha": _matrix_payload(alpha),
        "beta": _matrix_payload(beta),
        "gamma": _matrix_payload(gamma),
    }
    if args.verify:
        result["verify"] = verify_compatibilities(args.m, args.n, char)
    return _result("hermite", {"m": args.m, "n": args.n, "char": char},
                   result, char)


def _cmd_cohomology(args):
    if args.N is not None:
        for name in ("k", "n", "t"):
            if getattr(args, name) is None:
                raise ParameterError(f"symmetric-power mode needs --{name}")
        value = h0_symN_E_twist(args.k, args.n, args.N, args.t)
        return _result("h0_symN_E_twist",
                       {"k": args.k, "n": args.n, "N": args.N, "t": args.t},
                       {"h0": value})
    for name in ("m", "d", "i"):
        if getattr(args, name) is None:
            raise ParameterError(f"cohomology table mode needs --{name}")
    if args.t is not None:
        table = wedge_E_cohomology(args.m, args.d, args.i, args.t)
        return _result("wedge_E_cohomology",
                       {"m": args.m, "d": args.d, "i": args.i, "t": args.t},
                       {"h": [[j, table.values[j]]
                              for j in table.nonzero_rows()]})
    rep = supernatural_check(args.m, args.d, args.i)
    tables = [[t, sorted([j, h] for j, h in rep["tables"][t].items())]
              for t in sorted(rep["tables"])]
    return _result("root_sequence",
                   {"m": args.m, "d": args.d, "i": args.i},
                   {"roots": root_sequence(args.m, args.d, args.i),
                    "supernatural": rep["supernatural"],
                    "window": rep["window"],
                    "tables": tables})


def _cmd_hankel(args):
    inv = secant_invariants(args.n, args.k)
    betti = eagon_northcott_betti(args.n, args.k)
    series = hilbert_series(args.n, args.k, cross_check=True)
    result = {
        "dim_proj": inv.dim_proj,
        "degree": inv.degree,
        "codim": inv.codim,
        "class_group_order": inv.class_group_order,
        "ulrich_index": inv.ulrich_index,
        "betti": _betti_payload(betti),
        "hilbert_series": {"numerator": series.numerator,
                           "denom_power": series.denom_power},
    }
    if args.oracle:
        brute = koszul_tor_oracle(args.n, args.k, args.max_i)
        result["oracle_betti"] = _betti_payload(brute)
        result["oracle_matches"] = brute == betti
    return _result("hankel", {"n": args.n, "k": args.k}, result)


def _cmd_mcm(args):
    data = mcm_data(args.n, args.k, args.r)
    return _result("mcm", {"n": args.n, "k": args.k, "r": args.r}, data)


def _cmd_weyman(args):
    char = args.char
    if args.u is not None or args.v is not None:
        for name in ("u", "v", "d", "d2"):
            if getattr(args, name) is None:
                raise ParameterError(f"bigraded mode needs --{name}")
        rep = bigraded_weyman(args.u, args.v, args.d, args.d2, char,
                              args.q_policy)
        return _result("bigraded_weyman",
                       {"u": args.u, "v": args.v, "d1": args.d,
                        "d2": args.d2, "char": char,
                        "q_policy": args.q_policy},
                       rep, char)
    if args.i is None or args.d is None:
        raise ParameterError("single-graded mode needs --i and --d")
    value = weyman_dim(args.i, args.d, char)
    return _result("weyman_dim",
                   {"i": args.i, "d": args.d, "char": char},
                   {"homology_dim": value}, char)


def _cmd_green(args):
    char = args.char
    rep = green_check(args.g, char)
    result = {"green": rep, "tor_profiles": tor_profiles(args.g, args.a)}
    return _result("green", {"g": args.g, "char": char, "a": args.a},
                   result, char)


def _cmd_verify(args):
    rep = run_suite(args.suite, args.char)
    return _result("verify", {"suite": args.suite, "char": args.char}, rep,
                   args.char)


def _render_verify_text(payload) -> str:
    rep = payload["result"]
    lines = [f"suite {rep['suite']} (char {rep['char']})"]
    for check in rep["checks"]:
        status = "PASS" if check["pass"] else "FAIL"
        lines.append(f"{status}  {check['name']}")
    done = sum(1 for c in rep["checks"] if c["pass"])
    lines.append(f"{done}/{len(rep['checks'])} checks passed")
    return "\n".join(lines) + "\n"


def _render_csv(payload) -> str:
    op = payload["op"]
    if op in ("hankel",):
        rows = ["i,j,beta"]
        rows += [f"{i},{j},{b}" for i, j, b in
                 payload["result"]["betti"]["entries"]]
        return "\n".join(rows) + "\n"
    if op == "root_sequence":
        rows = ["t,j,h"]
        for t, pairs in payload["result"]["tables"]:
            for j, h in pairs:
                rows.append(f"{t},{j},{h}")
        return "\n".join(rows) + "\n"
    if op == "wedge_E_cohomology":
        rows = ["j,h"]
        rows += [f"{j},{h}" for j, h in payload["result"]["h"]]
        return "\n".join(rows) + "\n"
    raise ParameterError("csv output is only available for Betti and "
                         "cohomology tables")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sl2calc",
        description="Exact SL(2) multilinear calculus: Hermite matrices, "
                    "Schwarzenberger cohomology tables, Hankel invariants, "
                    "Weyman homology.")
    parser.add_argument("--conventions", action="store_true",
                        help="print the basis-order and sign conventions "
                             "document and exit")
    sub = parser.add_subparsers(dest="command")

    def add(name, func, **flags):
        p = sub.add_parser(name)
        for flag, (required, kind) in flags.items():
            if kind is bool:
                p.add_argument(f"--{flag}", action="store_true")
            else:
                p.add_argument(f"--{flag}", type=kind, required=required,
                               default=None)
        p.add_argument("--char", type=int, default=0)
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--out", type=str, default=None)
        p.set_defaults(func=func)
        return p

    add("hermite", _cmd_hermite, m=(True, int), n=(True, int),
        verify=(False, bool))
    add("cohomology", _cmd_cohomology, m=(False, int), d=(False, int),
        i=(False, int), t=(False, int), k=(False, int), n=(False, int),
        N=(False, int))
    add("hankel", _cmd_hankel, n=(True, int), k=(True, int),
        oracle=(False, bool), **{"max-i": (False, int)})
    add("mcm", _cmd_mcm, n=(True, int), k=(True, int), r=(True, int))
    add("weyman", _cmd_weyman, i=(False, int), d=(False, int),
        d2=(False, int), u=(False, int), v=(False, int))
    sub.choices["weyman"].add_argument("--q-policy", dest="q_policy",
                                       choices=("transparent", "full"),
                                       default="transparent")
    add("green", _cmd_green, g=(True, int), a=(False, int))
    verify_p = sub.add_parser("verify")
    verify_p.add_argument("suite",
                          choices=("hermite", "supernatural", "hankel",
                                   "selfdual", "green", "all"))
    verify_p.add_argument("--char", type=int, default=0)
    verify_p.add_argument("--format", choices=("json", "csv", "text"),
                          default="text")
    verify_p.add_argument("--out", type=str, default=None)
    verify_p.set_defaults(func=_cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.conventions:
        sys.stdout.write(CONVENTIONS)
        return 0
    if args.command is None:
        parser.print_usage(sys.stderr)
        return 2
    started = time.monotonic()
    try:
        payload = args.func(args)
        if args.command == "verify" and args.format == "text":
            text = _render_verify_text(payload)
        elif args.format == "csv":
            text = _render_csv(payload)
        else:
            text = canonical_json(payload)
        exit_code = 0
        if args.command == "verify" and not payload["result"]["pass"]:
            exit_code = 1
    except ParameterError as exc:
        sys.stderr.write(f"parameter error: {exc}\n")
        return 2
    except ResourceGuardError as exc:
        sys.stderr.write(f"resource guard: {exc}\n")
        return 3
    except Exception as exc:  # pragma: no cover - internal failures
        sys.stderr.write(f"internal error: {type(exc).__name__}: {exc}\n")
        return 1
    if args.out:
        with open(args.out, "w") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    sys.stderr.write(f"elapsed: {time.monotonic() - started:.3f}s\n")
    return exit_code


if __name__ == "__main__":
    sys.exit(main())
