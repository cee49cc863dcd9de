"""Command-line front end: ``muperm <subcommand> ...``.

Exit codes: 0 success or claim holds, 1 counterexample (or invalid
labeling), 2 usage or parse error, 3 failed precondition.
"""

from __future__ import annotations

import argparse
import sys

from .algebra import parse_rational
from .compute import METHODS, choose_method, mu_permanent
from .conjectures import CLAIMS, COUNTEREXAMPLE, HOLDS, check_instance, replay_witness, run_campaign
from .core import DimensionCapExceeded, multivariable_qdet, specialize
from .formats import (
    FormatError,
    dumps,
    entry_to_json,
    graph_to_json,
    load_graph,
    load_matrix,
    matrix_to_json,
    multi_to_json,
    poly_to_json,
    save_matrix,
)
from .matrices import GENERATORS, generate
from .schur import SchurCapExceeded, averaging_identity, check_gamma_psd, uniform_grid
from .structured import PreconditionError, relabel_tree, validate_labeling

EXIT_OK, EXIT_FOUND, EXIT_USAGE, EXIT_PRECONDITION = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _emit(args, payload: dict, human: str) -> None:
    sys.stdout.write(dumps(payload) if args.json else human + "\n")


def parse_n_range(text: str) -> list[int]:
    """'4' -> [4]; '2-6' -> [2, 3, 4, 5, 6]; '2,4' -> [2, 4]."""
    out: list[int] = []
    try:
        for part in text.split(","):
            if "-" in part:
                a, b = part.split("-", 1)
                out.extend(range(int(a), int(b) + 1))
            else:
                out.append(int(part))
    except ValueError:
        raise UsageError(f"bad --n value {text!r}") from None
    if not out or min(out) < 1:
        raise UsageError(f"bad --n value {text!r}")
    return out


def cmd_compute(args) -> int:
    A = load_matrix(args.file)
    method = choose_method(A) if args.method == "auto" else args.method
    P = mu_permanent(A, method, jobs=args.jobs)
    _emit(args, {"method": method, "poly": poly_to_json(P)}, P.format(unicode=args.unicode))
    return EXIT_OK


def cmd_eval(args) -> int:
    A = load_matrix(args.file)
    mu = parse_rational(args.mu)
    v = specialize(A, mu)
    _emit(args, {"mu": args.mu, "value": entry_to_json(v)}, str(v))
    return EXIT_OK


def cmd_qdet(args) -> int:
    A = load_matrix(args.file)
    Q = multivariable_qdet(A)
    _emit(args, multi_to_json(Q), Q.format())
    return EXIT_OK


def cmd_schur(args) -> int:
    if args.gamma_psd:
        ns = parse_n_range(args.n or "2-5")
        grid = uniform_grid(-1, 1, args.grid_points)
        reports = [check_gamma_psd(n, grid) for n in ns]
        payload = {
            "claim": "gamma-psd",
            "status": HOLDS if all(r.passed for r in reports) else COUNTEREXAMPLE,
            "results": [{"n": r.n, "min_eigenvalue": min(r.min_eigenvalues), "passed": r.passed} for r in reports],
        }
        human = "\n".join(f"n={r.n}  min eigenvalue {min(r.min_eigenvalues):.3e}  {'ok' if r.passed else 'FAIL'}"
                          for r in reports)
        _emit(args, payload, human)
        return EXIT_OK if payload["status"] == HOLDS else EXIT_FOUND
    if not args.file:
        raise UsageError("schur --identity needs a matrix file")
    p_mu, avg = averaging_identity(load_matrix(args.file))
    payload = {"identity": "averaging", "equal": p_mu == avg, "p_mu": poly_to_json(p_mu),
               "grand_sum_over_nfact": poly_to_json(avg)}
    _emit(args, payload, f"P_mu(A)        = {p_mu.format()}\ngrand sum / n! = {avg.format()}\nequal: {p_mu == avg}")
    return EXIT_OK if p_mu == avg else EXIT_FOUND


def _verdict_human(v) -> str:
    lines = [f"{v.claim}: {v.status}"]
    if v.counts:
        lines.append("  " + ", ".join(f"{k} {c}" for k, c in v.counts.items()))
    if v.witness:
        flagged = v.details.get("flagged_seeds") if v.details else None
        if flagged:
            lines.append(f"  flagged seeds: {flagged}")
    return "\n".join(lines)


def cmd_check(args) -> int:
    if args.replay:
        v = replay_witness(args.replay)
    elif args.matrix:
        A = load_matrix(args.matrix)
        params = {}
        if args.grid_points:
            lo = -1 if args.claim == "nonnegative" else 0
            params["grid"] = uniform_grid(lo, 1, args.grid_points)
        if args.claim == "lieb":
            if not args.subset:
                raise UsageError("check lieb --matrix needs --subset")
            params["S"] = [int(x) for x in args.subset.split(",")]
        if args.claim == "gamma-psd":
            raise UsageError("gamma-psd takes --n, not --matrix")
        v = check_instance(args.claim, A, params)
    else:
        params = {}
        if args.grid_points and args.claim in ("lieb", "fischer", "soules"):
            params["grid"] = uniform_grid(0, 1, args.grid_points)
        if args.grid_points and args.claim == "gamma-psd":
            params["grid"] = uniform_grid(-1, 1, args.grid_points)
        v = run_campaign(args.claim, parse_n_range(args.n), args.trials, args.seed, args.kind,
                         args.out_dir, args.jobs, params)
    if args.json:
        sys.stdout.write(dumps(v.to_json()))
    else:
        print(_verdict_human(v))
    return EXIT_FOUND if v.status == COUNTEREXAMPLE else EXIT_OK


def cmd_labeling(args) -> int:
    G = load_graph(args.graph)
    if args.action == "validate":
        r = validate_labeling(G)
        payload = {"valid": r.valid, "violations": [[list(e), list(f)] for e, f in r.violations]}
        human = "valid" if r.valid else "invalid\n" + "\n".join(f"  crossing: {e} {f}" for e, f in r.violations)
        _emit(args, payload, human)
        return EXIT_OK if r.valid else EXIT_FOUND
    perm = relabel_tree(G)
    H = G.relabeled(perm)
    payload = {"permutation": list(perm.images), "graph": graph_to_json(H), "valid": validate_labeling(H).valid}
    _emit(args, payload, f"old -> new: {list(perm.images)}\nedges: {H.sorted_edges()}")
    return EXIT_OK


def cmd_gen(args) -> int:
    A = generate(args.kind, args.n, args.seed)
    if args.out:
        save_matrix(args.out, A)
    else:
        sys.stdout.write(dumps(matrix_to_json(A)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="muperm", description="Exact mu-permanents and related checks.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.add_argument("--unicode", action="store_true", help="print the variable as μ with superscripts")
        return sp

    c = common(sub.add_parser("compute", help="P_mu(A) as a polynomial"))
    c.add_argument("file")
    c.add_argument("--method", choices=METHODS, default="auto")
    c.add_argument("--jobs", type=int, default=1)
    c.set_defaults(func=cmd_compute)

    e = common(sub.add_parser("eval", help="P_mu(A) at a rational mu"))
    e.add_argument("file")
    e.add_argument("--mu", required=True)
    e.set_defaults(func=cmd_eval)

    q = common(sub.add_parser("qdet", help="multivariable q-determinant"))
    q.add_argument("file")
    q.set_defaults(func=cmd_qdet)

    s = common(sub.add_parser("schur", help="Schur power matrix reports"))
    s.add_argument("file", nargs="?")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--identity", action="store_true", help="check the averaging identity for FILE")
    g.add_argument("--gamma-psd", action="store_true", help="spectral sweep of Gamma_mu")
    s.add_argument("--n", help="sizes for --gamma-psd, e.g. 2-5")
    s.add_argument("--grid-points", type=int, default=21)
    s.set_defaults(func=cmd_schur)

    k = common(sub.add_parser("check", help="run a claim check or campaign"))
    k.add_argument("claim", choices=CLAIMS + ("nonnegative",))
    k.add_argument("--n", default="2-6")
    k.add_argument("--trials", type=int, default=20)
    k.add_argument("--seed", type=int, default=0)
    k.add_argument("--kind", choices=sorted(GENERATORS))
    k.add_argument("--out-dir")
    k.add_argument("--grid-points", type=int)
    k.add_argument("--matrix", help="check a single matrix file instead of a campaign")
    k.add_argument("--subset", help="comma-separated S for lieb with --matrix")
    k.add_argument("--replay", help="re-run a persisted witness file")
    k.add_argument("--jobs", type=int, default=1)
    k.set_defaults(func=cmd_check)

    lab = common(sub.add_parser("labeling", help="validate or repair a tree labeling"))
    lab.add_argument("action", choices=("validate", "relabel"))
    lab.add_argument("graph")
    lab.set_defaults(func=cmd_labeling)

    gen = sub.add_parser("gen", help="write a seeded random matrix")
    gen.add_argument("--kind", choices=sorted(GENERATORS), default="pd")
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--out")
    gen.set_defaults(func=cmd_gen)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (UsageError, FormatError, FileNotFoundError) as exc:
        print(f"muperm: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (PreconditionError, DimensionCapExceeded, SchurCapExceeded) as exc:
        print(f"muperm: precondition failed: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except ValueError as exc:
        print(f"muperm: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
