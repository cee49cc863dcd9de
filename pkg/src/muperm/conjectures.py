"""Checkers for the monotonicity, Lieb-, Fischer- and Soules-type claims.

Each checker returns a :class:`Verdict`.  Exact checks (monotonicity via
Sturm sequences, grid inequalities in rational arithmetic) label a failure
``counterexample`` directly.  The spectral Soules check works in floating
point; a gap is only called a counterexample once an exact Rayleigh
quotient confirms it, otherwise it is ``inconclusive``.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Iterable, Sequence

import numpy as np

from .algebra import (
    GaussianRational,
    MuPoly,
    count_real_roots,
    find_negative_point,
    format_rational,
    gr,
    is_strictly_positive_on,
    isolate_largest_root,
    refine_root,
)
from .compute import mu_permanent
from .core import mu_permanent_naive
from .formats import (
    entry_to_json,
    matrix_from_json,
    matrix_to_json,
    poly_to_json,
    read_json,
    write_json,
)
from .matrices import (
    SquareMatrix,
    generate,
    is_positive_definite,
    is_positive_semidefinite,
    support_graph,
)
from .schur import gamma_exponents, jacobi_eigh, pi_mu, schur_power, uniform_grid
from .structured import PreconditionError

HOLDS = "holds"
COUNTEREXAMPLE = "counterexample"
INCONCLUSIVE = "inconclusive"

CLAIMS = ("monotone", "epsilon", "lieb", "fischer", "soules", "gamma-psd")
DEFAULT_KIND = {
    "monotone": "pd",
    "epsilon": "pd",
    "lieb": "hermitian-psd",
    "fischer": "psd",
    "soules": "psd",
    "gamma-psd": None,
}
SOULES_TOL = 1e-8


@dataclass
class Verdict:
    claim: str
    status: str
    witness: dict[str, Any] | None = None
    trials: int = 1
    seed: int | None = None
    details: dict[str, Any] = field(default_factory=dict)
    counts: dict[str, int] | None = None

    @property
    def holds(self) -> bool:
        return self.status == HOLDS

    def to_json(self) -> dict[str, Any]:
        out = {
            "claim": self.claim,
            "status": self.status,
            "trials": self.trials,
            "seed": self.seed,
            "witness": _jsonify(self.witness),
            "details": _jsonify(self.details),
        }
        if self.counts is not None:
            out["counts"] = dict(self.counts)
        return out


def _jsonify(obj):
    if obj is None or isinstance(obj, (bool, int, str)):
        return obj
    if isinstance(obj, float):
        return obj if math.isfinite(obj) else str(obj)
    if isinstance(obj, Fraction):
        return format_rational(obj)
    if isinstance(obj, GaussianRational):
        return entry_to_json(obj)
    if isinstance(obj, MuPoly):
        return poly_to_json(obj)
    if isinstance(obj, SquareMatrix):
        return matrix_to_json(obj)
    if isinstance(obj, dict):
        return {str(k): _jsonify(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonify(v) for v in obj]
    if isinstance(obj, np.generic):
        return obj.item()
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def _real(x: GaussianRational) -> Fraction:
    if x.im:
        raise ValueError(f"expected a real value, got {x}")
    return x.re


def _grid(mu_grid, lo, hi, points: int = 21) -> list[Fraction]:
    grid = [Fraction(m) for m in (mu_grid if mu_grid is not None else uniform_grid(lo, hi, points))]
    bad = [m for m in grid if not lo <= m <= hi]
    if bad:
        raise ValueError(f"grid points {bad} outside [{lo}, {hi}]")
    return grid


# ---------------------------------------------------------------------------
# Monotonicity


def check_monotone(A: SquareMatrix, lo=-1, hi=1) -> Verdict:
    """Is P_mu(A) strictly increasing on [lo, hi]?  Exact.

    Strict increase is equivalent to the derivative being nonnegative on the
    interval (its zeros are isolated).  The fast path is strict positivity by
    Sturm counting; otherwise an exact search for a negative value decides.
    """
    lo, hi = Fraction(lo), Fraction(hi)
    if A.is_diagonal():
        raise PreconditionError("diagonal matrix: P_mu is constant")
    if not is_positive_definite(A):
        raise PreconditionError("matrix is not Hermitian positive definite")
    P = mu_permanent(A)
    dP = P.derivative()
    details: dict[str, Any] = {"interval": [lo, hi], "derivative": dP}
    if is_strictly_positive_on(dP, lo, hi):
        details["certificate"] = "derivative has no real root in the interval"
        return Verdict("monotone", HOLDS, details=details)
    x = find_negative_point(dP, lo, hi)
    if x is None:
        details["certificate"] = "derivative nonnegative; zeros are isolated"
        return Verdict("monotone", HOLDS, details=details)
    witness = {"matrix": A, "mu": x, "derivative_at_mu": dP.evaluate(x), "lo": lo, "hi": hi}
    return Verdict("monotone", COUNTEREXAMPLE, witness=witness, details=details)


@dataclass(frozen=True)
class RootInterval:
    """``(lo, hi]`` contains the largest real root of dP/dmu.

    ``lo``/``hi`` are None when the derivative has no real root but is
    negative.  ``below_minus_one`` is the root < -1 assertion;
    ``conjecture_holds`` is the exact statement that dP/dmu >= 0 on
    [-1, inf) with dP/dmu(-1) > 0, i.e. some eps < -1 works.
    """

    lo: Fraction | None
    hi: Fraction | None
    below_minus_one: bool
    conjecture_holds: bool


def epsilon_threshold(A: SquareMatrix, width=Fraction(1, 10**6)) -> RootInterval | None:
    """None when dP/dmu > 0 on all of R; else the largest-root isolating interval."""
    if not is_positive_definite(A):
        raise PreconditionError("matrix is not Hermitian positive definite")
    dP = mu_permanent(A).derivative()
    if dP.is_zero():
        raise PreconditionError("derivative is identically zero (diagonal matrix)")
    if is_strictly_positive_on(dP):
        return None
    minus_one = Fraction(-1)
    holds = _real(dP.evaluate(minus_one)) > 0 and find_negative_point(dP, minus_one, math.inf) is None
    iv = isolate_largest_root(dP, width)
    if iv is None:
        return RootInterval(None, None, False, holds)
    lo, hi = iv
    below = count_real_roots(dP, minus_one, math.inf) == 0 and _real(dP.evaluate(minus_one)) != 0
    if below and hi >= minus_one:
        lo, hi = refine_root(dP, lo, hi, minus_one)
    return RootInterval(lo, hi, below, holds)


def check_epsilon(A: SquareMatrix) -> Verdict:
    r = epsilon_threshold(A)
    if r is None:
        return Verdict("epsilon", HOLDS, details={"threshold": None, "note": "derivative positive on R"})
    details = {"largest_root_interval": [r.lo, r.hi], "below_minus_one": r.below_minus_one}
    if r.conjecture_holds:
        return Verdict("epsilon", HOLDS, details=details)
    return Verdict("epsilon", COUNTEREXAMPLE, witness={"matrix": A, "root_interval": [r.lo, r.hi]}, details=details)


# ---------------------------------------------------------------------------
# Lieb-type inequality


def restricted_sum(A: SquareMatrix, S: Iterable[int]) -> MuPoly:
    """Sum over permutations with sigma(S) = S.

    sigma(S) = S exactly when sigma never maps S to its complement or back,
    so this is the mu-permanent of A with those entries set to zero.
    """
    S = set(S)
    if not S:
        raise ValueError("S must be nonempty")
    if not S <= set(range(1, A.n + 1)):
        raise ValueError(f"S must be a subset of 1..{A.n}")
    masked = SquareMatrix(
        [[x if ((i + 1) in S) == ((j + 1) in S) else 0 for j, x in enumerate(row)] for i, row in enumerate(A.entries)]
    )
    return mu_permanent_naive(masked)


def _is_tree_supported(A: SquareMatrix) -> bool:
    return (A.is_symmetric() or A.is_hermitian()) and support_graph(A).is_forest()


def check_lieb(A: SquareMatrix, S: Iterable[int], mu_grid: Sequence | None = None) -> Verdict:
    """P_mu(A) >= restricted_sum(A, S) at exact grid points in [0, 1]."""
    S = sorted(set(S))
    grid = _grid(mu_grid, 0, 1)
    if not is_positive_semidefinite(A):
        raise PreconditionError("matrix is not Hermitian positive semidefinite")
    diff = mu_permanent(A) - restricted_sum(A, S)
    details: dict[str, Any] = {"S": S, "grid_points": len(grid), "difference": diff}
    for mu in grid:
        v = _real(diff.evaluate(mu))
        if v < 0:
            return Verdict("lieb", COUNTEREXAMPLE, witness={"matrix": A, "S": S, "mu": mu, "difference": v}, details=details)
    if _is_tree_supported(A):
        coeffs = diff.real_coeffs()
        details["coefficientwise"] = all(c >= 0 for c in coeffs)
        if not details["coefficientwise"]:
            return Verdict("lieb", COUNTEREXAMPLE, witness={"matrix": A, "S": S, "difference": diff}, details=details)
    return Verdict("lieb", HOLDS, details=details)


# ---------------------------------------------------------------------------
# Fischer-type inequality


def check_fischer(A: SquareMatrix, k: int, mu_grid: Sequence | None = None) -> Verdict:
    """P_mu(A) >= P_mu(A11) P_mu(A22) for the leading k x k block, grid in [0, 1]."""
    n = A.n
    if not 1 <= k < n:
        raise ValueError(f"split must satisfy 1 <= k < {n}")
    grid = _grid(mu_grid, 0, 1)
    if not is_positive_semidefinite(A):
        raise PreconditionError("matrix is not Hermitian positive semidefinite")
    P = mu_permanent(A)
    Q = mu_permanent(A.principal(range(1, k + 1))) * mu_permanent(A.principal(range(k + 1, n + 1)))
    for mu in grid:
        lhs, rhs = _real(P.evaluate(mu)), _real(Q.evaluate(mu))
        if lhs < rhs:
            return Verdict("fischer", COUNTEREXAMPLE, witness={"matrix": A, "split": k, "mu": mu, "lhs": lhs, "rhs": rhs})
    return Verdict("fischer", HOLDS, details={"split": k, "grid_points": len(grid)})


def check_fischer_all(A: SquareMatrix, mu_grid: Sequence | None = None) -> Verdict:
    for k in range(1, A.n):
        v = check_fischer(A, k, mu_grid)
        if not v.holds:
            return v
    return Verdict("fischer", HOLDS, details={"splits": list(range(1, A.n))})


# ---------------------------------------------------------------------------
# Soules-type claim


def _exact_rayleigh(M_exact, v: np.ndarray) -> Fraction:
    x = [Fraction(int(round(c * 2**40)), 2**40) for c in v]
    num = Fraction(0)
    for r, row in enumerate(M_exact.entries):
        if not x[r]:
            continue
        num += x[r] * sum((_real(e) * x[c] for c, e in enumerate(row) if x[c]), Fraction(0))
    return num / sum(c * c for c in x)


def check_soules(A: SquareMatrix, mu_grid: Sequence | None = None, tol: float = SOULES_TOL) -> Verdict:
    """Largest eigenvalue of Pi_mu(A) against P_mu(A) on a grid in [0, 1].

    1 is always an eigenvector of Pi_mu(A) with eigenvalue P_mu(A), so the
    gap lambda_max - P_mu(A) is >= 0 up to rounding.
    """
    if A.n > 5:
        raise PreconditionError("spectral checks are capped at n = 5")
    if not (A.is_real() and A.is_symmetric()):
        raise PreconditionError("matrix must be real symmetric")
    if not is_positive_semidefinite(A):
        raise PreconditionError("matrix is not positive semidefinite")
    grid = _grid(mu_grid, 0, 1, points=11)
    tree = support_graph(A).is_forest()
    P = mu_permanent(A)
    S = schur_power(A).to_numpy()
    E = gamma_exponents(A.n).astype(float)
    gaps = []
    for mu in grid:
        p_val = float(_real(P.evaluate(mu)))
        w, V = jacobi_eigh(S * float(mu) ** E)
        lam = float(w[-1])
        gap = lam - p_val
        rel = abs(gap) / max(abs(p_val), 1e-300)
        gaps.append(gap)
        if gap > tol * max(abs(p_val), 1.0):
            exact_p = _real(P.evaluate(mu))
            rq = _exact_rayleigh(pi_mu(A).evaluate(mu), V[:, -1])
            witness = {"matrix": A, "mu": mu, "lambda_max": lam, "p_mu": exact_p, "rayleigh": rq}
            status = COUNTEREXAMPLE if rq > exact_p else INCONCLUSIVE
            return Verdict("soules", status, witness=witness, details={"tree": tree, "gaps": gaps})
        if tree and rel > tol:
            return Verdict("soules", INCONCLUSIVE, witness={"matrix": A, "mu": mu, "lambda_max": lam, "p_mu": p_val},
                           details={"tree": tree, "gaps": gaps})
    return Verdict("soules", HOLDS, details={"tree": tree, "gaps": gaps, "max_gap": max(gaps)})


def check_nonnegative(A: SquareMatrix, mu_grid: Sequence | None = None) -> Verdict:
    """P_mu(A) >= 0 at exact grid points in [-1, 1] for Hermitian PSD A."""
    grid = _grid(mu_grid, -1, 1)
    if not is_positive_semidefinite(A):
        raise PreconditionError("matrix is not Hermitian positive semidefinite")
    P = mu_permanent(A)
    for mu in grid:
        v = _real(P.evaluate(mu))
        if v < 0:
            return Verdict("nonnegative", COUNTEREXAMPLE, witness={"matrix": A, "mu": mu, "value": v})
    return Verdict("nonnegative", HOLDS, details={"grid_points": len(grid)})


# ---------------------------------------------------------------------------
# Campaigns


def _subset(n: int, seed: int) -> list[int]:
    rng = np.random.default_rng(seed ^ 0x5EED)
    k = int(rng.integers(1, n + 1))
    return sorted(int(x) + 1 for x in rng.choice(n, size=k, replace=False))


def check_instance(claim: str, A: SquareMatrix, params: dict[str, Any] | None = None) -> Verdict:
    """Single-instance dispatch used by campaigns and witness replay."""
    params = params or {}
    grid = params.get("grid")
    if claim == "monotone":
        return check_monotone(A, params.get("lo", -1), params.get("hi", 1))
    if claim == "epsilon":
        return check_epsilon(A)
    if claim == "lieb":
        return check_lieb(A, params["S"], grid)
    if claim == "fischer":
        if "split" in params:
            return check_fischer(A, params["split"], grid)
        return check_fischer_all(A, grid)
    if claim == "soules":
        return check_soules(A, grid)
    if claim == "nonnegative":
        return check_nonnegative(A, grid)
    raise ValueError(f"unknown claim {claim!r}")


REDRAW_STRIDE = 1_000_003


def _draw(claim: str, kind: str, n: int, seed: int) -> SquareMatrix:
    # the monotonicity claims exclude diagonal matrices; redraw from a
    # derived seed so the trial stays reproducible
    A = generate(kind, n, seed)
    k = 0
    while claim in ("monotone", "epsilon") and A.is_diagonal() and n > 1:
        k += 1
        A = generate(kind, n, seed + k * REDRAW_STRIDE)
    return A


def _run_trial(args) -> tuple[int, Verdict, dict]:
    claim, kind, n, trial_seed, base = args
    A = _draw(claim, kind, n, trial_seed)
    params = dict(base)
    if claim == "lieb":
        params["S"] = _subset(n, trial_seed)
    v = check_instance(claim, A, params)
    v.seed = trial_seed
    return trial_seed, v, params


def _n_values(n_range) -> list[int]:
    if isinstance(n_range, int):
        return [n_range]
    return list(n_range)


def run_campaign(
    claim: str,
    n_range,
    trials: int,
    seed: int,
    generator_kind: str | None = None,
    out_dir: str | Path | None = None,
    jobs: int = 1,
    params: dict[str, Any] | None = None,
) -> Verdict:
    """Seeded trial loop.  Trial t uses seed + t and n = n_values[t % len]."""
    if claim not in CLAIMS:
        raise ValueError(f"unknown claim {claim!r}; choose from {CLAIMS}")
    ns = _n_values(n_range)
    if claim == "gamma-psd":
        from .schur import check_gamma_psd

        reports = [check_gamma_psd(n, (params or {}).get("grid")) for n in ns]
        ok = all(r.passed for r in reports)
        details = {f"n={r.n}": min(r.min_eigenvalues) for r in reports}
        return Verdict("gamma-psd", HOLDS if ok else COUNTEREXAMPLE, trials=len(reports), seed=seed,
                       details=details, counts={HOLDS: sum(r.passed for r in reports),
                                                COUNTEREXAMPLE: sum(not r.passed for r in reports),
                                                INCONCLUSIVE: 0})
    kind = generator_kind or DEFAULT_KIND[claim]
    base = dict(params or {})
    tasks = [(claim, kind, ns[t % len(ns)], seed + t, base) for t in range(trials)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_trial, tasks))
    else:
        results = [_run_trial(t) for t in tasks]
    counts = {HOLDS: 0, COUNTEREXAMPLE: 0, INCONCLUSIVE: 0}
    first: Verdict | None = None
    flagged = []
    for trial_seed, v, p in results:
        counts[v.status] += 1
        if v.status != HOLDS:
            flagged.append(trial_seed)
            if out_dir is not None:
                persist_witness(Path(out_dir), v, kind, p)
            if first is None or (v.status == COUNTEREXAMPLE and first.status != COUNTEREXAMPLE):
                first = v
    status = COUNTEREXAMPLE if counts[COUNTEREXAMPLE] else INCONCLUSIVE if counts[INCONCLUSIVE] else HOLDS
    details = {"kind": kind, "n_values": ns, "flagged_seeds": flagged}
    return Verdict(claim, status, witness=first.witness if first else None, trials=trials, seed=seed,
                   details=details, counts=counts)


def persist_witness(out_dir: Path, v: Verdict, kind: str, params: dict[str, Any]) -> Path:
    out_dir.mkdir(parents=True, exist_ok=True)
    path = out_dir / f"{v.claim}-seed{v.seed}.json"
    payload = v.to_json()
    payload["replay"] = {"claim": v.claim, "kind": kind, "params": _jsonify(params)}
    write_json(path, payload)
    return path


def replay_witness(path: str | Path) -> Verdict:
    """Re-run the single-instance check stored in a witness file."""
    data = read_json(path)
    A = matrix_from_json(data["witness"]["matrix"])
    replay = data.get("replay", {})
    params = dict(replay.get("params", {}))
    if "grid" in params and params["grid"] is not None:
        params["grid"] = [Fraction(g) for g in params["grid"]]
    for key in ("lo", "hi"):
        if key in params:
            params[key] = Fraction(params[key])
    v = check_instance(replay.get("claim", data["claim"]), A, params)
    v.seed = data.get("seed")
    return v
