"""JSON text forms for scalars, polynomials, matrices and graphs.

Rationals are written ``"p/q"`` (or ``"p"``); a complex scalar is
``{"re": "p/q", "im": "p/q"}``.  A MuPoly is the list of its nonzero terms
``{"deg": k, "coeff": scalar}`` in ascending degree.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .algebra import GaussianRational, MuPoly, MultiQPoly, format_rational, parse_rational
from .matrices import SquareMatrix, SupportGraph


class FormatError(ValueError):
    pass


def scalar_to_json(x: GaussianRational) -> dict[str, str]:
    return {"re": format_rational(x.re), "im": format_rational(x.im)}


def scalar_from_json(obj: Any) -> GaussianRational:
    try:
        if isinstance(obj, dict):
            if set(obj) - {"re", "im"}:
                raise FormatError(f"unexpected keys in scalar {obj}")
            return GaussianRational(parse_rational(obj.get("re", "0")), parse_rational(obj.get("im", "0")))
        if isinstance(obj, (str, int)) and not isinstance(obj, bool):
            return GaussianRational(parse_rational(obj))
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise FormatError(f"bad scalar {obj!r}: {exc}") from None
    raise FormatError(f"bad scalar {obj!r}")


def entry_to_json(x: GaussianRational):
    """Matrix entries: plain string when real."""
    return format_rational(x.re) if x.im == 0 else scalar_to_json(x)


def poly_to_json(p: MuPoly) -> list[dict[str, Any]]:
    return [{"deg": k, "coeff": scalar_to_json(c)} for k, c in enumerate(p.coeffs) if c]


def poly_from_json(obj: Any) -> MuPoly:
    if not isinstance(obj, list):
        raise FormatError("polynomial must be a list of terms")
    out = MuPoly()
    for term in obj:
        if not isinstance(term, dict) or "deg" not in term or "coeff" not in term:
            raise FormatError(f"bad polynomial term {term!r}")
        deg = term["deg"]
        if not isinstance(deg, int) or deg < 0:
            raise FormatError(f"bad degree {deg!r}")
        out = out + MuPoly.monomial(scalar_from_json(term["coeff"]), deg)
    return out


def multi_to_json(p: MultiQPoly) -> dict[str, Any]:
    terms = sorted(p.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]))
    return {
        "nvars": p.nvars,
        "terms": [{"exps": list(e), "coeff": scalar_to_json(c)} for e, c in terms],
    }


def matrix_to_json(A: SquareMatrix) -> dict[str, Any]:
    return {"n": A.n, "entries": [[entry_to_json(x) for x in row] for row in A.entries]}


def matrix_from_json(obj: Any) -> SquareMatrix:
    if not isinstance(obj, dict) or "entries" not in obj:
        raise FormatError("matrix file must be an object with 'entries'")
    rows = obj["entries"]
    if not isinstance(rows, list) or not rows:
        raise FormatError("'entries' must be a nonempty list of rows")
    n = obj.get("n", len(rows))
    if n != len(rows) or any(not isinstance(r, list) or len(r) != n for r in rows):
        raise FormatError(f"'entries' is not a {n}x{n} array")
    return SquareMatrix([[scalar_from_json(x) for x in row] for row in rows])


def graph_to_json(G: SupportGraph) -> dict[str, Any]:
    return {"n": G.n, "edges": [list(e) for e in G.sorted_edges()]}


def graph_from_json(obj: Any) -> SupportGraph:
    try:
        n = obj["n"]
        edges = frozenset(tuple(e) for e in obj["edges"])
        if any(len(e) != 2 for e in edges):
            raise FormatError("edges must be pairs")
        return SupportGraph(int(n), edges)
    except (KeyError, TypeError) as exc:
        raise FormatError(f"bad graph file: {exc}") from None
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def dumps(obj: Any) -> str:
    """Canonical JSON text: sorted keys, fixed separators, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def read_json(path: str | Path) -> Any:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON ({exc})") from None


def write_json(path: str | Path, obj: Any) -> None:
    Path(path).write_text(dumps(obj), encoding="utf-8")


def load_matrix(path: str | Path) -> SquareMatrix:
    return matrix_from_json(read_json(path))


def save_matrix(path: str | Path, A: SquareMatrix) -> None:
    write_json(path, matrix_to_json(A))


def load_graph(path: str | Path) -> SupportGraph:
    return graph_from_json(read_json(path))
