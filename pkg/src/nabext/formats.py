"""JSON interchange for algebras, modules, cochains, cocycles and results.

Everything is written canonically: keys sorted, rationals as ``"p/q"`` (or
``"p"``) in lowest terms, zero cochain values omitted.  Reading is strict and
reports the offending field.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .abelian import CohomologyResult
from .cochains import Cochain
from .dgla import DgLaContext, GaugeElement, LElement
from .exactla import Matrix, format_rational, parse_rational
from .extensions import NonAbelianCocycle, WitnessResult
from .lie import LieAlgebra, LinearMap, ModuleStructure, ValidationReport


class FormatError(ValueError):
    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"line {exc.lineno} column {exc.colno}", exc.msg) from None


def _rat(x, field: str) -> Fraction:
    if isinstance(x, bool):
        raise FormatError(field, f"expected a rational, got {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return parse_rational(x)
        except ValueError as exc:
            raise FormatError(field, str(exc)) from None
    raise FormatError(field, f"expected a rational string, got {x!r}")


def _vector(x, n: int, field: str) -> tuple:
    if not isinstance(x, list):
        raise FormatError(field, "expected a list")
    if len(x) != n:
        raise FormatError(field, f"expected {n} entries, got {len(x)}")
    return tuple(_rat(v, f"{field}[{i}]") for i, v in enumerate(x))


def _indices(key: str, field: str) -> tuple:
    if key == "":
        return ()
    try:
        return tuple(int(p) for p in key.split(","))
    except ValueError:
        raise FormatError(field, f"bad index key {key!r}") from None


def _require(d, key: str, field: str):
    if not isinstance(d, dict):
        raise FormatError(field, "expected an object")
    if key not in d:
        raise FormatError(f"{field}.{key}" if field else key, "missing")
    return d[key]


def _count(x, field: str) -> int:
    if not isinstance(x, int) or isinstance(x, bool) or x < 0:
        raise FormatError(field, f"expected a non-negative integer, got {x!r}")
    return x


def vector_to_json(v) -> list:
    return [format_rational(x) for x in v]


def matrix_to_json(m: Matrix) -> list:
    return [vector_to_json(m.row(i)) for i in range(m.rows)]


def matrix_from_json(x, rows: int, cols: int, field: str) -> Matrix:
    if not isinstance(x, list) or len(x) != rows:
        raise FormatError(field, f"expected {rows} rows")
    return Matrix.from_rows([_vector(r, cols, f"{field}[{i}]") for i, r in enumerate(x)], cols=cols)


# --- algebras and modules --------------------------------------------------

def algebra_to_json(a: LieAlgebra) -> dict:
    return {
        "dim": a.dim,
        "basis": list(a.basis_names),
        "brackets": {f"{i},{j}": vector_to_json(v) for (i, j), v in a.nonzero_brackets().items()},
    }


def algebra_from_json(d) -> LieAlgebra:
    n = _count(_require(d, "dim", ""), "dim")
    names = d.get("basis") or [f"e{i + 1}" for i in range(n)]
    if not isinstance(names, list) or len(names) != n or not all(isinstance(s, str) for s in names):
        raise FormatError("basis", f"expected {n} basis names")
    raw = d.get("brackets", {})
    if not isinstance(raw, dict):
        raise FormatError("brackets", "expected an object")
    br = {}
    for key, v in raw.items():
        field = f"brackets.{key}"
        idx = _indices(key, field)
        if len(idx) != 2 or not (0 <= idx[0] < idx[1] < n):
            raise FormatError(field, f"key must be 'i,j' with 0 <= i < j < {n}")
        br[idx] = _vector(v, n, field)
    return LieAlgebra.from_brackets(n, br, names)


def module_to_json(m: ModuleStructure) -> dict:
    return {"dim": m.space_dim, "action": [matrix_to_json(a) for a in m.action]}


def module_from_json(d, algebra: LieAlgebra) -> ModuleStructure:
    k = _count(_require(d, "dim", ""), "dim")
    acts = _require(d, "action", "")
    if not isinstance(acts, list) or len(acts) != algebra.dim:
        raise FormatError("action", f"expected {algebra.dim} matrices, one per algebra basis vector")
    return ModuleStructure(algebra, k, tuple(matrix_from_json(a, k, k, f"action[{i}]")
                                              for i, a in enumerate(acts)))


# --- cochains, cocycles, L-elements --------------------------------------

def cochain_to_json(c: Cochain) -> dict:
    return {
        "arity": c.arity,
        "coeffs": {",".join(map(str, k)): vector_to_json(v) for k, v in sorted(c.items())},
    }


def cochain_from_json(d, source_dim: int, target_dim: int, field: str = "cochain") -> Cochain:
    p = _count(_require(d, "arity", field), f"{field}.arity")
    raw = d.get("coeffs", {})
    if not isinstance(raw, dict):
        raise FormatError(f"{field}.coeffs", "expected an object")
    coeffs = {}
    for key, v in raw.items():
        f = f"{field}.coeffs.{key}"
        idx = _indices(key, f)
        if len(idx) != p:
            raise FormatError(f, f"expected {p} indices")
        if any(b <= a for a, b in zip(idx, idx[1:])) or any(not 0 <= i < source_dim for i in idx):
            raise FormatError(f, f"indices must be strictly increasing and < {source_dim}")
        coeffs[idx] = _vector(v, target_dim, f)
    return Cochain(source_dim, p, target_dim, coeffs)


def cocycle_to_json(c: NonAbelianCocycle) -> dict:
    return {"chi": cochain_to_json(c.chi), "psi": [matrix_to_json(m) for m in c.psi]}


def cocycle_from_json(d, dg: int, dh: int) -> NonAbelianCocycle:
    chi = cochain_from_json(_require(d, "chi", ""), dg, dh, "chi")
    if chi.arity != 2:
        raise FormatError("chi.arity", "must be 2")
    psi = _require(d, "psi", "")
    if not isinstance(psi, list) or len(psi) != dg:
        raise FormatError("psi", f"expected {dg} matrices")
    return NonAbelianCocycle(chi, tuple(matrix_from_json(m, dh, dh, f"psi[{i}]") for i, m in enumerate(psi)))


def gauge_to_json(b: GaugeElement) -> dict:
    return {"beta": matrix_to_json(b.beta.matrix)}


def gauge_from_json(d, dg: int, dh: int) -> GaugeElement:
    m = matrix_from_json(_require(d, "beta", ""), dh, dg, "beta")
    return GaugeElement(LinearMap(dg, dh, m))


def linear_map_from_json(x, source_dim: int, target_dim: int, field: str) -> LinearMap:
    return LinearMap(source_dim, target_dim, matrix_from_json(x, target_dim, source_dim, field))


def lelement_to_json(x: LElement) -> dict:
    return {
        "degree": x.degree,
        "components": {f"{m},{n}": cochain_to_json(c) for (m, n), c in sorted(x.components().items())},
    }


def lelement_from_json(d, ctx: DgLaContext) -> LElement:
    s = ctx.split
    deg = _require(d, "degree", "")
    if not isinstance(deg, int) or deg < 0:
        raise FormatError("degree", "expected a non-negative integer")
    total = Cochain.zero(s.dim, deg + 1, s.dh)
    for key, c in (d.get("components") or {}).items():
        comp = cochain_from_json(c, s.dim, s.dh, f"components.{key}")
        if comp.arity != deg + 1:
            raise FormatError(f"components.{key}.arity", f"must be {deg + 1}")
        total = total + comp
    return LElement(ctx, total)


# --- reports ---------------------------------------------------------------

def validation_to_json(rep: ValidationReport, names=None) -> dict:
    return {
        "valid": rep.valid,
        "violations": [
            {
                "rule": v.rule,
                "indices": list(v.indices),
                "names": [names[i] for i in v.indices] if names and v.rule != "derivation" else None,
                "defect": vector_to_json(v.defect),
            }
            for v in rep.violations
        ],
    }


def _monomial(m: tuple) -> str:
    return "*".join(m) if m else "1"


def witness_to_json(w: WitnessResult) -> dict:
    out: dict = {"kind": w.kind}
    if w.beta is not None:
        out["beta"] = matrix_to_json(w.beta.beta.matrix)
    if w.stage is not None:
        out["stage"] = w.stage
    if w.residual:
        out["parameters"] = list(w.parameters)
        out["residual"] = [
            {_monomial(m): format_rational(c) for m, c in con.terms.items()}
            for con in w.residual if not con.is_trivial()
        ]
    return out


def cohomology_to_json(r: CohomologyResult) -> dict:
    return {
        "degree": r.degree,
        "dim_cochains": r.dim_cochains,
        "dim_cocycles": r.dim_cocycles,
        "dim_coboundaries": r.dim_coboundaries,
        "dim_H": r.dim_H,
        "representatives": [cochain_to_json(c) for c in r.representatives],
    }
