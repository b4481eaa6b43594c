"""JSON documents for algebras and bimodules.

Algebra document::

    {"kind": "hom_algebra", "field": {"type": "Q"}, "dim": 2,
     "basis_labels": ["e1", "e2"],
     "mu": [{"i": 0, "j": 0, "k": 1, "c": "1"}, ...],
     "alpha": [["0", "1"], ["1", "0"]], "jordan_mode": false}

``mu`` is sparse; an entry (i, j, k) also sets (j, i, k).  ``alpha`` is
row-major in column convention, so column j holds alpha(e_j).
"""

from __future__ import annotations

import json
import os
from typing import Any

from .algebra import DimensionError, HomAlgebra
from .bimodule import BimoduleRep
from .exactla import Field, FieldError, Matrix, field_from_json


class ParseError(ValueError):
    def __init__(self, message: str, where: str = ""):
        super().__init__(f"{where}: {message}" if where else message)
        self.where = where


class InvariantViolation(ParseError):
    pass


def _require(obj: dict, key: str, kind, where: str):
    if key not in obj:
        raise ParseError(f"missing field {key!r}", where)
    val = obj[key]
    if not isinstance(val, kind) or isinstance(val, bool) and kind is int:
        raise ParseError(f"field {key!r} has wrong type {type(val).__name__}", where)
    return val


def _scalar(f: Field, text: Any, where: str):
    if not isinstance(text, (str, int)) or isinstance(text, bool):
        raise ParseError(f"scalar must be a string, got {text!r}", where)
    try:
        return f.coerce(text)
    except (FieldError, ZeroDivisionError) as e:
        raise ParseError(str(e), where) from None


def _matrix(f: Field, rows: Any, nrows: int, ncols: int, where: str) -> Matrix:
    if not isinstance(rows, list) or len(rows) != nrows:
        raise ParseError(f"expected {nrows} rows", where)
    out = []
    for r, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != ncols:
            raise ParseError(f"row {r} must have {ncols} entries", where)
        out.append(tuple(_scalar(f, x, f"{where}[{r}][{c}]") for c, x in enumerate(row)))
    return Matrix(f, tuple(out), ncols)


def algebra_from_obj(obj: Any, where: str = "algebra") -> HomAlgebra:
    if not isinstance(obj, dict):
        raise ParseError("document must be a JSON object", where)
    if obj.get("kind") != "hom_algebra":
        raise ParseError("kind must be 'hom_algebra'", where)
    try:
        f = field_from_json(_require(obj, "field", dict, where))
    except FieldError as e:
        raise ParseError(str(e), f"{where}.field") from None
    n = _require(obj, "dim", int, where)
    if n < 0:
        raise ParseError("dim must be non-negative", where)
    labels = obj.get("basis_labels")
    if labels is not None:
        if not isinstance(labels, list) or len(labels) != n or not all(isinstance(s, str) for s in labels):
            raise ParseError(f"basis_labels must be {n} strings", where)
        labels = tuple(labels)
    entries = _require(obj, "mu", list, where)
    table: dict = {}
    seen = set()
    for idx, e in enumerate(entries):
        loc = f"{where}.mu[{idx}]"
        if not isinstance(e, dict):
            raise ParseError("entry must be an object", loc)
        i, j, k = (_require(e, key, int, loc) for key in ("i", "j", "k"))
        if not all(0 <= t < n for t in (i, j, k)):
            raise ParseError(f"index out of range for dim {n}", loc)
        if (i, j, k) in seen:
            raise ParseError(f"duplicate entry ({i}, {j}, {k})", loc)
        seen.add((i, j, k))
        c = _scalar(f, _require(e, "c", (str, int), loc), loc)
        key = (min(i, j), max(i, j))
        vec = table.setdefault(key, {})
        if k in vec and vec[k] != c:
            raise InvariantViolation(f"conflicting values for mu(e_{i}, e_{j}) at k={k}", loc)
        vec[k] = c
    products = {key: tuple(vec.get(k, f.zero) for k in range(n)) for key, vec in table.items()}
    alpha = _matrix(f, _require(obj, "alpha", list, where), n, n, f"{where}.alpha")
    jordan_mode = obj.get("jordan_mode", False)
    if not isinstance(jordan_mode, bool):
        raise ParseError("jordan_mode must be a boolean", where)
    try:
        return HomAlgebra.from_products(f, n, products, alpha, jordan_mode, labels)
    except (DimensionError, ValueError) as e:
        raise InvariantViolation(str(e), where) from None


def algebra_to_obj(a: HomAlgebra) -> dict:
    f, n = a.field, a.dim
    mu = []
    for i in range(n):
        for j in range(i, n):
            for k, c in enumerate(a.mu[i][j]):
                if c != 0:
                    mu.append({"i": i, "j": j, "k": k, "c": f.format(c)})
    obj = {"kind": "hom_algebra", "field": f.to_json(), "dim": n}
    if a.labels is not None:
        obj["basis_labels"] = list(a.labels)
    obj["mu"] = mu
    obj["alpha"] = a.alpha.to_strings()
    if a.jordan_mode:
        obj["jordan_mode"] = True
    return obj


def _loads(text: str, where: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON at line {e.lineno} column {e.colno}: {e.msg}", where) from None


def parse_algebra(text: str) -> HomAlgebra:
    return algebra_from_obj(_loads(text, "algebra"))


def serialize_algebra(a: HomAlgebra) -> str:
    return json.dumps(algebra_to_obj(a), indent=2) + "\n"


def load_algebra(path: str) -> HomAlgebra:
    with open(path, encoding="utf-8") as fh:
        return algebra_from_obj(_loads(fh.read(), path), path)


def bimodule_from_obj(obj: Any, algebra: HomAlgebra | None = None, base_dir: str = ".",
                      where: str = "bimodule") -> BimoduleRep:
    if not isinstance(obj, dict) or obj.get("kind") != "bimodule":
        raise ParseError("kind must be 'bimodule'", where)
    if algebra is None:
        ref = obj.get("algebra")
        if isinstance(ref, dict):
            algebra = algebra_from_obj(ref, f"{where}.algebra")
        elif isinstance(ref, str):
            algebra = load_algebra(os.path.join(base_dir, ref))
        else:
            raise ParseError("algebra must be an inline document or a file path", where)
    f = algebra.field
    m = _require(obj, "dim_w", int, where)
    alpha_w = _matrix(f, _require(obj, "alpha_w", list, where), m, m, f"{where}.alpha_w")
    rho = _require(obj, "rho_l", list, where)
    if len(rho) != algebra.dim:
        raise ParseError(f"rho_l needs one matrix per basis element ({algebra.dim})", where)
    actions = tuple(_matrix(f, r, m, m, f"{where}.rho_l[{i}]") for i, r in enumerate(rho))
    return BimoduleRep(algebra, alpha_w, actions)


def bimodule_to_obj(r: BimoduleRep, algebra_ref: str | None = None) -> dict:
    return {"kind": "bimodule", "algebra": algebra_ref if algebra_ref is not None else algebra_to_obj(r.algebra),
            "dim_w": r.dim, "alpha_w": r.alpha_w.to_strings(), "rho_l": [lam.to_strings() for lam in r.actions]}


def parse_bimodule(text: str, algebra: HomAlgebra | None = None, base_dir: str = ".") -> BimoduleRep:
    return bimodule_from_obj(_loads(text, "bimodule"), algebra, base_dir)


def serialize_bimodule(r: BimoduleRep, algebra_ref: str | None = None) -> str:
    return json.dumps(bimodule_to_obj(r, algebra_ref), indent=2) + "\n"


def load_bimodule(path: str, algebra: HomAlgebra | None = None) -> BimoduleRep:
    with open(path, encoding="utf-8") as fh:
        return bimodule_from_obj(_loads(fh.read(), path), algebra, os.path.dirname(path) or ".", path)


def parse_vectors(f: Field, text: str, n: int) -> list[tuple]:
    """Vectors written as ``"1,0;0,1"`` or a JSON list of lists."""
    text = text.strip()
    if text.startswith("["):
        raw = _loads(text, "vectors")
    else:
        raw = [part.split(",") for part in text.split(";") if part.strip()]
    out = []
    for idx, v in enumerate(raw):
        if not isinstance(v, list) or len(v) != n:
            raise ParseError(f"vector {idx} must have {n} entries", "vectors")
        out.append(tuple(_scalar(f, x.strip() if isinstance(x, str) else x, f"vectors[{idx}]") for x in v))
    return out
