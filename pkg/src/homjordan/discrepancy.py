"""Verdicts for the three construction families against the claims made for them.

The published construction asserts that every member of each family is a
simple Hom-Jordan algebra.  Each cell of the grid is checked over Q with
the polarized verifier and over GF(5) with both the verifier and the dense
numpy oracle; the two GF(5) verdicts must agree.  Agreement with the
published claim is recorded, not required.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import HomAlgebra, check_hom_jordan, check_multiplicative
from .constructions import cyclic_shift, family_cyclic, family_dim1, family_dim2
from .errors import NotMultiplicative
from .exactla import GF, QQ, Field, Matrix
from .oracle import exhaustive_hom_jordan
from .structure import is_simple

ORACLE_FIELD = 5
GRID = (-1, 0, 1, 2, 3)
CLAIM = "hom_jordan, simple"


@dataclass(frozen=True)
class Cell:
    family: str
    params: str
    hom_jordan_q: str
    multiplicative_q: str
    simple_q: str
    hom_jordan_gf5: str
    oracle_gf5: str
    simple_gf5: str

    @property
    def oracle_agrees(self) -> bool:
        return self.hom_jordan_gf5 == self.oracle_gf5

    @property
    def matches_claim(self) -> bool:
        return self.hom_jordan_q == "holds" and self.simple_q == "simple"

    def to_json(self) -> dict:
        return {"family": self.family, "params": self.params, "claim": CLAIM,
                "hom_jordan_q": self.hom_jordan_q, "multiplicative_q": self.multiplicative_q,
                "simple_q": self.simple_q, "hom_jordan_gf5": self.hom_jordan_gf5,
                "oracle_gf5": self.oracle_gf5, "simple_gf5": self.simple_gf5,
                "oracle_agrees": self.oracle_agrees, "matches_claim": self.matches_claim}


def _simple_verdict(a: HomAlgebra, seed: int, trials: int) -> str:
    try:
        return is_simple(a, seed, trials).verdict
    except NotMultiplicative:
        return "unsupported"


def _cell(family: str, params: str, build, seed: int, trials: int) -> Cell:
    q, g = build(QQ), build(GF(ORACLE_FIELD))
    return Cell(family, params,
                hom_jordan_q=check_hom_jordan(q).verdict.value,
                multiplicative_q=check_multiplicative(q).verdict.value,
                simple_q=_simple_verdict(q, seed, trials),
                hom_jordan_gf5=check_hom_jordan(g).verdict.value,
                oracle_gf5="holds" if exhaustive_hom_jordan(g) else "fails",
                simple_gf5=_simple_verdict(g, seed, trials))


def _cyclic_alpha(kind: str, f: Field, n: int) -> Matrix:
    if kind == "id":
        return Matrix.identity(f, n)
    if kind == "shift":
        return cyclic_shift(f, n)
    return Matrix.zeros(f, n, n)


def discrepancy_cells(seed: int = 0, trials: int = 64) -> list[Cell]:
    cells = [_cell("dim1", f"k={k}", lambda f, k=k: family_dim1(k, f), seed, trials) for k in GRID]
    cells += [_cell("dim2", f"p={p},q={q}", lambda f, p=p, q=q: family_dim2(p, q, f), seed, trials)
              for p in GRID for q in GRID]
    for n in (3, 4, 5):
        for kind in ("id", "shift", "zero"):
            cells.append(_cell("cyclic", f"n={n},alpha={kind}",
                               lambda f, n=n, kind=kind: family_cyclic(n, _cyclic_alpha(kind, f, n), f), seed, trials))
    return cells


def discrepancy_log(seed: int = 0, trials: int = 64) -> dict:
    cells = discrepancy_cells(seed, trials)
    return {"oracle_field": ORACLE_FIELD, "claim": CLAIM,
            "cells": [c.to_json() for c in cells],
            "all_oracle_agree": all(c.oracle_agrees for c in cells),
            "claim_mismatches": sum(not c.matches_claim for c in cells)}
