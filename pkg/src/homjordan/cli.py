"""Command-line interface: ``homjordan <command> ...``.

Reports go to stdout (JSON or indented text), diagnostics to stderr.
Exit codes: 0 the property holds or the command succeeded, 1 it fails,
2 usage errors, unreadable input, or an undecidable verdict.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from typing import Any

from . import __version__
from .algebra import (HomAlgebra, Verdict, VerificationReport, check_hom_jordan, check_jordan,
                      check_multiplicative)
from .bimodule import (bimodule_to_module, check_bimodule, check_equivariance, check_jordan_module, is_irreducible,
                       irreducibility_transfer_check, kernel_image_analysis)
from .classification import classification_signature, compare_signatures, iso_search_smallfield, lift_ideal_isomorphism
from .constructions import (cyclic_shift, family_cyclic, family_dim1, family_dim2, induced_jordan, quotient,
                            split_idempotent_alpha, yau_twist)
from .discrepancy import discrepancy_log
from .errors import (BudgetExceeded, CertificationFailed, NotMultiplicative, NotSemisimple, NotSimple,
                     PreconditionFailed, RadicalNonzero, UnsupportedCharacteristic)
from .exactla import GF, QQ, Field, FieldError, Matrix, Singular, column_space, kernel
from .io import ParseError, algebra_to_obj, load_algebra, load_bimodule, parse_vectors, serialize_algebra
from .structure import decompose_semisimple, derived_series, ideal_closure, is_semisimple, is_simple, radical

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class Outcome(Exception):
    """Raised by a command to stop with a report and an exit code."""

    def __init__(self, body: dict, code: int):
        super().__init__(body.get("error", ""))
        self.body, self.code = body, code


def _digest(*paths: str) -> str:
    h = hashlib.sha256()
    for p in paths:
        with open(p, "rb") as fh:
            h.update(fh.read())
    return h.hexdigest()[:16]


def _exit_for(verdict: Verdict) -> int:
    return {Verdict.HOLDS: EXIT_OK, Verdict.FAILS: EXIT_FAIL, Verdict.UNDECIDABLE: EXIT_USAGE}[verdict]


def _parse_field(text: str) -> Field:
    t = text.strip().upper()
    if t in ("Q", "QQ"):
        return QQ
    digits = t.removeprefix("GF").strip("()")
    try:
        return GF(int(digits))
    except (ValueError, FieldError) as e:
        raise ParseError(f"unknown field {text!r} ({e})", "--field") from None


def _load_matrix(path: str, f: Field, n: int) -> Matrix:
    with open(path, encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as e:
            raise ParseError(f"invalid JSON: {e.msg}", path) from None
    rows = obj.get("alpha") if isinstance(obj, dict) else obj
    if not isinstance(rows, list) or len(rows) != n or any(not isinstance(r, list) or len(r) != n for r in rows):
        raise ParseError(f"expected an {n}x{n} matrix (a list of rows or {{\"alpha\": ...}})", path)
    try:
        return Matrix.from_rows(f, [[f.coerce(x) for x in r] for r in rows])
    except (FieldError, ZeroDivisionError, TypeError) as e:
        raise ParseError(str(e), path) from None


def _write_algebra(a: HomAlgebra, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(serialize_algebra(a))


def _checks(a: HomAlgebra) -> VerificationReport:
    # check_hom_jordan reports commutativity first
    return check_hom_jordan(a) + check_multiplicative(a)


# --------------------------------------------------------------------------
# commands; each returns (body, exit code)


def cmd_verify(args) -> tuple[dict, int]:
    a = load_algebra(args.file)
    rep = _checks(a)
    return {"dim": a.dim, "field": a.field.to_json(), "report": rep.to_json()}, _exit_for(rep.verdict)


def _analysis(a: HomAlgebra, seed: int, trials: int) -> dict:
    f = a.field
    out: dict[str, Any] = {"dim": a.dim, "field": f.to_json(), "checks": _checks(a).to_json()}
    ds = derived_series(a)
    out["derived_series"] = {"dims": ds.dims(), "solvable": ds.solvable}
    ker, img = kernel(a.alpha), column_space(a.alpha)
    out["alpha"] = {"kernel": ker.to_strings(), "kernel_dim": ker.dim, "image_dim": img.dim,
                    "invertible": ker.is_zero()}
    multiplicative = check_multiplicative(a).holds
    if ker.is_zero() and multiplicative:
        j = induced_jordan(a, verify=False)
        induced: dict[str, Any] = {"jordan": check_jordan(j).verdict.value}
        if f.char == 0 and induced["jordan"] == "holds":
            rad = radical(j)
            induced["radical"] = rad.to_strings()
            induced["radical_dim"] = rad.dim
            if rad.is_zero():
                try:
                    dec = decompose_semisimple(j, seed, trials, alpha=a.alpha)
                    induced["decomposition"] = dec.to_json()
                    induced["ideal_dims"] = [i.dim for i in dec.ideals]
                except (CertificationFailed, RadicalNonzero) as e:
                    induced["decomposition"] = {"error": str(e)}
        out["induced"] = induced
    else:
        out["induced"] = None
    try:
        simp = is_simple(a, seed, trials)
        out["simplicity"] = simp.to_json()
    except NotMultiplicative as e:
        simp = None
        out["simplicity"] = {"verdict": "unsupported", "reason": str(e)}
    out["semisimplicity"] = _semisimplicity(a, seed, trials)
    if simp is not None and simp.simple and multiplicative:
        try:
            out["signature"] = classification_signature(a, seed, trials).to_json()
        except (NotSimple, BudgetExceeded, CertificationFailed) as e:
            out["signature"] = {"error": str(e)}
    else:
        out["signature"] = None
    return out


def _semisimplicity(a: HomAlgebra, seed: int, trials: int) -> dict:
    try:
        dec = is_semisimple(a, seed, trials)
    except NotSemisimple as e:
        w = e.witness
        return {"verdict": "not_semisimple", "reason": e.reason,
                "witness": w.to_strings() if hasattr(w, "to_strings") else None}
    except (UnsupportedCharacteristic, NotMultiplicative) as e:
        return {"verdict": "unsupported", "reason": str(e)}
    return {"verdict": "semisimple", "decomposition": dec.to_json()}


def cmd_analyze(args) -> tuple[dict, int]:
    a = load_algebra(args.file)
    return _analysis(a, args.seed, args.trials), EXIT_OK


def cmd_induced(args) -> tuple[dict, int]:
    a = load_algebra(args.file)
    try:
        j = induced_jordan(a)
    except Singular as e:
        raise Outcome({"error": f"alpha is not invertible: {e}"}, EXIT_FAIL) from None
    except NotMultiplicative as e:
        raise Outcome({"error": str(e)}, EXIT_FAIL) from None
    _write_algebra(j, args.output)
    rep = check_jordan(j)
    return {"algebra": algebra_to_obj(j), "report": rep.to_json()}, _exit_for(rep.verdict)


def cmd_twist(args) -> tuple[dict, int]:
    j = load_algebra(args.file)
    alpha = _load_matrix(args.alpha, j.field, j.dim)
    try:
        t = yau_twist(j, alpha)
    except PreconditionFailed as e:
        raise Outcome({"error": str(e)}, EXIT_FAIL) from None
    _write_algebra(t, args.output)
    rep = check_hom_jordan(t) + check_multiplicative(t)
    return {"algebra": algebra_to_obj(t), "report": rep.to_json()}, _exit_for(rep.verdict)


def cmd_quotient(args) -> tuple[dict, int]:
    a = load_algebra(args.file)
    gens = parse_vectors(a.field, args.ideal_gens, a.dim)
    ideal = ideal_closure(a, gens)
    q = quotient(a, ideal)
    _write_algebra(q.algebra, args.output)
    rep = check_hom_jordan(q.algebra) + check_multiplicative(q.algebra)
    return {"ideal": ideal.to_strings(), "ideal_dim": ideal.dim, "projection": q.projection.to_strings(),
            "algebra": algebra_to_obj(q.algebra), "report": rep.to_json()}, EXIT_OK


def cmd_split(args) -> tuple[dict, int]:
    a = load_algebra(args.file)
    try:
        s = split_idempotent_alpha(a)
    except PreconditionFailed as e:
        raise Outcome({"error": str(e)}, EXIT_FAIL) from None
    qa = s.summand_quotient
    quotient_checks = check_hom_jordan(qa) + check_multiplicative(qa)
    bar_invertible = kernel(qa.alpha).is_zero()
    body = {"quotient": algebra_to_obj(qa), "kernel": algebra_to_obj(s.summand_kernel),
            "quotient_checks": quotient_checks.to_json(), "quotient_alpha_invertible": bar_invertible,
            "iso": s.iso.to_strings(), "iso_report": s.report.to_json(),
            "image_iso": s.phi.to_strings(), "image_iso_report": s.phi_report.to_json()}
    ok = s.report.holds and s.phi_report.holds and bar_invertible
    return body, EXIT_OK if ok else EXIT_FAIL


def cmd_family(args) -> tuple[dict, int]:
    f = _parse_field(args.field)
    if args.kind == "dim1":
        a = family_dim1(f.coerce(args.k), f)
    elif args.kind == "dim2":
        a = family_dim2(f.coerce(args.p), f.coerce(args.q), f)
    else:
        if args.n < 3:
            raise ParseError("the cyclic family needs --n >= 3", "--n")
        al = {"id": Matrix.identity(f, args.n), "shift": cyclic_shift(f, args.n),
              "zero": Matrix.zeros(f, args.n, args.n)}[args.alpha]
        a = family_cyclic(args.n, al, f)
    _write_algebra(a, args.output)
    return {"kind": args.kind, "algebra": algebra_to_obj(a), "report": _checks(a).to_json()}, EXIT_OK


def cmd_signature(args) -> tuple[dict, int]:
    a = load_algebra(args.file)
    try:
        sig = classification_signature(a, args.seed, args.trials, formal=args.formal)
    except (NotSimple, NotMultiplicative) as e:
        raise Outcome({"error": str(e)}, EXIT_FAIL) from None
    return {"formal": args.formal, "signature": sig.to_json()}, EXIT_OK


def cmd_iso(args) -> tuple[dict, int]:
    a, b = load_algebra(args.file_a), load_algebra(args.file_b)
    if a.field != b.field:
        return {"result": "distinct", "reason": "field"}, EXIT_FAIL
    if args.search:
        if a.field.char == 0:
            raise Outcome({"error": "exhaustive search needs algebras over GF(p)"}, EXIT_USAGE)
        res = iso_search_smallfield(a, b, seed=args.seed)
        body = {"result": "isomorphic" if res.found else "not_isomorphic", "reason": res.reason,
                "examined": res.examined, "phi": res.phi.to_strings() if res.found else None}
        return body, EXIT_OK if res.found else EXIT_FAIL
    try:
        sa, sb = classification_signature(a, args.seed, args.trials), classification_signature(b, args.seed, args.trials)
    except (NotSimple, NotMultiplicative) as e:
        raise Outcome({"error": str(e)}, EXIT_USAGE) from None
    cmp = compare_signatures(sa, sb)
    body: dict[str, Any] = {"comparison": cmp.to_json()}
    if cmp.distinct:
        return body | {"result": "distinct"}, EXIT_FAIL
    if sa.ideal_dim == sb.ideal_dim:
        try:
            phi = lift_ideal_isomorphism(Matrix.identity(a.field, sa.ideal_dim), a, b, sa, sb)
            return body | {"result": "isomorphic", "phi": phi.to_strings(),
                           "reason": "identity ideal map lifts to a certified isomorphism"}, EXIT_OK
        except (PreconditionFailed, CertificationFailed):
            pass
    return body | {"result": "undecided", "reason": "signatures agree; use --search over GF(p)"}, EXIT_USAGE


def cmd_bimodule(args) -> tuple[dict, int]:
    a = load_algebra(args.algfile)
    r = load_bimodule(args.modfile, a)
    if args.action == "verify":
        rep = check_bimodule(r)
        return {"dim_w": r.dim, "report": rep.to_json(), "equivariance": check_equivariance(r).to_json()}, \
            _exit_for(rep.verdict)
    if args.action == "transport":
        try:
            m = bimodule_to_module(r)
        except Singular:
            raise Outcome({"error": "alpha_w is not invertible"}, EXIT_FAIL) from None
        except (PreconditionFailed, NotMultiplicative) as e:
            raise Outcome({"error": str(e)}, EXIT_FAIL) from None
        rep = check_jordan_module(m)
        return {"induced_algebra": algebra_to_obj(m.algebra), "actions": [x.to_strings() for x in m.actions],
                "report": rep.to_json()}, _exit_for(rep.verdict)
    body: dict[str, Any] = {"dim_w": r.dim, "bimodule": check_bimodule(r).to_json(),
                            "equivariance": check_equivariance(r).to_json(),
                            "irreducibility": is_irreducible(r, args.seed, args.trials).to_json()}
    equivariant = check_equivariance(r).holds
    body["kernel_image"] = kernel_image_analysis(r).to_json() if equivariant else None
    try:
        body["transfer"] = irreducibility_transfer_check(r, args.seed, args.trials).to_json()
    except (PreconditionFailed, NotMultiplicative) as e:
        body["transfer"] = {"error": str(e)}
    return body, EXIT_OK


def cmd_discrepancy(args) -> tuple[dict, int]:
    log = discrepancy_log(args.seed, args.trials)
    return log, EXIT_OK if log["all_oracle_agree"] else EXIT_FAIL


# --------------------------------------------------------------------------
# rendering


def _scalar_text(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, list):
        return "[" + ", ".join(_scalar_text(x) for x in v) + "]"
    return str(v)


def _is_flat(v) -> bool:
    return not isinstance(v, dict) and not (isinstance(v, list) and any(isinstance(x, dict) for x in v))


def _table(rows: list[dict], indent: str) -> list[str]:
    keys = list(rows[0])
    cells = [[_scalar_text(r.get(k)) for k in keys] for r in rows]
    widths = [max(len(k), *(len(c[i]) for c in cells)) for i, k in enumerate(keys)]
    line = lambda vals: indent + "  ".join(v.ljust(w) for v, w in zip(vals, widths)).rstrip()
    return [line(keys)] + [line(c) for c in cells]


def render_text(obj: Any, indent: str = "") -> list[str]:
    lines: list[str] = []
    for key, val in obj.items():
        if _is_flat(val):
            lines.append(f"{indent}{key}: {_scalar_text(val)}")
        elif isinstance(val, dict):
            lines.append(f"{indent}{key}:")
            lines += render_text(val, indent + "  ")
        elif all(isinstance(x, dict) and all(_is_flat(y) for y in x.values()) for x in val) \
                and len({tuple(x) for x in val}) == 1:
            lines.append(f"{indent}{key}:")
            lines += _table(val, indent + "  ")
        else:
            lines.append(f"{indent}{key}:")
            for i, x in enumerate(val):
                lines.append(f"{indent}  - [{i}]")
                lines += render_text(x, indent + "    ") if isinstance(x, dict) else [f"{indent}    {x}"]
    return lines


def emit(report: dict, fmt: str) -> None:
    if fmt == "json":
        sys.stdout.write(json.dumps(report, indent=2) + "\n")
    else:
        sys.stdout.write("\n".join(render_text(report)) + "\n")


# --------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="seed for randomized steps (default 0)")
    common.add_argument("--trials", type=int, default=64, help="random trials per splitting step (default 64)")
    common.add_argument("--format", choices=("json", "text"), default="text")
    common.add_argument("--timing", action="store_true", help="add wall-clock time to the report")

    p = argparse.ArgumentParser(prog="homjordan", description="Exact computations with Hom-Jordan algebras.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        sp = sub.add_parser(name, parents=[common], help=help_text)
        sp.set_defaults(func=func)
        return sp

    add("verify", cmd_verify, "commutativity, Hom-Jordan identity, multiplicativity").add_argument("file")
    add("analyze", cmd_analyze, "structure report: series, radical, decomposition, simplicity").add_argument("file")
    sp = add("induced", cmd_induced, "induced Jordan algebra mu' = alpha^-1 mu")
    sp.add_argument("file")
    sp.add_argument("--output", "-o")
    sp = add("twist", cmd_twist, "Yau twist of a Jordan algebra by an endomorphism")
    sp.add_argument("file")
    sp.add_argument("--alpha", required=True, help="JSON matrix file")
    sp.add_argument("--output", "-o")
    sp = add("quotient", cmd_quotient, "quotient by the Hom-ideal generated by vectors")
    sp.add_argument("file")
    sp.add_argument("--ideal-gens", required=True, help='vectors such as "1,0;0,1" or a JSON list')
    sp.add_argument("--output", "-o")
    add("split", cmd_split, "V = V/Ker(alpha) (+) Ker(alpha) for idempotent alpha").add_argument("file")
    sp = add("family", cmd_family, "emit a member of a construction family")
    sp.add_argument("--kind", choices=("dim1", "dim2", "cyclic"), required=True)
    sp.add_argument("--k", default="1")
    sp.add_argument("--p", default="1")
    sp.add_argument("--q", default="1")
    sp.add_argument("--n", type=int, default=3)
    sp.add_argument("--alpha", choices=("id", "shift", "zero"), default="id")
    sp.add_argument("--field", default="Q", help="Q or GF(p)")
    sp.add_argument("--output", "-o")
    sp = add("signature", cmd_signature, "classification signature (V_1, n, A_1)")
    sp.add_argument("file")
    sp.add_argument("--formal", action="store_true",
                    help="also accept non-multiplicative algebras (an invariant, not a classification)")
    sp = add("iso", cmd_iso, "compare two simple multiplicative algebras")
    sp.add_argument("file_a")
    sp.add_argument("file_b")
    sp.add_argument("--search", action="store_true", help="exhaustive search over GF(p)")
    sp = add("bimodule", cmd_bimodule, "bimodule identities, transport to modules, structure")
    sp.add_argument("action", choices=("verify", "transport", "analyze"))
    sp.add_argument("algfile")
    sp.add_argument("modfile")
    add("discrepancy-log", cmd_discrepancy, "construction-family verdicts versus their claimed properties")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    names = ["file", "file_a", "file_b", "algfile", "modfile"] + (["alpha"] if args.command == "twist" else [])
    files = [getattr(args, k) for k in names if getattr(args, k, None)]
    report: dict[str, Any] = {"command": args.command, "seed": args.seed, "trials": args.trials}
    if getattr(args, "action", None):
        report["action"] = args.action
    start = time.perf_counter()
    try:
        if files:
            report["input_digest"] = _digest(*files)
        body, code = args.func(args)
    except Outcome as o:
        body, code = o.body, o.code
        print(f"homjordan: {o}", file=sys.stderr)
    except (ParseError, OSError) as e:
        print(f"homjordan: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (UnsupportedCharacteristic, BudgetExceeded) as e:
        body, code = {"verdict": "undecidable", "error": str(e)}, EXIT_USAGE
        print(f"homjordan: {e}", file=sys.stderr)
    except (PreconditionFailed, NotMultiplicative, NotSimple, Singular) as e:
        body, code = {"error": str(e)}, EXIT_FAIL
        print(f"homjordan: {e}", file=sys.stderr)
    report.update(body)
    report["exit_code"] = code
    if args.timing:
        report["seconds"] = round(time.perf_counter() - start, 3)
    emit(report, args.format)
    return code


if __name__ == "__main__":
    sys.exit(main())
