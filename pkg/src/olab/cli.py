"""``olab``: run a computation on a JSON problem document and print a JSON report.

Exit status: 0 when the verdict is true (or the computation succeeded),
1 when it is false, 2 on an input error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Callable

from . import deformation as dfm
from .cochains import Cochain
from .io import InputError, ProblemDocument, bundled_text, dumps, load_document, multivector_json, parse_document
from .lie import adjoint_rep, validate_lie, validate_rep
from .ooperator import (
    OOperator,
    coboundary,
    cohomology,
    induced_prelie,
    infinitesimal_deformation_violations,
    is_cocycle,
    is_nijenhuis_element,
    is_rota_baxter,
    nijenhuis_element_violations,
    ooperator_violations,
    rho_bar,
    sub_adjacent_lie,
)
from .prelie import is_nijenhuis_operator_prelie
from .rmatrix import (
    cobracket,
    cybe_residual,
    dual_bracket,
    is_nijenhuis_element_r,
    is_rmatrix,
    nijenhuis_element_violations_r,
    rmatrix_operator,
    sharp,
    validate_bialgebra,
    weak_homomorphism_violations,
)


def cochain_json(f: Cochain) -> list:
    return [{"indices": [i + 1 for i in key], "value": list(v)} for key, v in f.coeffs.items()]


def _structure_json(L) -> list:
    return [{"i": i + 1, "j": j + 1, "value": list(v)} for (i, j), v in L.structure.items()]


def _need(doc: ProblemDocument, attr: str, key: str):
    value = getattr(doc, attr)
    if value is None or value == () or value == {}:
        raise InputError(f"$.{key}", "required field is missing for this command")
    return value


def _operator(doc: ProblemDocument, valid: bool = True) -> OOperator:
    if doc.operator is None and doc.rep is None and doc.rmatrix is not None:
        # an r-matrix document stands for the O-operator r^# on the coadjoint representation
        return rmatrix_operator(_rmatrix(doc))
    _need(doc, "rep", "representation")
    T = OOperator(doc.rep, _need(doc, "operator", "operator"))
    if valid:
        bad = ooperator_violations(T.rep, T.matrix)
        if bad:
            raise InputError("$.operator", f"not an O-operator; fails on basis pairs {[v['pair'] for v in bad]}")
    return T


def _rmatrix(doc: ProblemDocument, attr: str = "rmatrix"):
    r = _need(doc, attr, attr)
    if not is_rmatrix(r):
        raise InputError(f"$.{attr}", "not a skew-symmetric r-matrix ([r,r] != 0)")
    return r


# --- commands ---------------------------------------------------------------------

def cmd_validate(doc: ProblemDocument, args) -> tuple[bool, dict]:
    report: dict = {"lie_algebra": {"dim": doc.algebra.dim, "jacobi_violations": validate_lie(doc.algebra)}}
    ok = True
    if doc.rep is not None:
        report["representation"] = {"dimV": doc.rep.dimV,
                                    "violations": [v["pair"] for v in validate_rep(doc.rep)]}
    if doc.operator is not None:
        bad = ooperator_violations(doc.rep, doc.operator)
        report["operator"] = {"is_ooperator": not bad, "violations": bad}
        ok &= not bad
    if doc.rmatrix is not None:
        ok_r = is_rmatrix(doc.rmatrix)
        report["rmatrix"] = {"is_rmatrix": ok_r}
        ok &= ok_r
    return ok, report


def cmd_check_ooperator(doc, args):
    T = _operator(doc, valid=False)
    bad = ooperator_violations(T.rep, T.matrix)
    return not bad, {"is_ooperator": not bad, "violations": bad}


def cmd_check_rb(doc, args):
    R = _need(doc, "operator", "operator")
    L = doc.algebra
    if (R.rows, R.cols) != (L.dim, L.dim):
        raise InputError("$.operator", f"a Rota-Baxter operator must be {L.dim}x{L.dim}")
    ok = is_rota_baxter(L, R)
    return ok, {"is_rota_baxter": ok, "violations": ooperator_violations(adjoint_rep(L), R)}


def cmd_cohomology(doc, args):
    T = _operator(doc)
    degrees = [args.degree] if args.degree is not None else list(range(T.rep.dimV + 1))
    out = []
    for k in degrees:
        if not 0 <= k <= T.rep.dimV:
            raise InputError("--degree", f"degree must lie in 0..{T.rep.dimV}")
        c = cohomology(T, k)
        out.append({
            "degree": k, "dimZ": c.dimZ, "dimB": c.dimB, "dimH": c.dimH,
            "cocycle_basis": [cochain_json(f) for f in c.cocycle_basis],
            "coboundary_basis": [cochain_json(f) for f in c.coboundary_basis],
        })
    return True, {"cohomology": out}


def cmd_nijenhuis(doc, args):
    T = _operator(doc)
    elements = _need(doc, "elements", "elements")
    pre = induced_prelie(T)
    results = []
    for x in elements:
        bad = nijenhuis_element_violations(T, x)
        ok = not any(bad.values())
        entry = {"element": list(x), "is_nijenhuis": ok, "violations": bad}
        if ok:
            gen = coboundary(T, Cochain.element(T.rep, x))
            entry["generator"] = gen.to_matrix()
            entry["rho_x_nijenhuis_on_prelie"] = is_nijenhuis_operator_prelie(pre, T.rep.matrix(x))
        results.append(entry)
    return all(e["is_nijenhuis"] for e in results), {"elements": results}


def cmd_infinitesimal(doc, args):
    T = _operator(doc)
    g = _need(doc, "generator", "generator")
    bad = infinitesimal_deformation_violations(T, g)
    ok = not bad["t1"] and not bad["t2"]
    return ok, {
        "is_infinitesimal_deformation": ok,
        "is_cocycle": is_cocycle(T, Cochain.from_matrix(T.rep, g)),
        "violations": bad,
    }


def cmd_deform_validate(doc, args):
    T = _operator(doc)
    D = dfm.TruncatedDeformation(T, doc.taus)
    bad = dfm.validate_order_n(D)
    report = {"order": D.order, "valid": not bad, "violations": bad}
    if not bad:
        report["obstruction"] = cochain_json(dfm.obstruction(D))
    return not bad, report


def cmd_deform_extend(doc, args):
    T = _operator(doc)
    D = dfm.TruncatedDeformation(T, doc.taus)
    bad = dfm.validate_order_n(D)
    if bad:
        raise InputError("$.taus", f"not a valid order-{D.order} deformation")
    target = args.target if args.target is not None else D.order + 1
    if target < 0:
        raise InputError("--target", "target order must be non-negative")
    rep = dfm.iterate_extension(D, target, list(doc.elements) if doc.elements else None)
    report = {
        "target": rep.target,
        "reached": rep.reached,
        "success": rep.success,
        "dimH2": rep.dimH2,
        "taus": list(rep.deformation.taus),
    }
    if rep.obstruction is not None:
        report["obstruction"] = cochain_json(rep.obstruction)
    if rep.rigidity is not None:
        report["rigidity"] = rep.rigidity
    return rep.success, report


def cmd_prelie_export(doc, args):
    T = _operator(doc)
    A = induced_prelie(T)
    products = [{"i": a + 1, "j": b + 1, "value": list(v)} for (a, b), v in A.product.items()]
    return True, {
        "prelie_products": products,
        "sub_adjacent_brackets": _structure_json(sub_adjacent_lie(T)),
        "rho_bar": list(rho_bar(T).rho),
    }


def cmd_rmatrix_check(doc, args):
    r = _need(doc, "rmatrix", "rmatrix")
    ok = is_rmatrix(r)
    report = {"is_rmatrix": ok, "cybe_residual": multivector_json(cybe_residual(r)), "sharp": sharp(r)}
    if ok:
        report["dual_brackets"] = _structure_json(dual_bracket(r))
    return ok, report


def cmd_rmatrix_cobracket(doc, args):
    r = _rmatrix(doc)
    delta = cobracket(r)
    check = validate_bialgebra(doc.algebra, delta)
    return check["valid"], {
        "cobracket": [{"basis": i + 1, "value": multivector_json(m)} for i, m in enumerate(delta.images)],
        "bialgebra": check,
    }


def cmd_rmatrix_nijenhuis(doc, args):
    r = _rmatrix(doc)
    elements = _need(doc, "elements", "elements")
    T = rmatrix_operator(r)
    results = []
    for x in elements:
        ok = is_nijenhuis_element_r(r, x)
        results.append({
            "element": list(x),
            "is_nijenhuis": ok,
            "violations": nijenhuis_element_violations_r(r, x),
            "agrees_with_operator_side": ok == is_nijenhuis_element(T, x),
        })
    return all(e["is_nijenhuis"] for e in results), {"elements": results}


def cmd_weak_hom(doc, args):
    r1 = _rmatrix(doc, "rmatrix")
    r2 = _rmatrix(doc, "rmatrix_source")
    maps = doc.maps
    for name in ("phi", "psi"):
        if name not in maps:
            raise InputError(f"$.maps.{name}", "required field is missing for this command")
    bad = weak_homomorphism_violations(r2, r1, maps["phi"], maps["psi"])
    ok = not any(bad.values())
    return ok, {"is_weak_homomorphism": ok, "violations": bad}


COMMANDS: dict[str, Callable] = {
    "validate": cmd_validate,
    "check-ooperator": cmd_check_ooperator,
    "check-rb": cmd_check_rb,
    "cohomology": cmd_cohomology,
    "nijenhuis": cmd_nijenhuis,
    "infinitesimal-check": cmd_infinitesimal,
    "deform-validate": cmd_deform_validate,
    "deform-extend": cmd_deform_extend,
    "prelie-export": cmd_prelie_export,
    "rmatrix-check": cmd_rmatrix_check,
    "rmatrix-cobracket": cmd_rmatrix_cobracket,
    "rmatrix-nijenhuis": cmd_rmatrix_nijenhuis,
    "weak-hom-check": cmd_weak_hom,
}


def run(command: str, doc: ProblemDocument, degree: int | None = None, target: int | None = None) -> tuple[int, dict]:
    """Run one command; returns (exit code, report). Raises InputError on bad input."""
    if command not in COMMANDS:
        raise InputError("command", f"unknown command {command!r}")
    args = argparse.Namespace(degree=degree, target=target)
    verdict, body = COMMANDS[command](doc, args)
    report = {"command": command, "verdict": verdict, **body}
    return (0 if verdict else 1), report


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="olab", description="Exact computations with O-operators and r-matrices.")
    p.add_argument("command", choices=sorted(COMMANDS))
    p.add_argument("file", help="problem document (JSON), or bundled:NAME for a bundled example")
    p.add_argument("--degree", type=int, help="cochain degree for 'cohomology'")
    p.add_argument("--target", type=int, help="target order for 'deform-extend'")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        if ns.file.startswith("bundled:"):
            try:
                text = bundled_text(ns.file[len("bundled:"):])
            except FileNotFoundError:
                raise InputError("$", f"no bundled example named {ns.file[8:]!r}") from None
            doc = parse_document(text)
        else:
            doc = load_document(ns.file)
        code, report = run(ns.command, doc, ns.degree, ns.target)
    except InputError as exc:
        print(f"olab: input error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(dumps(report))
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
