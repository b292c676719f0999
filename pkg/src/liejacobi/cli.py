"""Command line front end over the document schema and the structure checks.

Exit codes are total: 0 when all requested checks pass, 1 when a check
fails (a report is still emitted), 2 for input or usage errors.  With
--format machine the output is the result document plus a "report" object
whose entries are exact serialized residuals, never bare booleans.
"""

import argparse
import json
import sys

from liejacobi.bialgebra import (
    GeneralizedBialgebra,
    YbData,
    build_dual_bracket,
    check_glb,
    check_yb_hypotheses,
    classify_compact,
    extract_jacobi,
    solve_coboundary,
    unit_center_vector,
)
from liejacobi.catalog import catalog, catalog_names
from liejacobi.documents import DocumentError, parse, serialize, to_document
from liejacobi.exterior import Form, Multivector
from liejacobi.jacobi import (
    ContactStructure,
    JacobiPair,
    LcsStructure,
    characteristic_subalgebra,
    check_jacobi,
    contact_to_jacobi,
    jacobi_to_contact,
    jacobi_to_lcs,
    lcs_to_jacobi,
    rank,
)
from liejacobi.liealg import LieAlgebra, is_compact


class UsageError(Exception):
    """Bad flags, unreadable files, malformed documents: exit code 2."""


def _read_file(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror or exc}") from exc


def _parse_file(path: str, labels=None, dual_labels=None):
    try:
        return parse(_read_file(path), labels=labels, dual_labels=dual_labels)
    except DocumentError as exc:
        raise UsageError(f"{path}: {exc}") from exc


def _catalog_entry(name: str):
    try:
        return catalog(name)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _algebra_of(entry) -> LieAlgebra:
    if isinstance(entry, LieAlgebra):
        return entry
    if isinstance(entry, YbData):
        return entry.g
    if isinstance(entry, GeneralizedBialgebra):
        return entry.g
    if isinstance(entry, JacobiPair):
        return entry.algebra
    raise UsageError(f"catalog entry is a {type(entry).__name__}, not an algebra")


def _element_file(path: str, g: LieAlgebra, want: type, what: str):
    obj = _parse_file(path, labels=g.basis_labels, dual_labels=g.dual_labels)
    if not isinstance(obj, want):
        raise UsageError(f"{path}: {what} must be a {want.__name__.lower()} document")
    if obj.dim != g.dim:
        raise UsageError(f"{path}: {what} has dimension {obj.dim}, algebra has {g.dim}")
    return obj


def _load_algebra(args) -> tuple[LieAlgebra, object]:
    """Resolve --algebra / --name into (algebra, catalog entry or None)."""
    if getattr(args, "algebra", None):
        obj = _parse_file(args.algebra)
        if not isinstance(obj, LieAlgebra):
            raise UsageError(f"{args.algebra}: expected an algebra document, "
                             f"found kind {type(obj).__name__.lower()}")
        return obj, None
    if getattr(args, "name", None):
        entry = _catalog_entry(args.name)
        return _algebra_of(entry), entry
    raise UsageError("provide --algebra FILE or --name NAME")


def _load_pair(args) -> JacobiPair:
    g, entry = _load_algebra(args)
    r = x0 = None
    if isinstance(entry, YbData):
        r, x0 = entry.r, entry.x0
    if isinstance(entry, GeneralizedBialgebra):
        raise UsageError(f"catalog entry {args.name!r} is a generalized bialgebra; "
                         "use the glb-* subcommands")
    if getattr(args, "r", None):
        r = _element_file(args.r, g, Multivector, "--r")
    if getattr(args, "x0", None):
        x0 = _element_file(args.x0, g, Multivector, "--x0")
    if r is None:
        r = Multivector.zero(g.dim, 2)
    if x0 is None:
        x0 = Multivector.zero(g.dim, 1)
    try:
        return JacobiPair(g, r, x0)
    except (TypeError, ValueError) as exc:
        raise UsageError(str(exc)) from exc


def _load_yb(args) -> YbData:
    jp = _load_pair(args)
    phi0 = None
    entry = _catalog_entry(args.name) if getattr(args, "name", None) else None
    if isinstance(entry, YbData):
        phi0 = entry.phi0
    if getattr(args, "phi0", None):
        phi0 = _element_file(args.phi0, jp.algebra, Form, "--phi0")
    if phi0 is None:
        phi0 = Form.zero(jp.algebra.dim, 1)
    try:
        return YbData(jp.algebra, phi0, jp.r, jp.x0)
    except (TypeError, ValueError) as exc:
        raise UsageError(str(exc)) from exc


def _load_glb(args) -> GeneralizedBialgebra:
    if getattr(args, "glb", None):
        obj = _parse_file(args.glb)
        if not isinstance(obj, GeneralizedBialgebra):
            raise UsageError(f"{args.glb}: expected a glb document")
        return obj
    if getattr(args, "name", None):
        entry = _catalog_entry(args.name)
        if not isinstance(entry, GeneralizedBialgebra):
            raise UsageError(f"catalog entry {args.name!r} is a "
                             f"{type(entry).__name__}, not a generalized bialgebra")
        return entry
    raise UsageError("provide --glb FILE or --name NAME")


def _doc(obj, labels=None) -> dict:
    return to_document(obj, labels=labels)


def _emit(args, document: dict | None, report: dict, text: str) -> None:
    if args.format == "machine":
        payload = dict(document) if document is not None else {"kind": "report"}
        payload["report"] = report
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        sys.stdout.write(text + "\n")
    if getattr(args, "out", None) and document is not None:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(json.dumps(document, indent=2) + "\n")


# subcommand handlers; each returns the exit code

def _cmd_validate(args) -> int:
    if getattr(args, "glb", None) or (
            getattr(args, "name", None)
            and isinstance(_catalog_entry(args.name), GeneralizedBialgebra)):
        try:
            b = _load_glb(args)
        except UsageError as exc:
            _emit(args, None, {"passed": False, "error": str(exc)},
                  f"invalid: {exc}")
            return 1
        reports = [b.g.validate(), b.g_star.validate()]
        document = _doc(b)
    else:
        if getattr(args, "algebra", None):
            try:
                obj = _parse_file(args.algebra)
            except UsageError as exc:
                _emit(args, None, {"passed": False, "error": str(exc)},
                      f"invalid: {exc}")
                return 1
        elif getattr(args, "name", None):
            obj = _catalog_entry(args.name)
        else:
            raise UsageError("provide --algebra FILE, --glb FILE or --name NAME")
        document = _doc(obj) if not isinstance(obj, (Multivector, Form)) else None
        if isinstance(obj, LieAlgebra):
            reports = [obj.validate()]
        elif isinstance(obj, JacobiPair):
            reports = [obj.algebra.validate()]
        elif isinstance(obj, YbData):
            reports = [obj.g.validate()]
        elif isinstance(obj, GeneralizedBialgebra):
            reports = [obj.g.validate(), obj.g_star.validate()]
        elif isinstance(obj, ContactStructure):
            reports = [obj.algebra.validate()]
        elif isinstance(obj, LcsStructure):
            reports = [obj.algebra.validate()]
        else:
            _emit(args, None, {"passed": True}, "document is schema-valid")
            return 0
    passed = all(rep.passed for rep in reports)
    violations = []
    for rep in reports:
        labels = list(rep.algebra.basis_labels)
        for (i, j, k), res in rep.violations:
            violations.append({"algebra": rep.algebra.name,
                               "triple": [labels[i], labels[j], labels[k]],
                               "residual": _doc(res, labels=labels)})
    report = {"passed": passed, "violations": violations}
    text = "\n".join(rep.describe() for rep in reports)
    _emit(args, document, report, text)
    return 0 if passed else 1


def _cmd_jacobi_check(args) -> int:
    jp = _load_pair(args)
    rep = check_jacobi(jp)
    labels = list(jp.algebra.basis_labels)
    report = {"passed": rep.passed,
              "self_residual": _doc(rep.self_residual, labels=labels),
              "vector_residual": _doc(rep.vector_residual, labels=labels)}
    _emit(args, _doc(jp), report, rep.describe())
    return 0 if rep.passed else 1


def _cmd_rank(args) -> int:
    jp = _load_pair(args)
    value = rank(jp)
    _emit(args, _doc(jp), {"rank": value}, f"rank = {value}")
    return 0


def _cmd_char_sub(args) -> int:
    jp = _load_pair(args)
    try:
        cs = characteristic_subalgebra(jp)
    except ValueError as exc:
        _emit(args, None, {"passed": False, "error": str(exc)}, str(exc))
        return 1
    inclusion = [[str(c) for c in row] for row in cs.inclusion.rows]
    report = {"passed": True, "tag": cs.tag, "dim": cs.algebra.dim,
              "inclusion": inclusion}
    text = (f"characteristic subalgebra: dimension {cs.algebra.dim}, "
            f"induced structure {cs.tag}")
    _emit(args, _doc(cs.pair), report, text)
    return 0


def _cmd_contact(args) -> int:
    g, _ = _load_algebra(args)
    if getattr(args, "eta", None):
        eta = _element_file(args.eta, g, Form, "--eta")
        try:
            structure = ContactStructure(g, eta)
            jp = contact_to_jacobi(structure)
        except (TypeError, ValueError) as exc:
            _emit(args, None, {"passed": False, "error": str(exc)}, str(exc))
            return 1
        labels = list(g.basis_labels)
        report = {"passed": True,
                  "reeb": _doc(jp.x0, labels=labels),
                  "r": _doc(jp.r, labels=labels)}
        text = (f"contact form accepted; Reeb vector {jp.x0.render(labels)}, "
                f"r = {jp.r.render(labels)}")
        _emit(args, _doc(jp), report, text)
        return 0
    jp = _load_pair(args)
    try:
        structure = jacobi_to_contact(jp)
    except ValueError as exc:
        _emit(args, None, {"passed": False, "error": str(exc)}, str(exc))
        return 1
    duals = list(g.dual_labels)
    report = {"passed": True, "eta": _doc(structure.eta, labels=duals)}
    _emit(args, _doc(structure), report,
          f"contact form eta = {structure.eta.render(duals)}")
    return 0


def _cmd_lcs(args) -> int:
    g, _ = _load_algebra(args)
    if getattr(args, "omega", None):
        omega2 = _element_file(args.omega, g, Form, "--omega")
        lee = (_element_file(args.lee, g, Form, "--lee")
               if getattr(args, "lee", None) else Form.zero(g.dim, 1))
        try:
            structure = LcsStructure(g, omega2, lee)
            jp = lcs_to_jacobi(structure)
        except (TypeError, ValueError) as exc:
            _emit(args, None, {"passed": False, "error": str(exc)}, str(exc))
            return 1
        labels = list(g.basis_labels)
        report = {"passed": True,
                  "r": _doc(jp.r, labels=labels),
                  "x0": _doc(jp.x0, labels=labels)}
        text = (f"l.c.s. structure accepted; r = {jp.r.render(labels)}, "
                f"x0 = {jp.x0.render(labels)}")
        _emit(args, _doc(jp), report, text)
        return 0
    jp = _load_pair(args)
    try:
        structure = jacobi_to_lcs(jp)
    except ValueError as exc:
        _emit(args, None, {"passed": False, "error": str(exc)}, str(exc))
        return 1
    duals = list(g.dual_labels)
    report = {"passed": True,
              "omega": _doc(structure.omega2, labels=duals),
              "lee": _doc(structure.lee, labels=duals)}
    text = (f"l.c.s. structure: omega = {structure.omega2.render(duals)}, "
            f"lee = {structure.lee.render(duals)}")
    _emit(args, _doc(structure), report, text)
    return 0


def _yb_report(rep) -> dict:
    g = rep.data.g
    labels = list(g.basis_labels)
    return {
        "passed": rep.passed,
        "cubic": _doc(rep.cubic, labels=labels),
        "cubic_invariance": [
            {"basis": labels[i], "residual": _doc(res, labels=labels)}
            for i, res in rep.cubic_invariance],
        "x0_commutes": _doc(rep.x0_commutes, labels=labels),
        "vector": _doc(rep.vector, labels=labels),
        "vector_invariance": [
            {"basis": labels[i], "residual": _doc(res, labels=labels)}
            for i, res in rep.vector_invariance],
    }


def _cmd_yb_check(args) -> int:
    y = _load_yb(args)
    try:
        rep = check_yb_hypotheses(y)
    except ValueError as exc:
        _emit(args, None, {"passed": False, "error": str(exc)}, str(exc))
        return 1
    _emit(args, _doc(y), _yb_report(rep), rep.describe())
    return 0 if rep.passed else 1


def _cmd_yb_build(args) -> int:
    y = _load_yb(args)
    try:
        dual = build_dual_bracket(y)
    except ValueError as exc:
        _emit(args, None, {"passed": False, "error": str(exc)}, str(exc))
        return 1
    duals = list(dual.basis_labels)
    brackets = []
    for (i, j), value in sorted(dual.structure.items()):
        brackets.append(f"[{duals[i]},{duals[j]}]* = {value.render(duals)}")
    text = f"dual algebra {dual.name}:\n  " + "\n  ".join(brackets) \
        if brackets else f"dual algebra {dual.name}: abelian"
    _emit(args, _doc(dual), {"passed": True, "dual": dual.name}, text)
    return 0


def _glb_report(rep) -> dict:
    g = rep.bialgebra.g
    labels = list(g.basis_labels)
    duals = list(rep.bialgebra.g_star.basis_labels)
    return {
        "passed": rep.passed,
        "primal_jacobi": rep.primal.passed,
        "dual_jacobi": rep.dual.passed,
        "phi0_cocycle": _doc(rep.phi0_cocycle, labels=duals),
        "x0_cocycle": _doc(rep.x0_cocycle, labels=labels),
        "pairing": str(rep.pairing),
        "bracket_compat": [
            {"i": labels[i], "j": labels[j], "residual": _doc(res, labels=labels)}
            for (i, j), res in rep.bracket_compat],
        "contraction_compat": [
            {"basis": labels[i], "residual": _doc(res, labels=labels)}
            for i, res in rep.contraction_compat],
    }


def _cmd_glb_check(args) -> int:
    b = _load_glb(args)
    rep = check_glb(b)
    _emit(args, _doc(b), _glb_report(rep), rep.describe())
    return 0 if rep.passed else 1


def _cmd_glb_extract(args) -> int:
    b = _load_glb(args)
    y0 = unit_center_vector(b.g, b.phi0)
    if y0 is None:
        raise UsageError("no central y0 with phi0(y0) = 1 exists; "
                         "extraction is undefined for this bialgebra")
    try:
        result = extract_jacobi(b, y0)
    except ValueError as exc:
        _emit(args, None, {"passed": False, "error": str(exc)}, str(exc))
        return 1
    labels = list(b.g.basis_labels)
    report = {"passed": True,
              "y0": _doc(y0, labels=labels),
              "r": _doc(result.pair.r, labels=labels),
              "x0": _doc(result.pair.x0, labels=labels),
              "characteristic_tag": result.characteristic.tag}
    text = (f"extracted jacobi pair from y0 = {y0.render(labels)}:\n"
            f"  r = {result.pair.r.render(labels)}\n"
            f"  x0 = {result.pair.x0.render(labels)}\n"
            f"  characteristic structure: {result.characteristic.tag}")
    _emit(args, _doc(result.pair), report, text)
    return 0


def _certificate_report(result) -> dict:
    cert = result.certificate
    out = {"kind": result.kind}
    if result.kind == "second":
        out.update(lam=str(cert.lam), lam1=str(cert.lam1), lam2=str(cert.lam2))
    if result.kind == "third":
        out["lambdas"] = [str(c) for c in cert.lambdas]
    if result.kind == "phi0-zero-semidirect":
        out["psi"] = [[str(c) for c in row] for row in cert.psi.rows]
    return out


def _cmd_glb_classify(args) -> int:
    b = _load_glb(args)
    compactness = is_compact(b.g)
    if not compactness.compact:
        raise UsageError("classification needs a compact base algebra:\n"
                         + compactness.describe())
    rep = check_glb(b)
    if not rep.passed:
        _emit(args, _doc(b), _glb_report(rep), rep.describe())
        return 1
    try:
        result = classify_compact(b)
    except ValueError as exc:
        _emit(args, None, {"passed": False, "error": str(exc)}, str(exc))
        return 1
    report = {"passed": True, **_certificate_report(result)}
    if result.y0 is not None:
        report["y0"] = _doc(result.y0, labels=list(b.g.basis_labels))
    _emit(args, _doc(b), report, f"classification: {result.kind}")
    return 0


def _cmd_coboundary_solve(args) -> int:
    b = _load_glb(args)
    solutions = solve_coboundary(b)
    labels = list(b.g.basis_labels)
    report = {"empty": solutions.is_empty,
              "particular": (None if solutions.particular is None
                             else _doc(solutions.particular, labels=labels)),
              "homogeneous": [_doc(h, labels=labels) for h in solutions.homogeneous]}
    if solutions.is_empty:
        text = "no solution: the dual bracket is not a twisted coboundary"
    else:
        text = (f"particular solution r = {solutions.particular.render(labels)}; "
                f"homogeneous solution space has dimension {len(solutions.homogeneous)}")
    _emit(args, _doc(b), report, text)
    return 0


def _cmd_catalog(args) -> int:
    if not getattr(args, "name", None):
        names = catalog_names()
        if args.format == "machine":
            sys.stdout.write(json.dumps({"kind": "catalog", "names": names},
                                        indent=2) + "\n")
        else:
            sys.stdout.write("\n".join(names) + "\n")
        return 0
    entry = _catalog_entry(args.name)
    document = _doc(entry)
    _emit(args, document, {"name": args.name},
          json.dumps(document, indent=2))
    return 0


_HANDLERS = {
    "validate": _cmd_validate,
    "jacobi-check": _cmd_jacobi_check,
    "rank": _cmd_rank,
    "char-sub": _cmd_char_sub,
    "contact": _cmd_contact,
    "lcs": _cmd_lcs,
    "yb-check": _cmd_yb_check,
    "yb-build": _cmd_yb_build,
    "glb-check": _cmd_glb_check,
    "glb-extract": _cmd_glb_extract,
    "glb-classify": _cmd_glb_classify,
    "coboundary-solve": _cmd_coboundary_solve,
    "catalog": _cmd_catalog,
}

_FLAG_SETS = {
    "validate": ("algebra", "glb", "name"),
    "jacobi-check": ("algebra", "name", "r", "x0"),
    "rank": ("algebra", "name", "r", "x0"),
    "char-sub": ("algebra", "name", "r", "x0"),
    "contact": ("algebra", "name", "r", "x0", "eta"),
    "lcs": ("algebra", "name", "r", "x0", "omega", "lee"),
    "yb-check": ("algebra", "name", "r", "x0", "phi0"),
    "yb-build": ("algebra", "name", "r", "x0", "phi0"),
    "glb-check": ("glb", "name"),
    "glb-extract": ("glb", "name"),
    "glb-classify": ("glb", "name"),
    "coboundary-solve": ("glb", "name"),
    "catalog": ("name",),
}

_FLAG_HELP = {
    "algebra": "algebra document file",
    "glb": "generalized bialgebra document file",
    "name": "catalog entry name",
    "r": "2-vector document file",
    "x0": "vector document file",
    "phi0": "1-form document file",
    "eta": "contact 1-form document file",
    "omega": "2-form document file",
    "lee": "Lee 1-form document file",
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="liejacobi",
        description="exact checks for jacobi structures and generalized "
                    "Lie bialgebras over rational structure constants")
    sub = parser.add_subparsers(dest="subcommand", required=True)
    for name, flags in _FLAG_SETS.items():
        p = sub.add_parser(name)
        for flag in flags:
            p.add_argument(f"--{flag}", help=_FLAG_HELP[flag])
        p.add_argument("--out", help="write the result document to this file")
        p.add_argument("--format", choices=("text", "machine"), default="text")
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return _HANDLERS[args.subcommand](args)
    except UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except OSError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


def console_main() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    console_main()
