"""Command-line interface: case verification and ad-hoc computations.

Exit codes: 0 all checks match (or command succeeded); 1 some expected
value mismatched; 2 unknown case / unreadable input; 3 engine error.
All configuration is via flags so invocations are reproducible.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from g2forms import catalog
from g2forms.exterior import Vector, parse_form
from g2forms.gstruct import definiteness, obstruction_certificate, su3_check
from g2forms.invariants import ClosedFamily, closed_forms, invariant_forms
from g2forms.scalars import PolyScalar, parse_rational

__all__ = ["main"]


class _InputError(Exception):
    """Bad user input (unknown case, unparsable file): exit code 2."""


def _emit_json(payload) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True))


def _load_form_file(path: str) -> dict:
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise _InputError(f"cannot read form file {path}: {exc}") from exc
    if not isinstance(doc, dict) or "form" not in doc or "dimension" not in doc:
        raise _InputError(
            f"form file {path} must be a JSON object with 'dimension' and 'form'"
        )
    return doc


def _parse_form_doc(doc: dict, degree=None):
    context = tuple(doc.get("context", ()))
    try:
        return parse_form(doc["form"], doc["dimension"], doc.get("degree", degree), context)
    except ValueError as exc:
        raise _InputError(f"invalid form: {exc}") from exc


def _load_case_file(path: str) -> catalog.CaseRecord:
    try:
        return catalog.load_case(path)
    except OSError as exc:
        raise _InputError(f"cannot read case file {path}: {exc}") from exc
    except catalog.SchemaError as exc:
        raise _InputError(f"invalid case file {path}: {exc}") from exc


def _numeric_data(record: catalog.CaseRecord):
    from g2forms.catalog._runner import build_homogeneous

    data = build_homogeneous(record)
    assignment = record.enumerations[0]
    if assignment:
        data = data.instantiate(assignment)
    return data


def _cmd_verify(args) -> int:
    if args.case:
        try:
            reports = [catalog.verify_case(args.case)]
        except KeyError as exc:
            raise _InputError(str(exc)) from exc
    else:
        reports = catalog.verify_all(args.filter)
    if args.format == "json":
        _emit_json([r.to_dict() for r in reports])
    else:
        for r in reports:
            print(r.render())
            print()
        total = sum(len(r.results) for r in reports)
        failed = [r.case_id for r in reports if not r.ok]
        if failed:
            print(f"{len(reports)} case(s), {total} check(s); MISMATCH in: {', '.join(failed)}")
        else:
            print(f"{len(reports)} case(s), {total} check(s); all match")
    return 0 if all(r.ok for r in reports) else 1


def _cmd_invariants(args) -> int:
    record = _load_case_file(args.input)
    data = _numeric_data(record)
    space = invariant_forms(data, args.degree)
    if args.format == "json":
        _emit_json(
            {
                "case": record.case_id,
                "degree": args.degree,
                "dimension": space.dim,
                "basis": [form.render() for form in space.basis],
            }
        )
    else:
        print(f"invariant {args.degree}-forms of {record.case_id}")
        print(f"dimension: {space.dim}")
        for form in space.basis:
            print(f"  {form.render()}")
    return 0


def _cmd_closed(args) -> int:
    record = _load_case_file(args.input)
    data = _numeric_data(record)
    family = closed_forms(data, args.degree)
    if args.format == "json":
        _emit_json(
            {
                "case": record.case_id,
                "degree": args.degree,
                "free_parameters": family.dim,
                "invariant_dimension": family.invariant_dim,
                "basis": [form.render() for form in family.basis],
                "generic": family.generic.render(),
                "partial_data": data.partial,
            }
        )
    else:
        print(f"closed invariant {args.degree}-forms of {record.case_id}")
        if data.partial:
            print("note: partial homogeneous data; d o d = 0 not guaranteed by construction")
        print(family.describe())
        for form in family.basis:
            print(f"  {form.render()}")
        print(f"generic member: {family.generic.render()}")
    return 0


def _cmd_definite(args) -> int:
    doc = _load_form_file(args.form)
    phi = _parse_form_doc(doc, degree=3)
    if phi.is_rational():
        report = definiteness(phi)
    else:
        probes = None
        if args.probes:
            try:
                probe_doc = json.loads(Path(args.probes).read_text(encoding="utf-8"))
            except (OSError, json.JSONDecodeError) as exc:
                raise _InputError(f"cannot read probes file: {exc}") from exc
            probes = [
                Vector([PolyScalar.constant(parse_rational(str(x)), phi.symbols) for x in vec])
                for vec in probe_doc["probes"]
            ]
        family = ClosedFamily(
            data=_abelian_data(phi.dim),
            degree=phi.degree,
            parameters=phi.symbols,
            basis=[],
            generic=phi,
            invariant_dim=0,
            rank=0,
        )
        report = obstruction_certificate(family, probes)
    if args.format == "json":
        _emit_json({"verdict": report.verdict, "report": report.render()})
    else:
        print(report.render())
    return 0


def _abelian_data(dim: int):
    from g2forms.liealg import HomogeneousSpaceData

    return HomogeneousSpaceData(dim, [], {}, partial=True)


def _cmd_su3(args) -> int:
    record = _load_case_file(args.input)
    data = _numeric_data(record)
    if data.dim_m == 7:
        data = data.restrict([1, 2, 3, 4, 5, 6])
    elif data.dim_m != 6:
        raise _InputError("su3 needs a case with a 6- or 7-dimensional tangent model")
    omega = _parse_form_doc(_load_form_file(args.omega), degree=2)
    psi = _parse_form_doc(_load_form_file(args.psi), degree=3)
    omega = omega.with_symbols(data.symbols)
    psi = psi.with_symbols(data.symbols)
    report = su3_check(data, omega, psi)
    if args.format == "json":
        _emit_json({"case": record.case_id, "flags": report.flags()})
    else:
        print(f"SU(3) pair check on {record.case_id}")
        print(report.render())
        yes = "yes" if report.symplectic_half_flat else "no"
        strict = "yes" if report.strictly_symplectic_half_flat else "no"
        print(f"symplectic half-flat: {yes}; strict: {strict}")
    return 0


def _cmd_schema(args) -> int:
    print(catalog.SCHEMA_TEXT)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="g2forms",
        description="Exact invariant-form computations on reductive homogeneous "
        "spaces, with G2/SU(3) structure verdicts.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="verify bundled cases against expected values")
    group = p_verify.add_mutually_exclusive_group()
    group.add_argument("--case", help="single case id")
    group.add_argument("--all", action="store_true", help="all canonical cases (default)")
    p_verify.add_argument("--filter", help="glob over all bundled ids, exploratory included")
    p_verify.add_argument("--format", choices=("text", "json"), default="text")
    p_verify.set_defaults(func=_cmd_verify)

    p_inv = sub.add_parser("invariants", help="invariant k-forms of a case file")
    p_inv.add_argument("--input", required=True, help="case file (JSON, see `schema`)")
    p_inv.add_argument("--degree", type=int, required=True)
    p_inv.add_argument("--format", choices=("text", "json"), default="text")
    p_inv.set_defaults(func=_cmd_invariants)

    p_closed = sub.add_parser("closed", help="closed invariant forms of a case file")
    p_closed.add_argument("--input", required=True)
    p_closed.add_argument("--degree", type=int, default=3)
    p_closed.add_argument("--format", choices=("text", "json"), default="text")
    p_closed.set_defaults(func=_cmd_closed)

    p_def = sub.add_parser("definite", help="definiteness report for a 3-form file")
    p_def.add_argument("--form", required=True, help="form file (JSON with dimension/form)")
    p_def.add_argument("--probes", help="JSON file with probe vectors for parametric forms")
    p_def.add_argument("--format", choices=("text", "json"), default="text")
    p_def.set_defaults(func=_cmd_definite)

    p_su3 = sub.add_parser("su3", help="SU(3)-pair report for (omega, psi) on a case")
    p_su3.add_argument("--input", required=True)
    p_su3.add_argument("--omega", required=True)
    p_su3.add_argument("--psi", required=True)
    p_su3.add_argument("--format", choices=("text", "json"), default="text")
    p_su3.set_defaults(func=_cmd_su3)

    p_schema = sub.add_parser("schema", help="print the case-file schema")
    p_schema.set_defaults(func=_cmd_schema)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # engine failure: diagnostic + dedicated exit code
        print(f"engine error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
