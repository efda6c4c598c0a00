"""Bundled homogeneous-space cases with expected values, and their verifier.

Each case is a JSON document (see :data:`SCHEMA_TEXT`) holding the raw
input data (a matrix basis, structure constants, or partial homogeneous
data), parameter instantiations, and a list of expected check results with
source citations.  :func:`verify_case` runs the full pipeline on a case and
compares every expected value exactly; :func:`verify_all` aggregates.

Filter semantics: without a filter, :func:`verify_all` runs the canonical
cases only (``exploratory`` cases are excluded); an explicit filter glob is
matched against *all* bundled ids, exploratory included.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from g2forms.scalars import parse_rational

__all__ = [
    "CaseRecord",
    "CaseReport",
    "CheckResult",
    "SCHEMA_TEXT",
    "SchemaError",
    "bundled_ids",
    "load_bundled",
    "load_case",
    "verify_all",
    "verify_case",
]


class SchemaError(ValueError):
    """A case document violates the schema."""


SOURCES = ("matrix-basis", "structure-constants", "partial-homogeneous")

CHECK_NAMES = (
    "invariant_dim",
    "invariant_span",
    "invariant_dim_in_support",
    "d_eval",
    "b_entry",
    "closed_param_count",
    "closed_span",
    "closed_subset_of",
    "closed_component_zero",
    "not_definite",
    "b_matrix_scalar",
    "torsion_flags",
    "contract_vector",
    "hitchin",
    "su3_flags",
    "jacobi",
    "d_squared",
)

SCHEMA_TEXT = """\
Case file schema (JSON, one document per case)
===============================================

Required fields
---------------
id            unique case identifier (string)
description   human-readable summary (string)
source        one of: matrix-basis | structure-constants | partial-homogeneous
dimension     matrix-basis / structure-constants: dimension of the full
              Lie algebra; partial-homogeneous: dimension of m
basis_names   list of `dimension` names (full algebra order for full
              sources; m order for partial data)
expected      list of {check, args, value, cite}; cite is a non-empty
              source label for the expected value

Payload (exactly one, matching `source`)
----------------------------------------
matrices      list of square matrices, row-major; each entry is either a
              rational string "p/q" or a two-element list [re, im] of
              rational strings (a complex entry; complex matrices are
              realified on load, which preserves all brackets)
structure_constants
              list of [i, j, k, coeff] with 1 <= i < j <= n and coeff a
              polynomial string; [e_i, e_j] = sum_k coeff * e_k.  Only
              i < j entries are stored (antisymmetry is implicit).
homogeneous   {"isotropy_action": [matrix, ...],
               "projected_bracket": [[i, j, [coeff, ...]], ...]}
              with dim-m square matrices of polynomial strings and
              bracket component vectors of length dim m

Optional fields
---------------
h_indices     1-based indices of the isotropy subalgebra basis (full
              sources; must form a subalgebra with [h, m] in m)
m_indices     1-based indices of the complement m (full sources)
context       ordered list of parameter symbols for every polynomial
              string in the document (default: empty)
parameters    {symbol: rational string} instantiation applied before any
              numeric computation (invariant bases, closed families,
              definiteness); symbolic evaluations (d_eval, b_entry) run
              on the uninstantiated data
enumerations  list of {symbol: rational string} partial assignments;
              checks that need numeric data are repeated for
              parameters+enumeration and must hold for every entry
gammas        printed invariant-form basis (form strings); the generic
              form sum_i gamma_symbols[i] * gammas[i] feeds d_eval,
              b_entry and closed_component_zero
gamma_symbols one parameter symbol per gamma
exploratory   boolean (default false); exploratory cases are skipped by
              verify_all unless an explicit filter matches them

Scalar and form grammar
-----------------------
rational      "p" or "p/q" (q > 0)
polynomial    signed monomial sums with symbols in context order,
              e.g. "6*b - 2", "-a3", "1/2*a1 + 2*a2", "6*a3*a6^2"
form          signed sums "c*e^{i j k}" with rational c and 1-based,
              single-digit indices, e.g. "e^{1 2 4} - e^{1 3 5}";
              "0" denotes the zero form

Checks
------
invariant_dim            args {degree}; value: integer dimension
invariant_span           args {degree}; value: list of forms; passes when
                         the computed space equals their span (span-match)
invariant_dim_in_support args {degree, groups: [[i..], ...], counts: [..]};
                         value: dimension of the invariant forms supported
                         on monomials with counts[g] indices in groups[g]
d_eval                   args {vectors: [i..]}; value: polynomial; the
                         coset differential of the generic form, evaluated
                         on the named basis vectors, kept symbolic
b_entry                  args {i, j}; value: polynomial; entry of the
                         bilinear form of the generic form
closed_param_count       args {degree?}; value: number of free parameters
                         of the closed family
closed_span              value: list of forms; closed family spans them
closed_subset_of         value: list of forms; closed family lies in span
closed_component_zero    args {indices}; value true; every closed form has
                         zero component along the named gammas
not_definite             value true; an obstruction certificate excludes
                         definite members of the closed family, for every
                         enumeration entry
b_matrix_scalar          args {form}; value: rational c with B = c * Id
torsion_flags            args {form}; value {definite, closed, coclosed}
contract_vector          args {form, vector}; value: the contracted form
hitchin                  args {psi}; value {lambda, k_squared_scalar}
su3_flags                args {omega, psi}; value: flag dict as rendered
                         by the SU(3) report
jacobi                   value "valid" (full-algebra sources only)
d_squared                args {degrees}; value "pass"; d o d = 0 on the
                         invariant basis (full-algebra sources only)

Exit semantics: a report line is `match` (or `span-match` for span
comparisons) when computed equals expected; any `mismatch` fails the case.
"""


@dataclass
class CaseRecord:
    """A validated case document; ``raw`` preserves the canonical content."""

    raw: dict

    @property
    def case_id(self) -> str:
        return self.raw["id"]

    @property
    def description(self) -> str:
        return self.raw.get("description", "")

    @property
    def source(self) -> str:
        return self.raw["source"]

    @property
    def dimension(self) -> int:
        return self.raw["dimension"]

    @property
    def basis_names(self) -> list:
        return list(self.raw["basis_names"])

    @property
    def context(self) -> tuple:
        return tuple(self.raw.get("context", ()))

    @property
    def parameters(self) -> dict:
        return {k: parse_rational(v) for k, v in self.raw.get("parameters", {}).items()}

    @property
    def enumerations(self) -> list:
        enums = self.raw.get("enumerations")
        if not enums:
            return [self.parameters]
        return [
            {**self.parameters, **{k: parse_rational(v) for k, v in entry.items()}}
            for entry in enums
        ]

    @property
    def gammas(self) -> list:
        return list(self.raw.get("gammas", ()))

    @property
    def gamma_symbols(self) -> list:
        return list(self.raw.get("gamma_symbols", ()))

    @property
    def expected(self) -> list:
        return list(self.raw.get("expected", ()))

    @property
    def exploratory(self) -> bool:
        return bool(self.raw.get("exploratory", False))

    def to_dict(self) -> dict:
        return json.loads(json.dumps(self.raw))

    def to_canonical_json(self) -> str:
        return json.dumps(self.raw, indent=2, sort_keys=True) + "\n"


_ALLOWED_KEYS = {
    "id",
    "description",
    "source",
    "dimension",
    "basis_names",
    "matrices",
    "structure_constants",
    "homogeneous",
    "h_indices",
    "m_indices",
    "context",
    "parameters",
    "enumerations",
    "gammas",
    "gamma_symbols",
    "expected",
    "exploratory",
}

_PAYLOAD_BY_SOURCE = {
    "matrix-basis": "matrices",
    "structure-constants": "structure_constants",
    "partial-homogeneous": "homogeneous",
}


def validate_case_dict(doc: dict) -> None:
    """Raise :class:`SchemaError` with a field-level message on violation."""
    if not isinstance(doc, dict):
        raise SchemaError("case document must be a JSON object")
    unknown = set(doc) - _ALLOWED_KEYS
    if unknown:
        raise SchemaError(f"unknown field(s): {sorted(unknown)}")
    for key in ("id", "source", "dimension", "basis_names"):
        if key not in doc:
            raise SchemaError(f"missing required field {key!r}")
    if not isinstance(doc["id"], str) or not doc["id"]:
        raise SchemaError("id: must be a non-empty string")
    if doc["source"] not in SOURCES:
        raise SchemaError(f"source: expected one of {SOURCES}, got {doc['source']!r}")
    dim = doc["dimension"]
    if not isinstance(dim, int) or dim < 1:
        raise SchemaError("dimension: must be a positive integer")
    names = doc["basis_names"]
    if not isinstance(names, list) or len(names) != dim:
        raise SchemaError(f"basis_names: expected {dim} names")
    payload_key = _PAYLOAD_BY_SOURCE[doc["source"]]
    present = [k for k in _PAYLOAD_BY_SOURCE.values() if k in doc]
    if present != [payload_key]:
        raise SchemaError(
            f"payload: source {doc['source']!r} requires exactly the field {payload_key!r}"
        )
    if payload_key == "matrices":
        mats = doc["matrices"]
        if not isinstance(mats, list) or len(mats) != dim:
            raise SchemaError(f"matrices: expected {dim} matrices")
        size = None
        for pos, m in enumerate(mats):
            if not isinstance(m, list) or (size is not None and len(m) != size):
                raise SchemaError(f"matrices[{pos}]: inconsistent matrix size")
            size = len(m)
            for row in m:
                if not isinstance(row, list) or len(row) != size:
                    raise SchemaError(f"matrices[{pos}]: matrix is not square")
    elif payload_key == "structure_constants":
        for pos, entry in enumerate(doc["structure_constants"]):
            if (
                not isinstance(entry, list)
                or len(entry) != 4
                or not all(isinstance(x, int) for x in entry[:3])
                or not isinstance(entry[3], str)
            ):
                raise SchemaError(
                    f"structure_constants[{pos}]: expected [i, j, k, coeff-string]"
                )
            i, j, k = entry[:3]
            if not (1 <= i < j <= dim and 1 <= k <= dim):
                raise SchemaError(
                    f"structure_constants[{pos}]: indices ({i},{j},{k}) out of range"
                )
    else:
        hom = doc["homogeneous"]
        if not isinstance(hom, dict) or set(hom) != {"isotropy_action", "projected_bracket"}:
            raise SchemaError(
                "homogeneous: expected exactly the fields isotropy_action and projected_bracket"
            )
        for pos, m in enumerate(hom["isotropy_action"]):
            if len(m) != dim or any(len(row) != dim for row in m):
                raise SchemaError(f"homogeneous.isotropy_action[{pos}]: expected {dim}x{dim}")
        for pos, entry in enumerate(hom["projected_bracket"]):
            if len(entry) != 3 or len(entry[2]) != dim:
                raise SchemaError(
                    f"homogeneous.projected_bracket[{pos}]: expected [i, j, [{dim} components]]"
                )
            i, j = entry[0], entry[1]
            if not (1 <= i <= dim and 1 <= j <= dim and i != j):
                raise SchemaError(
                    f"homogeneous.projected_bracket[{pos}]: invalid pair ({i},{j})"
                )
    if doc["source"] != "partial-homogeneous":
        for key in ("h_indices", "m_indices"):
            if key not in doc:
                raise SchemaError(f"missing field {key!r} for source {doc['source']!r}")
            if any(not (1 <= i <= dim) for i in doc[key]):
                raise SchemaError(f"{key}: index out of range 1..{dim}")
    gammas = doc.get("gammas", [])
    gamma_symbols = doc.get("gamma_symbols", [])
    if len(gammas) != len(gamma_symbols):
        raise SchemaError("gammas and gamma_symbols must have equal length")
    context = doc.get("context", [])
    for sym in gamma_symbols:
        if sym not in context:
            raise SchemaError(f"gamma_symbols: {sym!r} is not declared in context")
    for pos, item in enumerate(doc.get("expected", [])):
        if not isinstance(item, dict) or not {"check", "value", "cite"} <= set(item):
            raise SchemaError(f"expected[{pos}]: needs check, value and cite fields")
        if item["check"] not in CHECK_NAMES:
            raise SchemaError(f"expected[{pos}]: unknown check {item['check']!r}")
        if not isinstance(item["cite"], str) or not item["cite"]:
            raise SchemaError(f"expected[{pos}]: cite must be a non-empty string")


def load_case(path) -> CaseRecord:
    """Load and validate a case file.

    Supplied structure constants get a Jacobi check and a reductive-split
    validation at load time; partial homogeneous payloads are checked for
    bracket antisymmetry.  Matrix payloads are validated on first use (the
    exact solve that derives their constants is the validation).
    """
    text = Path(path).read_text(encoding="utf-8")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}") from exc
    validate_case_dict(doc)
    record = CaseRecord(doc)
    if record.source == "structure-constants":
        from g2forms.catalog._runner import build_algebra
        from g2forms.liealg import LieStructureError, jacobi_check, reductive_split

        algebra = build_algebra(record)
        report = jacobi_check(algebra)
        if not report.ok:
            raise SchemaError(f"structure constants violate Jacobi:\n{report.render()}")
        try:
            reductive_split(algebra, record.raw["h_indices"], record.raw["m_indices"])
        except LieStructureError as exc:
            raise SchemaError(f"reductive split fails: {exc}") from exc
    elif record.source == "partial-homogeneous":
        from g2forms.catalog._runner import build_homogeneous
        from g2forms.liealg import LieStructureError

        try:
            build_homogeneous(record)
        except LieStructureError as exc:
            raise SchemaError(f"invalid homogeneous payload: {exc}") from exc
        except ValueError as exc:
            raise SchemaError(f"invalid homogeneous payload: {exc}") from exc
    return record


def _case_dir():
    return resources.files("g2forms.catalog") / "cases"


def bundled_ids() -> list:
    """Sorted ids of every bundled case, exploratory ones included."""
    out = []
    for entry in _case_dir().iterdir():
        if entry.name.endswith(".json"):
            out.append(entry.name[: -len(".json")])
    return sorted(out)


def load_bundled(case_id: str) -> CaseRecord:
    target = _case_dir() / f"{case_id}.json"
    if not target.is_file():
        raise KeyError(f"unknown case id {case_id!r} (known: {', '.join(bundled_ids())})")
    return load_case(target)


# re-exported from the runner; imported late to keep module import light
from g2forms.catalog._runner import CaseReport, CheckResult, verify_all, verify_case  # noqa: E402
