"""JSON document format for algebras and machine-readable reports.

Scalars travel as strings ("5", "-1/2", "[0,1]") so exact values never pass
through binary floating point; integers appear only where they are exact in
JSON (dimensions, indices, modulus coefficients).  Rendering is canonical:
fixed key order, canonical scalar strings, two-space indentation, trailing
newline.  `render_document(parse_document(text))` is byte-identical whenever
`text` was itself produced by `render_document`.

Document shape:

    {
      "field": "Q" | "F<p>" | "GF4" | {"kind": ..., ...},
      "dim": n,
      "one": ["1", "0", ...],          # optional; detected when omitted
      "adjoin_identity": true,         # optional; adjoins a new identity
      "table": [[["c", ...] x n] x n],
      "metadata": {...}                # optional, free-form
    }
"""

from __future__ import annotations

import json

from .algebra import algebra, find_identity, unital_hull
from .decide import (
    CharTwoWitness,
    SpecialBasisWitness,
    ViolationWitness,
    verify_certificate,
)
from .errors import NoIdentityError, SchemaError, ScalarSyntaxError
from .fields import ExtensionField, FieldSpec, field_make, make_field
from .linalg import BasisChange


# ---------------------------------------------------------------------------
# fields
# ---------------------------------------------------------------------------

def field_to_json(field):
    label = field.label()
    try:
        if make_field(label) == field:
            return label
    except ValueError:
        pass
    spec = field.spec()
    if spec.kind == "prime":
        return {"kind": "prime", "p": spec.p}
    return {"kind": "extension", "p": spec.p, "k": spec.k,
            "modulus": list(spec.modulus)}


def field_from_json(obj, path="field"):
    if isinstance(obj, str):
        try:
            return make_field(obj)
        except ValueError as exc:
            raise SchemaError(path, str(exc))
    if not isinstance(obj, dict):
        raise SchemaError(path, "field must be a shorthand string or an object")
    kind = obj.get("kind")
    if kind == "rationals":
        return make_field("Q")
    if kind == "prime":
        if not isinstance(obj.get("p"), int):
            raise SchemaError(f"{path}.p", "prime field needs integer p")
        return field_make(FieldSpec(kind="prime", p=obj["p"]))
    if kind == "extension":
        p, k = obj.get("p"), obj.get("k")
        if not isinstance(p, int) or not isinstance(k, int):
            raise SchemaError(path, "extension field needs integers p and k")
        modulus = obj.get("modulus")
        if modulus is not None:
            if (not isinstance(modulus, list)
                    or any(not isinstance(c, int) for c in modulus)):
                raise SchemaError(f"{path}.modulus",
                                  "modulus must be a list of integers")
            modulus = tuple(modulus)
        return ExtensionField(p, k, modulus)
    raise SchemaError(f"{path}.kind", f"unknown field kind {kind!r}")


# ---------------------------------------------------------------------------
# algebra documents
# ---------------------------------------------------------------------------

class AlgebraDocument:
    """A parsed document: the algebra plus its free-form metadata."""

    def __init__(self, algebra, metadata=None):
        self.algebra = algebra
        self.metadata = dict(metadata or {})


def _parse_scalar(field, text, path):
    if not isinstance(text, str):
        raise ScalarSyntaxError(path, f"scalar must be a string, got {type(text).__name__}")
    try:
        return field.parse(text)
    except ValueError as exc:
        raise ScalarSyntaxError(path, str(exc))


def _parse_vector(field, obj, n, path):
    if not isinstance(obj, list) or len(obj) != n:
        raise SchemaError(path, f"expected a list of {n} scalar strings")
    return tuple(_parse_scalar(field, s, f"{path}[{i}]") for i, s in enumerate(obj))


def parse_document(source):
    """Parse JSON text (or an already-loaded dict) into an AlgebraDocument."""
    if isinstance(source, (str, bytes)):
        try:
            data = json.loads(source)
        except json.JSONDecodeError as exc:
            raise SchemaError("$", f"not valid JSON: {exc}")
    else:
        data = source
    if not isinstance(data, dict):
        raise SchemaError("$", "document must be a JSON object")
    unknown = set(data) - {"field", "dim", "one", "adjoin_identity", "table",
                           "metadata"}
    if unknown:
        raise SchemaError("$", f"unknown keys: {sorted(unknown)}")
    field = field_from_json(data.get("field"), "field")
    dim = data.get("dim")
    if not isinstance(dim, int) or dim < 1:
        raise SchemaError("dim", "dim must be a positive integer")
    table_obj = data.get("table")
    if not isinstance(table_obj, list) or len(table_obj) != dim:
        raise SchemaError("table", f"table must be a {dim}x{dim} array")
    table = []
    for i, row in enumerate(table_obj):
        if not isinstance(row, list) or len(row) != dim:
            raise SchemaError(f"table[{i}]", f"expected {dim} entries")
        table.append(tuple(
            _parse_vector(field, cell, dim, f"table[{i}][{j}]")
            for j, cell in enumerate(row)
        ))
    table = tuple(table)
    metadata = data.get("metadata") or {}
    if not isinstance(metadata, dict):
        raise SchemaError("metadata", "metadata must be an object")
    adjoin = data.get("adjoin_identity", False)
    if not isinstance(adjoin, bool):
        raise SchemaError("adjoin_identity", "must be a boolean")
    one_obj = data.get("one")
    if adjoin and one_obj is not None:
        raise SchemaError("adjoin_identity",
                          "cannot both give an identity and adjoin one")
    if adjoin:
        return AlgebraDocument(unital_hull(field, table), metadata)
    if one_obj is not None:
        one = _parse_vector(field, one_obj, dim, "one")
        try:
            return AlgebraDocument(algebra(field, table, one), metadata)
        except Exception as exc:
            raise SchemaError("one", str(exc))
    one = find_identity(field, table)
    if one is None:
        raise NoIdentityError(
            "table has no two-sided identity; set \"adjoin_identity\": true "
            "to adjoin one")
    return AlgebraDocument(algebra(field, table, one), metadata)


def document_dict(A, metadata=None):
    field = A.field
    doc = {
        "field": field_to_json(field),
        "dim": A.dim,
        "one": [field.render(c) for c in A.one],
        "table": [[[field.render(c) for c in cell] for cell in row]
                  for row in A.table],
    }
    if metadata:
        doc["metadata"] = metadata
    return doc


def render_document(A, metadata=None):
    """Canonical JSON text for an algebra (or an AlgebraDocument)."""
    if isinstance(A, AlgebraDocument):
        metadata = metadata if metadata is not None else A.metadata
        A = A.algebra
    return json.dumps(document_dict(A, metadata), indent=2) + "\n"


# ---------------------------------------------------------------------------
# certificates and reports
# ---------------------------------------------------------------------------

def _render_vec(field, v):
    return [field.render(c) for c in v]


def _render_matrix(field, m):
    return [[field.render(c) for c in row] for row in m]


def certificate_to_dict(field, certificate):
    if certificate is None:
        return None
    if isinstance(certificate, SpecialBasisWitness):
        return {
            "type": "special-basis",
            "change": _render_matrix(field, certificate.change.matrix),
            "mu": _render_vec(field, certificate.mu),
            "beta": _render_vec(field, certificate.beta),
            "alpha": _render_matrix(field, certificate.alpha),
        }
    if isinstance(certificate, CharTwoWitness):
        return {
            "type": "char2-form",
            "form": certificate.form,
            "change": _render_matrix(field, certificate.change.matrix),
            "beta": _render_vec(field, certificate.beta),
            "congruence_constants": {
                "squares": _render_vec(field, certificate.square_constants),
                "products": _render_matrix(field, certificate.product_constants),
            },
        }
    if isinstance(certificate, ViolationWitness):
        return {
            "type": "violation",
            "condition": certificate.condition,
            "left": _render_vec(field, certificate.left),
            "right": _render_vec(field, certificate.right),
            "detail": certificate.detail,
        }
    if isinstance(certificate, dict):
        return certificate
    raise TypeError(f"cannot serialize certificate {type(certificate).__name__}")


def _parse_matrix(field, obj, path):
    return tuple(_parse_vector(field, row, len(obj[0]) if obj else 0,
                               f"{path}[{i}]")
                 for i, row in enumerate(obj))


def certificate_from_dict(field, obj):
    if obj is None:
        return None
    kind = obj.get("type")
    if kind == "special-basis":
        change = BasisChange(field, _parse_matrix(field, obj["change"], "change"))
        return SpecialBasisWitness(
            change=change,
            mu=_parse_vector(field, obj["mu"], len(obj["mu"]), "mu"),
            beta=_parse_vector(field, obj["beta"], len(obj["beta"]), "beta"),
            alpha=_parse_matrix(field, obj["alpha"], "alpha"),
        )
    if kind == "char2-form":
        change = BasisChange(field, _parse_matrix(field, obj["change"], "change"))
        cc = obj["congruence_constants"]
        return CharTwoWitness(
            change=change,
            form=obj["form"],
            beta=_parse_vector(field, obj["beta"], len(obj["beta"]), "beta"),
            square_constants=_parse_vector(field, cc["squares"],
                                           len(cc["squares"]), "squares"),
            product_constants=_parse_matrix(field, cc["products"], "products"),
        )
    if kind == "violation":
        n = len(obj["left"])
        return ViolationWitness(
            left=_parse_vector(field, obj["left"], n, "left"),
            right=_parse_vector(field, obj["right"], n, "right"),
            condition=obj.get("condition", "oracle-pair"),
            detail=obj.get("detail", {}),
        )
    if kind in ("generating-set", "maximizing-set"):
        return dict(obj)
    raise SchemaError("certificate.type", f"unknown certificate type {kind!r}")


def report_to_dict(report, A, metadata=None):
    """Machine-readable report with the algebra embedded for re-verification."""
    out = {
        "report_version": 1,
        "kind": report.kind,
    }
    if report.kind == "length-one-decision":
        out["verdict"] = bool(report.value)
    else:
        out["value"] = int(report.value)
    out["path"] = list(report.path)
    out["flags"] = list(report.flags)
    out["certificate"] = certificate_to_dict(A.field, report.certificate)
    out["algebra"] = document_dict(A, metadata)
    return out


def render_report(report, A, metadata=None):
    return json.dumps(report_to_dict(report, A, metadata), indent=2) + "\n"


def verify_report_dict(data):
    """Re-verify the certificate embedded in a report dict.

    Decision certificates re-verify directly; length certificates re-verify
    by recomputing the reported quantity from the recorded set.
    """
    from .length import length_of_algebra, length_of_set

    doc = parse_document(data["algebra"])
    A = doc.algebra
    field = A.field
    kind = data.get("kind")
    cert = certificate_from_dict(field, data.get("certificate"))
    if kind == "length-one-decision":
        verdict = bool(data.get("verdict"))
        if verdict and isinstance(cert, ViolationWitness):
            return False
        if not verdict and not isinstance(cert, ViolationWitness):
            return False
        return verify_certificate(A, cert)
    if kind == "set-length":
        if not isinstance(cert, dict) or cert.get("type") != "generating-set":
            return False
        vectors = [tuple(field.parse(s) for s in v) for v in cert["vectors"]]
        res = length_of_set(A, vectors)
        return res.length == data.get("value") and res.generates == cert.get("generates")
    if kind == "algebra-length":
        if not isinstance(cert, dict) or cert.get("type") != "maximizing-set":
            return False
        vectors = [tuple(field.parse(s) for s in v) for v in cert["vectors"]]
        res = length_of_set(A, vectors)
        if not res.generates or res.length != data.get("value"):
            return False
        full = length_of_algebra(A)
        return full.length == data.get("value")
    return False
