"""Command-line surface.

Exit codes follow a pipeline-friendly contract: for `check` and `oracle`,
0 means verdict yes, 1 means verdict no, 2 means error; `verify-cert`
returns 0/1 for valid/invalid certificates; everything else returns 0 on
success and 2 on error.  `--json` switches any command to machine-readable
reports (documents are already JSON, so `make` ignores it).

The enumeration budget for oracles and exact lengths can be overridden with
`--budget` or the LENALG_BUDGET environment variable.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .constructors import (
    fixture_names,
    make_bilinear_jordan,
    make_direct_sum_of_fields,
    make_fixture,
    make_matrix_algebra,
)
from .decide import (
    LengthReport,
    decide_length_one,
    oracle_length_one,
    ViolationWitness,
)
from .documents import (
    document_dict,
    parse_document,
    render_document,
    render_report,
    verify_report_dict,
)
from .errors import LenalgError
from .fields import make_field
from .generate import MODES, generate_length_one
from .identities import (
    is_associative,
    is_commutative,
    is_flexible,
    is_jordan,
    is_power_associative_upto,
)
from .length import length_of_algebra, length_of_set


def _read_source(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write_output(text, path):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _render_vec(field, v):
    return "(" + ", ".join(field.render(c) for c in v) + ")"


def _print_report(report, A, as_json):
    if as_json:
        sys.stdout.write(render_report(report, A))
        return
    if report.kind == "length-one-decision":
        print("verdict:", "yes (length <= 1)" if report.value else "no (length > 1)")
    else:
        print(f"{report.kind}: {report.value}")
    print("path:", " > ".join(report.path))
    for flag in report.flags:
        print("flag:", flag)
    cert = report.certificate
    field = A.field
    if cert is None:
        return
    if isinstance(cert, ViolationWitness):
        print("witness pair:")
        print("  left  =", _render_vec(field, cert.left))
        print("  right =", _render_vec(field, cert.right))
        print("  condition:", cert.condition)
    elif hasattr(cert, "form"):
        print("certificate: char-2 form", cert.form)
        if cert.beta:
            print("  beta =", _render_vec(field, cert.beta))
    elif hasattr(cert, "mu"):
        print("certificate: special basis")
        print("  mu   =", _render_vec(field, cert.mu))
        print("  beta =", _render_vec(field, cert.beta))
    elif isinstance(cert, dict):
        print("certificate:", json.dumps(cert))


def _parse_set_spec(A, spec):
    """Vectors from "e2;e3" (1-based basis indices) or "0,1,0;0,0,1"."""
    field = A.field
    vectors = []
    for token in spec.split(";"):
        token = token.strip()
        if not token:
            continue
        if token.startswith("e") and token[1:].isdigit():
            idx = int(token[1:])
            if not 1 <= idx <= A.dim:
                raise LenalgError(f"basis index out of range: {token}")
            vectors.append(A.basis_vector(idx - 1))
        else:
            parts = [p.strip() for p in token.split(",")]
            if len(parts) != A.dim:
                raise LenalgError(
                    f"vector {token!r} has {len(parts)} entries, need {A.dim}")
            vectors.append(tuple(field.parse(p) for p in parts))
    return vectors


def _cmd_check(args):
    doc = parse_document(_read_source(args.file))
    report = decide_length_one(doc.algebra)
    _print_report(report, doc.algebra, args.json)
    return 0 if report.value else 1


def _cmd_oracle(args):
    doc = parse_document(_read_source(args.file))
    res = oracle_length_one(doc.algebra, budget=args.budget,
                            samples=args.samples, seed=args.seed)
    path = ["oracle: exhaustive pair scan" if not res.sampled
            else "oracle: sampled pair scan (incomplete)"]
    report = LengthReport(kind="length-one-decision", value=res.is_length_one,
                          certificate=res.witness, path=path,
                          flags=(["sampled-incomplete"] if res.sampled else []))
    _print_report(report, doc.algebra, args.json)
    if not args.json:
        print("pairs checked:", res.pairs_checked)
    return 0 if res.is_length_one else 1


def _cmd_length_set(args):
    doc = parse_document(_read_source(args.file))
    A = doc.algebra
    vectors = _parse_set_spec(A, args.set)
    res = length_of_set(A, vectors)
    cert = {
        "type": "generating-set",
        "vectors": [[A.field.render(c) for c in v] for v in vectors],
        "dims": res.dims,
        "generates": res.generates,
    }
    report = LengthReport(kind="set-length", value=res.length, certificate=cert,
                          path=[f"word spans stabilized at {res.stabilized_at}"],
                          flags=[])
    if args.json:
        sys.stdout.write(render_report(report, A))
    else:
        print("l(S) =", res.length)
        print("generates:", "yes" if res.generates else
              f"no (closure has dimension {res.closure_dim})")
        print("dims:", ", ".join(str(d) for d in res.dims))
    return 0


def _cmd_length(args):
    doc = parse_document(_read_source(args.file))
    A = doc.algebra
    res = length_of_algebra(A, budget=args.budget)
    cert = {
        "type": "maximizing-set",
        "vectors": [[A.field.render(c) for c in v] for v in res.witness_rows],
        "subspaces_examined": res.subspaces_examined,
    }
    report = LengthReport(kind="algebra-length", value=res.length,
                          certificate=cert,
                          path=[f"enumerated {res.subspaces_examined} subspaces"],
                          flags=[])
    if args.json:
        sys.stdout.write(render_report(report, A))
    else:
        print("l(A) =", res.length)
        print("subspaces examined:", res.subspaces_examined)
        print("maximizing set:",
              "; ".join(_render_vec(A.field, v) for v in res.witness_rows))
    return 0


def _cmd_identities(args):
    doc = parse_document(_read_source(args.file))
    A = doc.algebra
    field = A.field
    results = {}
    results["commutative"] = is_commutative(A)
    results["associative"] = is_associative(A)
    results["flexible"] = is_flexible(A)
    if field.characteristic() != 2:
        results["jordan"] = is_jordan(A)
    results["power-associative(<=6)"] = is_power_associative_upto(
        A, args.degree, budget=args.budget, seed=0)
    report = decide_length_one(A)
    law_rows = None
    if report.value and hasattr(report.certificate, "mu"):
        from .identities import (
            associative_law_holds,
            flexible_law_holds,
            jordan_law_holds,
        )
        w = report.certificate
        law_rows = {
            "flexible-law(params)": flexible_law_holds(field, w.mu, w.beta, w.alpha),
            "associative-law(params)": associative_law_holds(field, w.mu, w.beta, w.alpha),
            "jordan-law(params)": jordan_law_holds(field, w.mu, w.beta, w.alpha),
        }
    if args.json:
        out = {
            "identities": {
                name: {"holds": v.holds,
                       "counterexample": _json_safe(field, v.counterexample)}
                for name, v in results.items()
            },
            "length_one": bool(report.value),
        }
        if field.characteristic() == 2:
            out["identities"]["jordan"] = {"holds": None,
                                           "counterexample": "undefined in characteristic 2"}
        if law_rows is not None:
            out["special_basis_laws"] = law_rows
        out["algebra"] = document_dict(A)
        sys.stdout.write(json.dumps(out, indent=2) + "\n")
        return 0
    for name, verdict in results.items():
        line = f"{name}: {'holds' if verdict.holds else 'fails'}"
        if not verdict.holds and verdict.counterexample:
            line += f"  ({_describe_counterexample(verdict.counterexample)})"
        print(line)
    if field.characteristic() == 2:
        print("jordan: skipped (not defined in characteristic 2)")
    if law_rows is not None:
        print("special-basis parameter laws (length-one witness):")
        for name, val in law_rows.items():
            print(f"  {name}: {val}")
    return 0


def _json_safe(field, obj):
    if obj is None or isinstance(obj, (bool, int, str)):
        return obj
    if isinstance(obj, dict):
        return {k: _json_safe(field, v) for k, v in obj.items()}
    if isinstance(obj, (list, set)):
        return [_json_safe(field, v) for v in obj]
    if isinstance(obj, tuple):
        try:
            return [field.render(c) for c in obj]
        except Exception:
            return [_json_safe(field, v) for v in obj]
    return str(obj)


def _describe_counterexample(ce):
    kind = ce.get("kind", "?")
    if "indices" in ce:
        return f"{kind} at indices {ce['indices']}"
    if kind == "power":
        return f"x^{ce['degree']} is ambiguous"
    return kind


def _cmd_make(args):
    field = make_field(args.field) if args.field else None
    name = args.constructor
    if name == "bilinear-jordan":
        if field is None or not args.gram:
            raise LenalgError("bilinear-jordan needs --field and --gram")
        gram = [[field.parse(x.strip()) for x in row.split(",")]
                for row in args.gram.split(";")]
        A = make_bilinear_jordan(field, gram)
    elif name == "matrix":
        if field is None or args.n is None:
            raise LenalgError("matrix needs --field and --n")
        A = make_matrix_algebra(field, args.n)
    elif name == "direct-sum":
        if field is None or args.k is None:
            raise LenalgError("direct-sum needs --field and --k")
        A = make_direct_sum_of_fields(field, args.k)
    elif name == "fixture":
        if not args.name:
            raise LenalgError("fixture needs --name (one of: "
                              + ", ".join(fixture_names()) + ")")
        A = make_fixture(args.name, field=field)
    elif name == "random-l1":
        if field is None or args.dim is None:
            raise LenalgError("random-l1 needs --field, --dim and --mode")
        A = generate_length_one(field, args.dim, args.seed, args.mode,
                                hide=args.hide)
    else:
        raise LenalgError(f"unknown constructor {name!r}")
    metadata = {"constructor": name}
    if args.name:
        metadata["name"] = args.name
    _write_output(render_document(A, metadata), args.output)
    return 0


def _cmd_verify_cert(args):
    data = json.loads(_read_source(args.file))
    ok = verify_report_dict(data)
    if args.json:
        sys.stdout.write(json.dumps({"certificate_valid": ok}) + "\n")
    else:
        print("certificate:", "valid" if ok else "INVALID")
    return 0 if ok else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="lenalg",
        description="Exact length-one decisions, lengths, and identity checks "
                    "for structure-constant algebras.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true",
                       help="emit a machine-readable JSON report")
        p.add_argument("--budget", type=int, default=None,
                       help="enumeration work cap (default: LENALG_BUDGET or 10^7)")

    p = sub.add_parser("check", help="decide length one with a certificate")
    p.add_argument("file", help="algebra document (JSON), or - for stdin")
    common(p)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("oracle", help="exhaustive pair-span check (finite fields)")
    p.add_argument("file")
    p.add_argument("--samples", type=int, default=None,
                   help="sampling mode (incomplete); required over Q")
    p.add_argument("--seed", type=int, default=0)
    common(p)
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("length-set", help="length of a generating set")
    p.add_argument("file")
    p.add_argument("--set", required=True,
                   help="semicolon-separated vectors; entries are comma-separated "
                        "scalars, or e<k> for the k-th basis vector (1-based)")
    common(p)
    p.set_defaults(func=_cmd_length_set)

    p = sub.add_parser("length", help="exact algebra length (finite fields)")
    p.add_argument("file")
    common(p)
    p.set_defaults(func=_cmd_length)

    p = sub.add_parser("identities",
                       help="commutative / associative / flexible / jordan / "
                            "power-associative checks")
    p.add_argument("file")
    p.add_argument("--degree", type=int, default=6,
                   help="power-associativity degree bound (default 6)")
    common(p)
    p.set_defaults(func=_cmd_identities)

    p = sub.add_parser("make", help="emit an algebra document")
    p.add_argument("constructor",
                   choices=["bilinear-jordan", "matrix", "direct-sum",
                            "fixture", "random-l1"])
    p.add_argument("--field", help='field shorthand: Q, F2, F3, F5, GF4, ...')
    p.add_argument("--gram", help='rows "1,0;0,-1" for bilinear-jordan')
    p.add_argument("--n", type=int, help="matrix size")
    p.add_argument("--k", type=int, help="number of direct summands")
    p.add_argument("--name", help="fixture name (see README) or document name")
    p.add_argument("--dim", type=int, help="dimension for random-l1")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--mode", choices=list(MODES), default="special")
    p.add_argument("--hide", action="store_true",
                   help="conjugate by a seeded random basis change")
    p.add_argument("-o", "--output", default=None, help="output file (default stdout)")
    common(p)
    p.set_defaults(func=_cmd_make)

    p = sub.add_parser("verify-cert")  # deliberately undocumented in --help text
    p.add_argument("file", help="a report produced with --json")
    common(p)
    p.set_defaults(func=_cmd_verify_cert)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except LenalgError as exc:
        print(f"error[{type(exc).__name__}]: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error[FileNotFound]: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
