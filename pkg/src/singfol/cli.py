"""Command line interface.

One command per invocation, reading a foliation spec file and printing a
deterministic structured-text report (see singfol.report).  Exit status:
0 on success, 2 when the input is rejected (parse error, non-involutive
module where involutivity is required, violated preconditions), 3 when
an internal mathematical invariant fails, which is always a bug report.

The report's payload is reproducible bit for bit for identical input and
options; the trailing timing line is the only non-deterministic output.
"""

from __future__ import annotations

import argparse
import sys
import time
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from .dsl import FoliationSpec, parse_field, parse_spec
from .errors import InputRejected, InternalCheckError, ParseError, SingfolError
from .holonomy import artin_rees_certify, isotropy_algebra
from .levinorm import (
    JetField,
    LeviConnection,
    jet,
    linearize,
    radical_foliation,
    verify_connection,
)
from .liealg import LieAlgebra, levi_subalgebra
from .modalg import FoliationModule
from .report import input_hash, render_document
from .vecfield import PolyVectorField


def _module_of(spec: FoliationSpec) -> FoliationModule:
    return FoliationModule(spec.generators)


def _csv(values) -> str:
    return ", ".join(str(v) for v in values)


def _structure_entries(algebra: LieAlgebra) -> List[str]:
    entries = []
    for i in range(algebra.dim):
        for j in range(i + 1, algebra.dim):
            row = algebra.structure[i][j]
            if any(c != 0 for c in row):
                entries.append(f"[{i + 1},{j + 1}] -> {_csv(row)}")
    return entries


def _matrix_rows(matrix) -> List[str]:
    return [_csv(row) for row in matrix]


def _render_fields(fields, names) -> List[str]:
    return [f.render(names) for f in fields]


def cmd_check_involutive(module, spec, options):
    verdict = module.check_involutive()
    payload: Dict = {
        "closed": verdict.closed,
        "generators": _render_fields(module.generators, spec.variables),
    }
    if not verdict.closed:
        i, j, bracket, cert = verdict.witness
        payload["witness"] = {
            "generator_i": i + 1,
            "generator_j": j + 1,
            "bracket": bracket.render(spec.variables),
            "remainder": cert.reduction_remainder.render(spec.variables),
        }
    certification = {
        "pairs_checked": len(module.generators) * (len(module.generators) - 1) // 2,
        "method": "groebner membership of generator brackets",
    }
    return payload, certification


def cmd_isotropy(module, spec, options):
    data = isotropy_algebra(module)
    payload = {
        "dimension": data.dim,
        "abelian": data.algebra.is_abelian(),
        "representatives": _render_fields(data.representatives, spec.variables),
        "structure": _structure_entries(data.algebra) or [],
        "radical_dimension": data.radical.dim,
        "linear_dimension": data.lin_data.algebra.dim,
        "semisimple_dimension": data.ss_data.algebra.dim,
    }
    certification = {
        "filtration_cap": data.filtration_cap,
        "invariants": "structure constants, filtration bracket law, "
        "linearization kernel, nilpotency and quotient triangle verified",
    }
    return payload, certification


def cmd_filtration(module, spec, options):
    cap = int(options.get("cap") or (2 * module.max_generator_degree() + 2))
    data = isotropy_algebra(module, filtration_cap=cap)
    dims = [s.dim for s in data.filtration]
    first_zero: object = "not reached"
    for i, s in enumerate(data.filtration):
        if s.dim == 0:
            first_zero = i
            break
    payload = {
        "dims": [str(d) for d in dims],
        "first_zero": first_zero,
        "cap": cap,
        "terminated": data.filtration_terminated,
    }
    certification = {"orders_checked": len(dims)}
    return payload, certification


def cmd_linear_holonomy(module, spec, options):
    data = isotropy_algebra(module)
    payload = {
        "dimension": data.lin_data.algebra.dim,
        "structure": _structure_entries(data.lin_data.algebra) or [],
        "matrices": [
            {"rows": _matrix_rows(m)} for m in data.lin_matrices
        ],
    }
    certification = {
        "realization": "action on linear coordinate functions, verified "
        "faithful and bracket-preserving",
    }
    return payload, certification


def cmd_levi(module, spec, options):
    data = isotropy_algebra(module)
    levi = levi_subalgebra(data.algebra)
    payload = {
        "dimension": data.dim,
        "radical_dimension": levi.radical.dim,
        "semisimple_dimension": levi.quotient.dim,
        "radical_basis": [_csv(r) for r in levi.radical.rows] or [],
        "section": [_csv(col) for col in levi.section] or [],
        "semisimple_structure": _structure_entries(levi.quotient) or [],
    }
    certification = {
        "verified": "radical solvable ideal, section splits projection and "
        "preserves brackets",
    }
    return payload, certification


def cmd_artin_rees(module, spec, options):
    cap = int(options.get("max_degree") or (2 * module.max_generator_degree() + 2))
    cert = artin_rees_certify(module, cap=cap)
    payload = {
        "certified": cert.certified,
        "bound": cert.bound if cert.bound is not None else "unbounded up to cap",
        "checked_up_to": cert.checked_up_to,
        "graded_dims": [str(d) for d in cert.graded_dims],
        "witness": (
            cert.witness_lower.render(spec.variables)
            if cert.witness_lower is not None
            else "none"
        ),
    }
    if cert.predecessor_failure is not None:
        candidate, degree = cert.predecessor_failure
        payload["predecessor_failure"] = f"candidate {candidate} fails at degree {degree}"
    certification = {
        "statement": "graded containments verified in every degree up to the cap",
    }
    return payload, certification


def cmd_linearize(module, spec, options):
    order = int(options.get("order") or 4)
    conn = linearize(module, order)
    report = verify_connection(conn, module, order)
    payload = _connection_payload(conn, spec.variables)
    payload["defect_rows"] = [
        f"degree {d}: linearity {lin} flatness {flat}" for d, lin, flat in report.rows
    ]
    certification = {
        "statement": f"flat and linear through order {order}",
        "steps": [
            f"order {s.order_reached}: defect space dim {s.defect_space_dim}, "
            f"euler corrected {'no' if s.euler_correction_degree is None else 'at degree %d' % s.euler_correction_degree}, "
            f"implication verified {str(s.implication_verified).lower()}"
            for s in conn.steps
        ]
        or [],
        "images_membership": "re-verified exactly",
    }
    out = options.get("out")
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(render_document({"connection": _connection_payload(conn, spec.variables)}))
    return payload, certification


def _connection_payload(conn: LeviConnection, names) -> Dict:
    return {
        "variables": list(names),
        "truncation_order": conn.truncation_order,
        "certified_order": conn.certified_order,
        "semisimple_dimension": conn.semisimple.dim,
        "semisimple_structure": _structure_entries(conn.semisimple) or [],
        "images": _render_fields([j.field for j in conn.images], names) or [],
        "euler": conn.euler.field.render(names),
    }


def load_connection(path: str, module: FoliationModule) -> LeviConnection:
    from .report import parse_document

    with open(path, encoding="utf-8") as fh:
        tree = parse_document(fh.read())
    if "connection" not in tree:
        raise InputRejected("file does not contain a connection document")
    doc = tree["connection"]
    names = list(doc.get("variables", []))
    if len(names) != module.nvars:
        raise InputRejected("connection variables disagree with the spec")
    dim = int(doc["semisimple_dimension"])
    brackets = {}
    for entry in doc.get("semisimple_structure", []):
        head, _, tail = entry.partition("->")
        pair = head.strip().strip("[]")
        i, j = (int(p) for p in pair.split(","))
        values = [Fraction(v.strip()) for v in tail.strip().split(",")]
        brackets[(i - 1, j - 1)] = values
    algebra = LieAlgebra.from_brackets(dim, brackets)
    truncation = int(doc["truncation_order"])
    images = tuple(
        jet(parse_field(src, names), truncation) for src in doc.get("images", [])
    )
    euler = jet(parse_field(doc["euler"], names), truncation)
    return LeviConnection(
        isotropy=isotropy_algebra(module),
        semisimple=algebra,
        images=images,
        exact_images=tuple(i.field for i in images),
        euler=euler,
        certified_order=int(doc["certified_order"]),
        truncation_order=truncation,
    )


def cmd_radical_foliation(module, spec, options):
    order = int(options.get("order") or 4)
    conn = linearize(module, order)
    dec = radical_foliation(module, conn, order)
    payload = {
        "radical_generators": _render_fields(dec.radical_generators, spec.variables)
        or [],
        "graded_table": [
            f"degree {d}: module {m} section {s} radical {r} additive "
            f"{str(ok).lower()}"
            for d, m, s, r, ok in dec.graded_rows
        ],
        "truncated_table": [
            f"degree {d}: module {m} section {s} radical {r} additive "
            f"{str(ok).lower()}"
            for d, m, s, r, ok in dec.truncated_rows
        ],
        "invariance": dec.invariance_verified,
        "class_level_split": dec.class_level_split,
        "degraded": dec.degraded,
    }
    certification = {
        "statement": f"splitting tables exact through degree {order}",
        "invariance_method": "exact membership of image brackets in the kernel",
    }
    return payload, certification


def cmd_verify(module, spec, options):
    order = int(options.get("order") or 4)
    path = options.get("connection")
    if not path:
        raise InputRejected("verify requires --connection")
    conn = load_connection(path, module)
    report = verify_connection(conn, module, order)
    payload = {
        "rows": [
            f"degree {d}: linearity {lin} flatness {flat}"
            for d, lin, flat in report.rows
        ],
        "max_certified_order": (
            report.capped_at + 1
            if report.all_zero_below(report.capped_at + 1)
            else min(
                d for d, lin, flat in report.rows if lin != 0 or flat != 0
            )
        ),
        "capped_at": report.capped_at,
    }
    certification = {"degrees_checked": report.capped_at}
    return payload, certification


_COMMANDS = {
    "check-involutive": cmd_check_involutive,
    "isotropy": cmd_isotropy,
    "filtration": cmd_filtration,
    "linear-holonomy": cmd_linear_holonomy,
    "levi": cmd_levi,
    "artin-rees": cmd_artin_rees,
    "linearize": cmd_linearize,
    "radical-foliation": cmd_radical_foliation,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="singfol",
        description="Exact invariants and formal linearization of polynomial "
        "singular foliations at a fixed point.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in _COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("spec", help="foliation spec file")
        if name == "filtration":
            p.add_argument("--cap", type=int, default=None)
        if name == "artin-rees":
            p.add_argument("--max-degree", type=int, default=None, dest="max_degree")
        if name in {"linearize", "radical-foliation", "verify"}:
            p.add_argument("--order", type=int, default=4)
        if name == "linearize":
            p.add_argument("--out", default=None)
        if name == "verify":
            p.add_argument("--connection", default=None)
    return parser


def run_command(command: str, spec_text: str, options: Dict) -> str:
    """Execute a command on spec source text; returns the report text."""
    started = time.monotonic()
    spec = parse_spec(spec_text)
    module = _module_of(spec)
    payload, certification = _COMMANDS[command](module, spec, options)
    elapsed_ms = int((time.monotonic() - started) * 1000)
    option_block = {
        k: str(v) for k, v in sorted(options.items()) if v is not None
    } or {"none": "true"}
    doc = {
        "report": {
            "command": command,
            "input_hash": input_hash(spec.canonical_source()),
            "options": option_block,
            "payload": payload,
            "certification": certification,
        }
    }
    return render_document(doc) + f"timing_ms: {elapsed_ms}\n"


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    options = {
        k: v
        for k, v in vars(args).items()
        if k not in {"command", "spec"} and v is not None
    }
    try:
        with open(args.spec, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        print(f"error: cannot read {args.spec}: {exc}", file=sys.stderr)
        return 2
    try:
        sys.stdout.write(run_command(args.command, text, options))
    except (ParseError, InputRejected) as exc:
        print(f"rejected: {exc}", file=sys.stderr)
        return 2
    except InternalCheckError as exc:
        print(
            "internal invariant violation (please report this as a bug): "
            f"{exc}",
            file=sys.stderr,
        )
        return 3
    except SingfolError as exc:
        print(f"rejected: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
