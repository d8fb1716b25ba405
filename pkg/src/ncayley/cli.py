"""Command-line front end.

    ncayley --input problem.json [--mode analyze|import|oracle-check]
            [--precision BITS] [--max-conductor M] [--format json|text]
            [--emit-intermediates] [--spec-out FILE]

Exit codes: 0 ok, 2 schema error, 3 precondition failure, 4 internal assertion.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import logging
import sys
from typing import Optional

import jsonschema

from .cayley_import import (
    FiniteGroupTable,
    SubgroupEmbedding,
    TransversalError,
    reduce_to_ncayley,
    semidirect_index,
    semidirect_normal_subgroup,
    semidirect_product,
)
from .config import AnalysisConfig
from .ga_matrix import NCayleySpec
from .galois import ClosureError
from .groups import FiniteAbelianGroup
from .oracle import build_adjacency, char_poly_int
from .roots import RootFindingError
from .spectra import Analysis, analyze, full_char_poly

EXIT_OK, EXIT_SCHEMA, EXIT_PRECONDITION, EXIT_INTERNAL = 0, 2, 3, 4

log = logging.getLogger("ncayley")

_residues = {"type": "array", "items": {"type": "integer"}, "minItems": 1}
_element = {"oneOf": [{"type": "integer"}, _residues]}
_options = {
    "type": "object",
    "properties": {
        "precision_bits": {"type": "integer", "minimum": 64},
        "max_conductor": {"type": "integer", "minimum": 2},
    },
    "additionalProperties": False,
}

SPEC_SCHEMA = {
    "type": "object",
    "required": ["group", "connection_sets"],
    "properties": {
        "group": {
            "type": "object",
            "required": ["invariant_factors"],
            "properties": {
                "invariant_factors": {"type": "array", "items": {"type": "integer", "minimum": 2}, "minItems": 1}
            },
        },
        "n": {"type": "integer", "minimum": 1},
        "connection_sets": {
            "type": "object",
            "patternProperties": {r"^\s*\d+\s*,\s*\d+\s*$": {"type": "array", "items": _element}},
            "additionalProperties": False,
        },
        "options": _options,
    },
}

IMPORT_SCHEMA = {
    "type": "object",
    "required": ["group", "transversal", "connection_set"],
    "properties": {
        "group": {
            "oneOf": [
                {
                    "type": "object",
                    "required": ["semidirect"],
                    "properties": {
                        "semidirect": {
                            "type": "object",
                            "required": ["m", "k", "t"],
                            "properties": {k: {"type": "integer", "minimum": 1} for k in "mkt"},
                        }
                    },
                },
                {
                    "type": "object",
                    "required": ["table"],
                    "properties": {
                        "table": {"type": "array", "items": {"type": "array", "items": {"type": "integer"}}},
                        "labels": {"type": "array", "items": {"type": "string"}},
                    },
                },
            ]
        },
        "subgroup": {
            "type": "object",
            "required": ["invariant_factors"],
            "properties": {
                "invariant_factors": {"type": "array", "items": {"type": "integer", "minimum": 2}, "minItems": 1}
            },
        },
        "subgroup_injection": {"type": "array", "items": _element},
        "transversal": {"type": "array", "items": _element, "minItems": 1},
        "connection_set": {"type": "array", "items": _element},
        "options": _options,
    },
}


class SchemaError(ValueError):
    pass


class PreconditionError(ValueError):
    pass


def _validate(data, schema):
    try:
        jsonschema.validate(data, schema)
    except jsonschema.ValidationError as exc:
        path = "/".join(str(p) for p in exc.absolute_path) or "<root>"
        raise SchemaError(f"{path}: {exc.message}") from None


def parse_spec(data: dict) -> NCayleySpec:
    _validate(data, SPEC_SCHEMA)
    try:
        return NCayleySpec.from_json(data)
    except ValueError as exc:
        raise SchemaError(str(exc)) from None


def parse_import(data: dict):
    """Return (G0, embedding, transversal indices, S indices)."""
    _validate(data, IMPORT_SCHEMA)
    gspec = data["group"]
    try:
        if "semidirect" in gspec:
            m, k, t = (gspec["semidirect"][x] for x in "mkt")
            G0 = semidirect_product(m, k, t)

            def to_index(e):
                if isinstance(e, int):
                    if not 0 <= e < G0.order:
                        raise SchemaError(f"element index {e} out of range")
                    return e
                if len(e) != 2 or not (0 <= e[0] < m and 0 <= e[1] < k):
                    raise SchemaError(f"semidirect element {e} must be [a, x] with 0 <= a < {m}, 0 <= x < {k}")
                return semidirect_index(m, e[0], e[1])
        else:
            G0 = FiniteGroupTable(tuple(map(tuple, gspec["table"])), tuple(gspec["labels"]) if "labels" in gspec else None)

            def to_index(e):
                if not isinstance(e, int) or not 0 <= e < G0.order:
                    raise SchemaError(f"element {e} must be an index in [0, {G0.order})")
                return e
    except SchemaError:
        raise
    except ValueError as exc:
        raise PreconditionError(str(exc)) from None

    if "subgroup_injection" in data:
        injection = [to_index(e) for e in data["subgroup_injection"]]
        factors = data.get("subgroup", {}).get("invariant_factors", [len(injection)])
        try:
            emb = SubgroupEmbedding(FiniteAbelianGroup(tuple(factors)), tuple(injection), G0)
        except ValueError as exc:
            raise PreconditionError(f"subgroup embedding: {exc}") from None
    elif "semidirect" in gspec:
        emb = semidirect_normal_subgroup(G0, gspec["semidirect"]["m"])
    else:
        raise SchemaError("subgroup_injection is required for table-defined groups")
    transversal = [to_index(e) for e in data["transversal"]]
    S = [to_index(e) for e in data["connection_set"]]
    return G0, emb, transversal, S


def input_hash(data) -> str:
    canonical = json.dumps(data, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode()).hexdigest()


def _poly_json(p) -> list:
    """Coefficients high degree first; cyclotomic ones in serialized form."""
    out = []
    for c in reversed(p.coeffs):
        out.append(c.to_json() if hasattr(c, "to_json") else str(c))
    return out


def analysis_json(a: Analysis, emit_intermediates: bool) -> dict:
    out = {
        "report": a.report.to_json(),
        "stabilizer": list(a.stabilizer.members),
        "orbits": a.orbits.to_json(),
        "representatives": [list(v) for v in a.orbits.representatives],
        "fixed_field_degree": a.fixed_field.degree,
    }
    if emit_intermediates:
        out["intermediates"] = {
            "delta": [[e.to_json() for e in row] for row in a.delta.entries],
            "delta_text": a.delta.describe(),
            "betas": [b.to_json() for b in a.betas],
            "betas_text": [b.describe() for b in a.betas],
            "representative_char_polys": [
                {"representative": list(v), "coefficients": _poly_json(P)} for v, P in a.representative_polys.items()
            ],
            "char_poly": [str(c) for c in reversed(a.char_poly.coeffs)],
            "integer_eigenvalues": list(a.integrality.integer_roots),
            "fixed_field_generators": [g.to_json() for g in a.fixed_field.period_generators],
            "verified_eigenvalues": [c.to_json() for c in a.verified_eigenvalues],
        }
    return out


def analysis_text(a: Analysis) -> str:
    lines = []
    G = a.spec.group
    lines.append(f"group Z_{' x Z_'.join(map(str, G.invariant_factors))}, N = {G.order}, n = {a.spec.n}")
    lines.append("Delta =")
    for row in a.delta.describe():
        lines.append("  [ " + " | ".join(row) + " ]")
    for k, b in enumerate(a.betas[1:], start=1):
        lines.append(f"beta_{k} = {b.describe()}")
    lines.append(f"H = {{{', '.join(map(str, a.stabilizer.members))}}}")
    fmt = (lambda g: str(g[0])) if G.rank == 1 else (lambda g: str(list(g)))
    lines.append("orbits = " + ", ".join("{" + ", ".join(fmt(g) for g in o) + "}" for o in a.orbits.orbits))
    r = a.report
    lines.append(f"bounds: {r.lower_bound} <= deg <= {r.upper_bound}")
    lines.append(f"integral: {'yes' if r.integral else 'no'}")
    if r.certified_degree is None:
        lines.append("certified degree: none (bounds only)")
    else:
        lines.append(f"certified degree: {r.certified_degree} ({r.certification_method.value})")
    lines.append(f"splitting field: {r.splitting_field_note}")
    return "\n".join(lines)


def _config(args, data, N: int) -> AnalysisConfig:
    opts = data.get("options", {})
    precision = args.precision if args.precision is not None else opts.get("precision_bits", 256)
    max_conductor = args.max_conductor if args.max_conductor is not None else opts.get("max_conductor", 8 * N)
    try:
        return AnalysisConfig(precision_bits=precision, max_conductor=max_conductor)
    except ValueError as exc:
        raise SchemaError(str(exc)) from None


def run_analyze(data: dict, args) -> tuple:
    spec = parse_spec(data)
    config = _config(args, data, spec.group.order)
    a = analyze(spec, config)
    out = {"mode": "analyze", "input_sha256": input_hash(data)}
    out["options"] = {"precision_bits": config.precision_bits, "max_conductor": config.max_conductor}
    out.update(analysis_json(a, args.emit_intermediates))
    return out, analysis_text(a), EXIT_OK


def run_import(data: dict, args) -> tuple:
    G0, emb, transversal, S = parse_import(data)
    try:
        spec = reduce_to_ncayley(G0, emb, transversal, S)
    except (TransversalError, ValueError) as exc:
        raise PreconditionError(str(exc)) from None
    config = _config(args, data, spec.group.order)
    a = analyze(spec, config)
    reduced = spec.to_json()
    if args.spec_out:
        with open(args.spec_out, "w") as fh:
            json.dump(reduced, fh, indent=2, sort_keys=True)
            fh.write("\n")
    out = {"mode": "import", "input_sha256": input_hash(data)}
    out["options"] = {"precision_bits": config.precision_bits, "max_conductor": config.max_conductor}
    out["reduced_spec"] = reduced
    out.update(analysis_json(a, args.emit_intermediates))
    text = f"reduced to a {spec.n}-Cayley digraph over Z_{' x Z_'.join(map(str, spec.group.invariant_factors))}\n"
    return out, text + analysis_text(a), EXIT_OK


def run_oracle_check(data: dict, args) -> tuple:
    spec = parse_spec(data)
    oracle = char_poly_int(build_adjacency(spec))
    product = full_char_poly(spec)
    equal = oracle == product
    out = {
        "mode": "oracle-check",
        "input_sha256": input_hash(data),
        "equal": equal,
        "degree": oracle.degree,
    }
    text = f"oracle-check: {'equal' if equal else 'MISMATCH'} (degree {oracle.degree})"
    if not equal:
        out["oracle"] = [str(c) for c in reversed(oracle.coeffs)]
        out["character_product"] = [str(c) for c in reversed(product.coeffs)]
        text += f"\n  oracle:            {oracle}\n  character product: {product}"
    return out, text, EXIT_OK if equal else EXIT_INTERNAL


MODES = {"analyze": run_analyze, "import": run_import, "oracle-check": run_oracle_check}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ncayley", description="Splitting fields and algebraic degrees of n-Cayley digraphs.")
    p.add_argument("--input", required=True, help="JSON problem file ('-' for stdin)")
    p.add_argument("--mode", choices=sorted(MODES), default="analyze")
    p.add_argument("--precision", type=int, default=None, metavar="BITS")
    p.add_argument("--max-conductor", type=int, default=None, metavar="M")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--emit-intermediates", action="store_true")
    p.add_argument("--spec-out", default=None, metavar="FILE", help="import mode: write the reduced spec here")
    p.add_argument("-v", "--verbose", action="store_true")
    return p


def main(argv: Optional[list] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    try:
        if args.input == "-":
            data = json.load(sys.stdin)
        else:
            with open(args.input) as fh:
                data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: cannot read input: {exc}", file=sys.stderr)
        return EXIT_SCHEMA
    if not isinstance(data, dict):
        print("error: input must be a JSON object", file=sys.stderr)
        return EXIT_SCHEMA
    try:
        out, text, code = MODES[args.mode](data, args)
    except SchemaError as exc:
        print(f"schema error: {exc}", file=sys.stderr)
        return EXIT_SCHEMA
    except PreconditionError as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (ClosureError, AssertionError, ArithmeticError, RootFindingError) as exc:
        print(f"internal assertion failed: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    if args.format == "json":
        print(json.dumps(out, indent=2, sort_keys=True))
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
