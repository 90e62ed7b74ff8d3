"""Command-line front end.

Every subcommand prints a result document: command echo, canonical input
form, structured outputs and the calibration constants in use.  `--format
json` emits deterministic JSON (stable key order, terms in canonical order);
the default is an aligned plain-text table.  Exit codes: 0 success, 2 parse
error, 3 precondition violation (including a missing calibration file),
4 internal assertion failure.

All commands except `calibrate` read `penrose-calibration.txt` from the
working directory and refuse to run without it, keeping the one convention
choice explicit across runs.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import calibration
from .cochain import ROOT_NAMES, CochainSection, g0_action, weight_of_monomial
from .dirac import apply_2dirac, graded_kernel_dim
from .expr import ParseError, parse_section, parse_spinor
from .hwv import hwv_complete
from .laurent import InternalCheckError, LaurentPoly, PreconditionError
from .repn import decompose_Mk
from .transform import penrose_transform


def _fraction_str(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def _calibration_fields(config: calibration.CalibrationConfig) -> dict:
    return {
        "epsilon": "+1" if config.epsilon > 0 else "-1",
        "clifford_norm": _fraction_str(config.clifford_norm),
    }


def _document(command: str, inputs: dict, result: dict, config) -> dict:
    doc = {"command": command, "input": inputs}
    if config is not None:
        doc["calibration"] = _calibration_fields(config)
    doc["result"] = result
    return doc


def _emit(doc: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(doc, indent=2))
        return
    print(f"command: {doc['command']}")
    for key, value in doc["input"].items():
        print(f"{key}: {value}")
    if "calibration" in doc:
        cal = doc["calibration"]
        print(f"calibration: epsilon = {cal['epsilon']}, clifford_norm = {cal['clifford_norm']}")
    _emit_table(doc["result"], indent="")


def _flat_cell(value) -> str | None:
    if isinstance(value, (str, int, bool)) or value is None:
        return str(value)
    if isinstance(value, list) and all(isinstance(v, (str, int)) for v in value):
        return "(" + ", ".join(str(v) for v in value) + ")"
    return None


def _emit_table(value, indent: str) -> None:
    if isinstance(value, dict):
        for key, item in value.items():
            if isinstance(item, (dict, list)):
                print(f"{indent}{key}:")
                _emit_table(item, indent + "  ")
            else:
                print(f"{indent}{key}: {item}")
    elif isinstance(value, list):
        rows = [
            {k: _flat_cell(v) for k, v in item.items()}
            if isinstance(item, dict)
            else None
            for item in value
        ]
        if value and all(
            row is not None and all(cell is not None for cell in row.values())
            and list(row) == list(rows[0])
            for row in rows
        ):
            headers = list(rows[0])
            widths = {
                h: max(len(h), *(len(row[h]) for row in rows)) for h in headers
            }
            print(indent + "  ".join(h.ljust(widths[h]) for h in headers).rstrip())
            for row in rows:
                print(indent + "  ".join(row[h].ljust(widths[h]) for h in headers).rstrip())
            return
        for n, item in enumerate(value):
            if isinstance(item, (dict, list)):
                if n:
                    print(f"{indent}-")
                _emit_table(item, indent)
            else:
                print(f"{indent}{item}")
    else:
        print(f"{indent}{value}")


def _spinor_strings(field) -> list[str]:
    return [p.to_string() for p in field.components]


# ------------------------------------------------------------------- commands
def _cmd_transform(args, config) -> dict:
    section = parse_section(args.section)
    image = penrose_transform(section)
    return _document(
        "transform",
        {"section": section.body.to_string()},
        {"spinor": _spinor_strings(image)},
        config,
    )


def _cmd_weight(args, config) -> dict:
    section = parse_section(args.section)
    rows = []
    for exps, coeff in section.body.sorted_terms():
        monomial = CochainSection(LaurentPoly.from_dict(section.body.alphabet, {exps: 1}))
        weight = weight_of_monomial(monomial)
        rows.append(
            {
                "monomial": monomial.body.to_string(),
                "coefficient": _fraction_str(coeff),
                "gl2": [_fraction_str(w) for w in weight.gl2],
                "gl4": list(weight.gl4),
            }
        )
    return _document(
        "weight", {"section": section.body.to_string()}, {"weights": rows}, config
    )


def _cmd_act(args, config) -> dict:
    if args.root not in ROOT_NAMES:
        raise PreconditionError(f"unknown root {args.root!r}; choose from {ROOT_NAMES}")
    section = parse_section(args.section)
    result = g0_action(args.root, section)
    return _document(
        "act",
        {"root": args.root, "section": section.body.to_string()},
        {"section": result.body.to_string()},
        config,
    )


def _cmd_check_monogenic(args, config) -> dict:
    spinor = parse_spinor(args.spinor)
    op = calibration.build_calibrated(config)
    first, second = apply_2dirac(op, spinor)
    monogenic = all(p.is_zero() for p in first + second)
    result = {"monogenic": monogenic}
    if not monogenic:
        result["residual_1"] = [p.to_string() for p in first]
        result["residual_2"] = [p.to_string() for p in second]
    return _document(
        "check-monogenic",
        {"spinor": [p.to_string() for p in spinor.components]},
        result,
        config,
    )


def _cmd_kernel_dim(args, config) -> dict:
    if args.degree < 0:
        raise PreconditionError("degree must be non-negative")
    op = calibration.build_calibrated(config)
    dim = graded_kernel_dim(op, args.degree)
    return _document(
        "kernel-dim", {"degree": args.degree}, {"dimension": dim}, config
    )


def _cmd_decompose(args, config) -> dict:
    rows = []
    total = 0
    for label, descriptor in decompose_Mk(args.degree):
        total += descriptor.dimension
        rows.append(
            {
                "a": label.a,
                "b": label.b,
                "l": label.l,
                "gl2_weight": [_fraction_str(w) for w in descriptor.gl2_weight],
                "sl4_weight": list(descriptor.sl4_weight),
                "dimension": descriptor.dimension,
            }
        )
    return _document(
        "decompose",
        {"degree": args.degree},
        {"summands": rows, "total_dimension": total},
        config,
    )


def _cmd_hwv(args, config) -> dict:
    section = hwv_complete((args.a, args.b, args.l))
    image = penrose_transform(section)
    return _document(
        "hwv",
        {"a": args.a, "b": args.b, "l": args.l},
        {"section": section.body.to_string(), "transform": _spinor_strings(image)},
        config,
    )


def _cmd_calibrate(args, _config) -> dict:
    config, attempts = calibration.find_calibration()
    op = calibration.build_calibrated(config)
    report = calibration.third_item_discrepancy(op)
    config_path = calibration.write_config(config)
    report_path = calibration.write_report(report)
    return _document(
        "calibrate",
        {},
        {
            "attempts": attempts,
            "chosen": _calibration_fields(config),
            "config_file": str(config_path),
            "report_file": str(report_path),
            "third_item_report": report,
        },
        config,
    )


_COMMANDS = {
    "transform": _cmd_transform,
    "weight": _cmd_weight,
    "act": _cmd_act,
    "check-monogenic": _cmd_check_monogenic,
    "kernel-dim": _cmd_kernel_dim,
    "decompose": _cmd_decompose,
    "hwv": _cmd_hwv,
    "calibrate": _cmd_calibrate,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="penrose",
        description="Exact twistor-transform engine for monogenic spinors.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, **arguments):
        p = sub.add_parser(name)
        for arg, options in arguments.items():
            p.add_argument(arg, **options)
        p.add_argument("--format", choices=("table", "json"), default="table")
        return p

    add("transform", **{"--section": {"required": True}})
    add("weight", **{"--section": {"required": True}})
    add("act", **{"--root": {"required": True}, "--section": {"required": True}})
    add("check-monogenic", **{"--spinor": {"required": True}})
    add("kernel-dim", **{"--degree": {"required": True, "type": int}})
    add("decompose", **{"--degree": {"required": True, "type": int}})
    add("hwv", **{"--a": {"required": True, "type": int}, "--b": {"required": True, "type": int}, "--l": {"required": True, "type": int}})
    add("calibrate")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    handler = _COMMANDS[args.command]
    try:
        if args.command == "calibrate":
            config = None
        else:
            config = calibration.read_config()
        doc = handler(args, config)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except InternalCheckError as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        return 4
    _emit(doc, args.format)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
