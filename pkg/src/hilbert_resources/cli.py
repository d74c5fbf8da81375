"""Command-line front end: ``hra <command> [options]``.

Commands: dim, classify, solve, sweep, case-study, verify. Every command
produces one report (text or JSON); sweep and verify can also emit CSV.

Exit status: 0 success, 1 invalid input, 2 unreachable target, 3 internal
failure.
"""

from __future__ import annotations

import argparse
import io
import json
import logging
import math
import sys
from dataclasses import dataclass, field
from typing import Optional

from . import cases, counts, growth, oracle, solver
from .cases import CaseStudyReport as Report
from .cases import PhysicalConstants, Quantity
from .counts import Kind
from .errors import (
    CapExceeded,
    InvalidArgument,
    InvalidRegime,
    InvalidSpec,
    ResourceError,
    SpecParseError,
    SpecValidationError,
    UnreachableTarget,
)
from .specfile import compile_policy, growth_spec, load_document, sweep_spec, system_spec

logger = logging.getLogger("hilbert_resources")

COMMANDS = ("dim", "classify", "solve", "sweep", "case-study", "verify")
FORMATS = ("text", "json", "csv")
CSV_COMMANDS = ("sweep", "verify")

EXIT_OK, EXIT_INVALID, EXIT_UNREACHABLE, EXIT_INTERNAL = 0, 1, 2, 3
_JSON_SAFE_INT = 2**53

_VALIDATION_ERRORS = (
    InvalidSpec,
    InvalidArgument,
    InvalidRegime,
    SpecParseError,
    SpecValidationError,
    CapExceeded,
)


@dataclass
class RunConfig:
    command: str
    params: dict = field(default_factory=dict)
    spec_file: Optional[str] = None
    output_format: str = "text"
    constants_file: Optional[str] = None
    study: Optional[str] = None


@dataclass
class RunResult:
    status: int
    output: str = ""
    error: str = ""


# -- formatting -----------------------------------------------------------------


def format_number(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return f"{value:.5e}"
    return str(value)


def _json_value(value):
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int) and abs(value) > _JSON_SAFE_INT:
        return str(value)
    if isinstance(value, float) and not math.isfinite(value):
        return repr(value)
    return value


def _quantities_json(quantities: dict) -> dict:
    return {k: {"value": _json_value(q.value), "unit": q.unit} for k, q in quantities.items()}


def report_to_dict(report: Report) -> dict:
    doc = {
        "report": report.name,
        "inputs": _quantities_json(report.inputs),
        "outputs": _quantities_json(report.outputs),
        "relation": report.relation,
        "notes": list(report.notes),
    }
    if report.constants:
        doc["constants"] = _quantities_json(report.constants)
    return doc


def render_json(report: Report) -> str:
    return json.dumps(report_to_dict(report), indent=2, ensure_ascii=False) + "\n"


def render_text(report: Report) -> str:
    lines = [f"# {report.name}"]
    if report.relation:
        lines.append(f"relation: {report.relation}")
    for section, quantities in (("input", report.inputs), ("output", report.outputs)):
        for name, q in quantities.items():
            lines.append(f"{section} {name}: {format_number(q.value)} {q.unit}")
    for note in report.notes:
        lines.append(f"note: {note}")
    for name, q in report.constants.items():
        lines.append(f"constant {name}: {format_number(q.value)} {q.unit}")
    return "\n".join(lines) + "\n"


# -- parameter plumbing -------------------------------------------------------------


def _merge(config: RunConfig) -> dict:
    params = {}
    if config.spec_file:
        with open(config.spec_file, encoding="utf-8") as fp:
            params.update(load_document(fp.read()))
    for key, value in config.params.items():
        if key in params and params[key] != value:
            logger.warning("inline %s=%r overrides spec-file value %r", key, value, params[key])
        params[key] = value
    return params


def _require(params: dict, name: str):
    if params.get(name) is None:
        raise SpecValidationError(f"missing required parameter {name}")
    return params[name]


def _number(params: dict, name: str, default=None):
    value = params.get(name, default)
    if value is None:
        raise SpecValidationError(f"missing required parameter {name}")
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise SpecValidationError(f"parameter {name} must be a number, got {value!r}")
    return value


def _integer(params: dict, name: str, default=None) -> int:
    value = _number(params, name, default)
    if value != int(value):
        raise SpecValidationError(f"parameter {name} must be an integer, got {value!r}")
    return int(value)


def _target(params: dict):
    return _number(params, "N")


# -- commands -----------------------------------------------------------------------

_SIZE_KEYS = ("T", "A/h", "action_per_dof", "M", "L", "Lmax", "K", "D")


def cmd_dim(params: dict) -> Report:
    doc = {"kind": _require(params, "kind")}
    doc.update({k: params[k] for k in _SIZE_KEYS if params.get(k) is not None})
    spec = system_spec(doc)
    dim = spec.dimension()
    report = Report("dim", inputs={"kind": Quantity(spec.kind.value, "label")})
    for name, value in spec.params().items():
        unit = "h" if name == "action_per_dof" else "dimensionless"
        if name == "L" and spec.kind is Kind.BOSE_VARIABLE:
            name = "Lmax"
        report.inputs[name] = Quantity(value, unit)
    report.outputs["dimension"] = Quantity(dim.value, "dimensionless")
    report.outputs["log2"] = Quantity(dim.log2, "bits")
    if spec.kind is not Kind.DEGREES_OF_FREEDOM:
        report.outputs["asymptotic_log2"] = Quantity(counts.asymptotic_log2(spec), "bits")
        report.notes.append("asymptotic_log2 is the leading-order approximation, not the exact count")
    report.relation = {
        Kind.DEGREES_OF_FREEDOM: "(A/h)^T levels",
        Kind.BOSE_FIXED: "C(M+L-1, L)",
        Kind.BOSE_VARIABLE: "C(M+Lmax, Lmax)",
        Kind.FERMI: "C(M, L)",
        Kind.DISTINGUISHABLE: "C(K, L) D^L",
    }[spec.kind]
    return report


def cmd_classify(params: dict) -> Report:
    doc = {
        "family": params.get("family") or params.get("kind"),
        "parameter": params.get("dof") or params.get("parameter"),
        "growth": params.get("growth"),
        "D": params.get("D", 2),
    }
    if doc["family"] == "growth":
        raise SpecValidationError("growth spec needs a 'family' field")
    spec = growth_spec({k: v for k, v in doc.items() if v is not None})
    if spec.family == "dof":
        verdict = growth.classify_dof(spec.growth)
    else:
        verdict = growth.classify_fock(spec.family, spec.parameter, spec.growth, spec.internal_states)
    family = spec.family if spec.family == "dof" else spec.family.value
    report = Report(
        "classify",
        inputs={
            "family": Quantity(family, "label"),
            "growth": Quantity(str(spec.growth), "growth class"),
        },
    )
    if spec.parameter is not None:
        report.inputs["parameter"] = Quantity(spec.parameter.value, "label")
    if spec.family == growth.Family.DISTINGUISHABLE:
        report.inputs["D"] = Quantity(spec.internal_states, "dimensionless")
    report.outputs = {
        "case_label": Quantity(verdict.case_label, "label"),
        "verdict": Quantity(verdict.verdict.value, "label"),
        "complement_growth": Quantity(str(verdict.complement), "growth class"),
    }
    report.relation = verdict.narrative
    return report


def _requirement_report(req: solver.ResourceRequirement) -> Report:
    report = Report(
        "solve",
        inputs={
            "kind": Quantity(req.kind.value, "label"),
            "N": Quantity(req.target_qubits, "qubits"),
        },
    )
    for name, value in req.fixed.items():
        report.inputs[name] = Quantity(value, "dimensionless")
    report.outputs = {
        "solved_parameter": Quantity(req.solved_name, "label"),
        req.solved_name: Quantity(req.solved_value, "dimensionless"),
        "achieved_log2": Quantity(req.achieved_log2, "bits"),
    }
    report.relation = "smallest value whose exact dimension is >= 2^N"
    return report


def cmd_solve(params: dict) -> Report:
    kind = Kind.parse(str(_require(params, "kind")))
    N = _target(params)
    if kind is Kind.DEGREES_OF_FREEDOM:
        T = _integer(params, "T")
        report = Report(
            "solve",
            inputs={"kind": Quantity(kind.value, "label"), "N": Quantity(N, "qubits"), "T": Quantity(T, "dimensionless")},
        )
        report.outputs = {
            "action_per_dof": Quantity(solver.action_per_dof(N, T), "h"),
            "total_action": Quantity(solver.total_action(N, T), "h"),
        }
        report.relation = "A/h = 2^(N/T); total action T 2^(N/T)"
        return report
    modes_key = "K" if kind is Kind.DISTINGUISHABLE else "M"
    has_modes = params.get(modes_key) is not None
    particles_key = "Lmax" if params.get("Lmax") is not None else "L"
    has_particles = params.get(particles_key) is not None
    if has_modes == has_particles:
        raise SpecValidationError(f"solve needs exactly one of {modes_key} and L")
    D = _integer(params, "D") if kind is Kind.DISTINGUISHABLE else None
    if has_particles:
        req = solver.min_modes(kind, _integer(params, particles_key), N, D=D)
    elif kind is Kind.DISTINGUISHABLE:
        req = solver.min_particles(kind, N, K=_integer(params, "K"), D=D)
    else:
        req = solver.min_particles(kind, N, M=_integer(params, "M"))
    return _requirement_report(req)


def _n_list(value) -> list:
    if isinstance(value, list):
        return value
    if isinstance(value, (int, float)) and not isinstance(value, bool):
        return [value]
    raise SpecValidationError(f"sweep targets must be a list of numbers, got {value!r}")


def cmd_sweep(params: dict):
    doc = {
        "kind": "sweep",
        "model": params.get("model") or params.get("kind"),
        "parameter": params.get("parameter") or params.get("fix"),
        "policy": params.get("policy"),
        "N": _n_list(_require(params, "N")),
    }
    if params.get("D") is not None:
        doc["D"] = params["D"]
    if doc["model"] == "sweep":
        raise SpecValidationError("sweep spec needs a 'model' field")
    for key in ("model", "parameter", "policy"):
        if doc[key] is None:
            raise SpecValidationError(f"missing required parameter {key}")
    spec = sweep_spec(doc)
    rows = solver.sweep(spec.model, spec.parameter, compile_policy(spec.policy), spec.n_values, D=spec.D)
    report = Report(
        "sweep",
        inputs={
            "model": Quantity(spec.model.value, "label"),
            "parameter": Quantity(spec.parameter, "label"),
            "policy": Quantity(spec.policy, "expression in N"),
        },
        relation=f"{spec.parameter} = {spec.policy}; solve for {rows[0].solved_name}",
    )
    if spec.D is not None:
        report.inputs["D"] = Quantity(spec.D, "dimensionless")
    unit = "h" if spec.model is Kind.DEGREES_OF_FREEDOM else "dimensionless"
    for i, row in enumerate(rows):
        tag = f"row{i}"
        report.outputs[f"{tag}.N"] = Quantity(row.n, "qubits")
        for name, value in row.fixed.items():
            if name != "D":
                report.outputs[f"{tag}.{name}"] = Quantity(value, "dimensionless")
        report.outputs[f"{tag}.{row.solved_name}"] = Quantity(row.solved_value, unit)
        report.outputs[f"{tag}.log2dim"] = Quantity(row.log2dim, "bits")
        report.outputs[f"{tag}.status"] = Quantity(row.status, "label")
    return report, rows


def cmd_case_study(study: Optional[str], params: dict, constants: PhysicalConstants) -> Report:
    study = study or params.get("study")
    if study == "hydrogen":
        convention = params.get("convention", cases.ASYMPTOTIC)
        return cases.hydrogen_for_qubits(_target(params), convention, constants)
    if study == "nmr":
        return cases.nmr_report(
            _integer(params, "N"),
            alpha=params.get("alpha"),
            budget=params.get("budget"),
            constants=constants,
        )
    if study == "classical-wave":
        return cases.classical_wave_report(_target(params), params.get("lambda"), constants)
    if study == "decoherence":
        return cases.decoherence_report(_integer(params, "N"))
    if study == "unary-control":
        return cases.unary_control_report(_integer(params, "N"))
    raise SpecValidationError(
        f"unknown case study {study!r}; choose from {', '.join(cases.STUDIES)}"
    )


def cmd_verify(params: dict):
    maxM = _integer(params, "M", 6)
    maxL = _integer(params, "L", 6)
    families = params.get("families") or oracle.FAMILIES
    if isinstance(families, str):
        families = tuple(f.strip() for f in families.split(",") if f.strip())
    unknown = set(families) - set(oracle.ALL_FAMILIES)
    if unknown:
        raise SpecValidationError(f"unknown families: {', '.join(sorted(unknown))}")
    budget = oracle.Budget(max_configs=_integer(params, "enum_cap", oracle.DEFAULT_MAX_CONFIGS))
    result = oracle.verify_formulas(maxM, maxL, families, budget)
    report = Report(
        "verify",
        inputs={
            "maxM": Quantity(maxM, "dimensionless"),
            "maxL": Quantity(maxL, "dimensionless"),
            "families": Quantity(",".join(families), "label"),
            "enum_cap": Quantity(budget.max_configs, "configurations"),
        },
        outputs={
            "passed": Quantity(result.passed, "boolean"),
            "specs_checked": Quantity(result.specs_checked, "specs"),
            "configurations": Quantity(result.configurations, "configurations"),
        },
        relation="enumerated stream length == closed-form count on every grid point",
    )
    if result.mismatch is not None:
        report.outputs["first_mismatch"] = Quantity(result.mismatch.describe(), "label")
    return report, result


def _verify_csv(result: oracle.VerificationReport) -> str:
    import csv

    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["family", "params", "enumerated", "formula", "match"])
    for family, params, n, expected in result.rows:
        args = ";".join(f"{k}={v}" for k, v in params.items())
        writer.writerow([family, args, n, expected, "true" if n == expected else "false"])
    return buf.getvalue()


# -- dispatch ----------------------------------------------------------------------


def _execute(config: RunConfig) -> str:
    if config.command not in COMMANDS:
        raise SpecValidationError(f"unknown command {config.command!r}")
    if config.output_format not in FORMATS:
        raise SpecValidationError(f"unknown format {config.output_format!r}")
    if config.output_format == "csv" and config.command not in CSV_COMMANDS:
        raise SpecValidationError("csv output is only available for sweep and verify")
    params = _merge(config)
    csv_text = None
    if config.command == "dim":
        report = cmd_dim(params)
    elif config.command == "classify":
        report = cmd_classify(params)
    elif config.command == "solve":
        report = cmd_solve(params)
    elif config.command == "sweep":
        report, rows = cmd_sweep(params)
        buf = io.StringIO()
        solver.write_csv(rows, buf)
        csv_text = buf.getvalue()
    elif config.command == "verify":
        report, result = cmd_verify(params)
        csv_text = _verify_csv(result)
    else:
        constants = PhysicalConstants.load(config.constants_file)
        report = cmd_case_study(config.study, params, constants)
    if config.output_format == "csv":
        return csv_text
    if config.output_format == "json":
        return render_json(report)
    return render_text(report)


def run(config: RunConfig) -> RunResult:
    """Execute one command; never raises for input problems."""
    try:
        return RunResult(EXIT_OK, _execute(config))
    except UnreachableTarget as exc:
        return RunResult(EXIT_UNREACHABLE, error=f"unreachable-target: {exc}")
    except _VALIDATION_ERRORS as exc:
        return RunResult(EXIT_INVALID, error=f"invalid input: {exc}")
    except (OSError, ValueError) as exc:
        return RunResult(EXIT_INVALID, error=f"invalid input: {exc}")
    except ResourceError as exc:
        return RunResult(EXIT_INTERNAL, error=f"error: {exc}")
    except Exception as exc:  # pragma: no cover - last-resort guard
        logger.exception("internal failure")
        return RunResult(EXIT_INTERNAL, error=f"internal failure: {exc}")


# -- argument parsing --------------------------------------------------------------


def _number_arg(text: str):
    """An int if the literal is integral, else a float; comma lists become lists."""
    if "," in text:
        return [_number_arg(part) for part in text.split(",") if part.strip()]
    text = text.strip()
    try:
        return int(text)
    except ValueError:
        pass
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None


_PARAM_FLAGS = (
    # flag, dest key, type
    ("--kind", "kind", str),
    ("--M", "M", int),
    ("--L", "L", int),
    ("--K", "K", int),
    ("--D", "D", int),
    ("--T", "T", int),
    ("--action", "A/h", float),
    ("--alpha", "alpha", float),
    ("--lambda", "lambda", float),
    ("--budget", "budget", float),
    ("--growth", "growth", str),
    ("--dof", "dof", str),
    ("--fix", "fix", str),
    ("--policy", "policy", str),
    ("--convention", "convention", str),
    ("--families", "families", str),
    ("--enum-cap", "enum_cap", int),
)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    for flag, key, typ in _PARAM_FLAGS:
        common.add_argument(flag, dest="p:" + key, type=typ, default=None, metavar=key.upper())
    common.add_argument(
        "--N",
        "--target-qubits",
        dest="p:N",
        type=_number_arg,
        default=None,
        help="target equivalent qubits (comma-separated list for sweep)",
    )
    common.add_argument("--format", choices=FORMATS, default="text")
    common.add_argument("--spec", help="JSON spec file; inline flags override its values")
    common.add_argument("--constants", help="JSON file overriding physical constants")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(
        prog="hra",
        description="Hilbert-space resource analysis: dimensions, scalability verdicts, "
        "minimal resources and worked case studies.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("dim", parents=[common], help="exact and asymptotic dimension of a system")
    sub.add_parser("classify", parents=[common], help="scalability verdict for a growth policy")
    sub.add_parser("solve", parents=[common], help="minimal resource for a target qubit count")
    sub.add_parser("sweep", parents=[common], help="solve along a policy for a list of targets")
    case = sub.add_parser("case-study", parents=[common], help="worked physical examples")
    case.add_argument("study", choices=cases.STUDIES)
    sub.add_parser("verify", parents=[common], help="check formulas against brute-force enumeration")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    params = {
        key[2:]: value
        for key, value in vars(args).items()
        if key.startswith("p:") and value is not None
    }
    return RunConfig(
        command=args.command,
        params=params,
        spec_file=args.spec,
        output_format=args.format,
        constants_file=args.constants,
        study=getattr(args, "study", None),
    )


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s: %(message)s",
        stream=sys.stderr,
    )
    result = run(config_from_args(args))
    if result.output:
        sys.stdout.write(result.output)
    if result.error:
        sys.stderr.write(result.error + "\n")
    return result.status


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
