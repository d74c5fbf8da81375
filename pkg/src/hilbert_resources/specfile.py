"""JSON spec documents and sweep policy expressions.

Every document is a JSON object with a top-level ``kind``:

* a statistics kind (``dof``, ``bose``, ``bose-variable``, ``fermi``,
  ``distinguishable``) plus its size parameters gives a ``SystemSpec``;
* ``growth`` gives a ``GrowthSpec`` for the classifier;
* ``sweep`` gives a ``SweepSpec``.
"""

from __future__ import annotations

import ast
import json
import math
import operator
from dataclasses import dataclass
from typing import Callable, Optional

from .counts import Kind, SystemSpec
from .errors import InvalidArgument, InvalidSpec, SpecParseError, SpecValidationError
from .growth import DofParameter, GrowthClass, parse_family
from .solver import solved_parameter


def load_document(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecParseError(f"malformed spec document: {exc}") from None
    if not isinstance(doc, dict):
        raise SpecParseError("spec document must be a JSON object")
    if "kind" not in doc:
        raise SpecParseError("spec document lacks a top-level 'kind' field")
    return doc


_INT_FIELDS = ("T", "L", "M", "K", "D")
_RENAMES = {"Lmax": "L", "A/h": "action_per_dof", "actionPerDof": "action_per_dof"}


def _as_int(name: str, value) -> int:
    if isinstance(value, bool) or not isinstance(value, (int, float)) or value != int(value):
        raise SpecValidationError(f"field {name} must be an integer, got {value!r}")
    return int(value)


def system_spec(doc: dict) -> SystemSpec:
    try:
        kind = Kind.parse(str(doc["kind"]))
    except InvalidSpec as exc:
        raise SpecValidationError(str(exc)) from None
    fields = {}
    for key, value in doc.items():
        if key == "kind":
            continue
        name = _RENAMES.get(key, key)
        if name in _INT_FIELDS:
            fields[name] = _as_int(key, value)
        elif name == "action_per_dof":
            if not isinstance(value, (int, float)) or isinstance(value, bool):
                raise SpecValidationError(f"field {key} must be a number, got {value!r}")
            fields[name] = float(value)
        else:
            raise SpecValidationError(f"unknown field {key!r} for kind {kind.value}")
    try:
        return SystemSpec(kind, **fields)
    except InvalidSpec as exc:
        raise SpecValidationError(str(exc)) from None


@dataclass(frozen=True)
class GrowthSpec:
    family: object  # growth.Family or "dof"
    parameter: Optional[DofParameter]
    growth: GrowthClass
    internal_states: int = 2


def growth_spec(doc: dict) -> GrowthSpec:
    try:
        family = parse_family(str(doc.get("family", "")))
        growth = GrowthClass.parse(str(doc.get("growth", "")))
        parameter = None
        if family != "dof":
            parameter = DofParameter(str(doc.get("parameter", "")).lower())
    except (InvalidSpec, InvalidArgument, ValueError) as exc:
        raise SpecValidationError(f"growth spec: {exc}") from None
    D = _as_int("D", doc.get("D", 2))
    if D < 1:
        raise SpecValidationError("field D must be >= 1")
    return GrowthSpec(family, parameter, growth, D)


@dataclass(frozen=True)
class SweepSpec:
    model: Kind
    parameter: str
    policy: str
    n_values: tuple
    D: Optional[int] = None

    def policy_fn(self) -> Callable[[float], float]:
        return compile_policy(self.policy)


def sweep_spec(doc: dict) -> SweepSpec:
    try:
        model = Kind.parse(str(doc.get("model", "")))
    except InvalidSpec as exc:
        raise SpecValidationError(str(exc)) from None
    parameter = str(doc.get("parameter", ""))
    policy = str(doc.get("policy", ""))
    n_values = doc.get("N")
    if not isinstance(n_values, list) or not n_values:
        raise SpecValidationError("sweep field N must be a non-empty list of targets")
    for n in n_values:
        if isinstance(n, bool) or not isinstance(n, (int, float)) or n < 0:
            raise SpecValidationError(f"sweep target {n!r} must be a number >= 0")
    if n_values != sorted(n_values):
        raise SpecValidationError("sweep targets N must be ascending")
    D = doc.get("D")
    if model is Kind.DISTINGUISHABLE:
        D = _as_int("D", 2 if D is None else D)
        if D < 1:
            raise SpecValidationError("field D must be >= 1")
    elif D is not None:
        raise SpecValidationError(f"field D does not apply to {model.value} sweeps")
    try:
        compile_policy(policy)
    except InvalidArgument as exc:
        raise SpecValidationError(str(exc)) from None
    try:
        solved_parameter(model, parameter)
    except InvalidSpec as exc:
        raise SpecValidationError(str(exc)) from None
    return SweepSpec(model, parameter, policy, tuple(n_values), D)


def parse_spec(text: str):
    """Parse and validate a spec document into the matching spec object."""
    doc = load_document(text)
    kind = str(doc["kind"]).lower()
    if kind == "growth":
        return growth_spec(doc)
    if kind == "sweep":
        return sweep_spec(doc)
    return system_spec(doc)


# -- policy expressions ------------------------------------------------------------

_BINOPS = {
    ast.Add: operator.add,
    ast.Sub: operator.sub,
    ast.Mult: operator.mul,
    ast.Div: operator.truediv,
    ast.FloorDiv: operator.floordiv,
    ast.Pow: operator.pow,
}
_UNARY = {ast.USub: operator.neg, ast.UAdd: operator.pos}
_FUNCS = {
    "log2": math.log2,
    "log": math.log,
    "sqrt": math.sqrt,
    "ceil": math.ceil,
    "floor": math.floor,
    "min": min,
    "max": max,
}


def compile_policy(expr: str) -> Callable[[float], float]:
    """Turn an arithmetic expression in ``N`` (e.g. ``"ceil(N / log2(N))"``) into a function.

    Only numbers, ``N``, the four operations, ``//``, ``**`` and the functions
    log2, log, sqrt, ceil, floor, min, max are accepted.
    """
    try:
        tree = ast.parse(expr.strip(), mode="eval")
    except SyntaxError:
        raise InvalidArgument(f"policy {expr!r} is not a valid expression") from None
    _check_node(tree.body, expr)

    def policy(N: float) -> float:
        return _eval(tree.body, N)

    policy.expr = expr
    return policy


def _check_node(node, expr):
    if isinstance(node, ast.Constant) and isinstance(node.value, (int, float)):
        return
    if isinstance(node, ast.Name) and node.id == "N":
        return
    if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
        _check_node(node.left, expr)
        _check_node(node.right, expr)
        return
    if isinstance(node, ast.UnaryOp) and type(node.op) in _UNARY:
        _check_node(node.operand, expr)
        return
    if (
        isinstance(node, ast.Call)
        and isinstance(node.func, ast.Name)
        and node.func.id in _FUNCS
        and not node.keywords
    ):
        for arg in node.args:
            _check_node(arg, expr)
        return
    raise InvalidArgument(f"policy {expr!r} uses an unsupported construct")


def _eval(node, N):
    if isinstance(node, ast.Constant):
        return node.value
    if isinstance(node, ast.Name):
        return N
    if isinstance(node, ast.BinOp):
        return _BINOPS[type(node.op)](_eval(node.left, N), _eval(node.right, N))
    if isinstance(node, ast.UnaryOp):
        return _UNARY[type(node.op)](_eval(node.operand, N))
    return _FUNCS[node.func.id](*(_eval(a, N) for a in node.args))


__all__ = [
    "GrowthSpec",
    "SweepSpec",
    "compile_policy",
    "load_document",
    "parse_spec",
    "system_spec",
    "growth_spec",
    "sweep_spec",
]
