"""Minimal physical resources for a target equivalent qubit count.

Every search is a bracket-then-bisect over a monotone integer function.
Far from the target the comparison happens in log space; within two bits
of it the exact big-integer count decides.
"""

from __future__ import annotations

import csv
import logging
import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Sequence

from . import counts
from .counts import Kind
from .errors import InvalidArgument, InvalidSpec, UnreachableTarget

logger = logging.getLogger(__name__)

SEARCH_CAP = 2**128
_EXACT_WINDOW = 2.0


@dataclass(frozen=True)
class ResourceRequirement:
    kind: Kind
    target_qubits: float
    fixed: dict
    solved_name: str
    solved_value: int
    achieved_log2: float
    lower_bound: int = 0

    def is_minimal(self) -> bool:
        """Re-check that the solved value meets the target and one less does not."""
        if not _meets(self.kind, self.fixed, self.solved_name, self.solved_value, self.target_qubits):
            return False
        below = self.solved_value - 1
        if below < self.lower_bound:
            return True
        return not _meets(self.kind, self.fixed, self.solved_name, below, self.target_qubits)


# -- action budget -----------------------------------------------------------


def action_per_dof(N: float, T: int) -> float:
    """Action per degree of freedom, in units of h, for ``T`` identical degrees of freedom."""
    if N < 0:
        raise InvalidArgument(f"target qubits must be >= 0, got {N}")
    if T < 1:
        raise InvalidArgument(f"degree-of-freedom count must be >= 1, got {T}")
    return 2.0 ** (N / T)


def total_action(N: float, T: int) -> float:
    return T * action_per_dof(N, T)


@dataclass(frozen=True)
class PhaseSpaceVolume:
    value: float
    log2: float


def phase_space_volume(actions: Iterable[float]) -> PhaseSpaceVolume:
    """Phase-space volume in units of h^T, the product of per-DOF actions."""
    actions = list(actions)
    for a in actions:
        if not a >= 1:
            raise InvalidArgument(f"each action must be >= 1 (in units of h), got {a}")
    log2 = math.fsum(math.log2(a) for a in actions)
    return PhaseSpaceVolume(math.prod(actions), log2)


# -- dimension as a function of one parameter --------------------------------


def _spec_args(kind: Kind, params: dict) -> tuple:
    if kind is Kind.DISTINGUISHABLE:
        return params["K"], params["D"], params["L"]
    return params["M"], params["L"]


_EXACT = {
    Kind.BOSE_FIXED: counts.bose_dimension,
    Kind.BOSE_VARIABLE: counts.bose_dimension_variable,
    Kind.FERMI: counts.fermi_dimension,
    Kind.DISTINGUISHABLE: counts.distinguishable_dimension,
}

_LOG2 = {
    Kind.BOSE_FIXED: counts.bose_log2,
    Kind.BOSE_VARIABLE: counts.bose_variable_log2,
    Kind.FERMI: counts.fermi_log2,
    Kind.DISTINGUISHABLE: counts.distinguishable_log2,
}


def _meets(kind: Kind, fixed: dict, name: str, value: int, N: float) -> bool:
    params = dict(fixed, **{name: value})
    args = _spec_args(kind, params)
    estimate = _LOG2[kind](*args)
    if estimate < N - _EXACT_WINDOW:
        return False
    if estimate > N + _EXACT_WINDOW:
        return True
    return counts.meets_target(_EXACT[kind](*args).value, N)


def _first_true(pred: Callable[[int], bool], lo: int, hi: Optional[int], what: str) -> int:
    """Smallest x in [lo, hi] with pred(x), for pred monotone false -> true.

    With ``hi`` None the upper end is found by doubling, up to SEARCH_CAP.
    """
    if pred(lo):
        return lo
    if hi is None:
        fail, probe = lo, max(2 * lo, lo + 1)
        while not pred(probe):
            if probe >= SEARCH_CAP:
                raise UnreachableTarget(f"{what}: no value up to 2^128 reaches the target")
            fail, probe = probe, min(2 * probe, SEARCH_CAP)
    else:
        if not pred(hi):
            raise UnreachableTarget(f"{what}: maximum dimension is below the target")
        fail, probe = lo, hi
    while probe - fail > 1:
        mid = (fail + probe) // 2
        if pred(mid):
            probe = mid
        else:
            fail = mid
    return probe


def _requirement(kind, N, fixed, name, value, lower) -> ResourceRequirement:
    params = dict(fixed, **{name: value})
    achieved = _EXACT[kind](*_spec_args(kind, params)).log2
    return ResourceRequirement(kind, N, dict(fixed), name, value, achieved, lower)


def _check_target(N: float) -> None:
    if not N >= 0:
        raise InvalidArgument(f"target qubits must be >= 0, got {N}")


def min_modes(kind, L: int, N: float, D: Optional[int] = None) -> ResourceRequirement:
    """Fewest modes (external states for the distinguishable family) reaching 2^N.

    ``L`` is the particle count, or the maximum particle count for
    ``bose-variable``. ``D`` is required for the distinguishable family.
    """
    kind = Kind.parse(kind) if isinstance(kind, str) else kind
    _check_target(N)
    if L < 0:
        raise InvalidSpec(f"particle count must be >= 0, got {L}")
    if kind is Kind.DEGREES_OF_FREEDOM:
        raise InvalidSpec("min_modes does not apply to degrees-of-freedom specs")
    if kind is Kind.DISTINGUISHABLE:
        if D is None or D < 1:
            raise InvalidSpec("distinguishable search needs D >= 1")
        fixed, name, lower = {"D": D, "L": L}, "K", max(1, L)
    else:
        fixed, name = {"L": L}, "M"
        lower = max(1, L) if kind is Kind.FERMI else 1
    if L == 0 and N > 0:
        raise UnreachableTarget(f"{kind.value}: with no particles the dimension is 1")
    what = f"min_modes({kind.value}, L={L}, N={N})"
    value = _first_true(lambda x: _meets(kind, fixed, name, x, N), lower, None, what)
    return _requirement(kind, N, fixed, name, value, lower)


def _unimodal_peak(K: int, D: int) -> int:
    # C(K, L) D^L grows while D (K - L) >= L + 1
    return min(K, (D * K - 1) // (D + 1) + 1)


def min_particles(
    kind,
    N: float,
    M: Optional[int] = None,
    K: Optional[int] = None,
    D: Optional[int] = None,
) -> ResourceRequirement:
    """Fewest particles (or smallest maximum particle number) reaching 2^N.

    Fermi and distinguishable counts are unimodal in ``L``; only the rising
    side is searched, and a peak below the target is unreachable.
    """
    kind = Kind.parse(kind) if isinstance(kind, str) else kind
    _check_target(N)
    if kind is Kind.DISTINGUISHABLE:
        if K is None or D is None or K < 1 or D < 1:
            raise InvalidSpec("distinguishable search needs K >= 1 and D >= 1")
        fixed, hi = {"K": K, "D": D}, _unimodal_peak(K, D)
    elif kind in (Kind.BOSE_FIXED, Kind.BOSE_VARIABLE, Kind.FERMI):
        if M is None or M < 1:
            raise InvalidSpec("mode count M must be >= 1")
        fixed = {"M": M}
        hi = M // 2 if kind is Kind.FERMI else None
        if kind is Kind.BOSE_FIXED and M == 1 and N > 0:
            raise UnreachableTarget("bose: a single mode holds L particles in one way only")
    else:
        raise InvalidSpec("min_particles does not apply to degrees-of-freedom specs")
    name = "L"
    args = ", ".join(f"{k}={v}" for k, v in fixed.items())
    what = f"min_particles({kind.value}, {args}, N={N})"
    value = _first_true(lambda x: _meets(kind, fixed, name, x, N), 0, hi, what)
    return _requirement(kind, N, fixed, name, value, 0)


# -- sweeps -------------------------------------------------------------------


@dataclass
class SweepRow:
    n: float
    fixed: dict
    solved_name: str
    solved_value: Optional[float] = None
    log2dim: Optional[float] = None
    status: str = "ok"
    requirement: Optional[ResourceRequirement] = field(default=None, repr=False)

    @property
    def ok(self) -> bool:
        return self.status == "ok"


_SOLVES = {
    # (kind, policy parameter) -> solved parameter
    (Kind.DEGREES_OF_FREEDOM, "T"): "A/h",
    (Kind.BOSE_FIXED, "L"): "M",
    (Kind.BOSE_FIXED, "M"): "L",
    (Kind.BOSE_VARIABLE, "L"): "M",
    (Kind.BOSE_VARIABLE, "M"): "L",
    (Kind.FERMI, "L"): "M",
    (Kind.FERMI, "M"): "L",
    (Kind.DISTINGUISHABLE, "L"): "K",
    (Kind.DISTINGUISHABLE, "K"): "L",
}


def solved_parameter(kind: Kind, parameter: str) -> str:
    try:
        return _SOLVES[(kind, parameter)]
    except KeyError:
        raise InvalidSpec(f"{kind.value} sweeps cannot fix parameter {parameter!r}") from None


def solve_point(kind: Kind, parameter: str, value: int, N: float, D: Optional[int] = None):
    """Solve for the complementary resource with ``parameter`` held at ``value``.

    Returns a float ``A/h`` for degrees-of-freedom models, otherwise a
    ``ResourceRequirement``.
    """
    solved_parameter(kind, parameter)
    if kind is Kind.DEGREES_OF_FREEDOM:
        return action_per_dof(N, value)
    if parameter == "L":
        return min_modes(kind, value, N, D=D)
    if kind is Kind.DISTINGUISHABLE:
        return min_particles(kind, N, K=value, D=D)
    return min_particles(kind, N, M=value)


def sweep(
    kind,
    parameter: str,
    policy: Callable[[float], float],
    n_values: Sequence[float],
    D: Optional[int] = None,
) -> list:
    """One row per target ``N``, with ``parameter`` set to ``policy(N)``.

    Policy values are rounded up to integers. A row that cannot be solved is
    kept and flagged; the sweep carries on.
    """
    kind = Kind.parse(kind) if isinstance(kind, str) else kind
    solved = solved_parameter(kind, parameter)
    if list(n_values) != sorted(n_values):
        raise InvalidArgument("sweep targets must be ascending")
    rows = []
    for n in n_values:
        value = max(1, math.ceil(policy(n))) if parameter != "L" else max(0, math.ceil(policy(n)))
        fixed = {parameter: value}
        if kind is Kind.DISTINGUISHABLE:
            fixed["D"] = D
        row = SweepRow(n, fixed, solved)
        try:
            result = solve_point(kind, parameter, value, n, D=D)
        except UnreachableTarget as exc:
            row.status = f"unreachable-target: {exc}"
            logger.info("sweep row N=%s flagged: %s", n, exc)
        else:
            if isinstance(result, ResourceRequirement):
                row.solved_value = result.solved_value
                row.log2dim = result.achieved_log2
                row.requirement = result
            else:
                row.solved_value = result
                row.log2dim = value * math.log2(result)
        rows.append(row)
    return rows


def write_csv(rows: Sequence[SweepRow], fp) -> None:
    """Write sweep rows as CSV: one header row, then one row per target."""
    writer = csv.writer(fp, lineterminator="\n")
    fixed_names = list(rows[0].fixed) if rows else []
    solved = rows[0].solved_name if rows else "solved"
    writer.writerow(["n", *fixed_names, solved, "log2dim", "status"])
    for row in rows:
        writer.writerow(
            [
                _cell(row.n),
                *(_cell(row.fixed[k]) for k in fixed_names),
                _cell(row.solved_value),
                _cell(row.log2dim),
                row.status,
            ]
        )


def _cell(x) -> str:
    if x is None:
        return ""
    if isinstance(x, int):
        return str(x)
    return repr(float(x))
