"""Worked physical examples: a hydrogen-atom register, NMR pseudopure states,
a classical-wave search beam, phase-space decoherence distances and the
control budget of a unary system.

Atomic quantities stay in hartree units (a0, e^2/a0, hbar/a0) until a
report converts them to SI.
"""

from __future__ import annotations

import dataclasses
import json
import math
import os
from dataclasses import dataclass, field
from typing import Optional

from .counts import meets_target
from .errors import InvalidArgument

CONSTANTS_ENV = "HRA_CONSTANTS"


@dataclass(frozen=True)
class PhysicalConstants:
    """Overridable constants; every report echoes the values it used."""

    bohr_radius: float = 5.29177e-11  # m
    hartree: float = 4.35974e-18  # J
    hbar: float = 1.054571817e-34  # J s
    sun_diameter: float = 1.3927e9  # m
    visible_universe_diameter: float = 8.8e26  # m
    wavelength: float = 5e-7  # m
    polarization: float = 2e-5
    molecule_count: float = 1e20

    UNITS = {
        "bohr_radius": "m",
        "hartree": "J",
        "hbar": "J s",
        "sun_diameter": "m",
        "visible_universe_diameter": "m",
        "wavelength": "m",
        "polarization": "dimensionless",
        "molecule_count": "dimensionless",
    }

    def __post_init__(self):
        for f in dataclasses.fields(self):
            value = getattr(self, f.name)
            if not (isinstance(value, (int, float)) and value > 0):
                raise InvalidArgument(f"constant {f.name} must be > 0, got {value!r}")

    @property
    def hbar_over_a0(self) -> float:
        """Atomic unit of momentum, kg m / s."""
        return self.hbar / self.bohr_radius

    @classmethod
    def from_mapping(cls, data: dict) -> "PhysicalConstants":
        known = {f.name for f in dataclasses.fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise InvalidArgument(f"unknown constants: {', '.join(sorted(unknown))}")
        return cls(**{k: float(v) for k, v in data.items()})

    @classmethod
    def load(cls, path: Optional[str] = None) -> "PhysicalConstants":
        """Defaults, overridden by ``path`` or else by the file named in $HRA_CONSTANTS."""
        path = path or os.environ.get(CONSTANTS_ENV)
        if not path:
            return cls()
        with open(path, encoding="utf-8") as fp:
            try:
                data = json.load(fp)
            except json.JSONDecodeError as exc:
                raise InvalidArgument(f"constants file {path}: {exc}") from None
        if not isinstance(data, dict):
            raise InvalidArgument(f"constants file {path} must hold a JSON object")
        return cls.from_mapping(data)

    def as_quantities(self) -> dict:
        return {
            f.name: Quantity(getattr(self, f.name), self.UNITS[f.name])
            for f in dataclasses.fields(self)
        }


DEFAULT_CONSTANTS = PhysicalConstants()


@dataclass(frozen=True)
class Quantity:
    value: object  # int or float
    unit: str = "dimensionless"


@dataclass
class CaseStudyReport:
    name: str
    inputs: dict = field(default_factory=dict)
    outputs: dict = field(default_factory=dict)
    relation: str = ""
    notes: list = field(default_factory=list)
    constants: dict = field(default_factory=dict)


# -- hydrogen ---------------------------------------------------------------


@dataclass(frozen=True)
class HydrogenState:
    n: int
    energy: float  # hartree
    radius: float  # a0
    momentum: float  # hbar / a0
    cumulative_dimension: int

    def radius_m(self, constants: PhysicalConstants = DEFAULT_CONSTANTS) -> float:
        return self.radius * constants.bohr_radius


def cumulative_dimension(n: int) -> int:
    """Bound states (spin ignored) with principal quantum number up to ``n``."""
    return n * (n + 1) * (2 * n + 1) // 6


def hydrogen_state(n: int) -> HydrogenState:
    if n < 1:
        raise InvalidArgument(f"principal quantum number must be >= 1, got {n}")
    return HydrogenState(n, -1.0 / (2 * n * n), float(n * n), 1.0 / n, cumulative_dimension(n))


def _min_shell(N: float) -> int:
    """Smallest n whose cumulative bound-state count reaches 2^N."""
    lo, hi = 1, 1
    while not meets_target(cumulative_dimension(hi), N):
        lo, hi = hi, 2 * hi
    if meets_target(cumulative_dimension(lo), N):
        return lo
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if meets_target(cumulative_dimension(mid), N):
            hi = mid
        else:
            lo = mid
    return hi


ASYMPTOTIC = "asymptotic"
EXACT_COUNT = "exact"


def hydrogen_for_qubits(
    N: float,
    convention: str = ASYMPTOTIC,
    constants: PhysicalConstants = DEFAULT_CONSTANTS,
) -> CaseStudyReport:
    """Atomic radius needed for a single hydrogen atom to span 2^N states.

    ``asymptotic`` uses r = 2^(2N/3) a0 from the n^3/3 scaling; ``exact``
    finds the smallest shell n whose cumulative count reaches 2^N and
    reports r = n^2 a0.
    """
    if N < 0:
        raise InvalidArgument(f"target qubits must be >= 0, got {N}")
    report = CaseStudyReport(
        "hydrogen",
        inputs={"N": Quantity(N, "qubits"), "convention": Quantity(convention, "label")},
        constants=constants.as_quantities(),
    )
    if convention == ASYMPTOTIC:
        radius_a0 = 2.0 ** (2.0 * N / 3.0)
        report.relation = "Bohr radius r_n = n^2 a0 with 2^N ~ n^3/3 ~ (r p / hbar)^3"
        report.notes.append("asymptotic scaling r ~ 2^(2N/3) a0, order-of-magnitude only")
    elif convention == EXACT_COUNT:
        n = _min_shell(N)
        radius_a0 = float(n) ** 2
        state = hydrogen_state(n)
        report.relation = "smallest n with n(n+1)(2n+1)/6 >= 2^N, r_n = n^2 a0"
        report.outputs["n"] = Quantity(n, "dimensionless")
        report.outputs["cumulative_dimension"] = Quantity(state.cumulative_dimension, "dimensionless")
        report.outputs["energy"] = Quantity(state.energy, "hartree")
        report.outputs["energy_J"] = Quantity(state.energy * constants.hartree, "J")
        report.outputs["momentum"] = Quantity(state.momentum, "hbar/a0")
    else:
        raise InvalidArgument(f"unknown hydrogen convention {convention!r}")
    radius_m = radius_a0 * constants.bohr_radius
    report.outputs["radius"] = Quantity(radius_a0, "a0")
    report.outputs["radius_km"] = Quantity(radius_m / 1e3, "km")
    report.outputs["sun_diameters"] = Quantity(radius_m / constants.sun_diameter, "dimensionless")
    report.notes.append("spin and continuum states ignored")
    return report


# -- NMR ----------------------------------------------------------------------


def _check_alpha(alpha: float) -> None:
    if not 0 < alpha <= 1:
        raise InvalidArgument(f"polarization must lie in (0, 1], got {alpha}")


@dataclass(frozen=True)
class PseudopureScaling:
    epsilon: float
    repetitions: float


def nmr_pseudopure(alpha: float, N: int) -> PseudopureScaling:
    """Signal fraction alpha N / 2^N of a pseudopure state, and the 1/eps^2 repetitions."""
    _check_alpha(alpha)
    if N < 1:
        raise InvalidArgument(f"qubit count must be >= 1, got {N}")
    eps = alpha * N / 2.0**N
    return PseudopureScaling(eps, 1.0 / (eps * eps))


def _log2_repetitions(alpha: float, N: int) -> float:
    return 2 * N - 2 * math.log2(alpha * N)


_NMR_SCAN_LIMIT = 100_000


def nmr_max_qubits(alpha: float, budget: float) -> int:
    """Largest N whose repetition count 2^(2N) / (alpha N)^2 fits in ``budget``.

    The repetition count is nondecreasing from N = 1 onward, so the scan stops
    at the first infeasible N. Returns 0 if even N = 1 is infeasible.
    """
    _check_alpha(alpha)
    if not budget >= 1:
        raise InvalidArgument(f"molecule budget must be >= 1, got {budget}")
    limit = math.log2(budget)
    best = 0
    for N in range(1, _NMR_SCAN_LIMIT):
        if _log2_repetitions(alpha, N) > limit:
            break
        best = N
    return best


def distillation_overhead(alpha: float) -> float:
    """Initial spins consumed per distilled pure qubit, ~1/alpha^2."""
    _check_alpha(alpha)
    return 1.0 / (alpha * alpha)


def nmr_report(
    N: int,
    alpha: Optional[float] = None,
    budget: Optional[float] = None,
    constants: PhysicalConstants = DEFAULT_CONSTANTS,
) -> CaseStudyReport:
    alpha = constants.polarization if alpha is None else alpha
    budget = constants.molecule_count if budget is None else budget
    scaling = nmr_pseudopure(alpha, N)
    return CaseStudyReport(
        "nmr",
        inputs={
            "N": Quantity(N, "qubits"),
            "alpha": Quantity(alpha, "dimensionless"),
            "budget": Quantity(budget, "molecules"),
        },
        outputs={
            "epsilon": Quantity(scaling.epsilon, "dimensionless"),
            "repetitions": Quantity(scaling.repetitions, "repetitions"),
            "max_qubits": Quantity(nmr_max_qubits(alpha, budget), "qubits"),
            "distillation_overhead": Quantity(distillation_overhead(alpha), "spins per pure qubit"),
        },
        relation="eps = alpha N / 2^N; repetitions = 1/eps^2 = 2^(2N) / (alpha N)^2",
        constants=constants.as_quantities(),
    )


# -- classical-wave search -----------------------------------------------------


def classical_wave_waist(N: float, wavelength: float) -> float:
    """Beam waist holding 2^N diffraction-limited transverse modes, (w / lambda)^2 = 2^N.

    This mode-counting model is a calibrated reconstruction (about 220
    qubits reach the size of the visible universe), not a derived optical
    result.
    """
    if N < 0:
        raise InvalidArgument(f"qubit count must be >= 0, got {N}")
    if not wavelength > 0:
        raise InvalidArgument(f"wavelength must be > 0, got {wavelength}")
    return wavelength * 2.0 ** (N / 2.0)


def min_qubits_for_waist(diameter: float, wavelength: float) -> int:
    """Smallest integer N whose waist reaches ``diameter``."""
    if not diameter > 0 or not wavelength > 0:
        raise InvalidArgument("diameter and wavelength must be > 0")
    N = max(0, math.ceil(2 * math.log2(diameter / wavelength)))
    # guard the ceil against log rounding on either side
    while N > 0 and classical_wave_waist(N - 1, wavelength) >= diameter:
        N -= 1
    while classical_wave_waist(N, wavelength) < diameter:
        N += 1
    return N


def classical_wave_report(
    N: float,
    wavelength: Optional[float] = None,
    constants: PhysicalConstants = DEFAULT_CONSTANTS,
) -> CaseStudyReport:
    wavelength = constants.wavelength if wavelength is None else wavelength
    waist = classical_wave_waist(N, wavelength)
    universe = constants.visible_universe_diameter
    return CaseStudyReport(
        "classical-wave",
        inputs={"N": Quantity(N, "qubits"), "lambda": Quantity(wavelength, "m")},
        outputs={
            "waist": Quantity(waist, "m"),
            "universe_fraction": Quantity(waist / universe, "dimensionless"),
            "qubits_at_universe_size": Quantity(min_qubits_for_waist(universe, wavelength), "qubits"),
        },
        relation="2^N transverse modes in (w / lambda)^2, so w = lambda 2^(N/2)",
        notes=["MODEL: calibrated mode-counting reconstruction, not a derived optical result"],
        constants=constants.as_quantities(),
    )


# -- decoherence distances ---------------------------------------------------------


@dataclass(frozen=True)
class DecoherenceComparison:
    compact_distance: float
    unary_distance: float
    rate_ratio: float


def decoherence_comparison(N: int) -> DecoherenceComparison:
    """Largest phase-space separations, qubit hypercube vs unary register.

    Rates scale as the squared distance, so the ratio is 2^N / (2N).
    """
    if N < 1:
        raise InvalidArgument(f"qubit count must be >= 1, got {N}")
    compact = math.sqrt(2 * N)
    unary = 2.0 ** (N / 2)
    return DecoherenceComparison(compact, unary, 2.0**N / (2 * N))


def decoherence_report(N: int) -> CaseStudyReport:
    d = decoherence_comparison(N)
    return CaseStudyReport(
        "decoherence",
        inputs={"N": Quantity(N, "qubits")},
        outputs={
            "compact_distance": Quantity(d.compact_distance, "cell side lengths"),
            "unary_distance": Quantity(d.unary_distance, "cell side lengths"),
            "rate_ratio": Quantity(d.rate_ratio, "dimensionless"),
        },
        relation="decoherence rate ~ (phase-space distance)^2; sqrt(2N) vs 2^(N/2)",
        notes=["crude distance-squared rate model, no open-system dynamics"],
    )


# -- unary control -------------------------------------------------------------


@dataclass(frozen=True)
class ControlCount:
    levels: int
    pairwise_couplings: int
    total: int


def unary_control_parameters(N: int) -> ControlCount:
    """Direct level couplings plus pairwise transitions in a 2^N-level system."""
    if N < 1:
        raise InvalidArgument(f"qubit count must be >= 1, got {N}")
    levels = 1 << N
    pairs = levels * (levels - 1) // 2
    return ControlCount(levels, pairs, levels + pairs)


def unary_control_report(N: int) -> CaseStudyReport:
    c = unary_control_parameters(N)
    return CaseStudyReport(
        "unary-control",
        inputs={"N": Quantity(N, "qubits")},
        outputs={
            "levels": Quantity(c.levels, "levels"),
            "pairwise_couplings": Quantity(c.pairwise_couplings, "couplings"),
            "total": Quantity(c.total, "couplings"),
            "total_over_4^N": Quantity(c.total / 4.0**N, "dimensionless"),
        },
        relation="2^N level couplings + C(2^N, 2) transitions ~ 2^(2N-1)",
        notes=["counts couplings, not real control parameters (phases not counted)"],
    )


STUDIES = ("hydrogen", "nmr", "classical-wave", "decoherence", "unary-control")
