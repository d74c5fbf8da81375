"""Growth classes, scalability verdicts, and numerical cross-checks.

A growth class describes how one resource scales with the equivalent
qubit count N. The classifier maps the growth of whichever resource acts
as the effective number of degrees of freedom onto a verdict, together
with the implied growth of the complementary resource.

String forms: ``const``, ``log``, ``poly:<d>`` (d != 1), ``quasilinear:<p>``,
``linear:<c>``, ``exp:<b>``.
"""

from __future__ import annotations

import enum
import functools
import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np
from scipy.optimize import brentq

from . import solver
from .counts import Kind, bits_per_external_state, mode_entropy
from .errors import InvalidArgument, InvalidRegime, InvalidSpec, UnreachableTarget


class Category(enum.IntEnum):
    # value order is the eventual-domination order
    CONSTANT = 0
    LOGARITHMIC = 1
    SUBLINEAR_POLY = 2
    QUASILINEAR = 3
    LINEAR = 4
    SUPERLINEAR_POLY = 5
    EXPONENTIAL = 6


@functools.total_ordering
@dataclass(frozen=True)
class GrowthClass:
    """Asymptotic growth of a resource as a function of N.

    ``param`` is the exponent for the polynomial categories, the degree of
    the bounding polynomial P(N) for quasilinear (T ~ N / log P(N)), the
    coefficient for linear, and the base for exponential.
    """

    category: Category
    param: Optional[float] = None

    def __post_init__(self):
        c, p = self.category, self.param
        if c in (Category.CONSTANT, Category.LOGARITHMIC):
            if p is not None:
                raise InvalidArgument(f"{c.name.lower()} growth takes no parameter")
            return
        if p is None or not math.isfinite(p):
            raise InvalidArgument(f"{c.name.lower()} growth needs a finite parameter")
        ok = {
            Category.SUBLINEAR_POLY: 0 < p < 1,
            Category.QUASILINEAR: p > 0,
            Category.LINEAR: p > 0,
            Category.SUPERLINEAR_POLY: p > 1,
            Category.EXPONENTIAL: p > 1,
        }[c]
        if not ok:
            raise InvalidArgument(f"parameter {p} out of range for {c.name.lower()} growth")

    # constructors

    @classmethod
    def constant(cls):
        return cls(Category.CONSTANT)

    @classmethod
    def logarithmic(cls):
        return cls(Category.LOGARITHMIC)

    @classmethod
    def linear(cls, c: float = 1.0):
        return cls(Category.LINEAR, float(c))

    @classmethod
    def quasilinear(cls, p: float):
        # a constant P(N) is strict linear growth
        if p == 0:
            return cls.linear(1.0)
        return cls(Category.QUASILINEAR, float(p))

    @classmethod
    def exponential(cls, base: float = 2.0):
        return cls(Category.EXPONENTIAL, float(base))

    @classmethod
    def polynomial(cls, d: float):
        """N^d, routed to the sublinear, linear or superlinear category."""
        if d <= 0:
            return cls.constant()
        if d == 1:
            return cls.linear(1.0)
        return cls(Category.SUBLINEAR_POLY if d < 1 else Category.SUPERLINEAR_POLY, float(d))

    @classmethod
    def parse(cls, text: str) -> "GrowthClass":
        head, _, arg = text.strip().lower().partition(":")
        try:
            value = float(arg) if arg else None
        except ValueError:
            raise InvalidArgument(f"bad growth parameter in {text!r}") from None
        if head in ("const", "constant") and value is None:
            return cls.constant()
        if head == "log" and value is None:
            return cls.logarithmic()
        if head == "poly" and value is not None:
            if value == 1:
                raise InvalidArgument("poly:1 is written linear:1")
            return cls.polynomial(value)
        if head == "quasilinear" and value is not None:
            return cls.quasilinear(value)
        if head == "linear":
            return cls.linear(1.0 if value is None else value)
        if head == "exp":
            return cls.exponential(2.0 if value is None else value)
        raise InvalidArgument(f"unrecognised growth class {text!r}")

    def __str__(self) -> str:
        c = self.category
        if c is Category.CONSTANT:
            return "const"
        if c is Category.LOGARITHMIC:
            return "log"
        name = {
            Category.SUBLINEAR_POLY: "poly",
            Category.SUPERLINEAR_POLY: "poly",
            Category.QUASILINEAR: "quasilinear",
            Category.LINEAR: "linear",
            Category.EXPONENTIAL: "exp",
        }[c]
        return f"{name}:{self.param:g}"

    def _key(self):
        c, p = self.category, self.param
        if c is Category.QUASILINEAR:
            # N / (p log N): a larger degree grows more slowly
            return (int(c), -p)
        return (int(c), 0.0 if p is None else p)

    def __lt__(self, other):
        if not isinstance(other, GrowthClass):
            return NotImplemented
        return self._key() < other._key()

    @property
    def at_most_linear(self) -> bool:
        return self.category <= Category.LINEAR


def dominates(a: GrowthClass, b: GrowthClass) -> int:
    """+1 if ``a`` eventually dominates ``b``, -1 if ``b`` dominates ``a``, 0 if equal."""
    ka, kb = a._key(), b._key()
    return (ka > kb) - (ka < kb)


# -- verdicts -----------------------------------------------------------------


class Verdict(enum.Enum):
    NON_SCALABLE = "non-scalable"
    SCALABLE = "scalable"
    STRICTLY_SCALABLE = "strictly-scalable"
    MODEL_BREAKDOWN = "model-breakdown"

    @property
    def rank(self) -> Optional[int]:
        return {
            Verdict.NON_SCALABLE: 0,
            Verdict.SCALABLE: 1,
            Verdict.STRICTLY_SCALABLE: 2,
        }.get(self)


@dataclass(frozen=True)
class ScalabilityVerdict:
    case_label: str
    verdict: Verdict
    complement: GrowthClass
    narrative: str


class Family(str, enum.Enum):
    BOSE = "bose"
    FERMI = "fermi"
    DISTINGUISHABLE = "distinguishable"


class DofParameter(str, enum.Enum):
    PARTICLES = "particles"
    MODES = "modes"


_SUB_QUASILINEAR = (Category.CONSTANT, Category.LOGARITHMIC, Category.SUBLINEAR_POLY)
_EXP = GrowthClass.exponential(2.0)


def classify_dof(t_growth: GrowthClass) -> ScalabilityVerdict:
    """Verdict for T identical degrees of freedom whose count grows as ``t_growth``."""
    c = t_growth.category
    if c is Category.LINEAR:
        return ScalabilityVerdict(
            "dof-case-3",
            Verdict.STRICTLY_SCALABLE,
            GrowthClass.constant(),
            "T linear in N: A/h = 2^(N/T) stays a fixed qudit dimension",
        )
    if c is Category.QUASILINEAR:
        return ScalabilityVerdict(
            "dof-case-1",
            Verdict.SCALABLE,
            GrowthClass.polynomial(t_growth.param),
            f"T ~ N / log P(N): A/h ~ P(N), polynomial of degree {t_growth.param:g}",
        )
    if c in _SUB_QUASILINEAR:
        return ScalabilityVerdict(
            "dof-case-1",
            Verdict.NON_SCALABLE,
            _EXP,
            "T slower than quasilinear: A/h = 2^(N/T) grows exponentially",
        )
    return ScalabilityVerdict(
        "dof-case-2",
        Verdict.MODEL_BREAKDOWN,
        GrowthClass.constant(),
        "T faster than linear: A/h tends to 1, count field excitations in the Fock model instead",
    )


def _solve_increasing(f: Callable[[float], float], target: float, lo: float, hi: float) -> float:
    return brentq(lambda x: f(x) - target, lo, hi, xtol=1e-14, rtol=1e-14)


def linear_partner(
    family: Family, parameter: DofParameter, c: float, internal_states: int = 2
) -> float:
    """Coefficient of the complementary resource when the given one is ``c * N``.

    Solves the constant-filling relations, e.g. N = M S(mu) with L = mu M
    for bosons. Raises ``InvalidRegime`` when modes grow too slowly to hold
    N bits under L <= M (or L <= K).
    """
    family, parameter = Family(family), DofParameter(parameter)
    if family is Family.BOSE:
        # either side: x solves S(x) = 1/c, partner = c * x
        x = _solve_increasing(mode_entropy, 1.0 / c, 1e-15, 1e15)
        return c * x
    D = 1 if family is Family.FERMI else internal_states
    per_site = lambda mu: bits_per_external_state(mu, D)  # noqa: E731
    if parameter is DofParameter.PARTICLES:
        # L = c N = mu K and N = K h(mu), so c = mu / h(mu), increasing in mu
        full = per_site(1.0)
        if full > 0 and c >= 1.0 / full:
            # every site filled already supplies the bits: K = L
            return c
        mu = _solve_increasing(lambda m: m / per_site(m), c, 1e-15, 1.0 - 1e-15)
        return c / mu
    # K = c N: need h(mu) = 1/c, and h peaks at mu = D / (D + 1)
    peak = D / (D + 1)
    if 1.0 / c > per_site(peak) * (1 + 1e-12):
        raise InvalidRegime(
            f"{family.value}: modes growing as {c:g} N cannot hold N bits with L <= M"
        )
    if 1.0 / c >= per_site(peak):
        mu = peak
    else:
        mu = _solve_increasing(per_site, 1.0 / c, 1e-15, peak)
    return c * mu


_LABELS = {
    Family.BOSE: {
        (DofParameter.PARTICLES, "const"): "bose-1",
        (DofParameter.MODES, "const"): "bose-2",
        (DofParameter.PARTICLES, "sub"): "bose-3(i)",
        (DofParameter.MODES, "sub"): "bose-3(ii)",
        (DofParameter.PARTICLES, "linear"): "bose-3(iii)",
        (DofParameter.MODES, "linear"): "bose-3(iii)",
    },
    Family.FERMI: {
        (DofParameter.PARTICLES, "const"): "fermi-1",
        (DofParameter.PARTICLES, "sub"): "fermi-2(i)",
        (DofParameter.PARTICLES, "linear"): "fermi-2(ii)",
        (DofParameter.MODES, "linear"): "fermi-2(ii)",
    },
    Family.DISTINGUISHABLE: {
        (DofParameter.PARTICLES, "const"): "dist-1",
        (DofParameter.PARTICLES, "sub"): "dist-2(i)",
        (DofParameter.PARTICLES, "linear"): "dist-2(ii)",
        (DofParameter.MODES, "linear"): "dist-2(ii)",
    },
}

_NAMES = {
    Family.BOSE: {DofParameter.PARTICLES: ("L", "M"), DofParameter.MODES: ("M", "L")},
    Family.FERMI: {DofParameter.PARTICLES: ("L", "M"), DofParameter.MODES: ("M", "L")},
    Family.DISTINGUISHABLE: {DofParameter.PARTICLES: ("L", "K"), DofParameter.MODES: ("K", "L")},
}


def classify_fock(
    family,
    parameter,
    growth: GrowthClass,
    internal_states: int = 2,
) -> ScalabilityVerdict:
    """Verdict for a Fock-space architecture given the growth of one resource.

    ``parameter`` names the resource whose growth is given: particles (L) or
    modes (M, or external states K for the distinguishable family). For
    fermions and distinguishable particles the modes may not grow so slowly
    that L <= M would be violated; that raises ``InvalidRegime``.
    """
    family = Family(family)
    parameter = DofParameter(parameter)
    labels = _LABELS[family]
    own, other = _NAMES[family][parameter]
    c = growth.category
    sparse = family is not Family.BOSE

    if sparse and parameter is DofParameter.MODES and c < Category.LINEAR:
        raise InvalidRegime(
            f"{family.value}: {own} growing as {growth} cannot hold N bits while L <= {own}"
        )
    if c > Category.LINEAR:
        return ScalabilityVerdict(
            f"{family.value}-out-of-table",
            Verdict.MODEL_BREAKDOWN,
            GrowthClass.constant(),
            f"{own} growing faster than linearly is outside the tabulated regimes",
        )
    if c is Category.LINEAR:
        partner = linear_partner(family, parameter, growth.param, internal_states)
        return ScalabilityVerdict(
            labels[(parameter, "linear")],
            Verdict.STRICTLY_SCALABLE,
            GrowthClass.linear(partner),
            f"{own} and {other} both linear in N at constant filling",
        )
    if c is Category.CONSTANT:
        key = (parameter, "const")
        return ScalabilityVerdict(
            labels[key],
            Verdict.NON_SCALABLE,
            _EXP,
            f"{own} fixed: 2^N ~ {other}^{own}/{own}!, so {other} grows exponentially",
        )
    key = (parameter, "sub")
    if c is Category.QUASILINEAR:
        return ScalabilityVerdict(
            labels[key],
            Verdict.SCALABLE,
            GrowthClass.polynomial(growth.param + 1),
            f"{own} ~ N / log P(N): {other} ~ {own} 2^(N/{own}) ~ N P(N) / log P(N)",
        )
    return ScalabilityVerdict(
        labels[key],
        Verdict.NON_SCALABLE,
        _EXP,
        f"{own} slower than quasilinear: {other} ~ {own} 2^(N/{own}) grows exponentially",
    )


# -- empirical cross-check ----------------------------------------------------

R2_THRESHOLD = 0.99
MIN_POINTS = 4
# fitted log-log slope accepted as linear growth
LINEAR_SLOPE_BAND = (0.8, 1.2)


def _r2(x: np.ndarray, y: np.ndarray) -> tuple:
    slope, intercept = np.polyfit(x, y, 1)
    resid = y - (slope * x + intercept)
    ss_tot = float(np.sum((y - y.mean()) ** 2))
    if ss_tot == 0:
        return float(slope), 1.0
    return float(slope), 1.0 - float(np.sum(resid**2)) / ss_tot


@dataclass
class GrowthFit:
    kind: str  # "constant", "exponential", "polynomial", "undetermined"
    exp_r2: float
    poly_r2: float
    exponent: float


def fit_growth(n_values: Sequence[float], measured: Sequence[float]) -> GrowthFit:
    """Discriminate exponential from polynomial growth of a positive sequence.

    log(value) linear in N means exponential, linear in log N means
    polynomial; the better fit wins if it clears R^2 >= 0.99.
    """
    if len(n_values) < MIN_POINTS:
        raise InvalidArgument(f"need at least {MIN_POINTS} points to fit growth")
    n = np.asarray(n_values, dtype=float)
    y = np.log(np.asarray(measured, dtype=float))
    if np.ptp(y) <= 1e-9 * max(1.0, float(np.abs(y).max())):
        return GrowthFit("constant", 1.0, 1.0, 0.0)
    _, exp_r2 = _r2(n, y)
    exponent, poly_r2 = _r2(np.log(n), y)
    if exp_r2 >= R2_THRESHOLD and exp_r2 > poly_r2:
        kind = "exponential"
    elif poly_r2 >= R2_THRESHOLD:
        kind = "polynomial"
    else:
        kind = "undetermined"
    return GrowthFit(kind, exp_r2, poly_r2, exponent)


@dataclass
class EmpiricalReport:
    symbolic: ScalabilityVerdict
    n_values: list
    dof_values: list
    measured: list
    measured_name: str
    fit: GrowthFit
    agrees: bool


def _agrees(verdict: Verdict, fit: GrowthFit) -> bool:
    if verdict is Verdict.NON_SCALABLE:
        return fit.kind == "exponential"
    if verdict is Verdict.SCALABLE:
        return fit.kind in ("polynomial", "constant")
    if verdict is Verdict.STRICTLY_SCALABLE:
        lo, hi = LINEAR_SLOPE_BAND
        return fit.kind == "constant" or (fit.kind == "polynomial" and lo <= fit.exponent <= hi)
    return False


_SOLVER_KIND = {
    Family.BOSE: Kind.BOSE_FIXED,
    Family.FERMI: Kind.FERMI,
    Family.DISTINGUISHABLE: Kind.DISTINGUISHABLE,
}


def empirical_check(
    family,
    parameter,
    dof_function: Callable[[float], float],
    n_values: Sequence[float],
    declared: GrowthClass,
    internal_states: int = 2,
) -> EmpiricalReport:
    """Solve for the complementary resource along a policy and compare with the verdict.

    ``family`` may also be ``"dof"`` (``parameter`` is then ignored and the
    policy gives T). ``declared`` is the growth class the policy is claimed
    to have; the symbolic verdict comes from it.
    """
    n_values = list(n_values)
    if n_values != sorted(n_values):
        raise InvalidArgument("n_values must be ascending")
    if family in ("dof", Kind.DEGREES_OF_FREEDOM):
        symbolic = classify_dof(declared)
        kind, param = Kind.DEGREES_OF_FREEDOM, "T"
    else:
        family = Family(family)
        parameter = DofParameter(parameter)
        symbolic = classify_fock(family, parameter, declared, internal_states)
        kind = _SOLVER_KIND[family]
        if parameter is DofParameter.PARTICLES:
            param = "L"
        else:
            param = "K" if family is Family.DISTINGUISHABLE else "M"
    D = internal_states if kind is Kind.DISTINGUISHABLE else None
    rows = solver.sweep(kind, param, dof_function, n_values, D=D)
    bad = [r for r in rows if not r.ok]
    if bad:
        raise UnreachableTarget(bad[0].status)
    measured = [float(r.solved_value) for r in rows]
    fit = fit_growth(n_values, measured)
    return EmpiricalReport(
        symbolic,
        n_values,
        [r.fixed[param] for r in rows],
        measured,
        rows[0].solved_name,
        fit,
        _agrees(symbolic.verdict, fit),
    )


def parse_family(text: str):
    key = text.strip().lower()
    if key in ("dof", "degrees-of-freedom"):
        return "dof"
    if key in ("bose", "bose-fixed"):
        return Family.BOSE
    if key == "fermi":
        return Family.FERMI
    if key in ("dist", "distinguishable"):
        return Family.DISTINGUISHABLE
    raise InvalidSpec(f"unknown family {text!r}")
