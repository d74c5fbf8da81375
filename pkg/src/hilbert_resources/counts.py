"""Hilbert-space dimension counting.

Exact counts are arbitrary-precision integers built from multiplicative
binomials (``math.comb``). Base-2 logarithms of counts too large for a
float come from log-beta, so callers can work with thousands of qubits
without ever materialising the integer.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional

import mpmath
from scipy.special import betaln

from .errors import InvalidArgument, InvalidSpec

__all__ = [
    "ExactCount",
    "Kind",
    "SystemSpec",
    "log2_binomial",
    "meets_target",
    "bose_dimension",
    "bose_dimension_variable",
    "fermi_dimension",
    "distinguishable_dimension",
    "dof_dimension",
    "dimension",
    "bose_log2",
    "bose_variable_log2",
    "fermi_log2",
    "distinguishable_log2",
    "asymptotic_log2",
    "mode_entropy",
    "binary_entropy",
    "bits_per_external_state",
    "equivalent_qubits",
]

# Largest bit length whose log2 is still computed straight from the integer.
_FLOAT_BITS = 1023
# Below this many factors, log2 of a binomial is taken from the exact integer.
_SMALL_K = 64


def _xlog2(x: float) -> float:
    # x*log2(x) with the 0*log 0 = 0 convention
    return 0.0 if x == 0 else x * math.log2(x)


def log2_binomial(n: int, k: int) -> float:
    """Return log2 C(n, k) without forming the binomial for large ``k``.

    Small ``min(k, n - k)`` goes through the exact integer; otherwise the
    log-beta identity ``C(n, k) = 1 / ((n + 1) B(n - k + 1, k + 1))`` is used,
    which stays accurate when ``n`` is many orders of magnitude above ``k``.
    """
    if k < 0 or k > n:
        raise InvalidArgument(f"binomial C({n}, {k}) undefined")
    k = min(k, n - k)
    if k == 0:
        return 0.0
    if k <= _SMALL_K:
        return math.log2(math.comb(n, k))
    nats = -math.log(n + 1) - float(betaln(float(n - k + 1), float(k + 1)))
    return nats / math.log(2)


@dataclass(frozen=True)
class ExactCount:
    """A nonnegative integer dimension together with its base-2 logarithm."""

    value: int
    log2: float

    @classmethod
    def of(cls, value: int, log2: Optional[float] = None) -> "ExactCount":
        if value < 1:
            raise InvalidArgument(f"dimension must be >= 1, got {value}")
        if log2 is None or value.bit_length() <= _FLOAT_BITS:
            log2 = math.log2(value)
        return cls(value, log2)

    def __int__(self) -> int:
        return self.value

    @property
    def qubits(self) -> float:
        return self.log2


def meets_target(count: int, n_qubits: float) -> bool:
    """Exact test of ``count >= 2**n_qubits`` for a real-valued target."""
    if n_qubits <= 0:
        return count >= 1
    if float(n_qubits).is_integer():
        return count >= 1 << int(n_qubits)
    # log2 of an integer is never a non-integer dyadic rational, so the
    # comparison at this precision cannot tie.
    with mpmath.workprec(count.bit_length() + 128):
        return mpmath.log(count, 2) >= mpmath.mpf(n_qubits)


# -- exact counts -----------------------------------------------------------


def _check_modes(M: int) -> None:
    if M < 1:
        raise InvalidSpec(f"mode count M must be >= 1, got {M}")


def _check_particles(L: int) -> None:
    if L < 0:
        raise InvalidSpec(f"particle count L must be >= 0, got {L}")


def bose_log2(M: int, L: int) -> float:
    _check_modes(M)
    _check_particles(L)
    return log2_binomial(M + L - 1, L)


def bose_variable_log2(M: int, Lmax: int) -> float:
    _check_modes(M)
    _check_particles(Lmax)
    return log2_binomial(M + Lmax, Lmax)


def fermi_log2(M: int, L: int) -> float:
    _check_modes(M)
    _check_particles(L)
    if L > M:
        raise InvalidSpec(f"fermi requires L ≤ M, got L={L}, M={M}")
    return log2_binomial(M, L)


def distinguishable_log2(K: int, D: int, L: int) -> float:
    _check_distinguishable(K, D, L)
    return log2_binomial(K, L) + L * math.log2(D)


def bose_dimension(M: int, L: int) -> ExactCount:
    """Number of ways to put ``L`` bosons into ``M`` modes, C(M+L-1, L)."""
    _check_modes(M)
    _check_particles(L)
    value = math.comb(M + L - 1, L)
    return ExactCount.of(value, _lazy(value, bose_log2, M, L))


def bose_dimension_variable(M: int, Lmax: int) -> ExactCount:
    """Bose count when anywhere from 0 to ``Lmax`` particles are allowed.

    Equals ``bose_dimension(M + 1, Lmax)``: an extra mode absorbs the
    particles that are absent.
    """
    _check_modes(M)
    _check_particles(Lmax)
    value = math.comb(M + Lmax, Lmax)
    return ExactCount.of(value, _lazy(value, bose_variable_log2, M, Lmax))


def fermi_dimension(M: int, L: int) -> ExactCount:
    _check_modes(M)
    _check_particles(L)
    if L > M:
        raise InvalidSpec(f"fermi requires L ≤ M, got L={L}, M={M}")
    value = math.comb(M, L)
    return ExactCount.of(value, _lazy(value, fermi_log2, M, L))


def _check_distinguishable(K: int, D: int, L: int) -> None:
    if K < 1:
        raise InvalidSpec(f"external-state count K must be >= 1, got {K}")
    if D < 1:
        raise InvalidSpec(f"internal-state count D must be >= 1, got {D}")
    _check_particles(L)
    if L > K:
        raise InvalidSpec(f"distinguishable requires L ≤ K, got L={L}, K={K}")


def distinguishable_dimension(K: int, D: int, L: int) -> ExactCount:
    """At most one particle per external state, each carrying one of ``D`` labels."""
    _check_distinguishable(K, D, L)
    value = math.comb(K, L) * D**L
    return ExactCount.of(value, _lazy(value, distinguishable_log2, K, D, L))


def dof_dimension(T: int, action_per_dof: float) -> ExactCount:
    """Tensor product of ``T`` degrees of freedom, each with ``floor(A/h)`` levels."""
    if T < 0:
        raise InvalidSpec(f"degree-of-freedom count T must be >= 0, got {T}")
    if action_per_dof < 1:
        raise InvalidSpec(f"action per degree of freedom must be >= 1, got {action_per_dof}")
    levels = math.floor(action_per_dof)
    value = levels**T
    return ExactCount.of(value, T * math.log2(levels))


def _lazy(value, log_fn, *args):
    # only pay for the log-beta path when the integer is outside float range
    if value.bit_length() <= _FLOAT_BITS:
        return None
    return log_fn(*args)


# -- system specs ----------------------------------------------------------


class Kind(str, enum.Enum):
    DEGREES_OF_FREEDOM = "dof"
    BOSE_FIXED = "bose"
    BOSE_VARIABLE = "bose-variable"
    FERMI = "fermi"
    DISTINGUISHABLE = "distinguishable"

    @classmethod
    def parse(cls, text: str) -> "Kind":
        key = text.strip().lower().replace("_", "-")
        aliases = {
            "degrees-of-freedom": "dof",
            "bose-fixed": "bose",
            "bosevariable": "bose-variable",
            "dist": "distinguishable",
        }
        key = aliases.get(key, key)
        try:
            return cls(key)
        except ValueError:
            raise InvalidSpec(f"unknown statistics kind {text!r}") from None


_FIELDS = {
    Kind.DEGREES_OF_FREEDOM: ("T", "action_per_dof"),
    Kind.BOSE_FIXED: ("M", "L"),
    Kind.BOSE_VARIABLE: ("M", "L"),
    Kind.FERMI: ("M", "L"),
    Kind.DISTINGUISHABLE: ("K", "D", "L"),
}


@dataclass(frozen=True)
class SystemSpec:
    """A statistics kind plus exactly the size parameters that kind uses.

    For ``BOSE_VARIABLE`` the field ``L`` holds the maximum particle number.
    """

    kind: Kind
    T: Optional[int] = None
    action_per_dof: Optional[float] = None
    L: Optional[int] = None
    M: Optional[int] = None
    K: Optional[int] = None
    D: Optional[int] = None

    def __post_init__(self):
        wanted = _FIELDS[self.kind]
        for name in ("T", "action_per_dof", "L", "M", "K", "D"):
            present = getattr(self, name) is not None
            if name in wanted and not present:
                raise InvalidSpec(f"{self.kind.value} spec requires field {name}")
            if name not in wanted and present:
                raise InvalidSpec(f"{self.kind.value} spec does not take field {name}")
        # dimension() runs every range check
        self.dimension()

    def params(self) -> dict:
        return {name: getattr(self, name) for name in _FIELDS[self.kind]}

    def dimension(self) -> ExactCount:
        return dimension(self)

    @property
    def modes(self) -> Optional[int]:
        if self.kind is Kind.DISTINGUISHABLE:
            return self.K * self.D
        return self.M


def dimension(spec: SystemSpec) -> ExactCount:
    k = spec.kind
    if k is Kind.DEGREES_OF_FREEDOM:
        return dof_dimension(spec.T, spec.action_per_dof)
    if k is Kind.BOSE_FIXED:
        return bose_dimension(spec.M, spec.L)
    if k is Kind.BOSE_VARIABLE:
        return bose_dimension_variable(spec.M, spec.L)
    if k is Kind.FERMI:
        return fermi_dimension(spec.M, spec.L)
    return distinguishable_dimension(spec.K, spec.D, spec.L)


# -- asymptotic forms and entropies -----------------------------------------


def asymptotic_log2(spec: SystemSpec) -> float:
    """Leading-order log2 of the dimension when both particles and modes are large.

    This is an approximation, kept separate from the exact counts on purpose.
    The variable-number bose count has the same leading form with ``Lmax``
    in place of ``L``.
    """
    k = spec.kind
    if k in (Kind.BOSE_FIXED, Kind.BOSE_VARIABLE):
        M, L = spec.M, spec.L
        if L == 0:
            return 0.0
        return M * math.log2(1 + L / M) + L * math.log2(1 + M / L)
    if k is Kind.FERMI:
        return _sparse_form(spec.M, spec.L, 1)
    if k is Kind.DISTINGUISHABLE:
        return _sparse_form(spec.K, spec.L, spec.D)
    raise InvalidSpec("degrees-of-freedom specs have no asymptotic Fock form")


def _sparse_form(K: int, L: int, D: int) -> float:
    # (K-L) log2(1/(1-L/K)) + L log2(K D / L)
    if L == 0:
        return 0.0
    holes = 0.0 if L == K else (K - L) * -math.log2(1 - L / K)
    return holes + L * math.log2(K * D / L)


def mode_entropy(mu: float) -> float:
    """Entropy in bits of a bosonic mode holding ``mu`` quanta on average."""
    if not mu > 0:
        raise InvalidArgument(f"mean occupation must be > 0, got {mu}")
    return _xlog2(1 + mu) - _xlog2(mu)


def binary_entropy(mu: float) -> float:
    if not 0 <= mu <= 1:
        raise InvalidArgument(f"filling fraction must lie in [0, 1], got {mu}")
    return -_xlog2(mu) - _xlog2(1 - mu)


def bits_per_external_state(mu: float, D: int) -> float:
    """Bits contributed per external state at filling ``mu`` with ``D`` internal labels."""
    if D < 1:
        raise InvalidArgument(f"internal-state count must be >= 1, got {D}")
    return binary_entropy(mu) + mu * math.log2(D)


def equivalent_qubits(dim) -> float:
    """log2 of a dimension (an ``ExactCount`` or a plain positive integer)."""
    if isinstance(dim, ExactCount):
        return dim.log2
    if dim < 1:
        raise InvalidArgument(f"dimension must be >= 1, got {dim}")
    return math.log2(dim)
