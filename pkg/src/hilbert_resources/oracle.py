"""Brute-force enumeration of Fock configurations for small systems.

Every stream is a generator, so memory stays constant however many
configurations are produced. Streams come out in lexicographic order of
their ordering key:

* bose and fermi: the sorted tuple of mode indices occupied by each
  particle, so ``(2, 0), (1, 1), (0, 2)`` for two bosons in two modes;
* distinguishable: the pair (occupied sites, internal labels).

The enumeration here deliberately avoids ``math.comb`` and the formulas in
:mod:`hilbert_resources.counts`; it is the independent check on them. The
budget guard is the one exception, since it only decides whether to run.
"""

from __future__ import annotations

import collections
import itertools
import math
from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional

from . import counts
from .errors import CapExceeded, InvalidSpec

DEFAULT_MAX_CONFIGS = 10**7
DEFAULT_MAX_SIZE = 40


@dataclass(frozen=True)
class Budget:
    """Limits on a single enumeration call.

    ``max_size`` bounds modes + particles (sites + particles for the
    distinguishable family); ``max_configs`` bounds the stream length.
    """

    max_configs: int = DEFAULT_MAX_CONFIGS
    max_size: int = DEFAULT_MAX_SIZE

    def check(self, size: int, estimate: int, what: str) -> None:
        if size > self.max_size:
            raise CapExceeded(f"{what}: size {size} exceeds enumeration cap {self.max_size}")
        if estimate > self.max_configs:
            raise CapExceeded(
                f"{what}: {estimate} configurations exceed budget {self.max_configs}"
            )


DEFAULT_BUDGET = Budget()


@dataclass(frozen=True)
class Occupation:
    """One Fock configuration.

    ``counts[i]`` is the number of particles in mode ``i`` (external state
    ``i`` for the distinguishable family). ``labels`` holds the internal
    label of each occupied external state, in site order, and is ``None``
    for bose and fermi configurations.
    """

    counts: tuple
    labels: Optional[tuple] = None

    @property
    def total(self) -> int:
        return sum(self.counts)

    def key(self) -> tuple:
        modes = tuple(i for i, c in enumerate(self.counts) for _ in range(c))
        if self.labels is None:
            return modes
        return (modes, self.labels)


def _from_modes(modes: tuple, M: int) -> tuple:
    occ = [0] * M
    for m in modes:
        occ[m] += 1
    return tuple(occ)


# -- raw streams: bare tuples, used for fast counting -----------------------


def _raw_bose(M: int, L: int) -> Iterator[tuple]:
    return itertools.combinations_with_replacement(range(M), L)


def _raw_fermi(M: int, L: int) -> Iterator[tuple]:
    return itertools.combinations(range(M), L)


def _raw_distinguishable(K: int, D: int, L: int) -> Iterator[tuple]:
    # (sites, labels) pairs; the inner pairing stays in C for speed
    return itertools.chain.from_iterable(
        zip(itertools.repeat(sites), itertools.product(range(D), repeat=L))
        for sites in itertools.combinations(range(K), L)
    )


def _raw_bose_variable(M: int, Lmax: int) -> Iterator[tuple]:
    return itertools.chain.from_iterable(_raw_bose(M, ell) for ell in range(Lmax + 1))


# -- guards ----------------------------------------------------------------


def _guard_bose(M, L, budget):
    if M < 1 or L < 0:
        raise InvalidSpec(f"bose enumeration needs M >= 1 and L >= 0, got M={M}, L={L}")
    budget.check(M + L, math.comb(M + L - 1, L), f"bose(M={M}, L={L})")


def _guard_fermi(M, L, budget):
    if M < 1 or L < 0:
        raise InvalidSpec(f"fermi enumeration needs M >= 1 and L >= 0, got M={M}, L={L}")
    if L > M:
        raise InvalidSpec(f"fermi requires L ≤ M, got L={L}, M={M}")
    budget.check(M + L, math.comb(M, L), f"fermi(M={M}, L={L})")


def _guard_distinguishable(K, D, L, budget):
    if K < 1 or D < 1 or L < 0:
        raise InvalidSpec(f"distinguishable enumeration needs K, D >= 1 and L >= 0")
    if L > K:
        raise InvalidSpec(f"distinguishable requires L ≤ K, got L={L}, K={K}")
    budget.check(K + L, math.comb(K, L) * D**L, f"distinguishable(K={K}, D={D}, L={L})")


def _guard_bose_variable(M, Lmax, budget):
    if M < 1 or Lmax < 0:
        raise InvalidSpec(f"bose enumeration needs M >= 1 and Lmax >= 0")
    budget.check(M + Lmax, math.comb(M + Lmax, Lmax), f"bose-variable(M={M}, Lmax={Lmax})")


# -- public streams --------------------------------------------------------


def enumerate_bose(M: int, L: int, budget: Budget = DEFAULT_BUDGET) -> Iterator[Occupation]:
    """Yield every way of placing ``L`` bosons in ``M`` modes exactly once."""
    _guard_bose(M, L, budget)
    for modes in _raw_bose(M, L):
        yield Occupation(_from_modes(modes, M))


def enumerate_bose_variable(
    M: int, Lmax: int, budget: Budget = DEFAULT_BUDGET
) -> Iterator[Occupation]:
    """Yield bose configurations sector by sector, 0 up to ``Lmax`` particles."""
    _guard_bose_variable(M, Lmax, budget)
    for modes in _raw_bose_variable(M, Lmax):
        yield Occupation(_from_modes(modes, M))


def enumerate_fermi(M: int, L: int, budget: Budget = DEFAULT_BUDGET) -> Iterator[Occupation]:
    _guard_fermi(M, L, budget)
    for modes in _raw_fermi(M, L):
        yield Occupation(_from_modes(modes, M))


def enumerate_distinguishable(
    K: int, D: int, L: int, budget: Budget = DEFAULT_BUDGET
) -> Iterator[Occupation]:
    _guard_distinguishable(K, D, L, budget)
    for sites, labels in _raw_distinguishable(K, D, L):
        yield Occupation(_from_modes(sites, K), labels)


# -- formula verification --------------------------------------------------

FAMILIES = ("bose", "fermi", "distinguishable")
ALL_FAMILIES = ("bose", "bose-variable", "fermi", "distinguishable")


@dataclass
class Mismatch:
    family: str
    params: dict
    enumerated: int
    formula: int

    def describe(self) -> str:
        args = ", ".join(f"{k}={v}" for k, v in self.params.items())
        return f"{self.family}({args}): enumerated {self.enumerated}, formula {self.formula}"


@dataclass
class VerificationReport:
    specs_checked: int = 0
    configurations: int = 0
    mismatch: Optional[Mismatch] = None
    rows: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.mismatch is None


def _count(it) -> int:
    last = collections.deque(enumerate(it, 1), maxlen=1)
    return last[0][0] if last else 0


def _grid(maxM: int, maxL: int, families):
    for family in families:
        for M in range(1, maxM + 1):
            for L in range(0, maxL + 1):
                if family == "bose":
                    yield family, {"M": M, "L": L}
                elif family == "bose-variable":
                    yield family, {"M": M, "Lmax": L}
                elif family == "fermi":
                    if L <= M:
                        yield family, {"M": M, "L": L}
                elif L <= M:
                    # M doubles as the external-state count K
                    for D in range(1, maxM + 1):
                        yield family, {"K": M, "D": D, "L": L}


_RAW = {
    "bose": (_guard_bose, _raw_bose),
    "bose-variable": (_guard_bose_variable, _raw_bose_variable),
    "fermi": (_guard_fermi, _raw_fermi),
    "distinguishable": (_guard_distinguishable, _raw_distinguishable),
}

_FORMULA = {
    "bose": lambda p: counts.bose_dimension(p["M"], p["L"]).value,
    "bose-variable": lambda p: counts.bose_dimension_variable(p["M"], p["Lmax"]).value,
    "fermi": lambda p: counts.fermi_dimension(p["M"], p["L"]).value,
    "distinguishable": lambda p: counts.distinguishable_dimension(p["K"], p["D"], p["L"]).value,
}


def verify_formulas(
    maxM: int,
    maxL: int,
    families=FAMILIES,
    budget: Budget = DEFAULT_BUDGET,
    formulas: Optional[dict] = None,
) -> VerificationReport:
    """Compare enumerated stream lengths against the closed-form counts.

    The grid runs over ``1 <= M <= maxM`` and ``0 <= L <= maxL``; for the
    distinguishable family ``M`` is the external-state count ``K`` and ``D``
    also runs over ``1..maxM``. Stops at the first mismatch. ``formulas``
    overrides individual closed forms (used to inject faults in tests).
    """
    table = dict(_FORMULA)
    if formulas:
        table.update(formulas)
    report = VerificationReport()
    for family, params in _grid(maxM, maxL, families):
        guard, raw = _RAW[family]
        args = tuple(params.values())
        guard(*args, budget)
        n = _count(raw(*args))
        expected = table[family](params)
        report.specs_checked += 1
        report.configurations += n
        report.rows.append((family, params, n, expected))
        if n != expected:
            report.mismatch = Mismatch(family, params, n, expected)
            break
    return report


def stream_for(family: str) -> Callable:
    return {
        "bose": enumerate_bose,
        "bose-variable": enumerate_bose_variable,
        "fermi": enumerate_fermi,
        "distinguishable": enumerate_distinguishable,
    }[family]
