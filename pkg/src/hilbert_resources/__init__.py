"""Hilbert-space resource analysis.

Exact state-space dimensions for degrees of freedom, bosons, fermions and
distinguishable particles; a brute-force enumeration oracle; scalability
verdicts for growth policies; minimal-resource solvers; and worked
physical case studies.
"""

from .counts import (
    ExactCount,
    Kind,
    SystemSpec,
    asymptotic_log2,
    bose_dimension,
    bose_dimension_variable,
    dimension,
    distinguishable_dimension,
    dof_dimension,
    equivalent_qubits,
    fermi_dimension,
)
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
from .growth import GrowthClass, ScalabilityVerdict, Verdict, classify_dof, classify_fock
from .oracle import Budget, verify_formulas
from .solver import ResourceRequirement, min_modes, min_particles, sweep

__version__ = "0.1.0"

__all__ = [
    "Budget",
    "CapExceeded",
    "ExactCount",
    "GrowthClass",
    "InvalidArgument",
    "InvalidRegime",
    "InvalidSpec",
    "Kind",
    "ResourceError",
    "ResourceRequirement",
    "ScalabilityVerdict",
    "SpecParseError",
    "SpecValidationError",
    "SystemSpec",
    "UnreachableTarget",
    "Verdict",
    "asymptotic_log2",
    "bose_dimension",
    "bose_dimension_variable",
    "classify_dof",
    "classify_fock",
    "dimension",
    "distinguishable_dimension",
    "dof_dimension",
    "equivalent_qubits",
    "fermi_dimension",
    "min_modes",
    "min_particles",
    "sweep",
    "verify_formulas",
]
