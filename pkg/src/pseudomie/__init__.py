"""Bound states of pseudoharmonic and Mie-type diatomic potentials.

Closed-form energy levels and normalized radial wavefunctions for the two
potential families, together with an independent Numerov shooting solver
that cross-checks every closed-form value.
"""

from .potentials import (
    MieParams,
    NoBoundStateError,
    PseudoharmonicParams,
    derive_mie,
    derive_pseudoharmonic,
    mie_from_molecule,
    pseudoharmonic_from_molecule,
)
from .spectra import (
    EnergyLevel,
    QuantumNumbers,
    energy_mie,
    energy_pseudoharmonic,
    level_table,
)
from .units import CODATA2018, NATURAL, MoleculeSpec, builtin_molecules, get_molecule
from .wavefunctions import RadialWavefunction, radial_mie, radial_pseudoharmonic

__version__ = "0.1.0"

__all__ = [
    "CODATA2018",
    "NATURAL",
    "EnergyLevel",
    "MieParams",
    "MoleculeSpec",
    "NoBoundStateError",
    "PseudoharmonicParams",
    "QuantumNumbers",
    "RadialWavefunction",
    "builtin_molecules",
    "derive_mie",
    "derive_pseudoharmonic",
    "energy_mie",
    "energy_pseudoharmonic",
    "get_molecule",
    "level_table",
    "mie_from_molecule",
    "pseudoharmonic_from_molecule",
    "radial_mie",
    "radial_pseudoharmonic",
]
