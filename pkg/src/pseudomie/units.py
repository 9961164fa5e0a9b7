"""Physical constants, unit conversions, and molecule presets.

Internal canonical units are eV for energies and angstrom for lengths.
Spectroscopic inputs (cm^-1, amu) are converted on the way in.  A separate
natural-unit system (hbar = m = 1) is provided for dimensionless work; the
two are never mixed implicitly.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

# Frozen CODATA 2018 values (exact-SI h, c, e where applicable).
# hbar*c, eV*angstrom
HBAR_C_EV_ANGSTROM = 1973.269804593025
# rest energy of one atomic mass unit, eV
AMU_EV = 931494102.42
# energy of a photon with wavenumber 1 cm^-1, eV (h*c in eV*cm)
WAVENUMBER_EV = 1.2398419843320026e-04


class UnknownMoleculeError(KeyError):
    """Requested molecule preset does not exist."""


class MoleculeFileError(ValueError):
    """Molecule definition file could not be parsed."""


@dataclass(frozen=True)
class UnitSystem:
    """Bundle of the three constants every conversion goes through.

    hbar_c          : eV * angstrom
    amu_energy      : eV (rest energy of one amu)
    wavenumber_ev   : eV per cm^-1
    """

    hbar_c: float
    amu_energy: float
    wavenumber_ev: float

    def __post_init__(self):
        for name in ("hbar_c", "amu_energy", "wavenumber_ev"):
            if not getattr(self, name) > 0.0:
                raise ValueError(f"{name} must be strictly positive")

    def wavenumber_to_ev(self, x: float) -> float:
        """Convert a wavenumber in cm^-1 to an energy in eV (linear map)."""
        return x * self.wavenumber_ev

    def lambda_of_mass(self, mass_amu: float) -> float:
        """Return hbar^2 / (2 m) in eV*angstrom^2 for a mass in amu.

        This is the single factor through which the particle mass enters
        every radial-equation quantity.
        """
        if not mass_amu > 0.0:
            raise ValueError(f"mass must be positive, got {mass_amu}")
        return self.hbar_c**2 / (2.0 * mass_amu * self.amu_energy)


#: Laboratory units (eV, angstrom) with frozen CODATA 2018 constants.
CODATA2018 = UnitSystem(HBAR_C_EV_ANGSTROM, AMU_EV, WAVENUMBER_EV)

#: hbar = m = 1 convention: lambda_of_mass(1) == 0.5, conversions are no-ops.
NATURAL = UnitSystem(1.0, 1.0, 1.0)


@dataclass(frozen=True)
class MoleculeSpec:
    """Diatomic molecule parameters as tabulated in the spectroscopy literature.

    dissociation_energy : cm^-1
    equilibrium_distance: angstrom
    mass                : reduced mass, amu
    """

    name: str
    dissociation_energy: float
    equilibrium_distance: float
    mass: float

    def __post_init__(self):
        for field in ("dissociation_energy", "equilibrium_distance", "mass"):
            if not getattr(self, field) > 0.0:
                raise ValueError(f"{self.name}: {field} must be strictly positive")


_BUILTIN = (
    MoleculeSpec("N2", dissociation_energy=96288.03528, equilibrium_distance=1.0940, mass=7.00335),
    MoleculeSpec("CO", dissociation_energy=87471.42567, equilibrium_distance=1.1282, mass=6.860586),
)


def builtin_molecules() -> tuple[MoleculeSpec, ...]:
    """Return the built-in molecule presets (N2 and CO)."""
    return _BUILTIN


def get_molecule(name: str) -> MoleculeSpec:
    """Look up a preset by (case-insensitive) name."""
    for mol in _BUILTIN:
        if mol.name.lower() == name.lower():
            return mol
    known = ", ".join(m.name for m in _BUILTIN)
    raise UnknownMoleculeError(f"unknown molecule {name!r} (built-in: {known})")


_MOLECULE_KEYS = ("D0_cm1", "r0_angstrom", "mass_amu")


def parse_molecules(text: str, source: str = "<string>") -> list[MoleculeSpec]:
    """Parse molecule definitions from sectioned key-value text.

    Format, one molecule per section::

        [NO]
        D0_cm1 = 52400.0
        r0_angstrom = 1.1508
        mass_amu = 7.46844

    Raises MoleculeFileError with the offending line number on any problem.
    """
    molecules = []
    section = None
    fields: dict[str, float] = {}
    section_line = 0

    def finish(lineno):
        if section is None:
            return
        missing = [k for k in _MOLECULE_KEYS if k not in fields]
        if missing:
            raise MoleculeFileError(
                f"{source}:{lineno}: section [{section}] is missing {', '.join(missing)}"
            )
        try:
            molecules.append(
                MoleculeSpec(section, fields["D0_cm1"], fields["r0_angstrom"], fields["mass_amu"])
            )
        except ValueError as exc:
            raise MoleculeFileError(f"{source}:{lineno}: {exc}") from None

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("[") and line.endswith("]"):
            finish(section_line)
            section = line[1:-1].strip()
            if not section:
                raise MoleculeFileError(f"{source}:{lineno}: empty section name")
            fields = {}
            section_line = lineno
            continue
        if "=" not in line:
            raise MoleculeFileError(f"{source}:{lineno}: expected 'key = value', got {line!r}")
        key, _, value = line.partition("=")
        key = key.strip()
        if section is None:
            raise MoleculeFileError(f"{source}:{lineno}: key {key!r} outside any [section]")
        if key not in _MOLECULE_KEYS:
            raise MoleculeFileError(
                f"{source}:{lineno}: unknown key {key!r} (expected one of {', '.join(_MOLECULE_KEYS)})"
            )
        if key in fields:
            raise MoleculeFileError(f"{source}:{lineno}: duplicate key {key!r}")
        try:
            fields[key] = float(value.strip())
        except ValueError:
            raise MoleculeFileError(
                f"{source}:{lineno}: value for {key!r} is not a number: {value.strip()!r}"
            ) from None
    finish(section_line)
    if not molecules:
        raise MoleculeFileError(f"{source}: no molecule sections found")
    return molecules


def load_molecules(path) -> list[MoleculeSpec]:
    """Read molecule definitions from a file (see parse_molecules)."""
    p = Path(path)
    return parse_molecules(p.read_text(), source=str(p))
