"""Potential families and their derived shape parameters.

Two families are covered: the pseudoharmonic well a1*r^2 + a2/r^2 + a3 and
the Mie-type well a/r^2 + b/r + c (the Kratzer and modified Kratzer forms
are parameter choices of the latter).  Coefficients are kept in eV and
angstrom together with lam = hbar^2/2m, so every downstream formula has a
single unit pathway.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .units import CODATA2018, NATURAL, MoleculeSpec, UnitSystem


class NoBoundStateError(ValueError):
    """The Mie-type well supports no bound states (nonnegative Coulomb term)."""


def _check_radius(r):
    if np.any(np.asarray(r) <= 0.0):
        raise ValueError("radius must be strictly positive")


@dataclass(frozen=True)
class PseudoharmonicParams:
    """Coefficients of a1*r^2 + a2/r^2 + a3 plus the mass factor lam = hbar^2/2m."""

    a1: float  # eV / angstrom^2
    a2: float  # eV * angstrom^2
    a3: float  # eV
    lam: float  # eV * angstrom^2

    def __post_init__(self):
        if not self.a1 > 0.0:
            raise ValueError(f"a1 must be positive for a confining well, got {self.a1}")
        if not self.lam > 0.0:
            raise ValueError(f"lam must be positive, got {self.lam}")

    def __call__(self, r):
        """Potential value V(r) in eV; r > 0 (scalar or array)."""
        _check_radius(r)
        return self.a1 * r**2 + self.a2 / r**2 + self.a3

    def minimum(self) -> tuple[float, float]:
        """Location and value of the potential minimum."""
        if self.a2 <= 0.0:
            return 0.0, self.a3
        r_star = (self.a2 / self.a1) ** 0.25
        return r_star, self.a3 + 2.0 * math.sqrt(self.a1 * self.a2)


@dataclass(frozen=True)
class MieParams:
    """Coefficients of a/r^2 + b/r + c plus lam = hbar^2/2m.

    b >= 0 is representable (the potential is still evaluable) but admits
    no bound states; the spectrum and wavefunction constructors raise
    NoBoundStateError for it.
    """

    a: float  # eV * angstrom^2
    b: float  # eV * angstrom
    c: float  # eV
    lam: float  # eV * angstrom^2

    def __post_init__(self):
        if not self.lam > 0.0:
            raise ValueError(f"lam must be positive, got {self.lam}")

    def __call__(self, r):
        """Potential value V(r) in eV; r > 0 (scalar or array)."""
        _check_radius(r)
        return self.a / r**2 + self.b / r + self.c

    def minimum(self) -> tuple[float, float]:
        """Location and value of the potential minimum (requires a > 0, b < 0)."""
        if not (self.a > 0.0 and self.b < 0.0):
            raise ValueError("minimum requires a > 0 and b < 0")
        r_star = -2.0 * self.a / self.b
        return r_star, self.c - self.b**2 / (4.0 * self.a)


@dataclass(frozen=True)
class DerivedPseudoharmonic:
    """Shape parameters of the pseudoharmonic radial equation.

    mu is the Gaussian decay rate (angstrom^-2), nu the effective angular
    index solving nu(nu+1) = a2/lam + ell(ell+1) on the nu >= -1/2 branch.
    """

    mu: float
    nu: float
    ell: int


@dataclass(frozen=True)
class DerivedMie:
    """Shape parameters of the Mie-type radial equation.

    gamma = sqrt(a/lam + ell(ell+1) + 1/4) >= 0; delta_sq = b/lam is
    negative exactly when the Coulomb-like term attracts.
    """

    gamma: float
    delta_sq: float
    ell: int


def _check_ell(ell: int) -> int:
    if ell < 0 or ell != int(ell):
        raise ValueError(f"angular momentum must be a nonnegative integer, got {ell}")
    return int(ell)


def derive_pseudoharmonic(p: PseudoharmonicParams, ell: int) -> DerivedPseudoharmonic:
    """Compute (mu, nu) for a given angular momentum.

    nu takes the nu >= -1/2 root so the near-origin factor r^(nu+1)
    vanishes; a discriminant below zero means the inverse-square core is
    too attractive for this ell.
    """
    ell = _check_ell(ell)
    disc = 1.0 + 4.0 * (p.a2 / p.lam + ell * (ell + 1))
    if disc < 0.0:
        raise ValueError(
            f"a2={p.a2} makes nu complex at ell={ell} (discriminant {disc:.3g} < 0)"
        )
    nu = 0.5 * (-1.0 + math.sqrt(disc))
    return DerivedPseudoharmonic(mu=math.sqrt(p.a1 / p.lam), nu=nu, ell=ell)


def derive_mie(p: MieParams, ell: int) -> DerivedMie:
    """Compute (gamma, delta_sq) for a given angular momentum."""
    ell = _check_ell(ell)
    gamma_sq = p.a / p.lam + ell * (ell + 1) + 0.25
    if gamma_sq < 0.0:
        raise ValueError(
            f"a={p.a} makes gamma complex at ell={ell} (gamma^2 = {gamma_sq:.3g} < 0)"
        )
    return DerivedMie(gamma=math.sqrt(gamma_sq), delta_sq=p.b / p.lam, ell=ell)


def pseudoharmonic_from_molecule(
    mol: MoleculeSpec, units: UnitSystem = CODATA2018
) -> PseudoharmonicParams:
    """Map (D0, r0, m) onto the pseudoharmonic coefficients.

    a1 = D0/r0^2, a2 = D0*r0^2, a3 = -2 D0, which places the minimum at r0
    with value 0.
    """
    d0 = units.wavenumber_to_ev(mol.dissociation_energy)
    r0 = mol.equilibrium_distance
    return PseudoharmonicParams(
        a1=d0 / r0**2, a2=d0 * r0**2, a3=-2.0 * d0, lam=units.lambda_of_mass(mol.mass)
    )


def mie_from_molecule(mol: MoleculeSpec, units: UnitSystem = CODATA2018) -> MieParams:
    """Map (De, re, m) onto the modified Kratzer form De*((r-re)/r)^2 expanded.

    a = De*re^2, b = -2 De*re, c = De; the minimum value is 0 at re.
    """
    de = units.wavenumber_to_ev(mol.dissociation_energy)
    re = mol.equilibrium_distance
    return MieParams(a=de * re**2, b=-2.0 * de * re, c=de, lam=units.lambda_of_mass(mol.mass))


def natural_pseudoharmonic() -> PseudoharmonicParams:
    """Figure-default pseudoharmonic well in natural units: a1 = a2 = 1, a3 = 0."""
    return PseudoharmonicParams(a1=1.0, a2=1.0, a3=0.0, lam=NATURAL.lambda_of_mass(1.0))


def natural_kratzer(depth: float = 2.0, r0: float = 1.0) -> MieParams:
    """Figure-default modified Kratzer well in natural units.

    The default depth of 2 keeps all six default states below 1e-3 of
    their peak by r = 35 while the slowest one still reaches r ~ 31.
    """
    lam = NATURAL.lambda_of_mass(1.0)
    return MieParams(a=depth * r0**2, b=-2.0 * depth * r0, c=depth, lam=lam)
