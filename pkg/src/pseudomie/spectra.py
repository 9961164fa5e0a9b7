"""Closed-form bound-state energies for both potential families."""

from __future__ import annotations

from dataclasses import dataclass

from .potentials import (
    MieParams,
    NoBoundStateError,
    PseudoharmonicParams,
    derive_mie,
    derive_pseudoharmonic,
)


@dataclass(frozen=True)
class QuantumNumbers:
    """Radial quantum number n (node count) and angular momentum ell."""

    n: int
    ell: int

    def __post_init__(self):
        if self.n < 0 or self.n != int(self.n):
            raise ValueError(f"n must be a nonnegative integer, got {self.n}")
        if self.ell < 0 or self.ell != int(self.ell):
            raise ValueError(f"ell must be a nonnegative integer, got {self.ell}")


@dataclass(frozen=True)
class EnergyLevel:
    qn: QuantumNumbers
    energy: float  # eV


def energy_pseudoharmonic(p: PseudoharmonicParams, qn: QuantumNumbers) -> EnergyLevel:
    """Bound-state energy of the pseudoharmonic well.

    E = a3 + 4*lam*mu*(n + 1/2 + (2 nu + 1)/4), equivalent to
    a3 + sqrt(16 lam a1) * (n + 1/2 + sqrt(1 + 4 ell(ell+1) + 4 a2/lam)/4).
    """
    d = derive_pseudoharmonic(p, qn.ell)
    e = p.a3 + 4.0 * p.lam * d.mu * (qn.n + 0.5 + (2.0 * d.nu + 1.0) / 4.0)
    return EnergyLevel(qn, e)


def energy_pseudoharmonic_a3zero(p: PseudoharmonicParams, qn: QuantumNumbers) -> EnergyLevel:
    """Special case a3 = 0 (inverse-square plus square well), kept as a named entry."""
    if p.a3 != 0.0:
        raise ValueError(f"this form requires a3 = 0, got a3 = {p.a3}")
    return energy_pseudoharmonic(p, qn)


def energy_harmonic_oscillator(omega: float, n_prime: int) -> float:
    """3-D isotropic oscillator level omega*(n' + 3/2) in natural units.

    n' = 2n + ell is the principal quantum number collapsing the (n, ell)
    grid of the a2 = a3 = 0 pseudoharmonic spectrum.
    """
    if not omega > 0.0:
        raise ValueError(f"omega must be positive, got {omega}")
    if n_prime < 0 or n_prime != int(n_prime):
        raise ValueError(f"n_prime must be a nonnegative integer, got {n_prime}")
    return omega * (n_prime + 1.5)


def mie_epsilon(p: MieParams, qn: QuantumNumbers) -> float:
    """Exponential decay rate of the Mie-type bound state (angstrom^-1).

    From the termination condition -delta^2/(2 eps) - (2 gamma + 1)/2 = n;
    positive only for an attractive Coulomb term.
    """
    if p.b >= 0.0:
        raise NoBoundStateError(
            f"Mie-type well with b = {p.b} >= 0 has no bound states"
        )
    d = derive_mie(p, qn.ell)
    return -d.delta_sq / (2.0 * (qn.n + d.gamma + 0.5))


def energy_mie(p: MieParams, qn: QuantumNumbers) -> EnergyLevel:
    """Bound-state energy of the Mie-type well.

    E = c - lam * delta^4 / (4 (n + 1/2 + gamma)^2); always below c.
    """
    if p.b >= 0.0:
        raise NoBoundStateError(
            f"Mie-type well with b = {p.b} >= 0 has no bound states"
        )
    d = derive_mie(p, qn.ell)
    e = p.c - p.lam * d.delta_sq**2 / (4.0 * (qn.n + 0.5 + d.gamma) ** 2)
    return EnergyLevel(qn, e)


def level_table(
    p: PseudoharmonicParams | MieParams, n_max: int, ell_max: int | None = None
) -> list[EnergyLevel]:
    """Enumerate levels in the tabulation order (n ascending, ell ascending).

    By default ell runs up to n for each n, the triangular pattern of the
    reference tables; pass ell_max to use a fixed ell range instead (all
    ell >= 0 are physically allowed for every n).
    """
    if n_max < 0 or n_max != int(n_max):
        raise ValueError(f"n_max must be a nonnegative integer, got {n_max}")
    if isinstance(p, PseudoharmonicParams):
        energy = energy_pseudoharmonic
    elif isinstance(p, MieParams):
        energy = energy_mie
    else:
        raise TypeError(f"unsupported potential parameters: {type(p).__name__}")
    levels = []
    for n in range(int(n_max) + 1):
        top = n if ell_max is None else int(ell_max)
        for ell in range(top + 1):
            levels.append(energy(p, QuantumNumbers(n, ell)))
    return levels
