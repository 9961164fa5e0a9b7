import math

import numpy as np
import pytest

from pseudomie import potentials, units
from pseudomie.potentials import MieParams, PseudoharmonicParams

# frozen derived-shape fixtures for the N2 presets (CODATA 2018 constants)
NU_N2_L0 = 218.30602968869354  # pseudoharmonic mapping, ell = 0
GAMMA_N2_L1 = 218.81059989892955  # Kratzer mapping, ell = 1


def n2_pseudoharmonic():
    return potentials.pseudoharmonic_from_molecule(units.get_molecule("N2"))


def n2_mie():
    return potentials.mie_from_molecule(units.get_molecule("N2"))


def test_eval_pseudoharmonic_direct():
    p = PseudoharmonicParams(1.0, 1.0, 0.0, 0.5)
    assert p(1.0) == 2.0


def test_eval_pseudoharmonic_pure_square():
    p = PseudoharmonicParams(1.0, 0.0, 0.0, 0.5)
    assert p(2.0) == 4.0


def test_molecular_pseudoharmonic_minimum_is_zero():
    p = n2_pseudoharmonic()
    r0 = units.get_molecule("N2").equilibrium_distance
    assert p(r0) == pytest.approx(0.0, abs=1e-12)


def test_eval_mie_examples():
    assert MieParams(0.0, -1.0, 0.0, 0.5)(2.0) == -0.5
    assert MieParams(1.0, -2.0, 1.0, 0.5)(1.0) == 0.0


def test_molecular_mie_vanishes_at_r0():
    p = n2_mie()
    r0 = units.get_molecule("N2").equilibrium_distance
    assert p(r0) == pytest.approx(0.0, abs=1e-12)


def test_eval_rejects_nonpositive_radius():
    p = PseudoharmonicParams(1.0, 1.0, 0.0, 0.5)
    with pytest.raises(ValueError):
        p(0.0)
    with pytest.raises(ValueError):
        p(np.array([1.0, -2.0]))
    with pytest.raises(ValueError):
        n2_mie()(-1.0)


def test_pseudoharmonic_mapping_symbolic():
    mol = units.MoleculeSpec("toy", 1.0, 1.0, 1.0)
    toy_units = units.UnitSystem(1.0, 1.0, 1.0)  # cm^-1 -> eV is identity here
    p = potentials.pseudoharmonic_from_molecule(mol, toy_units)
    assert (p.a1, p.a2, p.a3) == (1.0, 1.0, -2.0)


def test_mie_mapping_symbolic():
    mol = units.MoleculeSpec("toy", 1.0, 1.0, 1.0)
    toy_units = units.UnitSystem(1.0, 1.0, 1.0)
    p = potentials.mie_from_molecule(mol, toy_units)
    assert (p.a, p.b, p.c) == (1.0, -2.0, 1.0)


def test_pseudoharmonic_mapping_product_identity():
    # a1*a2 = D0^2 independent of r0
    d0 = units.CODATA2018.wavenumber_to_ev(96288.03528)
    p = n2_pseudoharmonic()
    assert p.a1 * p.a2 == pytest.approx(d0**2, rel=1e-14)


def test_mie_mapping_b_fixture():
    d0 = units.CODATA2018.wavenumber_to_ev(96288.03528)
    assert n2_mie().b == pytest.approx(-2.0 * d0 * 1.0940, rel=1e-14)


def test_mie_matches_modified_kratzer_pointwise():
    mol = units.get_molecule("N2")
    p = potentials.mie_from_molecule(mol)
    de = units.CODATA2018.wavenumber_to_ev(mol.dissociation_energy)
    re = mol.equilibrium_distance
    r = np.geomspace(re / 10.0, 10.0 * re, 200)
    expanded = p(r)
    direct = de * ((r - re) / r) ** 2
    np.testing.assert_allclose(expanded, direct, rtol=1e-12)


def test_pseudoharmonic_minimum_bracketed():
    p = n2_pseudoharmonic()
    r_star, v_star = p.minimum()
    assert v_star == pytest.approx(0.0, abs=1e-10)
    h = 1e-6
    slope_left = (p(r_star) - p(r_star - h)) / h
    slope_right = (p(r_star + h) - p(r_star)) / h
    assert slope_left < 0.0 < slope_right


def test_derive_pseudoharmonic_a2_zero_gives_ell():
    p = PseudoharmonicParams(1.0, 0.0, 0.0, 0.5)
    for ell in range(7):
        d = potentials.derive_pseudoharmonic(p, ell)
        assert d.nu == pytest.approx(ell, abs=1e-12)


def test_derive_pseudoharmonic_natural_mu():
    p = PseudoharmonicParams(0.5, 0.0, 0.0, 0.5)
    assert potentials.derive_pseudoharmonic(p, 0).mu == 1.0


def test_derive_pseudoharmonic_n2_fixture():
    d = potentials.derive_pseudoharmonic(n2_pseudoharmonic(), 0)
    assert d.nu == pytest.approx(NU_N2_L0, rel=1e-14)


@pytest.mark.parametrize("ell", [0, 1, 3, 7])
@pytest.mark.parametrize(
    "a1,a2,lam",
    [(1.0, 1.0, 0.5), (9.975, 14.29, 2.98e-4), (0.5, 0.0, 0.5), (2.0, 7.5, 0.1)],
)
def test_nu_solves_its_quadratic(ell, a1, a2, lam):
    p = PseudoharmonicParams(a1, a2, 0.0, lam)
    nu = potentials.derive_pseudoharmonic(p, ell).nu
    assert nu >= -0.5
    target = a2 / lam + ell * (ell + 1)
    assert abs(nu * (nu + 1.0) - target) < 1e-12 * (1.0 + nu**2)


def test_derive_mie_gamma_half():
    p = MieParams(0.0, -1.0, 0.0, 0.5)
    assert potentials.derive_mie(p, 0).gamma == 0.5


@pytest.mark.parametrize("ell", range(6))
def test_derive_mie_a_zero_perfect_square(ell):
    p = MieParams(0.0, -1.0, 0.0, 0.5)
    assert potentials.derive_mie(p, ell).gamma == ell + 0.5


def test_derive_mie_n2_fixture():
    d = potentials.derive_mie(n2_mie(), 1)
    assert d.gamma == pytest.approx(GAMMA_N2_L1, rel=1e-14)


@pytest.mark.parametrize("ell", [0, 2, 5])
@pytest.mark.parametrize("a,b,lam", [(1.0, -2.0, 0.5), (14.29, -26.1, 2.98e-4), (0.0, -1.0, 0.5)])
def test_gamma_solves_its_square(ell, a, b, lam):
    p = MieParams(a, b, 0.0, lam)
    d = potentials.derive_mie(p, ell)
    target = a / lam + ell * (ell + 1) + 0.25
    assert abs(d.gamma**2 - target) < 1e-12 * (1.0 + d.gamma**2)
    assert d.delta_sq == b / lam
    assert (d.delta_sq < 0.0) == (b < 0.0)


def test_derive_errors_name_parameter():
    p = PseudoharmonicParams(1.0, -1.0, 0.0, 0.5)  # a2/lam = -2 < -1/4 at ell=0
    with pytest.raises(ValueError, match="a2"):
        potentials.derive_pseudoharmonic(p, 0)
    m = MieParams(-1.0, -1.0, 0.0, 0.5)
    with pytest.raises(ValueError, match="gamma"):
        potentials.derive_mie(m, 0)


def test_constructor_rejects_degenerate_a1():
    with pytest.raises(ValueError):
        PseudoharmonicParams(0.0, 1.0, 0.0, 0.5)


def test_natural_defaults():
    ph = potentials.natural_pseudoharmonic()
    assert (ph.a1, ph.a2, ph.a3, ph.lam) == (1.0, 1.0, 0.0, 0.5)
    kr = potentials.natural_kratzer()
    assert kr.c == 2.0 and kr.b == -4.0 and kr.a == 2.0
    assert kr(1.0) == 0.0  # minimum of the modified Kratzer form at r0


def test_mie_minimum():
    r_star, v_star = n2_mie().minimum()
    assert r_star == pytest.approx(1.0940, rel=1e-12)
    assert v_star == pytest.approx(0.0, abs=1e-12)
    with pytest.raises(ValueError):
        MieParams(0.0, -1.0, 0.0, 0.5).minimum()
