import math

import pytest

from paper_tables import TABLE_KRATZER, TABLE_PSEUDOHARMONIC
from pseudomie import potentials, spectra, units
from pseudomie.potentials import MieParams, NoBoundStateError, PseudoharmonicParams
from pseudomie.spectra import QuantumNumbers as QN

PAPER_TOL = 5e-4  # eV; absorbs the paper's unstated constants


def molecule_params(name, family):
    mol = units.get_molecule(name)
    if family == "pseudoharmonic":
        return potentials.pseudoharmonic_from_molecule(mol)
    return potentials.mie_from_molecule(mol)


def natural_oscillator(a1=0.5, a2=0.0):
    return PseudoharmonicParams(a1, a2, 0.0, 0.5)


def coulomb():
    return MieParams(0.0, -1.0, 0.0, 0.5)


def test_table_anchor_n2_ground():
    p = molecule_params("N2", "pseudoharmonic")
    e = spectra.energy_pseudoharmonic(p, QN(0, 0)).energy
    assert e == pytest.approx(TABLE_PSEUDOHARMONIC["N2"][(0, 0)], abs=PAPER_TOL)


def test_table_anchor_co_22():
    p = molecule_params("CO", "pseudoharmonic")
    e = spectra.energy_pseudoharmonic(p, QN(2, 2)).energy
    assert e == pytest.approx(TABLE_PSEUDOHARMONIC["CO"][(2, 2)], abs=PAPER_TOL)


@pytest.mark.parametrize("n,ell", [(0, 0), (1, 1), (3, 0), (2, 2), (5, 3)])
def test_oscillator_spectrum(n, ell):
    e = spectra.energy_pseudoharmonic(natural_oscillator(), QN(n, ell)).energy
    assert abs(e - (2 * n + ell + 1.5)) <= 1e-12


def test_a3zero_equals_general_form():
    p = PseudoharmonicParams(2.0, 3.0, 0.0, 0.5)
    qn = QN(2, 1)
    assert (
        spectra.energy_pseudoharmonic_a3zero(p, qn).energy
        == spectra.energy_pseudoharmonic(p, qn).energy
    )


def test_a3zero_examples():
    assert spectra.energy_pseudoharmonic_a3zero(natural_oscillator(), QN(0, 0)).energy == pytest.approx(1.5, abs=1e-12)
    assert spectra.energy_pseudoharmonic_a3zero(natural_oscillator(), QN(1, 1)).energy == pytest.approx(4.5, abs=1e-12)


def test_a3zero_precondition():
    p = PseudoharmonicParams(1.0, 1.0, -1.0, 0.5)
    with pytest.raises(ValueError):
        spectra.energy_pseudoharmonic_a3zero(p, QN(0, 0))


def test_harmonic_oscillator_levels():
    assert spectra.energy_harmonic_oscillator(1.0, 0) == 1.5
    assert spectra.energy_harmonic_oscillator(1.0, 5) == 6.5
    with pytest.raises(ValueError):
        spectra.energy_harmonic_oscillator(1.0, -1)
    with pytest.raises(ValueError):
        spectra.energy_harmonic_oscillator(0.0, 0)


@pytest.mark.parametrize("n,ell", [(0, 0), (1, 0), (0, 2), (2, 1)])
def test_oscillator_principal_quantum_number_identification(n, ell):
    # omega = 1 in natural units -> a1 = m omega^2 / 2 = 1/2
    via_pseudoharmonic = spectra.energy_pseudoharmonic(natural_oscillator(), QN(n, ell)).energy
    via_principal = spectra.energy_harmonic_oscillator(1.0, 2 * n + ell)
    assert via_pseudoharmonic == pytest.approx(via_principal, abs=1e-12)


def test_kratzer_anchor_n2_ground():
    p = molecule_params("N2", "kratzer")
    e = spectra.energy_mie(p, QN(0, 0)).energy
    assert e == pytest.approx(TABLE_KRATZER["N2"][(0, 0)], abs=PAPER_TOL)


def test_kratzer_anchor_co_44():
    p = molecule_params("CO", "kratzer")
    e = spectra.energy_mie(p, QN(4, 4)).energy
    assert e == pytest.approx(TABLE_KRATZER["CO"][(4, 4)], abs=PAPER_TOL)


@pytest.mark.parametrize("n,ell", [(0, 0), (1, 0), (2, 2), (4, 1), (3, 3)])
def test_coulomb_limit_bohr_formula(n, ell):
    e = spectra.energy_mie(coulomb(), QN(n, ell)).energy
    assert abs(e - (-1.0 / (2.0 * (n + ell + 1) ** 2))) <= 1e-12


def test_mie_no_bound_states():
    p = MieParams(1.0, 0.5, 0.0, 0.5)
    with pytest.raises(NoBoundStateError):
        spectra.energy_mie(p, QN(0, 0))
    with pytest.raises(NoBoundStateError):
        spectra.mie_epsilon(p, QN(0, 0))


@pytest.mark.parametrize("family,name", [("pseudoharmonic", "N2"), ("kratzer", "CO")])
def test_monotone_in_n(family, name):
    p = molecule_params(name, family)
    energy = spectra.energy_pseudoharmonic if family == "pseudoharmonic" else spectra.energy_mie
    for ell in range(4):
        levels = [energy(p, QN(n, ell)).energy for n in range(8)]
        assert all(b > a for a, b in zip(levels, levels[1:]))


@pytest.mark.parametrize("family,name", [("pseudoharmonic", "N2"), ("kratzer", "N2")])
def test_monotone_in_ell(family, name):
    p = molecule_params(name, family)
    energy = spectra.energy_pseudoharmonic if family == "pseudoharmonic" else spectra.energy_mie
    for n in range(5):
        levels = [energy(p, QN(n, ell)).energy for ell in range(6)]
        assert all(b > a for a, b in zip(levels, levels[1:]))


@pytest.mark.parametrize("scale", [2.0, 10.0])
@pytest.mark.parametrize("n,ell", [(0, 0), (3, 2)])
def test_sqrt_a1_scaling(scale, n, ell):
    base = PseudoharmonicParams(0.7, 0.0, 0.0, 0.5)
    scaled = PseudoharmonicParams(0.7 * scale, 0.0, 0.0, 0.5)
    e1 = spectra.energy_pseudoharmonic(base, QN(n, ell)).energy
    e2 = spectra.energy_pseudoharmonic(scaled, QN(n, ell)).energy
    assert e2 / e1 == pytest.approx(math.sqrt(scale), rel=1e-12)


@pytest.mark.parametrize("name", ["N2", "CO"])
def test_mie_bound_state_window(name):
    p = molecule_params(name, "kratzer")
    for level in spectra.level_table(p, 6):
        assert p.c - level.energy > 0.0


@pytest.mark.parametrize("name", ["N2", "CO"])
def test_quantization_round_trip(name):
    # plugging eps back into the termination condition must recover n
    p = molecule_params(name, "kratzer")
    for level in spectra.level_table(p, 6):
        d = potentials.derive_mie(p, level.qn.ell)
        eps = spectra.mie_epsilon(p, level.qn)
        assert eps > 0.0
        n_back = -d.delta_sq / (2.0 * eps) - (2.0 * d.gamma + 1.0) / 2.0
        assert n_back == pytest.approx(level.qn.n, abs=1e-10)


@pytest.mark.parametrize("name", ["N2", "CO"])
def test_pseudoharmonic_two_forms_agree(name):
    p = molecule_params(name, "pseudoharmonic")
    for level in spectra.level_table(p, 5):
        n, ell = level.qn.n, level.qn.ell
        # the radical form written directly
        direct = p.a3 + math.sqrt(16.0 * p.lam * p.a1) * (
            n + 0.5 + 0.25 * math.sqrt(1.0 + 4.0 * ell * (ell + 1) + 4.0 * p.a2 / p.lam)
        )
        assert level.energy == pytest.approx(direct, rel=1e-13)


def test_level_table_enumeration():
    p = natural_oscillator()
    rows = spectra.level_table(p, 2)
    assert [(lv.qn.n, lv.qn.ell) for lv in rows] == [(0, 0), (1, 0), (1, 1), (2, 0), (2, 1), (2, 2)]
    assert len(spectra.level_table(p, 0)) == 1
    assert len(spectra.level_table(p, 4)) == 15


def test_level_table_fixed_ell_rule():
    rows = spectra.level_table(natural_oscillator(), 1, ell_max=2)
    assert [(lv.qn.n, lv.qn.ell) for lv in rows] == [(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2)]


def test_quantum_numbers_validation():
    with pytest.raises(ValueError):
        QN(-1, 0)
    with pytest.raises(ValueError):
        QN(0, -2)
