"""Command-line interface: tables, wavefunction sampling, oracle verification.

Exit codes: 0 on success, 1 when verification fails, 2 on configuration
errors.  Output is byte-stable for identical inputs.  The only environment
variable honored is PSEUDOMIE_OUTDIR, which redirects relative output
paths.
"""

from __future__ import annotations

import json
import math
import os
import sys
from dataclasses import dataclass
from pathlib import Path

import click
import numpy as np

from . import oracle, potentials, spectra, units, wavefunctions

DEFAULT_PAIRS = ((0, 0), (1, 0), (1, 1), (2, 0), (2, 1), (2, 2))
N_MAX_GUARD = 12

_CONFIG_KEYS = ("family", "units", "molecule", "n_max", "format", "output")


class ConfigFileError(click.UsageError):
    pass


def _read_config(path: str) -> dict:
    """Plain key=value defaults file; # comments allowed."""
    values = {}
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ConfigFileError(f"cannot read config file: {exc}")
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ConfigFileError(f"{path}:{lineno}: expected 'key = value', got {line!r}")
        key, _, value = line.partition("=")
        key = key.strip()
        if key not in _CONFIG_KEYS:
            raise ConfigFileError(
                f"{path}:{lineno}: unknown key {key!r} (expected one of {', '.join(_CONFIG_KEYS)})"
            )
        values[key] = value.strip()
    return values


def _merged(cli_value, config: dict, key: str, fallback):
    if cli_value is not None:
        return cli_value
    if key in config:
        return config[key]
    return fallback


def _resolve_molecule(name: str | None, molecule_file: str | None):
    extra = []
    if molecule_file:
        try:
            extra = units.load_molecules(molecule_file)
        except (OSError, units.MoleculeFileError) as exc:
            raise click.UsageError(str(exc))
    if name is None:
        return None
    for mol in extra:
        if mol.name.lower() == name.lower():
            return mol
    try:
        return units.get_molecule(name)
    except units.UnknownMoleculeError as exc:
        raise click.UsageError(exc.args[0])


def _build_potential(
    family, unit_mode, molecule, molecule_file,
    d0_cm1, r0_angstrom, mass_amu, a1, a2, a3, va, vb, vc,
):
    """Resolve flags into potential parameters; usage errors exit with 2."""
    usys = units.CODATA2018 if unit_mode == "lab" else units.NATURAL
    raw_ph = any(v is not None for v in (a1, a2, a3))
    raw_mie = any(v is not None for v in (va, vb, vc))
    inline = any(v is not None for v in (d0_cm1, r0_angstrom, mass_amu))

    if raw_ph or raw_mie:
        if inline or molecule:
            raise click.UsageError("raw potential coefficients exclude molecule options")
        if unit_mode == "lab":
            if mass_amu is None:
                raise click.UsageError("raw coefficients in lab units need --mass-amu")
            lam = usys.lambda_of_mass(mass_amu)
        else:
            lam = usys.lambda_of_mass(1.0)
        if family == "pseudoharmonic":
            if not raw_ph or raw_mie:
                raise click.UsageError("pseudoharmonic raw coefficients are --a1/--a2/--a3")
            return potentials.PseudoharmonicParams(a1 or 0.0, a2 or 0.0, a3 or 0.0, lam)
        if not raw_mie or raw_ph:
            raise click.UsageError("kratzer raw coefficients are --a/--b/--c")
        return potentials.MieParams(va or 0.0, vb or 0.0, vc or 0.0, lam)

    if inline:
        if molecule:
            raise click.UsageError("give either --molecule or inline parameters, not both")
        if None in (d0_cm1, r0_angstrom, mass_amu):
            raise click.UsageError("inline molecules need --D0-cm1, --r0-angstrom and --mass-amu")
        mol = units.MoleculeSpec("inline", d0_cm1, r0_angstrom, mass_amu)
    else:
        mol = _resolve_molecule(molecule, molecule_file)

    if mol is not None:
        if unit_mode == "natural":
            raise click.UsageError("molecule parameters are laboratory data; use --units lab")
        if family == "pseudoharmonic":
            return potentials.pseudoharmonic_from_molecule(mol, usys)
        return potentials.mie_from_molecule(mol, usys)

    if unit_mode == "natural":
        if family == "pseudoharmonic":
            return potentials.natural_pseudoharmonic()
        return potentials.natural_kratzer()
    raise click.UsageError("lab units need --molecule, inline parameters, or raw coefficients")


def _resolve_output(output: str | None):
    if output is None or output == "-":
        return None
    path = Path(output)
    outdir = os.environ.get("PSEUDOMIE_OUTDIR")
    if outdir and not path.is_absolute():
        path = Path(outdir) / path
    return path


def _write(path: Path | None, text: str):
    if path is None:
        click.echo(text, nl=False)
    else:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text)


def format_levels_csv(levels) -> str:
    lines = ["n,l,energy_ev"]
    lines += [f"{lv.qn.n},{lv.qn.ell},{lv.energy:.6f}" for lv in levels]
    return "\n".join(lines) + "\n"


def format_levels_json(levels) -> str:
    rows = [
        {"n": lv.qn.n, "l": lv.qn.ell, "energy_ev": round(lv.energy, 6)} for lv in levels
    ]
    return json.dumps(rows, indent=2) + "\n"


def _check_n_max(n_max: int) -> int:
    if not 0 <= n_max <= N_MAX_GUARD:
        raise click.UsageError(f"n-max must lie in [0, {N_MAX_GUARD}]")
    return n_max


def _potential_flags(f):
    for opt in reversed(
        [
            click.option("--family", type=click.Choice(["pseudoharmonic", "kratzer"]), default=None),
            click.option("--units", "unit_mode", type=click.Choice(["lab", "natural"]), default=None),
            click.option("--molecule", default=None, help="Preset name (built-in: N2, CO)."),
            click.option("--molecule-file", default=None, help="Extra presets, sectioned key=value file."),
            click.option("--D0-cm1", "d0_cm1", type=float, default=None, help="Inline dissociation energy."),
            click.option("--r0-angstrom", type=float, default=None, help="Inline equilibrium distance."),
            click.option("--mass-amu", type=float, default=None, help="Inline reduced mass."),
            click.option("--a1", type=float, default=None, help="Raw r^2 coefficient (pseudoharmonic)."),
            click.option("--a2", type=float, default=None, help="Raw r^-2 coefficient (pseudoharmonic)."),
            click.option("--a3", type=float, default=None, help="Raw constant (pseudoharmonic)."),
            click.option("--a", "va", type=float, default=None, help="Raw r^-2 coefficient (kratzer)."),
            click.option("--b", "vb", type=float, default=None, help="Raw r^-1 coefficient (kratzer)."),
            click.option("--c", "vc", type=float, default=None, help="Raw constant (kratzer)."),
            click.option("--config", "config_path", default=None, help="Defaults file (key = value)."),
        ]
    ):
        f = opt(f)
    return f


@click.group()
def main():
    """Bound states of pseudoharmonic and Mie-type diatomic potentials."""


def _levels_command(kwargs, default_output):
    config = _read_config(kwargs["config_path"]) if kwargs["config_path"] else {}
    family = _merged(kwargs["family"], config, "family", "pseudoharmonic")
    unit_mode = _merged(kwargs["unit_mode"], config, "units", "lab")
    molecule = _merged(kwargs["molecule"], config, "molecule", None)
    n_max = kwargs["n_max"]
    if n_max is None:
        n_max = int(config.get("n_max", 4))
    fmt = _merged(kwargs["fmt"], config, "format", "csv")
    output = _merged(kwargs["output"], config, "output", default_output)
    _check_n_max(n_max)
    p = _build_potential(
        family, unit_mode, molecule, kwargs["molecule_file"],
        kwargs["d0_cm1"], kwargs["r0_angstrom"], kwargs["mass_amu"],
        kwargs["a1"], kwargs["a2"], kwargs["a3"],
        kwargs["va"], kwargs["vb"], kwargs["vc"],
    )
    try:
        levels = spectra.level_table(p, n_max)
    except (ValueError, potentials.NoBoundStateError) as exc:
        raise click.UsageError(str(exc))
    text = format_levels_csv(levels) if fmt == "csv" else format_levels_json(levels)
    _write(_resolve_output(output), text)


@main.command()
@_potential_flags
@click.option("--n-max", type=int, default=None, help="Highest radial quantum number (<= 12).")
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default=None)
@click.option("--output", default=None, help="Output path ('-' for stdout).")
def energies(**kwargs):
    """Print the level listing (stdout by default)."""
    _levels_command(kwargs, default_output=None)


@main.command()
@_potential_flags
@click.option("--n-max", type=int, default=None, help="Highest radial quantum number (<= 12).")
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default=None)
@click.option("--output", required=True, help="Output file path.")
def table(**kwargs):
    """Write the (n, l, E) table, six decimals, in the tabulation order."""
    _levels_command(kwargs, default_output=None)


@main.command()
@_potential_flags
@click.option("--pairs", default=None, help='Quantum-number pairs, e.g. "0,0 1,0 1,1".')
@click.option("--points", type=int, default=1000, show_default=True)
@click.option("--r-max", type=float, default=None, help="Grid upper edge (defaults per family).")
@click.option("--output", default=None, help="Output path ('-' for stdout).")
def wavefunction(**kwargs):
    """Sample the default six normalized wavefunctions on (0, r_max]."""
    config = _read_config(kwargs["config_path"]) if kwargs["config_path"] else {}
    family = _merged(kwargs["family"], config, "family", "pseudoharmonic")
    unit_mode = _merged(kwargs["unit_mode"], config, "units", "natural")
    molecule = _merged(kwargs["molecule"], config, "molecule", None)
    output = _merged(kwargs["output"], config, "output", None)
    p = _build_potential(
        family, unit_mode, molecule, kwargs["molecule_file"],
        kwargs["d0_cm1"], kwargs["r0_angstrom"], kwargs["mass_amu"],
        kwargs["a1"], kwargs["a2"], kwargs["a3"],
        kwargs["va"], kwargs["vb"], kwargs["vc"],
    )
    if kwargs["pairs"] is None:
        pairs = DEFAULT_PAIRS
    else:
        try:
            pairs = tuple(
                tuple(int(v) for v in token.split(",")) for token in kwargs["pairs"].split()
            )
            if any(len(pair) != 2 for pair in pairs):
                raise ValueError
        except ValueError:
            raise click.UsageError('pairs must look like "0,0 1,0 1,1"')
    if kwargs["points"] < 2:
        raise click.UsageError("need at least 2 grid points")
    build = (
        wavefunctions.radial_pseudoharmonic
        if isinstance(p, potentials.PseudoharmonicParams)
        else wavefunctions.radial_mie
    )
    try:
        wfs = [build(p, spectra.QuantumNumbers(n, ell)) for n, ell in pairs]
    except (ValueError, potentials.NoBoundStateError) as exc:
        raise click.UsageError(str(exc))
    r_max = kwargs["r_max"]
    if r_max is None:
        if unit_mode == "natural":
            r_max = 8.0 if isinstance(p, potentials.PseudoharmonicParams) else 35.0
        else:
            r_max = max(wf._r_cut for wf in wfs)
    grid = np.linspace(r_max / kwargs["points"], r_max, kwargs["points"])
    columns = [np.atleast_1d(wf(grid)) for wf in wfs]
    header = "r," + ",".join(f"R_n{n}_l{ell}" for n, ell in pairs)
    lines = [header]
    for i, r in enumerate(grid):
        lines.append(",".join([f"{r:.16e}"] + [f"{col[i]:.16e}" for col in columns]))
    _write(_resolve_output(output), "\n".join(lines) + "\n")


@dataclass(frozen=True)
class VerificationRow:
    n: int
    ell: int
    closed: float
    oracle_value: float | None
    abs_dev: float | None
    rel_dev: float | None
    passed: bool
    note: str = ""


def run_verification(p, n_max: int, rel_tol: float = 1e-6, perturb: float = 0.0):
    """Solve every level with the Numerov oracle and compare to closed forms.

    The relative deviation is measured against E - V_min.  A nonzero
    perturb shifts the closed-form values (a self-test of the comparison).
    """
    if isinstance(p, potentials.PseudoharmonicParams):
        energy = spectra.energy_pseudoharmonic
    else:
        energy = spectra.energy_mie
    try:
        v_min = p.minimum()[1]
    except ValueError:
        v_min = None
    rows = []
    for level in spectra.level_table(p, n_max):
        closed = level.energy + perturb
        qn = level.qn
        try:
            cfg = oracle.default_config(p, qn.ell, qn.n)
            solved = oracle.solve_eigenvalue(p, p.lam, qn.ell, qn.n, cfg)
        except oracle.EigenvalueSearchError as exc:
            rows.append(VerificationRow(qn.n, qn.ell, closed, None, None, None, False, str(exc)))
            continue
        abs_dev = abs(solved - closed)
        scale = abs(closed - v_min) if v_min is not None else abs(closed)
        rel_dev = abs_dev / scale if scale > 0 else math.inf
        rows.append(
            VerificationRow(qn.n, qn.ell, closed, solved, abs_dev, rel_dev, rel_dev < rel_tol)
        )
    return rows


@main.command()
@_potential_flags
@click.option("--n-max", type=int, default=None, help="Verify levels up to this n (<= 12).")
@click.option("--rel-tol", type=float, default=1e-6, show_default=True)
@click.option(
    "--perturb", type=float, default=0.0,
    help="Shift closed-form values by this much (self-test of the comparison).",
)
def verify(**kwargs):
    """Cross-check closed-form energies against the Numerov eigensolver."""
    config = _read_config(kwargs["config_path"]) if kwargs["config_path"] else {}
    family = _merged(kwargs["family"], config, "family", "pseudoharmonic")
    unit_mode = _merged(kwargs["unit_mode"], config, "units", "lab")
    molecule = _merged(kwargs["molecule"], config, "molecule", None)
    n_max = kwargs["n_max"]
    if n_max is None:
        n_max = int(config.get("n_max", 2))
    _check_n_max(n_max)
    p = _build_potential(
        family, unit_mode, molecule, kwargs["molecule_file"],
        kwargs["d0_cm1"], kwargs["r0_angstrom"], kwargs["mass_amu"],
        kwargs["a1"], kwargs["a2"], kwargs["a3"],
        kwargs["va"], kwargs["vb"], kwargs["vc"],
    )
    rows = run_verification(p, n_max, kwargs["rel_tol"], kwargs["perturb"])
    failures = 0
    for row in rows:
        if row.oracle_value is None:
            failures += 1
            click.echo(f"n={row.n} l={row.ell}  closed={row.closed:.8f} eV  oracle FAILED: {row.note}")
            continue
        verdict = "PASS" if row.passed else "FAIL"
        if not row.passed:
            failures += 1
        click.echo(
            f"n={row.n} l={row.ell}  closed={row.closed:.8f} eV  oracle={row.oracle_value:.8f} eV"
            f"  abs={row.abs_dev:.2e}  rel={row.rel_dev:.2e}  {verdict}"
        )
    click.echo(
        f"{len(rows)} levels: {len(rows) - failures} PASS, {failures} FAIL "
        f"(tolerance {kwargs['rel_tol']:g} relative to E - V_min)"
    )
    if failures:
        sys.exit(1)


if __name__ == "__main__":
    main()
