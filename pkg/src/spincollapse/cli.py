"""Command-line interface: entropy-conserving collapse from a shell.

Four subcommands share one vocabulary of flags:

* ``solve``      -- closed-form constrained minimization for one (state, axis).
* ``landscape``  -- tabular scan of the entropy surfaces over a (theta, phi) grid.
* ``oracle``     -- brute-force grid search reported side by side with the solver.
* ``simulate``   -- multi-step measurement trajectory, deterministic or Born-sampled.

``solve``/``oracle``/``simulate`` emit a single structured JSON document that
echoes every input flag, so any output can be re-run from its own ``input``
block; ``landscape`` emits delimiter-separated rows for external plotting.
Documents carry no timestamps: identical invocations produce bit-identical
output.  Angles are radians unless ``--degrees`` is given; emitted angles are
always canonicalized radians (theta in [0, pi], phi in [0, 2*pi)) at full
double precision.

Exit codes: 0 on success, 2 on usage errors, 3 when the oracle grid has no
feasible point.
"""

from __future__ import annotations

import csv
import io
import json
import math
import sys

import click
import numpy as np

from . import __version__
from .entropy import _binary_entropy_grid, s_i
from .simulate import RNG_NAME, SimConfig, simulate
from .solver import InfeasibleGridError, SolverSolution, brute_force_oracle, solve
from .spin import Axis, PureState, bloch_vector, state_from_amplitudes, unit_vector

_BASES = {"e": math.e, "2": 2.0}
_TOOL_NAME = "spincollapse"


# ---------------------------------------------------------------------------
# flag plumbing


def _state_options(f):
    f = click.option(
        "--amp-down",
        default=None,
        help="Complex down-amplitude literal (requires --amp-up).",
    )(f)
    f = click.option(
        "--amp-up",
        default=None,
        help="Complex up-amplitude literal, e.g. '0.6+0.2j' "
        "(alternative to --rho/--tau; requires --amp-down).",
    )(f)
    f = click.option(
        "--tau",
        type=float,
        default=0.0,
        show_default=True,
        help="Relative phase of the state (radians unless --degrees).",
    )(f)
    f = click.option(
        "--rho",
        type=float,
        default=None,
        help="Up-outcome probability weight of the state, in [0, 1].",
    )(f)
    return f


def _axis_options(f):
    f = click.option(
        "--degrees",
        is_flag=True,
        help="Interpret angle inputs (--theta-i, --phi-i, --tau) as degrees; "
        "output stays in radians.",
    )(f)
    f = click.option(
        "--phi-i",
        type=float,
        default=0.0,
        show_default=True,
        help="Azimuth of the measured axis (radians unless --degrees).",
    )(f)
    f = click.option(
        "--theta-i",
        type=float,
        required=True,
        help="Colatitude of the measured axis (radians unless --degrees).",
    )(f)
    return f


def _common_options(f):
    f = click.option(
        "--format",
        "fmt",
        type=click.Choice(["json", "csv", "tsv"]),
        default=None,
        help="Output format (default: json; landscape defaults to csv).",
    )(f)
    f = click.option(
        "--out",
        default=None,
        help="Write output to this path instead of stdout.",
    )(f)
    f = click.option(
        "--tol",
        type=float,
        default=1e-12,
        show_default=True,
        help="Eigenstate-detection tolerance on min(p_up, 1 - p_up).",
    )(f)
    f = click.option(
        "--entropy-base",
        type=click.Choice(["e", "2"]),
        default="e",
        show_default=True,
        help="Logarithm base for reported entropies (never changes minimizers).",
    )(f)
    f = click.option(
        "--mode",
        type=click.Choice(["strict", "reflective"]),
        default="strict",
        show_default=True,
        help="strict keeps the measured direction; reflective mirrors it "
        "about the state's Bloch vector.",
    )(f)
    return f


def _resolve_state(rho, tau, amp_up, amp_down, degrees) -> PureState:
    has_amp = amp_up is not None or amp_down is not None
    if has_amp and rho is not None:
        raise click.UsageError("give either --rho/--tau or --amp-up/--amp-down, not both")
    if has_amp:
        if amp_up is None or amp_down is None:
            raise click.UsageError("amplitude input needs both --amp-up and --amp-down")
        return _guard(
            state_from_amplitudes,
            _parse_complex(amp_up, "--amp-up"),
            _parse_complex(amp_down, "--amp-down"),
        )
    if rho is None:
        raise click.UsageError("state input needs --rho (with optional --tau) "
                               "or both --amp-up and --amp-down")
    t = math.radians(tau) if degrees else tau
    return _guard(PureState, rho, t)


def _resolve_axis(theta_i, phi_i, degrees) -> Axis:
    th = math.radians(theta_i) if degrees else theta_i
    ph = math.radians(phi_i) if degrees else phi_i
    return _guard(Axis, th, ph)


def _parse_complex(text: str, flag: str) -> complex:
    try:
        return complex(text.strip().replace(" ", ""))
    except ValueError:
        raise click.UsageError(
            f"{flag} expects a complex literal like '0.5+0.5j', got {text!r}"
        )


def _parse_grid(text: str, minimum: int) -> tuple[int, int]:
    head, sep, tail = text.lower().partition("x")
    try:
        if not sep:
            raise ValueError
        n, m = int(head), int(tail)
    except ValueError:
        raise click.UsageError(f"--grid expects NxM (e.g. 400x800), got {text!r}")
    if n < minimum or m < minimum:
        raise click.UsageError(f"--grid dimensions must be at least {minimum}, got {text!r}")
    return n, m


def _guard(fn, *args, **kwargs):
    """Map domain validation errors onto usage errors (exit code 2)."""
    try:
        return fn(*args, **kwargs)
    except ValueError as exc:
        raise click.UsageError(str(exc)) from exc


def _check_tol(tol: float) -> float:
    if not tol >= 0.0:
        raise click.UsageError(f"--tol must be non-negative, got {tol!r}")
    return tol


def _structured_format(fmt: str | None) -> None:
    if fmt not in (None, "json"):
        raise click.UsageError("this command emits a single json document; "
                               "use --format json (or omit --format)")


# ---------------------------------------------------------------------------
# output plumbing


def _axis_dict(a: Axis) -> dict:
    return {"theta": a.theta, "phi": a.phi}


def _solve_results(sol: SolverSolution) -> dict:
    return {
        "no_collapse": sol.no_collapse,
        "minimizers": [_axis_dict(a) for a in sol.minimizers],
        "objective": sol.objective,
        "extrema": [
            {"axis": _axis_dict(e.axis), "value": e.value, "kind": e.kind}
            for e in sol.extrema
        ],
    }


def _envelope(command, input_echo, entropy_base, mode, results, warnings) -> str:
    doc = {
        "tool": {"name": _TOOL_NAME, "version": __version__},
        "command": command,
        "input": input_echo,
        "entropy_base": entropy_base,
        "mode": mode,
        "results": results,
        "warnings": warnings,
    }
    return json.dumps(doc, indent=2) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out is None:
        click.echo(text, nl=False)
        return
    try:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise click.UsageError(f"cannot write --out {out!r}: {exc}")


# ---------------------------------------------------------------------------
# commands


@click.group()
@click.version_option(__version__, prog_name=_TOOL_NAME)
def main() -> None:
    """Entropy-conserving wavefunction collapse for a single spin-1/2."""


@main.command("solve")
@_state_options
@_axis_options
@_common_options
def cmd_solve(rho, tau, amp_up, amp_down, theta_i, phi_i, degrees,
              mode, entropy_base, tol, out, fmt):
    """Minimize the transfer entropy over entropy-conserving axes."""
    _structured_format(fmt)
    state = _resolve_state(rho, tau, amp_up, amp_down, degrees)
    axis = _resolve_axis(theta_i, phi_i, degrees)
    sol = _guard(solve, state, axis, mode,
                 base=_BASES[entropy_base], eigen_tol=_check_tol(tol))
    echo = {
        "rho": rho, "tau": tau, "amp_up": amp_up, "amp_down": amp_down,
        "theta_i": theta_i, "phi_i": phi_i, "degrees": degrees,
        "mode": mode, "entropy_base": entropy_base, "tol": tol,
    }
    _emit(_envelope("solve", echo, entropy_base, mode, _solve_results(sol), []), out)


@main.command("landscape")
@_state_options
@_axis_options
@_common_options
@click.option("--grid", default="200x400", show_default=True,
              help="Scan resolution NxM (theta rows x phi columns).")
def cmd_landscape(rho, tau, amp_up, amp_down, theta_i, phi_i, degrees,
                  mode, entropy_base, tol, out, fmt, grid):
    """Tabulate p_up, entropies, and the constraint residual over a grid.

    Columns: theta_f, phi_f, p_up, s_f, constraint_residual, s_up.  The scan
    is mode-independent; --mode and --tol are accepted for flag-set
    compatibility with the other subcommands but do not affect the table.
    """
    if fmt == "json":
        raise click.UsageError("landscape emits tabular data; use --format csv or tsv")
    delimiter = "\t" if fmt == "tsv" else ","
    _check_tol(tol)
    state = _resolve_state(rho, tau, amp_up, amp_down, degrees)
    axis_i = _resolve_axis(theta_i, phi_i, degrees)
    n_theta, n_phi = _parse_grid(grid, minimum=2)
    base = _BASES[entropy_base]

    thetas = np.linspace(0.0, math.pi, n_theta)
    phis = np.linspace(0.0, 2.0 * math.pi, n_phi, endpoint=False)
    st, ct = np.sin(thetas)[:, None], np.cos(thetas)[:, None]
    cp, sp = np.cos(phis)[None, :], np.sin(phis)[None, :]
    m = bloch_vector(state)
    n_i = unit_vector(axis_i)
    dot_m = st * cp * m[0] + st * sp * m[1] + ct * m[2]
    dot_i = st * cp * n_i[0] + st * sp * n_i[1] + ct * n_i[2]
    p_up = np.clip(0.5 * (1.0 + dot_m), 0.0, 1.0)
    s_f_grid = _binary_entropy_grid(p_up, base)
    s_up_grid = _binary_entropy_grid(np.clip(0.5 * (1.0 + dot_i), 0.0, 1.0), base)
    residual = s_f_grid - s_i(state, axis_i, base)

    buf = io.StringIO()
    writer = csv.writer(buf, delimiter=delimiter, lineterminator="\n")
    writer.writerow(["theta_f", "phi_f", "p_up", "s_f", "constraint_residual", "s_up"])
    for i in range(n_theta):
        for j in range(n_phi):
            writer.writerow([
                float(thetas[i]), float(phis[j]), float(p_up[i, j]),
                float(s_f_grid[i, j]), float(residual[i, j]), float(s_up_grid[i, j]),
            ])
    _emit(buf.getvalue(), out)


@main.command("oracle")
@_state_options
@_axis_options
@_common_options
@click.option("--grid", default="400x800", show_default=True,
              help="Search resolution NxM (theta rows x phi columns), each >= 8.")
@click.option("--constraint-tol", type=float, default=5e-3, show_default=True,
              help="Feasibility band on |s_f - s_i| for grid points.")
@click.option("--exclude-trivial", type=float, default=None,
              help="Drop grid points within this angular radius of the "
              "measured axis and its antipode.")
def cmd_oracle(rho, tau, amp_up, amp_down, theta_i, phi_i, degrees,
               mode, entropy_base, tol, out, fmt, grid,
               constraint_tol, exclude_trivial):
    """Brute-force grid search reported beside the closed-form solver."""
    _structured_format(fmt)
    state = _resolve_state(rho, tau, amp_up, amp_down, degrees)
    axis_i = _resolve_axis(theta_i, phi_i, degrees)
    grid_dims = _parse_grid(grid, minimum=2)
    base = _BASES[entropy_base]
    eigen_tol = _check_tol(tol)

    echo = {
        "rho": rho, "tau": tau, "amp_up": amp_up, "amp_down": amp_down,
        "theta_i": theta_i, "phi_i": phi_i, "degrees": degrees,
        "mode": mode, "entropy_base": entropy_base, "tol": tol,
        "grid": grid, "constraint_tol": constraint_tol,
        "exclude_trivial": exclude_trivial,
    }
    warnings = []
    if exclude_trivial is not None:
        warnings.append(
            "excluding a neighborhood of the trivial directions can place the "
            "grid minimum on the exclusion boundary rather than at an interior "
            "critical point"
        )

    sol = _guard(solve, state, axis_i, mode, base=base, eigen_tol=eigen_tol)
    results = {"no_collapse": sol.no_collapse, "solver": _solve_results(sol)}
    if sol.no_collapse:
        results["oracle"] = {"no_collapse": True}
        results["discrepancy"] = None
    else:
        try:
            axis_o, obj_o = _guard(
                brute_force_oracle, state, axis_i,
                grid=grid_dims, constraint_tol=constraint_tol,
                exclude=exclude_trivial, base=base, eigen_tol=eigen_tol,
            )
        except InfeasibleGridError as exc:
            results["oracle"] = {"error": "infeasible-grid", "message": str(exc)}
            results["discrepancy"] = None
            _emit(_envelope("oracle", echo, entropy_base, mode, results, warnings), out)
            sys.exit(3)
        results["oracle"] = {
            "no_collapse": False,
            "axis": _axis_dict(axis_o),
            "objective": obj_o,
        }
        results["discrepancy"] = obj_o - sol.objective
    _emit(_envelope("oracle", echo, entropy_base, mode, results, warnings), out)


@main.command("simulate")
@_state_options
@_axis_options
@_common_options
@click.option("--steps", type=int, required=True, help="Number of measurements (>= 1).")
@click.option("--outcome", default="risk:born-surprise", show_default=True,
              help="Outcome rule: 'born' (seeded sampling) or 'risk:<name>'.")
@click.option("--seed", type=int, default=None,
              help="RNG seed; required when --outcome born.")
def cmd_simulate(rho, tau, amp_up, amp_down, theta_i, phi_i, degrees,
                 mode, entropy_base, tol, out, fmt, steps, outcome, seed):
    """Run a measurement trajectory and emit every step."""
    _structured_format(fmt)
    state = _resolve_state(rho, tau, amp_up, amp_down, degrees)
    axis_i = _resolve_axis(theta_i, phi_i, degrees)
    config = _guard(
        SimConfig, steps=steps, mode=mode, outcome=outcome, seed=seed,
        entropy_base=_BASES[entropy_base], eigen_tol=_check_tol(tol),
    )
    trajectory = simulate(state, axis_i, config)
    echo = {
        "rho": rho, "tau": tau, "amp_up": amp_up, "amp_down": amp_down,
        "theta_i": theta_i, "phi_i": phi_i, "degrees": degrees,
        "mode": mode, "entropy_base": entropy_base, "tol": tol,
        "steps": steps, "outcome": outcome, "seed": seed,
    }
    warnings = []
    if outcome.startswith("risk:"):
        warnings.append(
            f"risk function {outcome[len('risk:'):]!r} is an illustrative "
            "stand-in: the collapse model does not prescribe one"
        )
    results = {
        "rng": RNG_NAME if outcome == "born" else None,
        "trajectory": [ts.to_dict() for ts in trajectory],
    }
    _emit(_envelope("simulate", echo, entropy_base, mode, results, warnings), out)


if __name__ == "__main__":
    main()
