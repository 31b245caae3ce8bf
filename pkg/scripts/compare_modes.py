#!/usr/bin/env python3
"""Compare axis-update modes and outcome rules on one trajectory.

Runs three simulations from a shared initial state and measurement axis:

* strict mode with the born-surprise risk rule (deterministic),
* reflective mode with the born-surprise risk rule (deterministic),
* reflective mode with seeded Born sampling,

and prints the per-step outcome, up probability, and measured axis side by
side.  Strict mode locks onto the just-measured direction after the first
collapse, so every later row is a certain no-collapse repeat; the reflective
update keeps the axis moving along reflections about the evolving Bloch
vector.  The Born column shows where sampled outcomes part ways with the
risk-selected ones.

Example:
    python3 scripts/compare_modes.py --steps 6 --seed 7
"""

from __future__ import annotations

import argparse
import math

from spincollapse import Axis, PureState, SimConfig, simulate


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--rho", type=float, default=1.0, help="up-probability of the initial state along z (default: %(default)s)")
    parser.add_argument("--tau", type=float, default=0.0, help="relative phase of the initial state in radians (default: %(default)s)")
    parser.add_argument("--theta-i", type=float, default=math.pi / 3, help="polar angle of the first measured axis in radians (default: pi/3)")
    parser.add_argument("--phi-i", type=float, default=0.0, help="azimuth of the first measured axis in radians (default: %(default)s)")
    parser.add_argument("--steps", type=int, default=6, help="number of measurements per variant (default: %(default)s)")
    parser.add_argument("--seed", type=int, default=7, help="seed for the Born-sampled variant (default: %(default)s)")
    parser.add_argument("--risk", default="born-surprise", help="risk rule for the deterministic variants (default: %(default)s)")
    return parser


def fmt_cell(step) -> str:
    mark = "*" if step.no_collapse else " "
    return (
        f"s={step.s:+d}{mark} p={step.p_up:6.4f} "
        f"ax=({step.axis_measured.theta:6.4f},{step.axis_measured.phi:6.4f})"
    )


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    state = PureState(args.rho, args.tau)
    axis = Axis(args.theta_i, args.phi_i)

    variants = [
        ("strict/risk", SimConfig(steps=args.steps, mode="strict", outcome=f"risk:{args.risk}")),
        ("reflective/risk", SimConfig(steps=args.steps, mode="reflective", outcome=f"risk:{args.risk}")),
        (f"reflective/born s={args.seed}", SimConfig(steps=args.steps, mode="reflective", outcome="born", seed=args.seed)),
    ]
    trajectories = [(label, simulate(state, axis, cfg)) for label, cfg in variants]

    print(f"initial state rho={args.rho} tau={args.tau}; first axis ({axis.theta:.6f}, {axis.phi:.6f})")
    print(f"risk rule: {args.risk}; '*' marks a certain no-collapse repeat")
    print()
    width = max(len(fmt_cell(t[0])) for _, t in trajectories)
    header = "step | " + " | ".join(label.ljust(width) for label, _ in trajectories)
    print(header)
    print("-" * len(header))
    for k in range(args.steps):
        cells = " | ".join(fmt_cell(traj[k]).ljust(width) for _, traj in trajectories)
        print(f"{k:4d} | {cells}")

    print()
    for label, traj in trajectories:
        collapses = sum(not t.no_collapse for t in traj)
        total_entropy = sum(t.s_i for t in traj)
        last = traj[-1]
        print(
            f"{label:<24s} collapses={collapses}/{args.steps} "
            f"sum(s_i)={total_entropy:.6f} "
            f"final state=(rho={last.state_after.rho:.6f}, tau={last.state_after.tau:.6f}) "
            f"next axis=({last.axis_next.theta:.6f}, {last.axis_next.phi:.6f})"
        )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
