"""Outcome-selection rules for deterministic trajectory simulation.

After the solver proposes the next measurement axis, the simulator needs a
collapse outcome s in {+1, -1}.  The sampling route draws s from the Born
distribution; the rules here instead pick s by minimizing a user-supplied
scalar "risk" of observing each outcome, making the whole trajectory
deterministic and replayable.

A rule is any callable (axis_f, s, context) -> float: it sees the candidate
follow-up axis proposed by the solver, the outcome under consideration, and
a `RiskContext` holding the pre-collapse state together with the axis
currently being measured.  Rules are automatically well defined on
measurement directions -- a function of the canonical axis alone -- because
`Axis` canonicalizes its angles on construction.

No particular risk functional is singled out by the collapse model itself,
so the builtins are explicitly labelled illustrative stand-ins.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .spin import Axis, PureState, bloch_vector, born_up, unit_vector

__all__ = [
    "RiskContext",
    "RiskFunction",
    "builtin_risks",
    "get_risk",
    "select_outcome",
]

_STAND_IN = "illustrative stand-in: the model does not prescribe a risk function"


@dataclass(frozen=True)
class RiskContext:
    """What a rule may look at besides the candidate axis: the pre-collapse
    state and the axis currently being measured."""

    state: PureState
    axis_measured: Axis


@dataclass(frozen=True)
class RiskFunction:
    """A named rule assigning a scalar risk to each candidate outcome.

    `rule(axis_f, s, context)` may return +inf to veto an outcome outright
    (e.g. a Born-impossible one) but never NaN, which `evaluate` rejects
    because it would make the selection order-dependent.
    """

    name: str
    rule: Callable[[Axis, int, RiskContext], float]
    note: str = ""

    def evaluate(self, axis_f: Axis, s: int, context: RiskContext) -> float:
        if s not in (1, -1):
            raise ValueError(f"outcome must be +1 or -1, got {s!r}")
        value = float(self.rule(axis_f, s, context))
        if math.isnan(value):
            raise ValueError(f"risk {self.name!r} returned NaN for outcome {s:+d}")
        return value


def _constant(axis_f: Axis, s: int, context: RiskContext) -> float:
    return 0.0


def _born_surprise(axis_f: Axis, s: int, context: RiskContext) -> float:
    """Negative log Born probability of the outcome on the measured axis;
    certain losses are +inf.  Ignores the candidate axis."""
    p_up = born_up(context.state, context.axis_measured)
    p = p_up if s == 1 else 1.0 - p_up
    return math.inf if p <= 0.0 else -math.log(p)


def _alignment(axis_f: Axis, s: int, context: RiskContext) -> float:
    """Penalize outcomes whose collapsed spin s*n_f would point away from the
    current Bloch vector: risk = -s * (n_f . m)."""
    n_f = unit_vector(axis_f)
    m = bloch_vector(context.state)
    return -float(s) * float(np.dot(n_f, m))


_BUILTINS = (
    RiskFunction("constant", _constant, _STAND_IN),
    RiskFunction("born-surprise", _born_surprise, _STAND_IN),
    RiskFunction("alignment", _alignment, _STAND_IN),
)


def builtin_risks() -> tuple[RiskFunction, ...]:
    """The bundled rules, each flagged as an illustrative stand-in."""
    return _BUILTINS


def get_risk(name: str) -> RiskFunction:
    for rf in _BUILTINS:
        if rf.name == name:
            return rf
    known = ", ".join(rf.name for rf in _BUILTINS)
    raise ValueError(f"unknown risk function {name!r}; builtins are: {known}")


def select_outcome(
    risk: RiskFunction, axis_f: Axis, context: RiskContext
) -> tuple[int, float]:
    """The outcome of lower risk at the candidate axis, with its risk value.

    Exact ties resolve to +1.  A +inf risk vetoes that outcome; if both
    outcomes are vetoed no selection is meaningful and a ValueError is
    raised.
    """
    up = risk.evaluate(axis_f, 1, context)
    down = risk.evaluate(axis_f, -1, context)
    s, value = (-1, down) if down < up else (1, up)
    if value == math.inf:
        raise ValueError(f"risk {risk.name!r} vetoes every outcome (+inf for both)")
    return s, value
