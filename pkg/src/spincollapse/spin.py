"""Spin-1/2 measurement geometry: axes, pure states, eigenspinors, Born weights.

Conventions
-----------
A measurement axis is a point on the unit sphere with colatitude ``theta`` in
[0, pi] and azimuth ``phi`` in [0, 2*pi); its unit vector is
``(sin(theta)*cos(phi), sin(theta)*sin(phi), cos(theta))``.  At the poles the
azimuth carries no information and is canonicalized to 0.

The spin projection along an axis is the Hermitian matrix

    [[cos(theta),              sin(theta)*exp(-i*phi)],
     [sin(theta)*exp(+i*phi), -cos(theta)            ]]

with eigenvalues +1 and -1 and phase-fixed eigenvectors

    up   = ( cos(theta/2)*exp(-i*phi), sin(theta/2) )
    down = (-sin(theta/2)*exp(-i*phi), cos(theta/2) )

Pure states are stored gauge-fixed as ``(sqrt(rho)*exp(-i*tau), sqrt(1-rho))``
with ``rho`` in [0, 1] and ``tau`` in [0, 2*pi): the second amplitude is real
and non-negative, and when either amplitude vanishes the other is made real
positive, so ``tau`` is 0 whenever ``rho`` is 0 or 1.  The Bloch vector of a
state is

    ( 2*sqrt(rho*(1-rho))*cos(tau), 2*sqrt(rho*(1-rho))*sin(tau), 2*rho - 1 )

and the probability of the +1 outcome along an axis with unit vector ``n`` is
``(1 + n . bloch) / 2``.

Everything here is an immutable value or a pure function.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "DEFAULT_ATOL",
    "Axis",
    "PureState",
    "Spinor",
    "SIGMA_X",
    "SIGMA_Y",
    "SIGMA_Z",
    "amplitudes",
    "antipode",
    "axis_from_vector",
    "bloch_vector",
    "born_up",
    "canonicalize_axis",
    "eigenpair",
    "overlap",
    "spin_operator",
    "state_from_amplitudes",
    "state_from_bloch",
    "state_from_eigenvector",
    "unit_vector",
]

TWO_PI = 2.0 * math.pi

# Absolute tolerance for O(1) double-precision quantities.
DEFAULT_ATOL = 1e-12

# Below this transverse radius (relative to the vector norm) a direction is
# indistinguishable from a pole at DEFAULT_ATOL and is snapped onto it.
_POLE_SNAP = 1e-13


def _reduce_angles(theta: float, phi: float) -> tuple[float, float]:
    """Range-reduce a raw (theta, phi) pair without moving its direction."""
    if theta < 0.0:
        theta, phi = -theta, phi + math.pi
    theta %= TWO_PI
    if theta >= TWO_PI:  # float % can round up to the modulus itself
        theta = 0.0
    if theta > math.pi:
        theta = TWO_PI - theta
        phi += math.pi
    phi %= TWO_PI
    if phi >= TWO_PI:
        phi = 0.0
    if theta == 0.0 or theta == math.pi:
        phi = 0.0
    return theta + 0.0, phi + 0.0  # normalize -0.0


@dataclass(frozen=True)
class Axis:
    """A direction on the unit sphere, canonicalized on construction.

    Any finite angle pair is accepted; equivalent parametrizations of one
    direction reduce to the same canonical representative, so downstream code
    only ever sees theta in [0, pi] and phi in [0, 2*pi).
    """

    theta: float
    phi: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.theta) and math.isfinite(self.phi)):
            raise ValueError(
                f"axis angles must be finite, got ({self.theta!r}, {self.phi!r})"
            )
        theta, phi = _reduce_angles(float(self.theta), float(self.phi))
        object.__setattr__(self, "theta", theta)
        object.__setattr__(self, "phi", phi)


def canonicalize_axis(theta: float, phi: float) -> Axis:
    """Reduce raw angles to the canonical axis pointing the same way."""
    return Axis(theta, phi)


def antipode(axis: Axis) -> Axis:
    """The opposite direction."""
    return Axis(math.pi - axis.theta, axis.phi + math.pi)


def unit_vector(axis: Axis) -> np.ndarray:
    """Cartesian unit vector of an axis."""
    st = math.sin(axis.theta)
    return np.array([st * math.cos(axis.phi), st * math.sin(axis.phi), math.cos(axis.theta)])


def axis_from_vector(vec) -> Axis:
    """Axis pointing along a nonzero 3-vector (any positive length)."""
    v = np.asarray(vec, dtype=float)
    if v.shape != (3,):
        raise ValueError(f"expected a 3-vector, got shape {v.shape}")
    if not np.all(np.isfinite(v)):
        raise ValueError("vector components must be finite")
    x, y, z = float(v[0]), float(v[1]), float(v[2])
    r_xy = math.hypot(x, y)
    norm = math.hypot(r_xy, z)
    if norm == 0.0:
        raise ValueError("cannot orient a zero vector")
    if r_xy <= _POLE_SNAP * norm:
        return Axis(0.0 if z > 0.0 else math.pi, 0.0)
    return Axis(math.atan2(r_xy, z), math.atan2(y, x))


SIGMA_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
SIGMA_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)


def spin_operator(axis: Axis) -> np.ndarray:
    """2x2 Hermitian projection operator along the axis."""
    ct, st = math.cos(axis.theta), math.sin(axis.theta)
    ph = cmath.exp(1.0j * axis.phi)
    return np.array([[ct, st / ph], [st * ph, -ct]], dtype=complex)


@dataclass(frozen=True)
class Spinor:
    """A two-component complex amplitude pair of unit norm."""

    up: complex
    down: complex

    def __post_init__(self) -> None:
        up, down = complex(self.up), complex(self.down)
        norm2 = abs(up) ** 2 + abs(down) ** 2
        if not math.isfinite(norm2):
            raise ValueError("spinor components must be finite")
        if abs(norm2 - 1.0) > DEFAULT_ATOL:
            raise ValueError(f"spinor is not normalized: |up|^2+|down|^2 = {norm2!r}")
        object.__setattr__(self, "up", up)
        object.__setattr__(self, "down", down)

    def as_array(self) -> np.ndarray:
        return np.array([self.up, self.down], dtype=complex)


def eigenpair(axis: Axis) -> tuple[Spinor, Spinor]:
    """Phase-fixed (+1, -1) eigenvectors of `spin_operator(axis)`."""
    half = 0.5 * axis.theta
    c, s = math.cos(half), math.sin(half)
    ph = cmath.exp(-1.0j * axis.phi)
    return Spinor(c * ph, s), Spinor(-s * ph, c)


def overlap(bra: Spinor, ket: Spinor) -> complex:
    """Inner product <bra|ket>, conjugate-linear in the first argument."""
    return bra.up.conjugate() * ket.up + bra.down.conjugate() * ket.down


@dataclass(frozen=True)
class PureState:
    """Gauge-fixed pure state (sqrt(rho) e^{-i tau}, sqrt(1-rho))."""

    rho: float
    tau: float

    def __post_init__(self) -> None:
        rho, tau = float(self.rho), float(self.tau)
        if not (math.isfinite(rho) and math.isfinite(tau)):
            raise ValueError(f"state parameters must be finite, got ({rho!r}, {tau!r})")
        if rho < 0.0 or rho > 1.0:
            if rho < -DEFAULT_ATOL or rho > 1.0 + DEFAULT_ATOL:
                raise ValueError(f"rho must lie in [0, 1], got {rho!r}")
            rho = min(1.0, max(0.0, rho))
        tau %= TWO_PI
        if tau >= TWO_PI:
            tau = 0.0
        if rho == 0.0 or rho == 1.0:
            tau = 0.0  # phase is pure gauge when one amplitude vanishes
        object.__setattr__(self, "rho", rho + 0.0)
        object.__setattr__(self, "tau", tau + 0.0)


def amplitudes(state: PureState) -> Spinor:
    """Spinor components of the state in its canonical gauge."""
    return Spinor(math.sqrt(state.rho) * cmath.exp(-1.0j * state.tau), math.sqrt(1.0 - state.rho))


def born_up(state: PureState, axis: Axis) -> float:
    """Probability of the +1 outcome when measuring the state along the axis."""
    half = 0.5 * axis.theta
    c2 = math.cos(half) ** 2
    s2 = math.sin(half) ** 2
    cross = math.sqrt(state.rho * (1.0 - state.rho)) * math.sin(axis.theta)
    p = state.rho * c2 + (1.0 - state.rho) * s2 + cross * math.cos(axis.phi - state.tau)
    return min(1.0, max(0.0, p))


def bloch_vector(state: PureState) -> np.ndarray:
    """Expectation values of the three spin projections."""
    r = 2.0 * math.sqrt(state.rho * (1.0 - state.rho))
    return np.array([r * math.cos(state.tau), r * math.sin(state.tau), 2.0 * state.rho - 1.0])


def state_from_eigenvector(axis: Axis, s: int) -> PureState:
    """Post-measurement state: the s = +1 or s = -1 eigenstate of the axis."""
    if s not in (1, -1):
        raise ValueError(f"outcome must be +1 or -1, got {s!r}")
    half = 0.5 * axis.theta
    if s == 1:
        return PureState(math.cos(half) ** 2, axis.phi)
    return PureState(math.sin(half) ** 2, axis.phi + math.pi)


def state_from_amplitudes(up: complex, down: complex) -> PureState:
    """Gauge-fix a raw amplitude pair into canonical (rho, tau) form.

    The pair is normalized first, so any nonzero amplitude scale is accepted.
    """
    up, down = complex(up), complex(down)
    if not all(map(math.isfinite, (up.real, up.imag, down.real, down.imag))):
        raise ValueError("amplitudes must be finite")
    norm = math.hypot(abs(up), abs(down))
    if norm <= DEFAULT_ATOL:
        raise ValueError("amplitude pair has zero norm")
    up, down = up / norm, down / norm
    mag_down = abs(down)
    if mag_down == 0.0:
        return PureState(1.0, 0.0)
    up *= down.conjugate() / mag_down  # rotate the global phase: down becomes real >= 0
    rho = min(1.0, max(0.0, abs(up) ** 2))
    if abs(up) == 0.0:
        return PureState(0.0, 0.0)
    return PureState(rho, -cmath.phase(up))


def state_from_bloch(vec) -> PureState:
    """Pure state whose Bloch vector points along the given nonzero 3-vector."""
    v = np.asarray(vec, dtype=float)
    if v.shape != (3,):
        raise ValueError(f"expected a 3-vector, got shape {v.shape}")
    if not np.all(np.isfinite(v)):
        raise ValueError("vector components must be finite")
    norm = float(np.linalg.norm(v))
    if norm == 0.0:
        raise ValueError("cannot orient a zero vector")
    x, y, z = (float(c) for c in v / norm)
    rho = min(1.0, max(0.0, 0.5 * (1.0 + z)))
    tau = math.atan2(y, x) if (x != 0.0 or y != 0.0) else 0.0
    return PureState(rho, tau)
