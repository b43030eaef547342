"""Parameter containers for single squeezed vacua and their two-state superpositions.

A single-mode squeezed vacuum is parametrized by a magnitude r >= 0 and a
phase theta; its Fock expansion lives on even photon numbers with geometric
weight tanh(r). A superposition ("Janus state")

    |psi> = |chi| |xi> + |eta| e^{i delta} |zeta>

adds two real amplitudes and one superposition phase. The reduced variables

    x = tanh^2 r,   y = tanh^2 s,   z = tanh r tanh s e^{i Delta},
    Delta = theta - phi

carry all squeezing dependence of the closed forms, and in the equal-squeezing
case the constants K = (1 + 2 sinh^2 r)^{-1/2} and L = 2 K |chi| |eta| control
the optimal-phase formulas.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

TWO_PI = 2.0 * math.pi

# Two squeezing magnitudes are treated as equal below this separation.
EQUAL_SQUEEZE_TOL = 1e-14


def reduce_angle(angle: float) -> float:
    """Reduce an angle to [0, 2*pi)."""
    a = math.fmod(float(angle), TWO_PI)
    if a < 0.0:
        a += TWO_PI
    # fmod can return TWO_PI-epsilon rounding back up to TWO_PI
    return 0.0 if a >= TWO_PI else a


@dataclass(frozen=True)
class SqueezeParam:
    """One squeezed vacuum: magnitude ``r`` >= 0 and phase ``theta`` in [0, 2*pi)."""

    r: float
    theta: float = 0.0

    def __post_init__(self):
        if not math.isfinite(self.r) or self.r < 0.0:
            raise ValueError(f"squeezing magnitude must be finite and >= 0, got {self.r}")
        if math.tanh(self.r) >= 1.0:
            # |alpha| < 1 must hold in binary64; tanh saturates near r = 18.7
            raise ValueError(f"squeezing magnitude {self.r} saturates tanh in double precision")
        object.__setattr__(self, "theta", reduce_angle(self.theta))

    @property
    def alpha(self) -> complex:
        """tanh(r) e^{i theta}; always strictly inside the unit disk."""
        return math.tanh(self.r) * cmath.exp(1j * self.theta)

    @property
    def x(self) -> float:
        """tanh^2(r)."""
        return math.tanh(self.r) ** 2


@dataclass(frozen=True)
class JanusParams:
    """Full superposition descriptor: two squeezed vacua, two amplitudes, one phase."""

    xi: SqueezeParam
    zeta: SqueezeParam
    chi_mag: float
    eta_mag: float
    delta: float = 0.0

    def __post_init__(self):
        if self.chi_mag < 0.0 or self.eta_mag < 0.0:
            raise ValueError("amplitudes must be nonnegative")
        if self.chi_mag == 0.0 and self.eta_mag == 0.0:
            raise ValueError("amplitudes must not both be zero")
        object.__setattr__(self, "delta", reduce_angle(self.delta))

    @property
    def Delta(self) -> float:
        """Relative orientation theta - phi, reduced to [0, 2*pi)."""
        return reduce_angle(self.xi.theta - self.zeta.theta)

    @property
    def chi(self) -> complex:
        """chi taken real and nonnegative (global phase convention)."""
        return complex(self.chi_mag)

    @property
    def eta(self) -> complex:
        """|eta| e^{i delta}."""
        return self.eta_mag * cmath.exp(1j * self.delta)


@dataclass(frozen=True)
class ReducedVars:
    """The x, y, z shorthand plus the equal-squeezing constants K and L.

    ``K`` and ``L`` are populated only when the two magnitudes agree to
    EQUAL_SQUEEZE_TOL; otherwise they are None.
    """

    x: float
    y: float
    z: complex
    Delta: float
    K: float | None = None
    L: float | None = None


@dataclass(frozen=True)
class PhaseGeometry:
    """Modulus factor f(r, Delta) and phase gamma of cosh^2 r - sinh^2 r e^{i Delta}."""

    f: float
    gamma: float


@dataclass(frozen=True)
class OptimumRecord:
    """A located minimum: the full parameter tuple, its g2, and bookkeeping.

    ``kind`` is one of {"grid", "refined", "boundary"}; ``evaluations`` counts
    objective calls; ``skipped`` counts infeasible grid points; ``converged``
    is False when a refinement stopped on its evaluation budget.
    """

    r: float
    s: float
    Delta: float
    delta: float
    eta_mag: float
    chi_mag: float
    g2: float
    kind: str = "grid"
    evaluations: int = 0
    skipped: int = 0
    converged: bool = True

    def params(self) -> JanusParams:
        """Rebuild the JanusParams this record describes (theta = Delta, phi = 0)."""
        return JanusParams(
            xi=SqueezeParam(self.r, self.Delta),
            zeta=SqueezeParam(self.s, 0.0),
            chi_mag=self.chi_mag,
            eta_mag=self.eta_mag,
            delta=self.delta,
        )


@dataclass(frozen=True)
class Axis:
    """One scan axis: parameter name, inclusive bounds, and point count."""

    name: str
    lo: float
    hi: float
    points: int

    def __post_init__(self):
        if self.name not in PARAM_NAMES:
            raise ValueError(f"unknown axis name {self.name!r}; expected one of {sorted(PARAM_NAMES)}")
        if self.points < 2:
            raise ValueError("an axis needs at least 2 points")
        if not self.lo < self.hi:
            raise ValueError(f"axis {self.name}: lo must be < hi")

    def grid(self):
        step = (self.hi - self.lo) / (self.points - 1)
        return [self.lo + i * step for i in range(self.points)]


PARAM_NAMES = frozenset({"r", "s", "Delta", "delta", "eta"})


@dataclass(frozen=True)
class GridSpec:
    """Axes to scan plus fixed values for the remaining parameters."""

    axes: tuple[Axis, ...]
    fixed: dict = field(default_factory=dict)

    def __post_init__(self):
        names = [a.name for a in self.axes]
        if len(set(names)) != len(names):
            raise ValueError("duplicate axis names")
        for k in self.fixed:
            if k not in PARAM_NAMES:
                raise ValueError(f"unknown fixed parameter {k!r}")
            if k in names:
                raise ValueError(f"parameter {k!r} is both an axis and fixed")
        object.__setattr__(self, "axes", tuple(self.axes))
        object.__setattr__(self, "fixed", dict(self.fixed))

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(a.points for a in self.axes)
