"""Closed-form photon statistics of superposed single-mode squeezed vacua.

Everything here is exact analytics in the reduced variables

    x = tanh^2 r,  y = tanh^2 s,  z = tanh r tanh s e^{i Delta}.

The building blocks are the overlap and the two cross moments

    <zeta|xi>            = (1-x)^{1/4} (1-y)^{1/4} (1-z)^{-1/2}
    <zeta|a+ a|xi>       = (1-x)^{1/4} (1-y)^{1/4} z (1-z)^{-3/2}
    <zeta|a+ a+ a a|xi>  = (1-x)^{1/4} (1-y)^{1/4} z (2z+1) (1-z)^{-5/2}

with all fractional powers on the principal branch (branch cut along the
negative real axis; |z| < 1 keeps 1-z in the right half plane, so the branch
is never ambiguous). From these, g2 = <a+ a+ a a> / <a+ a>^2 of the
normalized superposition |chi||xi> + |eta| e^{i delta} |zeta> follows in
closed form, together with its equal-squeezing and optimal-phase
specializations and the closed-form boundary curve.

Every formula in this module is validated against the brute-force Fock-space
oracle in :mod:`janusg2.fock`.
"""

from __future__ import annotations

import cmath
import math

from .errors import (
    InfeasibleAmplitudeError,
    SingularOverlapError,
    UndefinedG2Error,
    UnnormalizedInputError,
    UnsupportedOrderError,
)
from .params import (
    EQUAL_SQUEEZE_TOL,
    JanusParams,
    PhaseGeometry,
    ReducedVars,
    SqueezeParam,
)

# Default tolerances; CLI configuration may override the call-site values.
NORM_TOL = 1e-10
MEAN_PHOTON_FLOOR = 1e-12
SINGULARITY_GUARD = 1e-14

_SERIES_COEFFS = (0.5, 0.75, 0.375, 35.0 / 16.0)

__all__ = [
    "reduced_vars",
    "overlap",
    "norm_residual",
    "solve_chi",
    "cross_n",
    "cross_n2",
    "g2_general",
    "phase_geometry",
    "g2_equal_squeeze",
    "g2_optimal",
    "g2_boundary",
    "g2_boundary_series",
    "optimal_phase_K",
]


def optimal_phase_K(r: float) -> float:
    """K = (1 + 2 sinh^2 r)^{-1/2}, the anti-aligned equal-squeezing overlap."""
    return 1.0 / math.sqrt(1.0 + 2.0 * math.sinh(r) ** 2)


def reduced_vars(p: JanusParams) -> ReducedVars:
    """x, y, z and Delta for a superposition; K, L only when r = s."""
    x = p.xi.x
    y = p.zeta.x
    Delta = p.Delta
    z = math.tanh(p.xi.r) * math.tanh(p.zeta.r) * cmath.exp(1j * Delta)
    K = L = None
    if abs(p.xi.r - p.zeta.r) <= EQUAL_SQUEEZE_TOL:
        K = optimal_phase_K(p.xi.r)
        L = 2.0 * K * p.chi_mag * p.eta_mag
    return ReducedVars(x=x, y=y, z=z, Delta=Delta, K=K, L=L)


def _guard_z(z: complex) -> None:
    if abs(1.0 - z) < SINGULARITY_GUARD:
        raise SingularOverlapError(f"1 - z = {1.0 - z} is inside the singularity guard")


def _prefactor(x: float, y: float) -> float:
    return (1.0 - x) ** 0.25 * (1.0 - y) ** 0.25


def overlap(xi: SqueezeParam, zeta: SqueezeParam) -> complex:
    """<zeta|xi> for two squeezed vacua; equals 1 when the parameters coincide."""
    x, y = xi.x, zeta.x
    z = xi.alpha * zeta.alpha.conjugate()
    _guard_z(z)
    return _prefactor(x, y) * (1.0 - z) ** -0.5


def cross_n(xi: SqueezeParam, zeta: SqueezeParam) -> complex:
    """<zeta|a+ a|xi>; reduces to sinh^2 r = x/(1-x) when the states coincide."""
    x, y = xi.x, zeta.x
    z = xi.alpha * zeta.alpha.conjugate()
    _guard_z(z)
    return _prefactor(x, y) * z * (1.0 - z) ** -1.5


def cross_n2(xi: SqueezeParam, zeta: SqueezeParam) -> complex:
    """<zeta|a+ a+ a a|xi>; reduces to sinh^2 r (3 sinh^2 r + 1) on the diagonal."""
    x, y = xi.x, zeta.x
    z = xi.alpha * zeta.alpha.conjugate()
    _guard_z(z)
    return _prefactor(x, y) * z * (2.0 * z + 1.0) * (1.0 - z) ** -2.5


def norm_residual(p: JanusParams) -> float:
    """<psi|psi> - 1 for the (possibly unnormalized) amplitude pair.

    A parameter set counts as normalized when |norm_residual| <= NORM_TOL.
    """
    ov = overlap(p.xi, p.zeta)
    cross = (p.chi * p.eta.conjugate() * ov).real
    return p.chi_mag**2 + p.eta_mag**2 + 2.0 * cross - 1.0


def solve_chi(
    eta_mag: float,
    xi: SqueezeParam,
    zeta: SqueezeParam,
    delta: float,
    smaller_root: bool = False,
) -> float:
    """Recover the nonnegative |chi| that normalizes the superposition.

    Solves |chi|^2 + 2 b |chi| + (|eta|^2 - 1) = 0 with
    b = |eta| Re[e^{-i delta} <zeta|xi>] and returns the larger root
    -b + sqrt(b^2 - |eta|^2 + 1), the only one guaranteed nonnegative when a
    solution exists. For b < 0 and |eta| > 1 both roots can be positive;
    ``smaller_root`` selects the alternative in that case.
    """
    if eta_mag < 0.0:
        raise ValueError("eta_mag must be >= 0")
    ov = overlap(xi, zeta)
    b = eta_mag * (cmath.exp(-1j * delta) * ov).real
    disc = b * b - eta_mag**2 + 1.0
    if disc < 0.0:
        raise InfeasibleAmplitudeError(
            f"no normalized state exists for |eta| = {eta_mag} (discriminant {disc:.3e})"
        )
    root = math.sqrt(disc)
    chi = (-b - root) if smaller_root else (-b + root)
    if chi < 0.0:
        raise InfeasibleAmplitudeError(
            f"selected amplitude root is negative ({chi:.3e}) for |eta| = {eta_mag}"
        )
    return chi


def _g2_from_complex(chi: complex, eta: complex, xi: SqueezeParam, zeta: SqueezeParam) -> float:
    """Scale-invariant g2 of chi|xi> + eta|zeta> without any normalization assumption."""
    ov = overlap(xi, zeta)
    c1 = cross_n(xi, zeta)
    c2 = cross_n2(xi, zeta)
    x, y = xi.x, zeta.x
    a2, b2 = abs(chi) ** 2, abs(eta) ** 2
    ce = chi * eta.conjugate()
    norm2 = a2 + b2 + 2.0 * (ce * ov).real
    mean_n = a2 * x / (1.0 - x) + b2 * y / (1.0 - y) + 2.0 * (ce * c1).real
    mean_n2 = (
        a2 * x * (2.0 * x + 1.0) / (1.0 - x) ** 2
        + b2 * y * (2.0 * y + 1.0) / (1.0 - y) ** 2
        + 2.0 * (ce * c2).real
    )
    if mean_n / norm2 <= MEAN_PHOTON_FLOOR:
        raise UndefinedG2Error("mean photon number is numerically zero; g2 undefined")
    return (mean_n2 * norm2) / mean_n**2


def g2_general(p: JanusParams, norm_tol: float = NORM_TOL) -> float:
    """g2 of a normalized superposition via the general closed form.

    Requires |norm_residual(p)| <= norm_tol and a nonvanishing mean photon
    number; raises UnnormalizedInputError / UndefinedG2Error otherwise.
    """
    resid = norm_residual(p)
    if abs(resid) > norm_tol:
        raise UnnormalizedInputError(
            f"norm residual {resid:.3e} exceeds tolerance {norm_tol:.1e}"
        )
    return _g2_from_complex(p.chi, p.eta, p.xi, p.zeta)


def phase_geometry(r: float, Delta: float) -> PhaseGeometry:
    """Modulus f(r, Delta) and phase gamma of cosh^2 r - sinh^2 r e^{i Delta}.

    Satisfies (1-x)/(1-z) = f^{-1/2} e^{-i gamma} on the equal-squeezing
    manifold. gamma uses the two-argument arctangent so the quadrant is
    correct for every Delta; at r = 0 the pair is (1, 0) by continuity.
    """
    if r < 0.0:
        raise ValueError("r must be >= 0")
    sh2 = math.sinh(r) ** 2
    ch2 = math.cosh(r) ** 2
    f = ch2 * ch2 - 2.0 * sh2 * ch2 * math.cos(Delta) + sh2 * sh2
    if sh2 == 0.0:
        return PhaseGeometry(f=1.0, gamma=0.0)
    gamma = -math.atan2(math.sin(Delta), ch2 / sh2 - math.cos(Delta))
    return PhaseGeometry(f=f, gamma=gamma)


def _check_equal_squeeze_norm(r, Delta, delta, chi_mag, eta_mag, norm_tol):
    geom = phase_geometry(r, Delta)
    cross = 2.0 * geom.f**-0.25 * chi_mag * eta_mag * math.cos(delta + 0.5 * geom.gamma)
    resid = chi_mag**2 + eta_mag**2 + cross - 1.0
    if abs(resid) > norm_tol:
        raise UnnormalizedInputError(
            f"equal-squeezing norm residual {resid:.3e} exceeds tolerance {norm_tol:.1e}"
        )
    return geom


def g2_equal_squeeze(
    r: float,
    Delta: float,
    delta: float,
    chi_mag: float,
    eta_mag: float,
    norm_tol: float = NORM_TOL,
) -> float:
    """g2 for equal magnitudes r = s written purely in cosines of the phases.

    Agrees with :func:`g2_general` on the r = s submanifold to better than
    1e-10 for normalized inputs.
    """
    if r <= 0.0:
        raise UndefinedG2Error("g2 undefined at r = 0 (vacuum)")
    geom = _check_equal_squeeze_norm(r, Delta, delta, chi_mag, eta_mag, norm_tol)
    f, gamma = geom.f, geom.gamma
    t2 = math.tanh(r) ** 2
    ce = chi_mag * eta_mag
    base = 1.0 - 2.0 * f**-0.25 * ce * math.cos(delta + 0.5 * gamma)
    num = base + 2.0 * f**-1.25 * ce / (2.0 * t2 + 1.0) * (
        2.0 * t2 * math.cos(2.0 * Delta - 2.5 * gamma - delta)
        + math.cos(Delta - 2.5 * gamma - delta)
    )
    den = base + 2.0 * f**-0.75 * ce * math.cos(Delta - 1.5 * gamma - delta)
    prefactor = 3.0 + 1.0 / math.sinh(r) ** 2
    if den <= 0.0 or abs(den) < MEAN_PHOTON_FLOOR:
        raise UndefinedG2Error("mean photon number is numerically zero; g2 undefined")
    return prefactor * num / den**2


def g2_optimal(
    r: float, chi_mag: float, eta_mag: float, norm_tol: float = NORM_TOL
) -> float:
    """g2 at the optimal phases Delta = delta = pi for equal squeezing.

    With K = (1 + 2 sinh^2 r)^{-1/2} and L = 2 K |chi| |eta|,

        g2 = (3 + 1/sinh^2 r) * [1 + L + L K^4 (1-2 tanh^2 r)/(1+2 tanh^2 r)]
             / [1 + L + L K^2]^2,

    under the constraint |chi|^2 + |eta|^2 - L = 1. This is the exact
    specialization of :func:`g2_equal_squeeze`, which it matches to 1e-10.
    """
    if r <= 0.0:
        raise UndefinedG2Error("g2 undefined at r = 0 (vacuum)")
    K = optimal_phase_K(r)
    L = 2.0 * K * chi_mag * eta_mag
    resid = chi_mag**2 + eta_mag**2 - L - 1.0
    if abs(resid) > norm_tol:
        raise UnnormalizedInputError(
            f"optimal-phase constraint residual {resid:.3e} exceeds tolerance {norm_tol:.1e}"
        )
    t2 = math.tanh(r) ** 2
    num = 1.0 + L + L * K**4 * (1.0 - 2.0 * t2) / (1.0 + 2.0 * t2)
    den = (1.0 + L + L * K**2) ** 2
    return (3.0 + 1.0 / math.sinh(r) ** 2) * num / den


def g2_boundary(r: float) -> float:
    """Closed-form lower-boundary curve: a rational function of u = sinh^2 r.

    Continuous at r = 0 with value 1/2, monotonically nondecreasing, and
    approaching 3 from below for large squeezing.
    """
    if r < 0.0:
        raise ValueError("r must be >= 0")
    u = math.sinh(r) ** 2
    num = ((((12.0 * u + 40.0) * u + 51.0) * u + 28.0) * u + 11.0) * u + 2.0
    den = ((((4.0 * u + 16.0) * u + 29.0) * u + 29.0) * u + 16.0) * u + 4.0
    return num / den


def g2_boundary_series(r: float, order: int) -> float:
    """Small-r expansion of the boundary curve in powers of sinh^2 r.

    ``order`` counts retained powers beyond the constant: order 0 gives 1/2,
    order 3 gives 1/2 + (3/4) u + (3/8) u^2 + (35/16) u^3 with u = sinh^2 r.
    """
    if not 0 <= order <= 3:
        raise UnsupportedOrderError(f"series implemented through order 3, got {order}")
    u = math.sinh(r) ** 2
    total = 0.0
    for k in range(order, -1, -1):
        total = total * u + _SERIES_COEFFS[k]
    return total
