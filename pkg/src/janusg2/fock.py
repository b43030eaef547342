"""Brute-force verification path: truncated photon-number amplitude vectors.

A squeezed vacuum is built coefficient by coefficient,

    amps[2n] = (1-x)^{1/4} (1/n!) (-alpha/2)^n sqrt((2n)!),

using the ratio recurrence c_{n+1} = c_n (-alpha) sqrt((2n+1)(2n+2)) / (2(n+1))
so no factorial is ever formed ((2n)! overflows binary64 near n = 85).
All moments are plain weighted sums over |amps|^2, so this module shares no
algebra with :mod:`janusg2.analytic` and serves as its independent oracle.

The discarded tail is certified: the squared coefficient ratio is bounded by
tanh^2(r), giving a geometric bound on the probability mass above the cutoff.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    CutoffMismatchError,
    CutoffTooSmallError,
    UndefinedG2Error,
    ZeroVectorError,
)
from .params import SqueezeParam

TAIL_TARGET = 1e-12
CUTOFF_STEP = 64
CUTOFF_CAP = 4096

__all__ = [
    "FockVector",
    "squeezed_fock",
    "superpose",
    "moments",
    "g2_fock",
    "odd_cat",
    "cross_moment_fock",
    "truncation_bound",
    "adaptive_cutoff",
]


@dataclass(frozen=True)
class FockVector:
    """Complex amplitudes over photon numbers 0..cutoff (cutoff even, >= 2)."""

    amps: np.ndarray
    cutoff: int

    def __post_init__(self):
        if self.cutoff < 2 or self.cutoff % 2 != 0:
            raise ValueError(f"cutoff must be even and >= 2, got {self.cutoff}")
        if len(self.amps) != self.cutoff + 1:
            raise ValueError("amplitude array length must be cutoff + 1")
        object.__setattr__(self, "amps", np.asarray(self.amps, dtype=complex))

    @property
    def norm2(self) -> float:
        return float(np.sum(np.abs(self.amps) ** 2))

    def normalized(self) -> "FockVector":
        n2 = self.norm2
        if n2 < 1e-30:
            raise ZeroVectorError("cannot normalize a numerically zero vector")
        return FockVector(self.amps / math.sqrt(n2), self.cutoff)

    def dump(self, path) -> None:
        """Write the debug text format: one line "n real imag" per entry."""
        with open(path, "w", encoding="utf-8") as fh:
            for n, a in enumerate(self.amps):
                fh.write(f"{n} {float(a.real)!r} {float(a.imag)!r}\n")

    @staticmethod
    def load(path) -> "FockVector":
        rows = []
        with open(path, encoding="utf-8") as fh:
            for line in fh:
                n_s, re_s, im_s = line.split()
                rows.append((int(n_s), float(re_s), float(im_s)))
        amps = np.zeros(len(rows), dtype=complex)
        for n, re, im in rows:
            amps[n] = re + 1j * im
        return FockVector(amps, len(rows) - 1)


def truncation_bound(r_max: float, cutoff: int) -> float:
    """Upper bound on the probability mass above ``cutoff`` for magnitudes <= r_max.

    The squared coefficient ratio |c_{m+1}/c_m|^2 = tanh^2(r) (2m+1)/(2m+2)
    is bounded by q = tanh^2(r_max), so the tail beyond pair index M = cutoff/2
    is at most |c_M|^2 q / (1 - q).
    """
    if r_max < 0.0:
        raise ValueError("r_max must be >= 0")
    if r_max == 0.0:
        return 0.0
    q = math.tanh(r_max) ** 2
    c2 = math.sqrt(1.0 - q)  # |c_0|^2 = (1 - x)^{1/2}
    for m in range(cutoff // 2):
        c2 *= q * (2 * m + 1) / (2 * m + 2)
    return c2 * q / (1.0 - q)


def adaptive_cutoff(r_max: float, target: float = TAIL_TARGET) -> int:
    """Smallest cutoff (multiple of CUTOFF_STEP) certifying tail mass <= target."""
    cutoff = CUTOFF_STEP
    while truncation_bound(r_max, cutoff) > target:
        cutoff += CUTOFF_STEP
        if cutoff > CUTOFF_CAP:
            raise CutoffTooSmallError(
                f"r_max = {r_max} needs a cutoff beyond the cap {CUTOFF_CAP}"
            )
    return cutoff


def squeezed_fock(p: SqueezeParam, cutoff: int) -> FockVector:
    """Truncated Fock expansion of one squeezed vacuum (even entries only)."""
    if cutoff < 2 or cutoff % 2 != 0:
        raise ValueError(f"cutoff must be even and >= 2, got {cutoff}")
    if truncation_bound(p.r, cutoff) > TAIL_TARGET:
        raise CutoffTooSmallError(
            f"cutoff {cutoff} leaves tail above {TAIL_TARGET:.0e} for r = {p.r}"
        )
    amps = np.zeros(cutoff + 1, dtype=complex)
    alpha = p.alpha
    c = complex((1.0 - p.x) ** 0.25)
    amps[0] = c
    for n in range(cutoff // 2):
        c = c * (-alpha) * math.sqrt((2 * n + 1) * (2 * n + 2)) / (2 * (n + 1))
        amps[2 * n + 2] = c
    return FockVector(amps, cutoff)


def superpose(chi: complex, v1: FockVector, eta: complex, v2: FockVector) -> FockVector:
    """Elementwise chi*v1 + eta*v2; not renormalized."""
    if v1.cutoff != v2.cutoff:
        raise CutoffMismatchError(f"cutoffs differ: {v1.cutoff} vs {v2.cutoff}")
    return FockVector(chi * v1.amps + eta * v2.amps, v1.cutoff)


def moments(v: FockVector) -> dict:
    """norm2, mean photon number, and normally ordered second moment <a+ a+ a a>."""
    p = np.abs(v.amps) ** 2
    norm2 = float(p.sum())
    if norm2 < 1e-30:
        raise ZeroVectorError("moments of a numerically zero vector are undefined")
    n = np.arange(len(p))
    return {
        "norm2": norm2,
        "n_mean": float((n * p).sum() / norm2),
        "n2_normal": float((n * (n - 1) * p).sum() / norm2),
    }


def g2_fock(v: FockVector) -> float:
    """g2 = <a+ a+ a a> / <a+ a>^2 by direct summation."""
    m = moments(v)
    if m["n_mean"] <= 1e-12:
        raise UndefinedG2Error("mean photon number is numerically zero; g2 undefined")
    return m["n2_normal"] / m["n_mean"] ** 2


def odd_cat(r: float, cutoff: int) -> FockVector:
    """Normalized difference of two anti-aligned equal squeezed vacua.

    Applies the closed-form normalization [2 (1 - (cosh 2r)^{-1/2})]^{-1/2};
    destructive interference empties every photon number n = 0 (mod 4), so
    only n = 2 (mod 4) carries amplitude.
    """
    if r <= 0.0:
        raise ValueError("r must be > 0 for the odd superposition")
    v1 = squeezed_fock(SqueezeParam(r, 0.0), cutoff)
    v2 = squeezed_fock(SqueezeParam(r, math.pi), cutoff)
    norm = 1.0 / math.sqrt(2.0 * (1.0 - 1.0 / math.sqrt(math.cosh(2.0 * r))))
    return superpose(norm, v1, -norm, v2)


_WEIGHTS = {
    "overlap": lambda n: np.ones_like(n, dtype=float),
    "n": lambda n: n.astype(float),
    "n2": lambda n: (n * (n - 1)).astype(float),
}


def cross_moment_fock(v1: FockVector, v2: FockVector, order: str = "overlap") -> complex:
    """sum_n conj(b_n) a_n w(n) with w = 1, n, or n(n-1); validates the analytic cross terms."""
    if v1.cutoff != v2.cutoff:
        raise CutoffMismatchError(f"cutoffs differ: {v1.cutoff} vs {v2.cutoff}")
    try:
        w = _WEIGHTS[order]
    except KeyError:
        raise ValueError(f"order must be one of {sorted(_WEIGHTS)}, got {order!r}") from None
    n = np.arange(v1.cutoff + 1)
    return complex(np.sum(np.conj(v2.amps) * v1.amps * w(n)))
