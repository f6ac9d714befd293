"""Unitarity and parity constraint systems for translation-invariant rules.

A homogeneous scalar rule on a line is a band matrix with constant weights
w_{-r}..w_{+r} along the band.  Unitarity collapses to the offset inner
products of the weight vector with itself, and the only exact solutions are
a single shift times a phase; :func:`classify_no_go` makes that dichotomy
executable.  Weakening translation invariance to two steps, or moving to
two-component fields, admits genuinely mixing rules; the builders below
construct those parameterized families and the residual functions measure
how far arbitrary weights are from satisfying the constraints.

Residuals are returned as numbers (not booleans) so callers pick their own
tolerances; 1e-12 is the default wherever a single verdict is needed.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import NamedTuple, Union

import numpy as np

#: Component-swap parity matrix for two-component rules.
PARITY = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)

DEFAULT_TOL = 1e-12


@dataclass(frozen=True)
class ScalarBandWeights:
    """Band weights w_{-r}..w_{+r} of a homogeneous scalar rule."""

    w: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.w, dtype=complex)
        if arr.ndim != 1 or arr.size % 2 == 0:
            raise ValueError("weight vector must have odd length 2r+1")
        object.__setattr__(self, "w", arr)

    @property
    def r(self) -> int:
        return (self.w.size - 1) // 2


class TwoStepWeights(NamedTuple):
    """Entries of the two-step-invariant band rule (rows a b c / d e f)."""

    a: complex
    b: complex
    c: complex
    d: complex
    e: complex
    f: complex


@dataclass(frozen=True)
class Trivial:
    """Verdict: the rule is a k-step shift times a unit phase."""

    k: int
    phase: complex


@dataclass(frozen=True)
class NonUnitary:
    """Verdict: some unitarity residual exceeds tolerance."""

    max_residual: float


@dataclass(frozen=True)
class BlockBandWeights:
    """2x2 block weights (w_minus, w_zero, w_plus) of a two-component rule."""

    w_minus: np.ndarray
    w_zero: np.ndarray
    w_plus: np.ndarray
    theta: float | None = None
    rho: float | None = None

    def __post_init__(self):
        for name in ("w_minus", "w_zero", "w_plus"):
            m = np.asarray(getattr(self, name), dtype=complex)
            if m.shape != (2, 2):
                raise ValueError(f"{name} must be a 2x2 matrix")
            object.__setattr__(self, name, m)


def scalar_band_residuals(weights: ScalarBandWeights) -> np.ndarray:
    """Offset inner products of the band weights with themselves.

    Entry m (0 <= m <= 2r) is sum_e w_{e+m} conj(w_e), minus 1 for m = 0.
    All entries vanish exactly when the band matrix is unitary; the
    conjugate constraint equations are the conjugates of these and carry
    no extra information.
    """
    w = weights.w
    out = np.empty(w.size, dtype=complex)
    for m in range(w.size):
        out[m] = np.sum(w[m:] * np.conj(w[: w.size - m]))
    out[0] -= 1.0
    return out


def classify_no_go(
    weights: ScalarBandWeights, tol: float = DEFAULT_TOL
) -> Union[Trivial, NonUnitary]:
    """Classify band weights as a trivial shift-times-phase or non-unitary.

    If every residual is within ``tol``, exactly one weight must have unit
    modulus (the rest below ``tol``); the rule is then the k-step shift
    times that weight, with k = -e for the surviving band offset e.  The
    shift convention follows the translation matrix with 1s on the
    subdiagonal, so a sole surviving w_{-r} gives k = +r.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    residuals = scalar_band_residuals(weights)
    worst = float(np.max(np.abs(residuals)))
    if worst > tol:
        return NonUnitary(max_residual=worst)
    mags = np.abs(weights.w)
    dominant = int(np.argmax(mags))
    others = np.delete(mags, dominant)
    if abs(mags[dominant] - 1.0) > tol or (others.size and others.max() > tol):
        raise ArithmeticError(
            "unitary residuals pass but weights are not a shift times a phase; "
            "this contradicts the shift-or-nothing dichotomy"
        )
    e = dominant - weights.r
    return Trivial(k=-e, phase=complex(weights.w[dominant]))


def two_step_residuals(weights: TwoStepWeights) -> np.ndarray:
    """The six unitarity constraints of the two-step-invariant band rule.

    Returned in printed order: row-a normalization, the two a-row
    orthogonalities, then the same three for the d-row.
    """
    a, b, c, d, e, f = (complex(z) for z in weights)
    return np.array(
        [
            a * a.conjugate() + b * b.conjugate() + c * c.conjugate() - 1.0,
            b * d.conjugate() + c * e.conjugate(),
            c * a.conjugate(),
            d * d.conjugate() + e * e.conjugate() + f * f.conjugate() - 1.0,
            e * a.conjugate() + f * b.conjugate(),
            f * d.conjugate(),
        ],
        dtype=complex,
    )


def build_pair_matrix(theta: float) -> np.ndarray:
    """Parity-invariant cell-pair scattering matrix.

    [[i sin(theta), cos(theta)], [cos(theta), i sin(theta)]]: theta = 0
    swaps the pair (free streaming), theta = pi/2 is i times the identity
    (no flow).
    """
    s, c = math.sin(theta), math.cos(theta)
    return np.array([[1j * s, c], [c, 1j * s]], dtype=complex)


def build_two_component_weights(theta: float, rho: float) -> BlockBandWeights:
    """General parity-invariant two-component rule with neighborhood one.

    rho = 0 reproduces the streaming blocks of the single-particle rule
    exactly; rho = pi/2 is a purely on-site unitary mixer.  The returned
    blocks satisfy the block unitarity and parity residuals to 1e-12 for
    every (theta, rho).
    """
    s, c = math.sin(theta), math.cos(theta)
    cr, sr = math.cos(rho), math.sin(rho)
    w_minus = cr * np.array([[0.0, 1j * s], [0.0, c]], dtype=complex)
    w_plus = cr * np.array([[c, 0.0], [1j * s, 0.0]], dtype=complex)
    w_zero = sr * np.array([[s, -1j * c], [-1j * c, s]], dtype=complex)
    return BlockBandWeights(w_minus, w_zero, w_plus, theta=theta, rho=rho)


def block_band_residuals(weights: BlockBandWeights) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Matrix-valued unitarity residuals of a two-component band rule.

    Returns (sum of w w^dag - I, offset-1 product sum, offset-2 product);
    all three vanish exactly when the block band matrix is unitary.
    """
    wm, w0, wp = weights.w_minus, weights.w_zero, weights.w_plus
    eye = np.eye(2, dtype=complex)
    return (
        wm @ wm.conj().T + w0 @ w0.conj().T + wp @ wp.conj().T - eye,
        w0 @ wm.conj().T + wp @ w0.conj().T,
        wp @ wm.conj().T,
    )


def parity_residuals(weights: BlockBandWeights) -> tuple[np.ndarray, np.ndarray]:
    """Deviation of block weights from parity invariance.

    Returns (w_minus - P w_plus P^-1, w_zero - P w_zero P^-1) with P the
    component swap; both vanish for a parity-invariant rule.
    """
    wm, w0, wp = weights.w_minus, weights.w_zero, weights.w_plus
    return (wm - PARITY @ wp @ PARITY, w0 - PARITY @ w0 @ PARITY)


def build_qlga_matrix(theta: float, alpha: float, beta: float) -> np.ndarray:
    """Pairwise scattering matrix of the multi-particle lattice gas.

    Acts on the occupation sectors of an adjacent cell pair, ordered
    |00>, |01>, |10>, |11>: the empty pair is fixed, a lone particle
    scatters through e^{i alpha} times the pair matrix, and a doubly
    occupied pair exits multiplied by e^{i beta}.  Particle number is
    conserved by construction.
    """
    s = np.eye(4, dtype=complex)
    s[1:3, 1:3] = cmath.exp(1j * alpha) * build_pair_matrix(theta)
    s[3, 3] = cmath.exp(1j * beta)
    return s
