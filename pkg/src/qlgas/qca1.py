"""One-component partitioned quantum cellular automaton and its propagator.

A single timestep applies the 2x2 pair matrix [[i sin, cos], [cos, i sin]]
to every adjacent cell pair (x-1, x) with x = t+1 (mod 2); the pairing
shifts by one cell on alternate steps, which is what lets probability
propagate.  Interpreted as a particle model, a right mover either continues
with amplitude cos(theta) or reverses with amplitude i sin(theta) at each
step, and the amplitude to reach a given spacetime point is the coherent
sum over all monotone trajectories.  That path sum has a closed form as a
terminating binomial series in lightcone coordinates, and for small angles
it approaches the Bessel-function propagator of a relativistic particle of
mass theta (the effective lattice mass is tan(theta); the two agree to
first order).

Pair updates within a step touch disjoint cells, so any evaluation order
gives bit-identical results; all functions are pure.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Sequence

import mpmath as mp
import numpy as np

from .lattice import OneComponentField, PositionDistribution

_EPS = 2.220446049250313e-16
_PATH_ENUMERATION_CAP = 28
_FLOAT_ERR_BOUND = 1e-13
_LOG10_2 = math.log10(2.0)


def delta_right_mover(x: int, n_cells: int) -> OneComponentField:
    """Unit amplitude for a particle moving right from cell x.

    The timestep tag is set to x mod 2 so the parity bookkeeping is
    automatic; callers never need to match t to x by hand.
    """
    cells = np.zeros(n_cells, dtype=complex)
    cells[x % n_cells] = 1.0
    return OneComponentField(cells, t=x % 2)


def delta_left_mover(x: int, n_cells: int) -> OneComponentField:
    """Unit amplitude for a particle moving left from cell x.

    A left mover from x is stored at cell x-1 (periodic); the timestep tag
    x mod 2 gives that cell the left-moving parity.
    """
    cells = np.zeros(n_cells, dtype=complex)
    cells[(x - 1) % n_cells] = 1.0
    return OneComponentField(cells, t=x % 2)


def step(field: OneComponentField, theta: float) -> OneComponentField:
    """Advance the field one timestep with scattering angle theta."""
    n = field.n_cells
    s, c = math.sin(theta), math.cos(theta)
    xs = np.arange((field.t + 1) % 2, n, 2)
    left = (xs - 1) % n
    a = field.cells[left]
    b = field.cells[xs]
    new = np.empty(n, dtype=complex)
    new[left] = 1j * s * a + c * b
    new[xs] = c * a + 1j * s * b
    return OneComponentField(new, field.t + 1)


def evolve(init: OneComponentField, steps: int, theta: float) -> list[OneComponentField]:
    """Return the history [init, step(init), ...] of length steps+1."""
    history = [init]
    for _ in range(steps):
        history.append(step(history[-1], theta))
    return history


@dataclass(frozen=True)
class PropagatorResult:
    """Exit amplitudes at lightcone point (u, v).

    ``amp_right`` is the amplitude at cell u-v (a right mover from there),
    ``amp_left`` the amplitude at cell u-v-1 (a left mover from u-v).
    """

    amp_left: complex
    amp_right: complex
    u: int
    v: int


def _check_uv(u: int, v: int) -> None:
    if u < 0 or v < 0:
        raise ValueError(f"lightcone indices must be non-negative, got ({u}, {v})")


def _pow(base: float, exp: int) -> float:
    return 1.0 if exp == 0 else base**exp


def _series_value(coeffs: list[int], s_exp0: int, c_exp0: int, s: float, c: float) -> float:
    """Sum coeffs[j] * s**(s_exp0 + 2j) * c**(c_exp0 - 2j), j = 0, 1, ...

    Coefficients are exact integers.  Tries double precision first and
    falls back to mpmath (via the multiplicative term recurrence) when the
    bound on accumulated rounding exceeds 1e-13 or a term overflows a
    double; terms can be huge and cancel, so the working precision is set
    from the largest term.  The result is always returned as a double.
    """
    if not coeffs:
        return 0.0
    terms = []
    usable = True
    for j, coeff in enumerate(coeffs):
        try:
            terms.append(coeff * _pow(s, s_exp0 + 2 * j) * _pow(c, c_exp0 - 2 * j))
        except OverflowError:
            usable = False
            break
    if usable and all(math.isfinite(t) for t in terms):
        if 4.0 * _EPS * math.fsum(abs(t) for t in terms) < _FLOAT_ERR_BOUND:
            return math.fsum(terms)

    def exponents(j):
        return s_exp0 + 2 * j, c_exp0 - 2 * j

    def vanishes(se, ce):
        return (s == 0.0 and se > 0) or (c == 0.0 and ce > 0)

    log10_max = 0.0
    for j, coeff in enumerate(coeffs):
        se, ce = exponents(j)
        if vanishes(se, ce):
            continue
        lg = abs(coeff).bit_length() * _LOG10_2
        if se:
            lg += se * math.log10(abs(s))
        if ce:
            lg += ce * math.log10(abs(c))
        log10_max = max(log10_max, lg)
    with mp.workdps(30 + max(0, int(log10_max))):
        if s == 0.0 or c == 0.0:
            total = mp.mpf(0)
            for j, coeff in enumerate(coeffs):
                se, ce = exponents(j)
                if vanishes(se, ce):
                    continue
                total += mp.mpf(coeff) * mp.mpf(s) ** se * mp.mpf(c) ** ce
            return float(total)
        ms, mc = mp.mpf(s), mp.mpf(c)
        ratio = (ms / mc) ** 2
        power = ms**s_exp0 * mc**c_exp0
        total = mp.mpf(0)
        for coeff in coeffs:
            total += mp.mpf(coeff) * power
            power *= ratio
        return float(total)


def _left_coefficients(u: int, v: int) -> list[int]:
    """(-1)^j C(u-1, j) C(v, j) for j = 0..min(u-1, v), by running products."""
    out = []
    a = b = 1
    sign = 1
    for j in range(min(u - 1, v) + 1):
        out.append(sign * a * b)
        a = a * (u - 1 - j) // (j + 1)
        b = b * (v - j) // (j + 1)
        sign = -sign
    return out


def _right_coefficients(u: int, v: int) -> list[int]:
    """(-1)^k C(u, k) C(v-1, k-1) for k = 1..min(u, v), by running products."""
    out = []
    a, b = u, 1
    sign = -1
    for k in range(1, min(u, v) + 1):
        out.append(sign * a * b)
        a = a * (u - k) // (k + 1)
        b = b * (v - k) // k
        sign = -sign
    return out


def propagator_closed(u: int, v: int, theta: float) -> PropagatorResult:
    """Closed-form propagator of an initially right-moving particle.

    Both channels are terminating binomial sums over the number of
    right-to-left direction changes; the hypergeometric form of those sums
    is not used directly because the finite series evaluates exactly.
    Safe for u, v up to ~1e4 and any theta, including angles where
    tan(theta) is singular.
    """
    _check_uv(u, v)
    s, c = math.sin(theta), math.cos(theta)

    if v == 0:
        amp_right = complex(_pow(c, u))
    elif u == 0:
        amp_right = 0j
    else:
        amp_right = complex(
            _series_value(_right_coefficients(u, v), 2, u + v - 2, s, c)
        )

    if u == 0:
        amp_left = 0j
    else:
        amp_left = 1j * _series_value(_left_coefficients(u, v), 1, u + v - 1, s, c)
    return PropagatorResult(amp_left, amp_right, u, v)


def propagator_paths(u: int, v: int, theta: float, initial: str = "right") -> PropagatorResult:
    """Propagator by brute-force enumeration of all lattice trajectories.

    Enumerates every arrangement of u right-steps and v left-steps with the
    given initial direction, counts direction changes per path (including
    the one implied by each exit channel), and sums the amplitudes
    (i sin)^changes (cos)^(u+v-changes).  Exponential in u+v; serves as the
    independent oracle for :func:`propagator_closed`.
    """
    _check_uv(u, v)
    if initial not in ("right", "left"):
        raise ValueError("initial must be 'right' or 'left'")
    t = u + v
    if t > _PATH_ENUMERATION_CAP:
        raise ValueError(f"path enumeration capped at u+v <= {_PATH_ENUMERATION_CAP}; use closed form")
    if t == 0:
        one = complex(1.0)
        return PropagatorResult(one if initial == "left" else 0j, one if initial == "right" else 0j, u, v)

    first_is_left = initial == "left"
    if (first_is_left and v == 0) or (not first_is_left and u == 0):
        return PropagatorResult(0j, 0j, u, v)
    remaining_lefts = v - 1 if first_is_left else v

    counts_right = np.zeros(t + 2, dtype=np.int64)
    counts_left = np.zeros(t + 2, dtype=np.int64)
    combos = itertools.combinations(range(1, t), remaining_lefts)
    while chunk := list(itertools.islice(combos, 1 << 17)):
        mask = np.zeros((len(chunk), t), dtype=bool)
        mask[:, 0] = first_is_left
        if remaining_lefts:
            rows = np.repeat(np.arange(len(chunk)), remaining_lefts)
            mask[rows, np.asarray(chunk, dtype=np.int64).ravel()] = True
        internal = np.count_nonzero(mask[:, 1:] != mask[:, :-1], axis=1)
        last_is_left = mask[:, -1]
        counts_right += np.bincount(internal + last_is_left, minlength=t + 2)
        counts_left += np.bincount(internal + ~last_is_left, minlength=t + 2)

    s, c = math.sin(theta), math.cos(theta)
    weights = np.array([(1j * s) ** k * _pow(c, t - k) for k in range(t + 2)])
    return PropagatorResult(
        complex(counts_left @ weights), complex(counts_right @ weights), u, v
    )


def propagator_left_start(u: int, v: int, theta: float) -> PropagatorResult:
    """Propagator of an initially left-moving particle.

    By parity this is the right-start propagator with u and v interchanged
    and the two exit channels mirrored.
    """
    mirrored = propagator_closed(v, u, theta)
    return PropagatorResult(mirrored.amp_right, mirrored.amp_left, u, v)


def bessel_j01(z: float) -> tuple[float, float]:
    """J0(z) and J1(z) by the ascending power series.

    The series terms reach ~e^|z| before decaying, so the sum is evaluated
    at extended working precision; the double-precision results are
    accurate to well below 1e-12 for |z| <= 30.
    """
    dps = 40 + int(0.44 * abs(z))
    with mp.workdps(dps):
        zz = mp.mpf(z)
        q = (zz / 2) ** 2
        cutoff = mp.mpf(10) ** (5 - dps)
        term0 = mp.mpf(1)
        total0 = term0
        term1 = zz / 2
        total1 = term1
        m = 1
        while True:
            term0 *= -q / (m * m)
            total0 += term0
            term1 *= -q / (m * (m + 1))
            total1 += term1
            if abs(term0) < cutoff and abs(term1) < cutoff:
                break
            m += 1
        return float(total0), float(total1)


def bessel_limit(theta: float, t: float, x: float) -> tuple[complex, complex]:
    """Continuum-limit propagator densities at event (t, x), per unit spacing.

    For an event strictly inside the lightcone with spacetime separation
    tau = sqrt(t^2 - x^2), the lattice propagator at lattice spacing eps
    (i.e. propagator_closed(u/eps, v/eps, eps*theta)) approaches eps times
    the returned pair: i theta J0(tau theta) in the left channel and
    -(2 u theta / tau) J1(tau theta) in the right channel, with
    u = (t+x)/2.  The right-channel constant follows from the confluent
    limit of the terminating series (prefactor u eps theta^2 times
    2 J1(tau theta)/(tau theta)) and is confirmed by the convergence tests.
    """
    u = (t + x) / 2.0
    v = (t - x) / 2.0
    if u <= 0 or v <= 0:
        raise ValueError("limit form inapplicable: event on or outside the lightcone")
    tau = math.sqrt(t * t - x * x)
    j0, j1 = bessel_j01(tau * theta)
    return 1j * theta * j0, complex(-(2.0 * u * theta / tau) * j1)


_NOISE_FLOOR = 1e-24


def measure_speed(dist: PositionDistribution, x0: int = 0) -> float:
    """Least-squares speed of the rightmost probability peak, in cells/step.

    For each timestep the peak is the argmax of p over cells x > x0 with
    ties broken toward larger x; rows with no probability beyond x0 are
    unusable and skipped.  Probabilities below 1e-24 of the row maximum
    count as zero: they are rounding residue (cos of a double near pi/2 is
    ~1e-16, so a pinned state still leaks ~1e-33 per step).  Meaningful for
    distributions grown from a single localized initial condition over
    >= 16 steps.
    """
    track: list[tuple[int, int]] = []
    for t in dist.timesteps():
        row = dist.row(t)
        floor = max(row.values(), default=0.0) * _NOISE_FLOOR
        best_x = None
        best_p = 0.0
        for x in sorted(row):
            if x <= x0:
                continue
            p = row[x]
            if p > floor and p >= best_p:
                best_p, best_x = p, x
        if best_x is not None:
            track.append((t, best_x))
    if len(track) < 2:
        raise ValueError("fewer than 2 usable rows for speed measurement")
    ts = np.array([t for t, _ in track], dtype=float)
    xs = np.array([x for _, x in track], dtype=float)
    dts = ts - ts.mean()
    return float((dts @ (xs - xs.mean())) / (dts @ dts))
