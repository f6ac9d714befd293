"""State containers and measurement helpers for 1D unitary lattice automata.

Amplitudes are plain ``complex128`` values; a field is a periodic array of
them plus a timestep tag.  The timestep tag matters because the partitioned
evolution alternates its cell pairing with the parity of ``t``, and because
the basis state attached to cell ``x`` during ``(t, t+1)`` is a right mover
from ``x`` when ``t = x (mod 2)`` and a left mover from ``x+1`` otherwise.

Everything here is a pure function of its inputs: fields are never mutated,
so values may be shared freely between threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

import numpy as np


def _as_amplitudes(values, shape_tail=()) -> np.ndarray:
    arr = np.asarray(values, dtype=complex)
    if arr.shape[1:] != shape_tail:
        raise ValueError(f"expected trailing shape {shape_tail}, got {arr.shape}")
    if not (np.all(np.isfinite(arr.real)) and np.all(np.isfinite(arr.imag))):
        raise ValueError("amplitudes must be finite")
    return arr


@dataclass(frozen=True)
class OneComponentField:
    """Scalar field on a ring of N cells (N even) at timestep ``t``."""

    cells: np.ndarray
    t: int = 0

    def __post_init__(self):
        object.__setattr__(self, "cells", _as_amplitudes(self.cells))
        n = self.cells.size
        if n < 2 or n % 2:
            raise ValueError(f"lattice size must be even and >= 2, got {n}")
        if self.t < 0:
            raise ValueError("timestep must be non-negative")

    @property
    def n_cells(self) -> int:
        return self.cells.size


@dataclass(frozen=True)
class TwoComponentField:
    """Two-component field: cells[x] = (psi_minus, psi_plus) at cell x."""

    cells: np.ndarray
    t: int = 0

    def __post_init__(self):
        object.__setattr__(self, "cells", _as_amplitudes(self.cells, (2,)))
        if self.cells.shape[0] < 2:
            raise ValueError("lattice size must be >= 2")
        if self.t < 0:
            raise ValueError("timestep must be non-negative")

    @property
    def n_cells(self) -> int:
        return self.cells.shape[0]


def norm_sq(state) -> float:
    """Total probability: the sum of |amplitude|^2 over all stored entries."""
    amps = getattr(state, "amps", None)
    if amps is None:
        amps = state.cells
    if amps.size == 0:
        raise ValueError("empty state")
    return float(np.vdot(amps, amps).real)


class LightconeCoords(NamedTuple):
    """Lightcone indices of a spacetime event relative to origin cell x0."""

    u: int
    v: int
    x0: int


def to_lightcone(t: int, x: int, x0: int = 0) -> LightconeCoords:
    """Map event (t, x) to (u, v) with u + v = t and u - v = x - x0.

    Only events with t + (x - x0) even lie on the propagation sublattice.
    """
    d = t + (x - x0)
    if d % 2:
        raise ValueError(f"off-sublattice event: t={t}, x={x}, x0={x0}")
    return LightconeCoords(u=d // 2, v=(t - (x - x0)) // 2, x0=x0)


def from_lightcone(u: int, v: int, x0: int = 0) -> tuple[int, int]:
    """Inverse of :func:`to_lightcone`: returns (t, x)."""
    return u + v, x0 + u - v


@dataclass
class PositionDistribution:
    """Probabilities indexed by (timestep, cell).

    ``entries`` maps (t, x) to p.  Distributions obtained by projecting a
    one-component history onto positions only carry entries with
    t = x (mod 2); raw per-cell probability histories carry every cell.
    """

    entries: dict = field(default_factory=dict)

    def add(self, t: int, x: int, p: float) -> None:
        self.entries[(t, x)] = p

    def sorted_entries(self) -> list[tuple[int, int, float]]:
        return [(t, x, self.entries[(t, x)]) for t, x in sorted(self.entries)]

    def row(self, t: int) -> dict:
        return {x: p for (tt, x), p in self.entries.items() if tt == t}

    def timesteps(self) -> list[int]:
        return sorted({t for t, _ in self.entries})


def _check_history(history: Sequence[OneComponentField]) -> int:
    if not history:
        raise ValueError("empty history")
    n = history[0].n_cells
    for prev, cur in zip(history, history[1:]):
        if cur.t != prev.t + 1 or cur.n_cells != n:
            raise ValueError(
                f"parity-inconsistent history: t={prev.t} followed by t={cur.t}"
            )
    return n


def project_position(history: Sequence[OneComponentField]) -> PositionDistribution:
    """Project a one-component history onto the position subspace.

    The left- and right-mover amplitudes meeting at cell x add incoherently:
    p(t, x) = |phi_t(x-1)|^2 + |phi_t(x)|^2 for x = t (mod 2), indices
    periodic.  Each row sums to the squared norm of the corresponding field.
    """
    n = _check_history(history)
    dist = PositionDistribution()
    for f in history:
        prob = np.abs(f.cells) ** 2
        for x in range(f.t % 2, n, 2):
            dist.add(f.t, x, float(prob[(x - 1) % n] + prob[x]))
    return dist


def cell_probability_history(history: Sequence[OneComponentField]) -> PositionDistribution:
    """Raw per-cell probabilities |phi_t(x)|^2 for every cell and timestep."""
    n = _check_history(history)
    dist = PositionDistribution()
    for f in history:
        prob = np.abs(f.cells) ** 2
        for x in range(n):
            dist.add(f.t, x, float(prob[x]))
    return dist
