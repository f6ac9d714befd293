"""Homogeneous two-component quantum cellular automaton.

Unlike the one-component rule, the two-component update is synchronous:
every cell is rewritten as w_minus psi(x-1) + w_zero psi(x) + w_plus
psi(x+1) using the parity-invariant blocks of
:func:`qlgas.unitarity.build_two_component_weights`.  At rho = 0 the rule
decomposes into two independent copies of the one-component automaton
living on the parity sublattices t + x even/odd; rho couples them and
slows propagation.  The update double-buffers (reads the old field
entirely before writing), so it is order-independent.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .lattice import OneComponentField, TwoComponentField
from .unitarity import build_two_component_weights


@dataclass(frozen=True)
class Qca2Params:
    """Scattering angle and sublattice coupling of the two-component rule."""

    theta: float
    rho: float


def step2(psi: TwoComponentField, params: Qca2Params) -> TwoComponentField:
    """Advance the two-component field one synchronous timestep."""
    w = build_two_component_weights(params.theta, params.rho)
    cells = psi.cells
    new = (
        np.roll(cells, 1, axis=0) @ w.w_minus.T
        + cells @ w.w_zero.T
        + np.roll(cells, -1, axis=0) @ w.w_plus.T
    )
    return TwoComponentField(new, psi.t + 1)


def evolve2(init: TwoComponentField, steps: int, params: Qca2Params) -> list[TwoComponentField]:
    """Return the history [init, step2(init), ...] of length steps+1."""
    history = [init]
    for _ in range(steps):
        history.append(step2(history[-1], params))
    return history


def probability2(psi: TwoComponentField) -> np.ndarray:
    """Per-cell probability psi(x)^dag psi(x); sums to the squared norm."""
    return np.sum(np.abs(psi.cells) ** 2, axis=1)


def embed_qca1(phi: OneComponentField) -> TwoComponentField:
    """Embed a one-component field as a two-component field.

    Cell x with x = t (mod 2) receives (phi(x-1), phi(x)); the opposite
    sublattice is zero.  At rho = 0 the synchronous rule commutes with the
    one-component step under this embedding.
    """
    n = phi.n_cells
    xs = np.arange(phi.t % 2, n, 2)
    cells = np.zeros((n, 2), dtype=complex)
    cells[xs, 0] = phi.cells[(xs - 1) % n]
    cells[xs, 1] = phi.cells[xs]
    return TwoComponentField(cells, phi.t)


def restrict_qca1(psi: TwoComponentField) -> OneComponentField:
    """Inverse of :func:`embed_qca1`; requires single-sublattice support."""
    n = psi.n_cells
    if n % 2:
        raise ValueError("restriction requires an even lattice")
    xs = np.arange(psi.t % 2, n, 2)
    off = np.arange((psi.t + 1) % 2, n, 2)
    if np.any(psi.cells[off] != 0):
        raise ValueError("mixed-support field: amplitude on both parity sublattices")
    cells = np.zeros(n, dtype=complex)
    cells[(xs - 1) % n] = psi.cells[xs, 0]
    cells[xs] = psi.cells[xs, 1]
    return OneComponentField(cells, psi.t)


def unit_right_mover2(x: int, n_cells: int, t: int = 0) -> TwoComponentField:
    """Unit right-moving amplitude at cell x in the two-component picture."""
    cells = np.zeros((n_cells, 2), dtype=complex)
    cells[x % n_cells, 1] = 1.0
    return TwoComponentField(cells, t)


def unit_left_mover2(x: int, n_cells: int, t: int = 0) -> TwoComponentField:
    """Unit left-moving amplitude at cell x in the two-component picture."""
    cells = np.zeros((n_cells, 2), dtype=complex)
    cells[x % n_cells, 0] = 1.0
    return TwoComponentField(cells, t)
