"""Multi-particle quantum lattice gas on a fixed particle-number sector.

Basis states are n-element subsets of the N cells, encoded as bitmasks
(bit x = cell x occupied) and kept in ascending numeric order; exclusion
is built in, so the sector has dimension C(N, n).  A timestep applies the
4x4 scattering matrix of :func:`qlgas.unitarity.build_qlga_matrix` to the
occupation sectors of every adjacent cell pair in the current partition:
an empty pair is untouched, a lone particle mixes through the pair block
times e^{i alpha}, and a doubly occupied pair picks up e^{i beta}.  Pairs
are processed in ascending order, each writing a fresh amplitude array, so
sequential and parallel schedules agree bit for bit.

Basis states carry no antisymmetrization signs: amplitudes attach to
occupation patterns directly, and any global sign convention cancels in
all probabilities.  The Slater-determinant helpers below provide the
free-fermion factorization oracle; on a ring the single-particle factor
dynamics must flip the sign of hops across the wrap bond (an antiperiodic
boundary) for the pair-ordering signs of the determinant to cancel
exactly, and the non-interacting parameter locus e^{i beta} = -e^{2 i
alpha} is verified against the full-space oracle by the test suite rather
than assumed.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .lattice import OneComponentField

_MAX_CELLS = 63
_MAX_SECTOR_DIM = 10**7
_FULL_SPACE_MAX_CELLS = 12


@dataclass(frozen=True)
class QlgaParams:
    """Scattering angle and the one-/two-particle interaction phases."""

    theta: float
    alpha: float
    beta: float


@dataclass(frozen=True)
class FockBasis:
    """All n-particle occupation bitmasks over N cells, numerically sorted."""

    n_cells: int
    n_particles: int
    states: np.ndarray

    def index_of(self, masks) -> np.ndarray:
        """Sector indices of the given bitmasks (which must be members)."""
        return np.searchsorted(self.states, masks)

    @property
    def dim(self) -> int:
        return self.states.size


def enumerate_basis(n_cells: int, n_particles: int) -> FockBasis:
    """Enumerate the n-particle occupation basis over N cells."""
    if not 0 <= n_particles <= n_cells:
        raise ValueError(f"need 0 <= n <= N, got n={n_particles}, N={n_cells}")
    if n_cells > _MAX_CELLS:
        raise ValueError(f"bitmask states require N <= {_MAX_CELLS}")
    if math.comb(n_cells, n_particles) > _MAX_SECTOR_DIM:
        raise ValueError("sector dimension exceeds the 1e7 amplitude cap")
    masks = sorted(
        sum(1 << x for x in cells)
        for cells in combinations(range(n_cells), n_particles)
    )
    return FockBasis(n_cells, n_particles, np.array(masks, dtype=np.int64))


@dataclass(frozen=True)
class FockVector:
    """Amplitudes over a fixed-n occupation basis at timestep ``t``."""

    basis: FockBasis
    amps: np.ndarray
    t: int = 0

    def __post_init__(self):
        arr = np.asarray(self.amps, dtype=complex)
        if arr.shape != (self.basis.dim,):
            raise ValueError(f"expected {self.basis.dim} amplitudes, got {arr.shape}")
        if not (np.all(np.isfinite(arr.real)) and np.all(np.isfinite(arr.imag))):
            raise ValueError("amplitudes must be finite")
        object.__setattr__(self, "amps", arr)


def fock_state(n_cells: int, configurations, amplitudes=None, t: int = 0) -> FockVector:
    """Build a Fock vector from occupied-cell configurations.

    ``configurations`` is a sequence of cell collections, all of the same
    size; ``amplitudes`` defaults to an equal-weight normalized
    superposition.
    """
    configs = [sorted(set(int(c) % n_cells for c in cfg)) for cfg in configurations]
    if not configs:
        raise ValueError("at least one configuration required")
    n = len(configs[0])
    if any(len(cfg) != n for cfg in configs):
        raise ValueError("configurations must all have the same particle count")
    basis = enumerate_basis(n_cells, n)
    if amplitudes is None:
        amplitudes = [1.0 / math.sqrt(len(configs))] * len(configs)
    amps = np.zeros(basis.dim, dtype=complex)
    for cfg, a in zip(configs, amplitudes):
        amps[basis.index_of(sum(1 << x for x in cfg))] += a
    return FockVector(basis, amps, t)


def mover_cell(x: int, direction: str, t: int = 0) -> int:
    """Cell index encoding a particle leaving x in the given direction.

    A right mover from x occupies cell x and a left mover from x occupies
    cell x-1; both encodings exist only at timesteps with t = x (mod 2),
    so callers never juggle the parity bookkeeping themselves.
    """
    if direction not in ("right", "left"):
        raise ValueError("direction must be 'right' or 'left'")
    if (t - x) % 2:
        raise ValueError(f"no {direction} mover leaves x={x} at timestep t={t}")
    return x if direction == "right" else x - 1


def _pairs_for_step(n_cells: int, t: int) -> list[tuple[int, int]]:
    return [((x - 1) % n_cells, x) for x in range((t + 1) % 2, n_cells, 2)]


def _scatter_pair(amps, masks, lookup, a, b, diag, off, phase_both):
    """One cell pair's scattering, gather-style into a fresh array."""
    bit_a = (masks >> a) & 1
    bit_b = (masks >> b) & 1
    new = amps.copy()
    both = (bit_a & bit_b) == 1
    new[both] = phase_both * amps[both]
    single = (bit_a ^ bit_b) == 1
    if np.any(single):
        partners = lookup(masks[single] ^ ((1 << a) | (1 << b)))
        new[single] = diag * amps[single] + off * amps[partners]
    return new


def qlga_step(state: FockVector, params: QlgaParams) -> FockVector:
    """Advance the sector amplitudes one timestep."""
    basis = state.basis
    if basis.n_cells % 2:
        raise ValueError("lattice size must be even")
    phase = cmath.exp(1j * params.alpha)
    diag = 1j * math.sin(params.theta) * phase
    off = math.cos(params.theta) * phase
    phase_both = cmath.exp(1j * params.beta)
    amps = state.amps
    for a, b in _pairs_for_step(basis.n_cells, state.t):
        amps = _scatter_pair(amps, basis.states, basis.index_of, a, b, diag, off, phase_both)
    return FockVector(basis, amps, state.t + 1)


def evolve_qlga(state: FockVector, steps: int, params: QlgaParams) -> list[FockVector]:
    """Return the history [state, qlga_step(state), ...] of length steps+1."""
    history = [state]
    for _ in range(steps):
        history.append(qlga_step(history[-1], params))
    return history


def full_space_step(psi: np.ndarray, params: QlgaParams, t: int, n_cells: int) -> np.ndarray:
    """Oracle: one timestep on the full 2^N occupation space.

    Applies the same pair scattering to a dense amplitude vector indexed by
    raw bitmask.  Block diagonal over particle number, so restricting to a
    sector commutes with stepping; limited to N <= 12.
    """
    if n_cells % 2:
        raise ValueError("lattice size must be even")
    if n_cells > _FULL_SPACE_MAX_CELLS:
        raise ValueError(f"full-space oracle limited to N <= {_FULL_SPACE_MAX_CELLS}")
    if psi.shape != (1 << n_cells,):
        raise ValueError(f"expected 2^{n_cells} amplitudes")
    phase = cmath.exp(1j * params.alpha)
    diag = 1j * math.sin(params.theta) * phase
    off = math.cos(params.theta) * phase
    phase_both = cmath.exp(1j * params.beta)
    masks = np.arange(1 << n_cells, dtype=np.int64)
    amps = np.asarray(psi, dtype=complex)
    for a, b in _pairs_for_step(n_cells, t):
        amps = _scatter_pair(amps, masks, lambda m: m, a, b, diag, off, phase_both)
    return amps


def sector_embed(state: FockVector) -> np.ndarray:
    """Embed sector amplitudes into the dense 2^N occupation space."""
    dense = np.zeros(1 << state.basis.n_cells, dtype=complex)
    dense[state.basis.states] = state.amps
    return dense


def sector_restrict(dense: np.ndarray, basis: FockBasis, t: int = 0) -> FockVector:
    """Restrict a dense occupation-space vector to an n-particle sector."""
    return FockVector(basis, dense[basis.states], t)


def occupation_distribution(state: FockVector) -> np.ndarray:
    """Per-cell probability that a particle is present; sums to n."""
    prob = np.abs(state.amps) ** 2
    out = np.empty(state.basis.n_cells)
    for x in range(state.basis.n_cells):
        out[x] = prob[(state.basis.states >> x) & 1 == 1].sum()
    return out


def single_particle_step(field: OneComponentField, params: QlgaParams) -> OneComponentField:
    """One-particle factor dynamics for the Slater construction.

    Identical to the one-component step times e^{i alpha}, except that the
    two hop amplitudes across the ring's wrap bond (N-1, 0) are negated.
    That antiperiodic twist makes the exterior square of this operator
    equal the two-particle sector dynamics on the subset basis, because a
    hop across the wrap bond reorders the occupied pair.
    """
    n = field.n_cells
    s, c = math.sin(params.theta), math.cos(params.theta)
    phase = cmath.exp(1j * params.alpha)
    xs = np.arange((field.t + 1) % 2, n, 2)
    left = (xs - 1) % n
    a = field.cells[left]
    b = field.cells[xs]
    new = np.empty(n, dtype=complex)
    new[left] = phase * (1j * s * a + c * b)
    new[xs] = phase * (c * a + 1j * s * b)
    if xs[0] == 0:
        aw, bw = field.cells[n - 1], field.cells[0]
        new[n - 1] = phase * (1j * s * aw - c * bw)
        new[0] = phase * (-c * aw + 1j * s * bw)
    return OneComponentField(new, field.t + 1)


def slater_amplitudes(field_a: OneComponentField, field_b: OneComponentField) -> FockVector:
    """Two-particle amplitudes as 2x2 determinants of one-particle fields.

    Entry {x < y} is field_a(x) field_b(y) - field_a(y) field_b(x), aligned
    with the two-particle occupation basis.
    """
    if field_a.n_cells != field_b.n_cells or field_a.t != field_b.t:
        raise ValueError("one-particle fields must share lattice size and timestep")
    n = field_a.n_cells
    basis = enumerate_basis(n, 2)
    fa, fb = field_a.cells, field_b.cells
    amps = np.empty(basis.dim, dtype=complex)
    for i, mask in enumerate(basis.states):
        m = int(mask)
        x = (m & -m).bit_length() - 1
        y = m.bit_length() - 1
        amps[i] = fa[x] * fb[y] - fa[y] * fb[x]
    return FockVector(basis, amps, field_a.t)


def is_free_fermion(params: QlgaParams, tol: float = 1e-9) -> bool:
    """Whether (alpha, beta) lie on the non-interacting locus.

    The doubly-occupied phase must equal the determinant of the
    single-particle pair block: e^{i beta} = -e^{2 i alpha}.
    """
    return abs(cmath.exp(1j * params.beta) + cmath.exp(2j * params.alpha)) <= tol


def slater_two_particle(
    field_a: OneComponentField, field_b: OneComponentField, params: QlgaParams
) -> np.ndarray:
    """Joint two-particle position distribution from Slater determinants.

    Only valid on the non-interacting locus; raises otherwise.  The
    one-particle inputs must have been evolved with
    :func:`single_particle_step` from the two source cells.
    """
    if not is_free_fermion(params):
        raise ValueError(
            "Slater factorization requires the non-interacting condition "
            "e^{i beta} = -e^{2 i alpha}"
        )
    return np.abs(slater_amplitudes(field_a, field_b).amps) ** 2
