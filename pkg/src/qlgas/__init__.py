"""Exactly unitary one-dimensional quantum cellular automata and lattice gases."""

from .lattice import (
    LightconeCoords,
    OneComponentField,
    PositionDistribution,
    TwoComponentField,
    cell_probability_history,
    from_lightcone,
    norm_sq,
    project_position,
    to_lightcone,
)
from .qca1 import (
    PropagatorResult,
    bessel_j01,
    bessel_limit,
    delta_left_mover,
    delta_right_mover,
    evolve,
    measure_speed,
    propagator_closed,
    propagator_left_start,
    propagator_paths,
    step,
)
from .qca2 import (
    Qca2Params,
    embed_qca1,
    evolve2,
    probability2,
    restrict_qca1,
    step2,
    unit_left_mover2,
    unit_right_mover2,
)
from .qlga import (
    FockBasis,
    FockVector,
    QlgaParams,
    enumerate_basis,
    evolve_qlga,
    fock_state,
    full_space_step,
    is_free_fermion,
    mover_cell,
    occupation_distribution,
    qlga_step,
    sector_embed,
    sector_restrict,
    single_particle_step,
    slater_amplitudes,
    slater_two_particle,
)
from .render import render_pgm, write_csv
from .unitarity import (
    PARITY,
    BlockBandWeights,
    NonUnitary,
    ScalarBandWeights,
    Trivial,
    TwoStepWeights,
    block_band_residuals,
    build_pair_matrix,
    build_qlga_matrix,
    build_two_component_weights,
    classify_no_go,
    parity_residuals,
    scalar_band_residuals,
    two_step_residuals,
)

__version__ = "0.1.0"
