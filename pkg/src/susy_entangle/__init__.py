"""Two-mode two-photon exchange dynamics at fixed photon number: exact
spectrum, Fock-state evolution and entanglement entropy."""

__version__ = "0.1.0"

from .basis import (  # noqa: E402
    FockPair,
    JMIndex,
    SectorBasis,
    fock_from_jm,
    higgs_commutator_defect,
    jm_from_fock,
    ladder_minus_element,
    ladder_plus_element,
    r0_eigenvalue,
)
from .dynamics import EvolvedState, ProductStateSpec, amplitude_phase_convention, evolve  # noqa: E402
from .entanglement import (  # noqa: E402
    SchmidtProfile,
    entropy_trajectory,
    max_entangled_state,
    schmidt_profile,
    von_neumann_entropy,
)
from .errors import ConsistencyError, ParameterError, SusyEntangleError  # noqa: E402
from .hamiltonian import (  # noqa: E402
    GeneralKKParams,
    HamiltonianParams,
    ParityBlock,
    build_general_kk,
    build_sector_matrix,
    coupling_A,
    split_parity_blocks,
)
from .spectrum import (  # noqa: E402
    SpectralDecomposition,
    assemble_spectrum,
    char_poly_eval,
    diagonalize_block,
    verify_recursion,
)
from .trajectory import TrajectoryRecord, emit_csv, read_csv  # noqa: E402
