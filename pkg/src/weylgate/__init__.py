"""Geometry of two-qubit gates on the Weyl chamber.

Local invariants, canonical coordinates, KAK decomposition,
perfect-entangler tests and witnesses, Hamiltonian coordinate flows, and
minimal three-pulse circuit synthesis for 4x4 unitaries.
"""

from .cartan import (
    BASIS_LABELS,
    MAGIC,
    PAULIS,
    WEYL_REFLECTIONS,
    CartanTarget,
    HamiltonianSplit,
    assemble_nonlocal,
    cartan_conjugate,
    cartan_element,
    commutator,
    generator_basis,
    killing_form,
    split_hamiltonian,
    weyl_reflection_gate,
)
from .chamber import (
    canonical_gate,
    canonicalize,
    controlled_gate,
    coords_of_inverse,
    gate_coords,
    in_chamber,
    named_gate,
    weyl_orbit,
)
from .entangler import (
    P_ENT,
    PeVerdict,
    VolumeReport,
    ent,
    entangling_input,
    is_perfect_entangler,
    pe_fraction_mc,
    pe_from_coords,
    pe_volume_exact,
)
from .errors import (
    BranchSearchError,
    ConvergenceError,
    DegenerateHamiltonianError,
    NotHermitianError,
    NotLocalError,
    NotNonlocalError,
    NotNormalizedError,
    NotPerfectEntanglerError,
    NotSymmetricError,
    NotUnitaryError,
    VerificationError,
    WeylgateError,
)
from .hamflow import (
    HamiltonianSpec,
    JosephsonCnot,
    TrajectorySample,
    closed_form_invariants,
    exchange_coords,
    josephson_cnot_min_time,
    josephson_invariants,
    parse_hamiltonian,
    realize,
    trajectory,
)
from .invariants import (
    LocalInvariants,
    MSpectrum,
    invariant_distance,
    invariants_from_coords,
    local_invariants,
    locally_equivalent,
    m_matrix,
    m_spectrum,
    magic_transform,
)
from .kak import (
    KakDecomposition,
    LocalFactors,
    factor_local,
    is_local_gate,
    kak_decompose,
    kak_reconstruct,
)
from .linalg import (
    check_hermitian,
    check_unitary,
    dist_up_to_phase,
    eig_real_symmetric,
    expm_i_hermitian,
    kron2,
    simdiag_commuting_symmetric,
)
from .synth import (
    CircuitPlan,
    cnot_from_isotropic,
    fundamental_period,
    plan_unitary,
    solve_times,
    steps,
    synthesize,
    verify_plan,
    with_nonnegative_times,
)

__version__ = "0.1.0"

__all__ = [
    "BASIS_LABELS",
    "MAGIC",
    "PAULIS",
    "P_ENT",
    "WEYL_REFLECTIONS",
    "BranchSearchError",
    "CartanTarget",
    "CircuitPlan",
    "ConvergenceError",
    "DegenerateHamiltonianError",
    "HamiltonianSpec",
    "HamiltonianSplit",
    "JosephsonCnot",
    "KakDecomposition",
    "LocalFactors",
    "LocalInvariants",
    "MSpectrum",
    "NotHermitianError",
    "NotLocalError",
    "NotNonlocalError",
    "NotNormalizedError",
    "NotPerfectEntanglerError",
    "NotSymmetricError",
    "NotUnitaryError",
    "PeVerdict",
    "TrajectorySample",
    "VerificationError",
    "VolumeReport",
    "WeylgateError",
    "assemble_nonlocal",
    "canonical_gate",
    "canonicalize",
    "cartan_conjugate",
    "cartan_element",
    "check_hermitian",
    "check_unitary",
    "closed_form_invariants",
    "cnot_from_isotropic",
    "commutator",
    "controlled_gate",
    "coords_of_inverse",
    "dist_up_to_phase",
    "eig_real_symmetric",
    "ent",
    "entangling_input",
    "exchange_coords",
    "expm_i_hermitian",
    "factor_local",
    "fundamental_period",
    "gate_coords",
    "generator_basis",
    "in_chamber",
    "invariant_distance",
    "invariants_from_coords",
    "is_local_gate",
    "is_perfect_entangler",
    "josephson_cnot_min_time",
    "josephson_invariants",
    "kak_decompose",
    "kak_reconstruct",
    "killing_form",
    "kron2",
    "local_invariants",
    "locally_equivalent",
    "m_matrix",
    "m_spectrum",
    "magic_transform",
    "named_gate",
    "parse_hamiltonian",
    "pe_fraction_mc",
    "pe_from_coords",
    "pe_volume_exact",
    "plan_unitary",
    "realize",
    "simdiag_commuting_symmetric",
    "solve_times",
    "split_hamiltonian",
    "steps",
    "synthesize",
    "trajectory",
    "verify_plan",
    "weyl_orbit",
    "weyl_reflection_gate",
    "with_nonnegative_times",
]
