"""Pair-condensate states, entanglement witnesses, exchange-phase
constraints, and Gaussian field entropies."""

from ._core import (
    FockVector,
    Ladder,
    OdlroReport,
    Spin,
    SpinCorrelatorReport,
    TwoSiteABC,
    allowed_flux_set,
    apply_ladder,
    apply_pair_exchange_phase,
    apply_string,
    assemble_two_site_rho,
    asymptotic_alpha,
    binomial,
    block_entropy,
    build_eta_state,
    coupling_matrix,
    dicke_state,
    eta_dagger_power,
    eta_eigenstate_residual,
    expectation,
    flux_quantum,
    gaussian_block_entropy,
    ground_covariance,
    half_filling_ground_state,
    heisenberg_limit_check,
    hubbard_hamiltonian,
    inner_product,
    is_ppt,
    is_two_site_entangled,
    mass_scan_fit,
    negativity,
    odlro_correlator,
    onsite_spin_squared,
    partial_transpose,
    reduce_to_sites,
    spin_correlator,
    symmetry_defect,
    symplectic_spectrum,
    two_site_abc,
    von_neumann_entropy,
)

__all__ = [name for name in dir() if not name.startswith("_")]
