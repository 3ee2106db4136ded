"""KPZ lower-tail Fredholm determinants, equilibrium measures, and asymptotics."""

from ._kpztail import (
    DomainError,
    DominanceNotEstablished,
    EquilibriumData,
    NoConvergence,
    QuadratureFailure,
    RangeExceeded,
    SpectrumOutOfRange,
    TruncationTooTight,
    airy,
    airy_kernel,
    convergence_scan,
    dlog_q_ds,
    dlog_q_dT,
    dlogq_ds_asymptotic,
    dlogq_dT_asymptotic,
    fermi,
    kpz_tail_bracket,
    lambda0_asymptotic,
    log_q,
    log_q_asymptotic,
    log_q_expansion_fixed_T,
    naive_estimate,
    potential_v,
    rate_phi,
    solve_lambda0,
    step_lemma_error,
    tracy_widom_log_cdf,
    tw_tail_expansion,
    zeta_prime_minus_one,
)

__all__ = [
    "DomainError",
    "DominanceNotEstablished",
    "EquilibriumData",
    "NoConvergence",
    "QuadratureFailure",
    "RangeExceeded",
    "SpectrumOutOfRange",
    "TruncationTooTight",
    "airy",
    "airy_kernel",
    "convergence_scan",
    "dlog_q_ds",
    "dlog_q_dT",
    "dlogq_ds_asymptotic",
    "dlogq_dT_asymptotic",
    "fermi",
    "kpz_tail_bracket",
    "lambda0_asymptotic",
    "log_q",
    "log_q_asymptotic",
    "log_q_expansion_fixed_T",
    "naive_estimate",
    "potential_v",
    "rate_phi",
    "solve_lambda0",
    "step_lemma_error",
    "tracy_widom_log_cdf",
    "tw_tail_expansion",
    "zeta_prime_minus_one",
]

__version__ = "0.1.0"
