"""Partitions into Piatetski-Shapiro parts floor(l^kappa)."""
from ._errors import BoundaryError, BracketError, BudgetError, DomainError, PoleError
from .asymptotics import (AsymptoticModel, ExpansionCoefficients, asymptotic_estimate,
                          burmann_revert, expansion_coefficients, lambda_coefficients,
                          theorem_constants)
from .estimators import (AsymptoticPartitionEstimator, ExactPartitionCounter,
                         SaddlePartitionEstimator)
from .exact import CountTable, count_table, pentagonal_oracle
from .numerics import bernoulli, digamma, gamma_fn, zeta_deriv, zeta_em
from .pszeta import (ZetaValue, envelope_constant, ps_zeta, ps_zeta_deriv_zero, ps_zeta_zero,
                     remark_identity_gap, residue_at, sigma_values)
from .saddle import SaddleResult, big_l, mellin_expansion, saddle_estimate, solve_saddle
from .sequence import (KappaParam, condition2_statistic, part_groups, ps_term,
                       value_multiplicity, weyl_sum)
from .series import PowerSeries

__version__ = "0.1.0"
