"""Qubit-qutrit (2x3) states under collective dephasing.

Negativity, classical correlation, quantum discord and local quantum
uncertainty, computed numerically and from closed forms, plus Haar-random
ensemble statistics.
"""

from .channel import DephasingPoint, asymptotic_state, dephase, dephase_grid
from .correlations import (
    CorrelationRecord,
    QubitMeasurement,
    classical_correlation,
    correlation_record,
    lqu,
    mutual_information,
    negativity,
    quantum_discord,
    von_neumann_entropy,
)
from .ensemble import EnsembleConfig, EnsembleSummary, classify_asymptotic, confidence_interval, run_ensemble
from .states import (
    DfsMixFamily,
    IsoMixFamily,
    TwoParamFamily,
    dfs_mix_state,
    iso_mix_state,
    iso_state,
    psi_k_state,
    random_pure_state,
    two_param_state,
)

__version__ = "0.1.0"
