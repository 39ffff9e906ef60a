"""
Infrastructure Layer

Environment and library adapters.
Contains configuration, error classification, seeded sampling,
networkx materialisation and YAML sweep plans.
"""

from src.infrastructure.config import (
    AppConfig,
    get_config,
    get_limits_config,
    get_sweep_config,
    reload_config,
)
from src.infrastructure.error_context import ErrorClassifier, ErrorContext
from src.infrastructure.sampler import InvolutionSampler
from src.infrastructure.sweep_plan import SweepPlan, SweepPlanLoader, get_sweep_plan
