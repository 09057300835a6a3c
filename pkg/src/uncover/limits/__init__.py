"""
Limit covariance models, clock transforms and grid samplers.
"""

from .models import (BASE_CLOCK, NORMALIZATION, REQUIRED_PARAMS, ClockCorrection, Clock, CovarianceKind,
                     CovarianceModel, covariance, covariance_matrix, plugin_model, plugin_params, theory_model)
from .sampling import brownian_representation_sample, gaussian_sample, sqrt_factor
from .transforms import COMPONENT_FPRIME, EDGE_FPRIME, derandomize, randomize

__all__ = [
    'CovarianceKind', 'CovarianceModel', 'Clock', 'ClockCorrection', 'REQUIRED_PARAMS', 'BASE_CLOCK',
    'NORMALIZATION', 'covariance', 'covariance_matrix', 'theory_model', 'plugin_model', 'plugin_params',
    'derandomize', 'randomize', 'EDGE_FPRIME', 'COMPONENT_FPRIME',
    'gaussian_sample', 'brownian_representation_sample', 'sqrt_factor',
]
