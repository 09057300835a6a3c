"""
Monte Carlo ensembles, moment summaries and comparison with limit models.
"""

from .compare import ComparisonReport, TabulatedCovariance, compare, gaussian_screen
from .oracle import OracleMoments, brute_force_oracle
from .runner import (PLUGIN_KEYS, normalization_label, normalized_values, replicate_stream, run_chunk,
                     run_ensemble)
from .spec import (ExperimentConfig, ExperimentSpec, OutputBlock, Process, TheoryBlock, experiment_spec,
                   load_experiment_config)
from .stats import (CovarianceAccumulator, EnsembleStats, MomentAccumulator, covariance_frame, dump_json, summarize,
                    write_covariance_csv)

__all__ = [
    'ExperimentSpec', 'Process', 'experiment_spec',
    'ExperimentConfig', 'OutputBlock', 'TheoryBlock', 'load_experiment_config',
    'run_ensemble', 'run_chunk', 'replicate_stream', 'normalized_values', 'normalization_label', 'PLUGIN_KEYS',
    'EnsembleStats', 'CovarianceAccumulator', 'MomentAccumulator', 'summarize', 'dump_json',
    'write_covariance_csv', 'covariance_frame',
    'compare', 'ComparisonReport', 'TabulatedCovariance', 'gaussian_screen',
    'brute_force_oracle', 'OracleMoments',
]
