"""
Uncovering engine: time assignments, cadlag paths and realizations.
"""

from .assignment import TimeAssignment, sample_uncover_times
from .paths import PolyPath, StepPath, TildePath
from .runner import (REALIZATION_COLUMNS, ComponentPeak, Realization, component_peak, run,
                     write_realization_csv)

__all__ = [
    'TimeAssignment', 'sample_uncover_times', 'StepPath', 'PolyPath', 'TildePath',
    'Realization', 'run', 'component_peak', 'ComponentPeak', 'REALIZATION_COLUMNS', 'write_realization_csv',
]
