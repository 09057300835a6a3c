"""
Martingale decomposition of the visible-edge and visible-triangle counts.
"""

from .paths import (DecompositionResidual, MartingalePaths, decomposition_residual, martingale_paths,
                    visible_neighbor_counts)
from .quadratic import QVPair, expected_qv, neighbor_tilde_sums, quadratic_covariation, quadratic_covariations
from .triangles import (TriangleDecomposition, expected_triangle_qv, triangle_decomposition,
                        triangle_martingales, triangle_quadratic_variation)

__all__ = [
    'MartingalePaths', 'martingale_paths', 'visible_neighbor_counts',
    'DecompositionResidual', 'decomposition_residual',
    'QVPair', 'quadratic_covariation', 'quadratic_covariations', 'expected_qv', 'neighbor_tilde_sums',
    'TriangleDecomposition', 'triangle_decomposition', 'triangle_martingales',
    'triangle_quadratic_variation', 'expected_triangle_qv',
]
