"""
Configuration classes for different environments.
"""

import os


class Config:
    """Base configuration class."""
    VERSION = "0.2.0"
    LOG_LEVEL = 'INFO'

    # Rejection samplers
    CONFIG_REJECTION_CAP = 10_000
    GW_REJECTION_CAP = 100_000

    # Ensemble statistics
    JACKKNIFE_BLOCKS = 50
    CHUNK_SIZE = 100
    DEFAULT_WORKERS = os.cpu_count() or 1
    MIN_REPLICATES = 100

    # Comparison tolerances
    ABS_TOL = 0.02
    Z_TOL = 5.0
    REL_TOL = 0.0
    SKEW_LIMIT = 0.15
    KURT_LIMIT = 0.3

    # Limit models
    DEFAULT_GRID = (0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9)
    EIG_CLIP_TOL = 1e-10

    # Exact enumeration
    ORACLE_MAX_N = 8


class DevelopmentConfig(Config):
    """Development configuration."""

    DEBUG = True
    LOG_LEVEL = 'DEBUG'


class ProductionConfig(Config):
    """Production configuration."""

    DEBUG = False
    LOG_LEVEL = 'WARNING'


class TestingConfig(Config):
    """Testing configuration."""

    TESTING = True
    DEFAULT_WORKERS = 1
    CHUNK_SIZE = 25


# Configuration dictionary
config = {
    'development': DevelopmentConfig,
    'production': ProductionConfig,
    'testing': TestingConfig,
    'default': DevelopmentConfig
}
