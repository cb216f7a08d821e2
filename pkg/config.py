import os
from dotenv import load_dotenv

basedir = os.path.abspath(os.path.dirname(__file__))
load_dotenv(os.path.join(basedir, ".env"))


class Config:
    """Base configuration."""

    TESTING = False
    LOG_LEVEL = os.environ.get("LOG_LEVEL") or "WARNING"

    # Self-consistent (xi, zeta) solve
    SOLVER_TOL = float(os.environ.get("SOLVER_TOL") or 1e-10)
    SOLVER_MAX_ITER = int(os.environ.get("SOLVER_MAX_ITER") or 200)

    # Exact Schrodinger integration; max step is a fraction of 2*pi/omega
    INTEGRATOR_RTOL = float(os.environ.get("INTEGRATOR_RTOL") or 1e-10)
    INTEGRATOR_ATOL = float(os.environ.get("INTEGRATOR_ATOL") or 1e-12)
    INTEGRATOR_MAX_STEP = float(os.environ.get("INTEGRATOR_MAX_STEP") or 0.05)
    INTEGRATOR_METHOD = os.environ.get("INTEGRATOR_METHOD") or "RK45"

    SPECTRUM_PAD_FACTOR = int(os.environ.get("SPECTRUM_PAD_FACTOR") or 8)
    SPECTRUM_THRESHOLD = float(os.environ.get("SPECTRUM_THRESHOLD") or 1e-3)

    SWEEP_WORKERS = int(os.environ.get("SWEEP_WORKERS") or 1)


class DevelopmentConfig(Config):
    """Development configuration."""

    LOG_LEVEL = os.environ.get("LOG_LEVEL") or "DEBUG"


class TestingConfig(Config):
    """Testing configuration."""

    TESTING = True
    INTEGRATOR_RTOL = 1e-9
    INTEGRATOR_ATOL = 1e-11
    SWEEP_WORKERS = 1


class ProductionConfig(Config):
    """Production configuration."""

    SWEEP_WORKERS = int(os.environ.get("SWEEP_WORKERS") or os.cpu_count() or 1)


config = {
    "development": DevelopmentConfig,
    "testing": TestingConfig,
    "production": ProductionConfig,
}
