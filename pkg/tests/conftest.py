"""
Test configuration and fixtures
"""

import io
import math

import numpy as np
import pytest

from driven_tls import create_app
from driven_tls.models.params import DriveParams

TWO_PI = 2.0 * math.pi


@pytest.fixture(scope="session")
def app():
    """Create application for testing"""
    return create_app("testing")


@pytest.fixture
def golden_params():
    """Near-resonance, moderately strong drive with a known (xi, zeta)"""
    return DriveParams(delta=1.0, epsilon=0.4, amplitude=1.3, omega=1.2924)


@pytest.fixture
def equal_bias_params():
    """On resonance with eps = delta and A = omega = Xi_0 = sqrt(2)"""
    root2 = math.sqrt(2.0)
    return DriveParams(delta=1.0, epsilon=1.0, amplitude=root2, omega=root2)


@pytest.fixture
def flux_params():
    """Flux qubit in angular GHz; omega is a placeholder at the bare splitting"""
    delta, epsilon = TWO_PI * 4.869, TWO_PI * 4.154
    return DriveParams(
        delta=delta,
        epsilon=epsilon,
        amplitude=TWO_PI * 4.100,
        omega=math.hypot(delta, epsilon),
    )


@pytest.fixture
def rng():
    """Seeded generator for randomized property checks"""
    return np.random.default_rng(20130708)


@pytest.fixture
def cli(app):
    """Run one command line in-process and capture (exit_code, stdout, stderr)"""

    def invoke(*argv):
        out, err = io.StringIO(), io.StringIO()
        code = app.run([str(arg) for arg in argv], stdout=out, stderr=err)
        return code, out.getvalue(), err.getvalue()

    return invoke
