"""
Schemas package for the driven two-level-system package.
"""

from .params import (
    DriveParamsSchema,
    IntegratorConfigSchema,
    drive_params_schema,
    integrator_config_schema,
)
from .solution import ChrwSolutionSchema, chrw_solution_schema
from .spectrum import (
    CombLabelSchema,
    comb_label_schema,
    comb_labels_schema,
)
from .run_config import RunConfigSchema, run_config_schema

__all__ = [
    "DriveParamsSchema",
    "drive_params_schema",
    "IntegratorConfigSchema",
    "integrator_config_schema",
    "ChrwSolutionSchema",
    "chrw_solution_schema",
    "CombLabelSchema",
    "comb_label_schema",
    "comb_labels_schema",
    "RunConfigSchema",
    "run_config_schema",
]
