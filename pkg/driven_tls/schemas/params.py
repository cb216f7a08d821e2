"""
Drive-parameter and integrator schemas.
"""

from marshmallow import Schema, fields, post_load, validate

from driven_tls.models.params import DriveParams
from driven_tls.models.run_config import (
    INTEGRATOR_METHODS,
    MAX_STEP_LIMIT,
    IntegratorConfig,
)


class DriveParamsSchema(Schema):
    """Tunneling, bias, amplitude and drive frequency in angular units"""

    delta = fields.Float(
        required=True, validate=validate.Range(min=0, min_inclusive=False)
    )
    epsilon = fields.Float(required=True)
    amplitude = fields.Float(required=True, validate=validate.Range(min=0))
    omega = fields.Float(
        required=True, validate=validate.Range(min=0, min_inclusive=False)
    )

    @post_load
    def make_params(self, data, **kwargs):
        return DriveParams(**data)


class IntegratorConfigSchema(Schema):
    rel_tol = fields.Float(validate=validate.Range(min=0, min_inclusive=False))
    abs_tol = fields.Float(validate=validate.Range(min=0, min_inclusive=False))
    max_step = fields.Float(
        validate=validate.Range(min=0, max=MAX_STEP_LIMIT, min_inclusive=False)
    )
    method = fields.Str(validate=validate.OneOf(INTEGRATOR_METHODS))

    @post_load
    def make_config(self, data, **kwargs):
        return IntegratorConfig(**data)


# Schema instances
drive_params_schema = DriveParamsSchema()
integrator_config_schema = IntegratorConfigSchema()
