"""
Schema for command-line runs: recipe file values merged with flags.
"""

from marshmallow import RAISE, Schema, ValidationError, fields, validate, validates_schema

from driven_tls.models.run_config import METHODS

COMMANDS = ("solve", "evolve", "compare", "sweep", "spectrum")
SWEEP_AXES = ("amplitude", "bias", "tunneling", "omega", "splitting")
SWEEP_QUANTITIES = (
    "rabi",
    "rabi2nd",
    "rabi_rwa_freq",
    "bs_shift",
    "bs_numeric",
    "bs_reference",
)
UNITS = ("angular", "hz")
FORMATS = ("csv", "json")
SPECTRUM_METHODS = ("chrw", "exact")


class RunConfigSchema(Schema):
    """Every key a recipe file or the command line may set"""

    class Meta:
        unknown = RAISE

    command = fields.Str(validate=validate.OneOf(COMMANDS))
    description = fields.Str()

    # Drive parameters, in the units selected by `units`
    delta = fields.Float(allow_nan=False)
    epsilon = fields.Float(allow_nan=False)
    amplitude = fields.Float(allow_nan=False)
    omega = fields.Float(allow_nan=False)

    method = fields.Str(validate=validate.OneOf(METHODS))
    t_max = fields.Float(validate=validate.Range(min=0, min_inclusive=False))
    samples = fields.Int(validate=validate.Range(min=2))
    photon_n = fields.Int(allow_none=True)
    tol = fields.Float(validate=validate.Range(min=0, min_inclusive=False))

    output = fields.Str(allow_none=True)
    format = fields.Str(validate=validate.OneOf(FORMATS))
    units = fields.Str(load_default="angular", validate=validate.OneOf(UNITS))

    # spectrum
    source = fields.Str(load_default="exact", validate=validate.OneOf(SPECTRUM_METHODS))
    pad_factor = fields.Int(validate=validate.Range(min=1))
    threshold = fields.Float(
        validate=validate.Range(min=0, max=1, min_inclusive=False)
    )

    # sweep
    axis = fields.Str(validate=validate.OneOf(SWEEP_AXES))
    start = fields.Float(allow_nan=False)
    stop = fields.Float(allow_nan=False)
    points = fields.Int(validate=validate.Range(min=2))
    quantity = fields.Str(validate=validate.OneOf(SWEEP_QUANTITIES))
    resonant = fields.Bool(load_default=False)
    workers = fields.Int(validate=validate.Range(min=1))

    @validates_schema
    def validate_sweep_range(self, data, **kwargs):
        if "start" in data and "stop" in data and not data["start"] < data["stop"]:
            raise ValidationError("start must be below stop", field_name="stop")


# Schema instances
run_config_schema = RunConfigSchema()
