"""
Self-consistent solution schema (dump only).
"""

from marshmallow import Schema, fields

# Fields carrying an angular frequency; rescaled when reporting in Hz.
FREQUENCY_FIELDS = (
    "delta_tilde",
    "epsilon_tilde",
    "xi_big_tilde",
    "a_tilde",
    "detuning_tilde",
    "rabi_freq",
)


class ChrwSolutionSchema(Schema):
    """Flat snake_case view of a ChrwSolution"""

    xi = fields.Float(dump_only=True)
    zeta = fields.Float(dump_only=True)
    x_norm = fields.Float(dump_only=True)
    z_arg = fields.Float(dump_only=True)
    delta_tilde = fields.Float(dump_only=True)
    epsilon_tilde = fields.Float(dump_only=True)
    j_c = fields.Float(dump_only=True)
    xi_big_tilde = fields.Float(dump_only=True)
    a_tilde = fields.Float(dump_only=True)
    u = fields.Float(dump_only=True)
    v = fields.Float(dump_only=True)
    detuning_tilde = fields.Float(dump_only=True)
    rabi_freq = fields.Float(dump_only=True)
    residual_norm = fields.Float(dump_only=True)


# Schema instances
chrw_solution_schema = ChrwSolutionSchema()
