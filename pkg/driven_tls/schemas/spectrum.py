"""
Spectral peak schemas.
"""

from marshmallow import Schema, fields, validate


class CombLabelSchema(Schema):
    """A peak together with its place in the comb {n*omega, n*omega +/- omega_r}"""

    frequency = fields.Float(required=True)
    weight = fields.Float(required=True)
    kind = fields.Str(
        required=True,
        validate=validate.OneOf(["harmonic", "sideband", "unclassified"]),
    )
    n = fields.Int(required=True)
    sign = fields.Int(required=True, validate=validate.OneOf([-1, 0, 1]))
    residual = fields.Float(required=True)
    label = fields.Str(required=True)


# Schema instances
comb_label_schema = CombLabelSchema()
comb_labels_schema = CombLabelSchema(many=True)
