"""Quasi-local mass of rotationally symmetric Bartnik data.

Bartnik data ``(Sigma, gamma, H)`` is stored as a metric of revolution
``alpha(t)^2 dt^2 + beta(t)^2 dphi^2`` on the 2-sphere with a mean curvature
profile ``H(t)``. The package evaluates the Hawking, Brown-York and Miao
masses, brackets the critical parameter ``lambda0`` and the mass built from
it, and implements the twisted product of mass functionals.
"""

from .errors import NumericalError, QLMassError, ValidationError
from .surface import BartnikData, GeometryReport, RadialProfile, scale_H, scale_lengths, validate
from .embedding import EmbeddedProfile, embed_revolution, minkowski_residual
from .masses import MassValue, brown_york, critical_mass, hawking, miao
from .critical import LambdaBracket, FillInCertificate, bracket, exact_round, fillin_certificate, shi_tam_upper
from .algebra import MassFunctional, lambda_of, star
from .generators import GeneratorSpec, generate

__version__ = "0.1.0"

__all__ = [
    "QLMassError",
    "ValidationError",
    "NumericalError",
    "RadialProfile",
    "BartnikData",
    "GeometryReport",
    "validate",
    "scale_H",
    "scale_lengths",
    "EmbeddedProfile",
    "embed_revolution",
    "minkowski_residual",
    "MassValue",
    "hawking",
    "brown_york",
    "miao",
    "critical_mass",
    "LambdaBracket",
    "FillInCertificate",
    "bracket",
    "exact_round",
    "fillin_certificate",
    "shi_tam_upper",
    "MassFunctional",
    "lambda_of",
    "star",
    "GeneratorSpec",
    "generate",
]
