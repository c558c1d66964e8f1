"""Exact Duistermaat-Heckman measures, Okounkov bodies and restricted volumes
on toric models. All numbers are fractions.Fraction."""

from ._okdh import *  # noqa: F401,F403
from ._okdh import InvariantViolation, ToricModel, WeightFiltration, DivisorData  # noqa: F401
