"""Numerical toolkit for log-harmonic maps ``f = z h conj(g)``."""

from .cseries import ComplexSeries
from .lhmap import LogHarmonicMap, from_catalog, koebe_alpha, f_lambda
from .repgen import DiscreteMeasure, generate, random_map
from .sampling import SamplingConfig, VerificationReport
from .diffgeo import NonVanishingMap

__all__ = [
    "ComplexSeries", "LogHarmonicMap", "from_catalog", "koebe_alpha", "f_lambda",
    "DiscreteMeasure", "generate", "random_map", "SamplingConfig", "VerificationReport",
    "NonVanishingMap",
]

__version__ = "0.1.0"
