"""Tilted washboard potentials across mechanics, Josephson junctions and optics."""

from .core import (DegeneratePotentialError, Extremum, PendulumParams, WashboardPotential,
                   barrier_height, critical_tilt, evaluate, find_extrema, force,
                   pendulum_potential)

__version__ = "0.1.0"

__all__ = [
    "DegeneratePotentialError",
    "Extremum",
    "PendulumParams",
    "WashboardPotential",
    "barrier_height",
    "critical_tilt",
    "evaluate",
    "find_extrema",
    "force",
    "pendulum_potential",
    "__version__",
]
