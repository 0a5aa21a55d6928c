"""Canonical averaging of the J2 artificial-satellite problem in Delaunay
variables: series Hamiltonian, generating-function construction to second
order, mean/osculating maps, analytic mean propagation, and the Cartesian
oracle used to verify all of it."""

from .elements import (
    EARTH,
    CartesianState,
    DelaunayState,
    KeplerianElements,
    PhysicalModel,
)

__all__ = [
    "EARTH",
    "CartesianState",
    "DelaunayState",
    "KeplerianElements",
    "PhysicalModel",
]

__version__ = "0.1.0"
