"""Spectral toolkit for the interval-confined particle.

Builds the four orthonormal eigenbasis families (Dirichlet, Neumann,
periodic and antiperiodic behaviour) by orthogonality sifting of projected
free-particle states, and exposes the Gram, expansion, operator and
boundary-scan machinery of the C++ core.
"""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
