"""Lattice dispersion toolkit.

Distance, tristance, and quadristance computations on four lattice graphs,
the corresponding optimal anticode constructions, exhaustive small-diameter
searches, interleaving lower bounds, and Go connectivity loci.
"""

from .lattice import DomainError, Model, ParityError

__version__ = "0.1.0"

__all__ = ["DomainError", "Model", "ParityError", "__version__"]
