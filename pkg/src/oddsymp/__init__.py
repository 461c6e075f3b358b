"""Computational companion for the odd symplectic groups Q_n and the
destabilisation complexes of the integral Burau image.

Subpackages and modules:

lattice    formed lattices, the groups T_n and Q_n, braidings, Smith form
burau      braid words and the t = -1 Burau representation
complexes  Z/Y/IX/X/W_Q complexes on bounded boxes, face maps, links
homology   exact homology over Q, F_2 and Z
weights    Weyl group of type C, Kostant rows, characters, shift rules
orbits     randomized orbit experiments
cli        the `oddsymp` command
"""
from ._kernels import BACKEND

__version__ = "0.1.0"

__all__ = ["BACKEND", "__version__"]
