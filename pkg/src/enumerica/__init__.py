"""Exact computations in enumerative geometry.

Schubert calculus on Grassmannians, torus localization, Chern classes of
symmetric powers, cell decompositions, and genus-0 Gromov-Witten theory of
``P^1``, ``P^2`` and surfaces, all in exact rational arithmetic.
"""

from .algebra import GradedVariable, Partition, SuperMonomial, SuperSeries
from .cells import betti, euler_from_cells, morse_cells_surface
from .chern import hypersurface_tangent_chern, sym_chern
from .gw import (
    P1,
    P2,
    CohBasis,
    GWQuery,
    KontsevichTable,
    big_quantum_product,
    evaluate_gw,
    kontsevich,
    potential,
    recursion_from_wdvv,
    small_quantum_product,
    surface,
    wdvv_residual,
)
from .localization import euler_char, lines_via_localization
from .schubert import ChowClass, GrassContext, lines_on_hypersurface, lr_coefficient

__version__ = "0.1.0"
