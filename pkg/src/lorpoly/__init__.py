"""Exact computations with Lorentzian polynomials and M-convex sets.

The package is organized around one pipeline: M-convex sets (combinatorics)
carry representations into triangular hyperfields (hyperfield,
representations), whose tropical limits form fans of M-convex functions
(dressian); regular subdivisions of base polytopes (polytopes) feed the
Euler-characteristic bookkeeping for compactified strata (euler), and the
gauge module puts ball coordinates on the Lorentzian cone itself.
"""

__version__ = "0.1.0"

from .combinatorics import MConvexSet, is_m_convex, build_named
from .hyperfield import is_null
from .representations import (is_weak_rep, is_strong_rep, tutte_rank,
                              reduced_dim)
from .lorentzian import (Polynomial, is_lorentzian, is_strictly_lorentzian,
                         grassmann_map, betsy_polynomial, power_map,
                         normalize, simplify_degree2)
from .dressian import (MConvexFunction, is_m_convex_function, enumerate_rays,
                       induced_subdivision, dressian_to_polynomial, is_rigid,
                       is_fan_one_dimensional)
from .polytopes import base_polytope, face_lattice, is_face
from .euler import (euler_characteristic, stratum_euler, rigid_euler,
                    two_orbit_stable_euler)
from .gauge import gauge_psi, ball_coordinates, inverse_ball

__all__ = [
    "MConvexSet",
    "MConvexFunction",
    "Polynomial",
    "__version__",
    "ball_coordinates",
    "base_polytope",
    "betsy_polynomial",
    "build_named",
    "dressian_to_polynomial",
    "enumerate_rays",
    "euler_characteristic",
    "face_lattice",
    "gauge_psi",
    "grassmann_map",
    "induced_subdivision",
    "inverse_ball",
    "is_face",
    "is_fan_one_dimensional",
    "is_lorentzian",
    "is_m_convex",
    "is_m_convex_function",
    "is_null",
    "is_rigid",
    "is_strictly_lorentzian",
    "is_strong_rep",
    "is_weak_rep",
    "normalize",
    "power_map",
    "reduced_dim",
    "rigid_euler",
    "simplify_degree2",
    "stratum_euler",
    "tutte_rank",
    "two_orbit_stable_euler",
]
