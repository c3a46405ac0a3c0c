"""Arc model for the bounded derived category of graded k[y]-modules.

Indecomposable objects (up to suspension) are arcs ``(a, b)`` over
``Z ⊔ {-inf}``; Hom/Ext, cones, thick subcategories (saturated arc sets),
non-crossing partitions and exceptional sequences are all computed
combinatorially.  :mod:`arcmodel.oracle` recomputes Hom/Ext by exact linear
algebra on explicit graded modules.
"""
from .arcs import NEG_INF, Arc, ArcSet, crosses, length, lex_cmp, make_arc, parse_arc, touches
from .dualities import (
    is_reflection_symmetric,
    reflect,
    reflect_ncp,
    reflect_set,
    shift_delta,
    twist,
    twist_set,
)
from .errors import *  # noqa: F401,F403
from .exceptional import (
    ChainQuiver,
    ExceptionalSequence,
    endo_quiver,
    exceptional_sequence,
    minimal_arc,
    perpendicular,
)
from .hom import ShiftedArc, cone, ext_dim, fiber, hom_dim, ker_coker, rhom_dim
from .kernels import BACKEND
from .ncp import NCPartition, alpha, enumerate_noncrossing, is_noncrossing, ncp_join, ncp_meet, phi
from .saturation import (
    SaturatedArcSet,
    enumerate_saturated,
    is_saturated,
    is_twist_stable,
    join,
    meet,
    saturate,
)

__version__ = "0.1.0"
