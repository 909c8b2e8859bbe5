"""Exact invariants of rational polyhedral sets.

Computes, over exact rational arithmetic: face lattices, recession and
lineality data, tangent cones and visibility; compactly supported and
bounded Euler characteristics via arrangement cells; graded classes in
Z[u,v]/(uv) modulo scissor relations; Brianchon-Gram decompositions with
symbolic verification; a 1-dimensional weight-sum invariant over subgroups
of the rationals; and a computable quotient-ring model of the motivic
volume of tropical-preimage semi-algebraic sets.
"""

from .constructible import (
    Atom,
    ConstructibleSet,
    SignedPolyCombo,
    cell_complex,
    eval_point,
    functions_equal,
    parse_constructible,
    to_signed_combo,
)
from .briangram import BGDecomposition, bg_decompose, bg_verify
from .errors import (
    DomainError,
    EngineError,
    FragmentError,
    InvariantError,
    ParseError,
    ResourceError,
    UsageError,
)
from .euler import EulerPair, chi, chi_b, chi_polyhedron_closed_form
from .exactq import Rat, gauss_solve, lp_optimize, primitive_normalize
from .grothendieck import (
    GradedClass,
    UngradedClass,
    class_of,
    class_of_cone,
    class_of_polyhedron_closed_form,
    sigma,
    ungraded,
)
from .motivic import (
    IntPoly,
    SemialgDesc,
    VFClass,
    parse_semialg,
    psi,
    semialg_class,
    theta_trop_class,
)
from .onedim import OneDimCanonical, SubgroupQ, canonicalize, chi_gamma, weight
from .polyhedron import (
    Face,
    HPolyhedron,
    RecessionData,
    faces,
    irredundant,
    is_empty,
    minimal_face_point,
    parse_polyhedron,
    recession,
    tangent_cone,
)

__version__ = "0.1.0"
