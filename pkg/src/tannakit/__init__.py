"""Presentations of universal bialgebras and Hopf algebras attached to
quadratic algebras and bilinear forms, with exact arithmetic throughout."""

from .exactlin import Field, MatrixExact, QQ, Subspace
from .quadalg import (
    ASReport,
    NotFiniteTypeError,
    QuadraticAlgebra,
    as_regular_check,
    graded_dims,
    jordan_plane,
    koszul_dual,
    polynomial_ring,
    quantum_plane,
    relation_spaces,
)
from .moncat import build_category, interval, leq, parse_word, word_str
from .ncpoly import NCPoly, PresentedAlgebra, rewrite_reduce, span_equal
from .coendc import (
    AntipodeError,
    FiberFunctorData,
    PresentedBialgebra,
    antipode_derive,
    compile_coend,
    eliminate_defined_generators,
    quadratic_fiber,
    regular_fiber,
    uend_direct,
)
from .comodrep import StructureContext, nabla_delta, simple_dim, wt
from .bilform import (
    BilinearForm,
    comorita_components,
    hb_presentation,
    q_form,
    quantum_dimension,
)

__version__ = "0.1.0"
