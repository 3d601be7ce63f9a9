"""dgquiver: exact-arithmetic toolkit for differential graded quiver algebras."""

from .constructions import (AlgebraPresentation, auslander_rad2, cyclic_derivative,
                            deformation_parameter, derived_preprojective, ginzburg,
                            jacobian_presentation, mckay_cyclic, resolve_gldim2)
from .dga import DgQuiverAlgebra, check_d_squared, extend_d, validate
from .drinfeld import DrinfeldComplex, drinfeld_h0
from .dsl import Document, parse_document, parse_element, parse_quiver, serialize_document
from .dot import emit_dot
from .elements import PathElement, Potential, basis_paths
from .errors import DgQuiverError, ParseError, PreconditionError, StructureError
from .findim import FiniteDimAlgebra, build_findim
from .homology import hilbert_report, quotient_dim_truncated, truncated_cohomology
from .leavitt import (LeavittPresentation, leavitt_graded_dim, leavitt_normal_form,
                      leavitt_presentation)
from .quiver import GradedQuiver, Path, Quiver, compose
from .quotients import contracting_homotopy, delete_vertices, verify_contraction

__version__ = "0.1.0"
