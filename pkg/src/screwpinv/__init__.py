"""Hyperbolic pseudoinverses of screw Jacobians and related screw-system tools."""

from .control import (CostEvaluation, HybridSplit, Projector, cost_phi, cost_psi, damped_solution,
                      hybrid_split, oblique_projector, point_direction_system,
                      point_direction_task, projector_h)
from .errors import *  # noqa: F401,F403
from .involution import (GeometricCase, InvolutionReport, LineSet, TransversalCount,
                         classify_involution_geometry, is_in_involution, sylvester_factor_identity,
                         transversal_count)
from .linalg import Mat, PolyH, column_space, det, inverse, nullspace, rank, real_roots
from .pinv import (GramPencil, Method, PseudoinverseResult, ScrewJacobian, exists_h_pinv,
                   gram_kernel_certificate,
                   gram_matrix, gram_pencil, h_pseudoinverse, moore_penrose, verify_axioms,
                   wrench_pseudoinverse)
from .se3 import (INF, Finite, Infinity, RigidDisplacement, Twist, Wrench, adjoint_action,
                  adjoint_matrix, as_pitch, bracket, line_through, pairing, pitch, q_alpha_beta,
                  q_inverse, q_matrix, twist_to_wrench, wrench_to_twist)
from .systems import (GHClass, ScrewSystem, classify, classify_via_reciprocal, dim_at_infinity,
                      no_pinv_for_all_h, principal_pitches, reciprocal_system)

__version__ = "0.1.0"
