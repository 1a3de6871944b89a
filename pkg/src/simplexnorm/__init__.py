"""Norms of linear interpolation projectors on Euclidean balls."""
from .errors import (ConfigError, DegenerateSimplex, DimensionMismatch, DomainError,
                     IndexOutOfRange, NodesOutsideBall, SimplexNormError)
from .geometry import (Ball, Ellipsoid, Simplex, centroid, circumball, contains,
                       lagrange_coefficients, vertex_matrix)
from .projector import (ProjectorReport, interpolate, lambda_eval, lebesgue_function,
                        norm_ball, norm_oracle)
from .regular import ThetaRecord, a_n, psi, regular_simplex, theta
from .extremal import (ExtremalReport, FaceSelection, face_centroid, face_sum_identity,
                       mean_square_identity, minimal_ellipsoid, ratio_r, verify_theorem1,
                       y_point)
from .optimizer import OptimizeConfig, OptimizeResult, minimize_norm, regularity_metrics

__version__ = "0.1.0"
