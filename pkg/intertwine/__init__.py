from .sylvester import sylvester_nullspace, sylvester_operator, operator_scale
from .intertwiners import solve_intertwiners, starred_intertwiners, hankel_intertwiners, hankel_star_intertwiners
from .intertwiners import symbol_of_intertwiner, membership_residual, intertwining_residual, reconstruction_residual, span_rank
from .intertwiners import star_transform, hankel_transform, sst_transform
from .commutator import commutator_defect, cancellation_test, CommutatorDefect, CancellationResult, rank_one
from .lattice import intersection_subspace, subspace_distance, LatticeResult
