from .spaceTag import SpaceTag
from .circleFunction import CircleFunction, grid_points, analytic_mask, signed_indices
from .modelBasis import ModelBasis, ModelBases, LaurentProjections, required_grid_size, tm_basis, model_bases
from .modelBasis import reproducing_kernel, k0, k0_tilde, project_model, projections_laurent
from .modelBasis import conjugation_apply, conjugation_matrix, jsharp_map, jsharp_blaschke, jsharp_matrix, model_subspace_residual
