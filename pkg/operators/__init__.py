from modelspace.spaceTag import SpaceTag
from .operatorMatrix import OperatorMatrix, adjoint, operator_norm
from .atto import atto_matrix, compressed_shift, analytic_defect, DefectFactorization
from .nehari import hankel_matrix, dist_to_alpha_Hinf
