from .laurentWindow import LaurentWindow, WindowSections, SectionPair, window_bases, decay_length
from .dualBlocks import DualBlockOperator, block_operator, dtto_blocks, dz_block, apply_by_multiplication
from .dualBlocks import conjugation_permutation, dual_conjugation_residual
from .commutation import IdattoCase, idatto_classify, idatto_case1_residual, idatto_case2_residual
from .commutation import interior_commutator_residual, rank2_identity_residual, shift_invariance_residual
from .commutation import kmutant_intertwine_residual, commutator_matrix, shift_matrix
from .kmutant import KmutantCase, KmutantSymbols, kmutant_symbols, kmutant_build, c18_conditions, C18Result
from .kmutant import reference_intertwiners, remark_mismatch, case_for
