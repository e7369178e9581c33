from .mskitException import MskitException, MskitUsageError, UnknownTheorem
from .mskitException import PoleHit, NotDivisible, DegreeZero, GridMismatch, TagMismatch, NoConvergence
from .mskitException import NotAnIntertwiner, WindowTooSmall, CaseMismatch
