#!/usr/bin/env python3


class MskitException(Exception):
    def __init__(self, in_message, in_original_exception=None) -> None:
        super().__init__(in_message)
        self.original_exception = in_original_exception


class MskitUsageError(MskitException, ValueError):
    """ bad command line payload: malformed json, bad range, unknown tolerance name """
    pass


class PoleHit(MskitException):
    def __init__(self, point, pole) -> None:
        super().__init__(f"evaluation point {point} coincides with pole {pole}")
        self.point = point
        self.pole = pole


class NotDivisible(MskitException):
    def __init__(self, unmatched_zero) -> None:
        super().__init__(f"zero {unmatched_zero} of the divisor has no match in the dividend")
        self.unmatched_zero = unmatched_zero


class DegreeZero(MskitException):
    def __init__(self, in_message="model space of a unit product is {0}") -> None:
        super().__init__(in_message)


class GridMismatch(MskitException):
    def __init__(self, *grid_sizes) -> None:
        super().__init__(f"grid sizes do not match: {', '.join(str(g) for g in grid_sizes)}")
        self.grid_sizes = grid_sizes


class TagMismatch(MskitException):
    def __init__(self, outer_domain, inner_codomain) -> None:
        super().__init__(f"cannot compose: domain {outer_domain} != codomain {inner_codomain}")
        self.outer_domain = outer_domain
        self.inner_codomain = inner_codomain


class NoConvergence(MskitException):
    def __init__(self, values) -> None:
        super().__init__(f"schedule exhausted without convergence, values: {list(values)}")
        self.values = list(values)


class NotAnIntertwiner(MskitException):
    def __init__(self, residual, what="S_alpha A - A S_theta") -> None:
        super().__init__(f"residual of {what} is {residual:.3e}")
        self.residual = residual


class WindowTooSmall(MskitException):
    pass


class CaseMismatch(MskitException):
    pass


class UnknownTheorem(MskitException):
    def __init__(self, theorem_id, known_ids=()) -> None:
        super().__init__(f"unknown theorem id '{theorem_id}', known ids: {', '.join(sorted(known_ids))}")
        self.theorem_id = theorem_id
