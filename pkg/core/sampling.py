"""Seeded random inputs for sweeps and property tests."""

from itertools import combinations, combinations_with_replacement
from typing import List, Sequence

import numpy as np
from logzero import logger
from sympy.polys.domains import QQ

from core.cubic import CubicForm
from core.errors import IndependenceFailure, InputError
from core.exact_algebra import RING, Polynomial, Rational, var
from core.exterior import ChartContext, ChartMultivector
from core.plucker import BivectorCoefficients
from core.quintic import ConicPoint

CONIC_BASE_POINT = (QQ(4), QQ(2), QQ(9))


def conic_form(a23: Rational, a28: Rational, a35: Rational) -> Rational:
    return 9 * a23**2 - 8 * a28 * a35


class Sampler:
    """Small-height rational samples from numpy's default_rng."""

    def __init__(self, seed: int = 0, max_height: int = 100, max_attempts: int = 200):
        if max_height < 1:
            raise InputError(f"max_height must be positive, got {max_height}")
        self.seed = seed
        self.max_height = max_height
        self.max_attempts = max_attempts
        self.rng = np.random.default_rng(seed)

    def _integer(self, low: int, high: int) -> int:
        # numpy ints never enter exact arithmetic
        return int(self.rng.integers(low, high + 1))

    def random_rational(self) -> Rational:
        H = self.max_height
        return QQ(self._integer(-H, H), self._integer(1, H))

    def random_vector(self, n: int, nonzero: bool = True) -> List[Rational]:
        for _ in range(self.max_attempts):
            vector = [self.random_rational() for _ in range(n)]
            if not nonzero or any(vector):
                return vector
        raise InputError(f"No nonzero vector after {self.max_attempts} attempts")

    def decomposable(self, indices: Sequence[int]) -> BivectorCoefficients:
        """a = u ^ v, resampled until nonzero."""
        for _ in range(self.max_attempts):
            a = BivectorCoefficients.decomposable(indices, self.random_vector(len(indices)), self.random_vector(len(indices)))
            if not a.is_zero():
                return a
        raise InputError(f"No nonzero decomposable bivector after {self.max_attempts} attempts")

    def random_coeffs(self, indices: Sequence[int]) -> BivectorCoefficients:
        pairs = list(combinations(indices, 2))
        return BivectorCoefficients(tuple(indices), dict(zip(pairs, self.random_vector(len(pairs)))))

    def random_cubic(self, extra_terms: int = 3) -> CubicForm:
        """Fermat cubic plus a few random monomials, with independent partials."""
        monomials = list(combinations_with_replacement(range(5), 3))
        for attempt in range(self.max_attempts):
            F = CubicForm.fermat().F
            for _ in range(self._integer(1, extra_terms)):
                i, j, k = monomials[self._integer(0, len(monomials) - 1)]
                F += (var(f"Z{i}") * var(f"Z{j}") * var(f"Z{k}")).mul_ground(self.random_rational())
            if not F:
                continue
            cubic = CubicForm(F)
            if cubic.partials_independent():
                return cubic
            logger.debug(f"Rejected cubic with dependent partials on attempt {attempt}")
        raise IndependenceFailure(f"No cubic with independent partials after {self.max_attempts} attempts")

    def conic_point(self) -> ConicPoint:
        """Second intersection of a random secant through (4, 2, 9) with 9 a23^2 = 8 a28 a35."""
        p23, p28, p35 = CONIC_BASE_POINT
        for _ in range(self.max_attempts):
            d23, d28, d35 = self.random_vector(3)
            quadratic = conic_form(d23, d28, d35)
            if not quadratic:
                continue
            linear = 72 * d23 - 16 * d35 - 72 * d28
            t = -linear / quadratic
            if not t:
                continue
            point = ConicPoint(p23 + t * d23, p28 + t * d28, p35 + t * d35)
            if not point.is_zero():
                return point
        raise InputError(f"No conic point after {self.max_attempts} attempts")

    def random_chart_polynomial(self, context: ChartContext, max_degree: int = 3, terms: int = 4) -> Polynomial:
        names = context.form_variables
        result = RING.zero
        for _ in range(terms):
            monomial = RING.one
            for _ in range(self._integer(0, max_degree)):
                monomial *= var(names[self._integer(0, len(names) - 1)])
            result += monomial.mul_ground(self.random_rational())
        return result

    def random_chart_bivector(self, context: ChartContext, max_degree: int = 3) -> ChartMultivector:
        keys = list(combinations(context.form_variables, 2))
        return ChartMultivector(context, 2, {key: self.random_chart_polynomial(context, max_degree) for key in keys})
