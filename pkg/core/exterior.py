"""Exterior calculus on a 3-dimensional affine chart.

Forms and multivector fields carry polynomial coefficients over a single
denominator power den^e, where den is the chart denominator: df/dX4 on a
hypersurface chart {f = 0} solved for the dependent coordinate X4, and 1 on a
chart that is an affine space.  Forms are always written in the free
coordinates; the dependent differential is eliminated through

    dX4 = -(f_1 dX1 + f_2 dX2 + f_3 dX3) / f_4.

Sign conventions.  The volume form is Vol = s * dV / den, where dV is the
wedge of the free coordinates in chart order and s = +-1 is the chart
orientation.  Contraction puts the contracted indices last:

    write dx_J = sgn * dx_{J\\I} ^ dx_I, then  i(d_I) dx_J = sgn * dx_{J\\I}.

With this rule the identification of bivectors with twisted 1-forms,
B -> i(B) Vol, sends d_3^d_4 to dx1, -d_1^d_4 to dx3 and d_1^d_3 to dx4 on the
quintic chart, and i(A) eta = (i(A)Vol ^ eta) / Vol for a 2-form eta, so the
contraction formula for the Schouten bracket and the form-level formula
agree term by term.  Brackets are returned without the 1/2 factor.
"""

from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple

from core.errors import ContextMismatch, DegreeMismatch, DegreeOverflow, NotDivisible
from core.exact_algebra import (
    RING,
    Polynomial,
    Rational,
    divides,
    exact_division,
    partial_derivative,
    polynomial_to_json,
    substitute,
    var,
)

Key = Tuple[str, ...]


def sort_with_sign(names: Sequence[str], order: Sequence[str]) -> Tuple[Optional[Key], int]:
    """Sort names by position in order; return (sorted, permutation sign) or (None, 0) on repeats."""
    if len(set(names)) != len(names):
        return None, 0
    position = {name: i for i, name in enumerate(order)}
    ranks = [position[name] for name in names]
    inversions = sum(1 for a, b in combinations(ranks, 2) if a > b)
    return tuple(sorted(names, key=position.__getitem__)), (-1) ** inversions


@dataclass(frozen=True)
class ChartContext:
    """An affine chart, possibly of a hypersurface {relation = 0}."""

    name: str
    free: Tuple[str, ...]
    relation: Optional[Polynomial] = None
    dependent: Optional[str] = None
    volume_sign: int = 1
    form_variables: Tuple[str, ...] = field(init=False, compare=False)
    denominator: Polynomial = field(init=False, compare=False)
    dependent_numerators: Mapping[str, Polynomial] = field(init=False, compare=False)

    def __post_init__(self):
        if self.relation is None:
            object.__setattr__(self, "form_variables", tuple(self.free))
            object.__setattr__(self, "denominator", RING.one)
            object.__setattr__(self, "dependent_numerators", {})
            return
        if self.dependent not in self.free:
            raise ContextMismatch(f"Dependent coordinate {self.dependent} is not a chart coordinate")
        denominator = partial_derivative(self.relation, self.dependent)
        if not denominator:
            raise ContextMismatch(f"d{self.dependent} cannot be eliminated: relation does not involve it")
        form_variables = tuple(v for v in self.free if v != self.dependent)
        numerators = {v: -partial_derivative(self.relation, v) for v in form_variables}
        object.__setattr__(self, "form_variables", form_variables)
        object.__setattr__(self, "denominator", denominator)
        object.__setattr__(self, "dependent_numerators", numerators)

    @property
    def has_relation(self) -> bool:
        return self.relation is not None

    @property
    def dimension(self) -> int:
        return len(self.form_variables)

    def differential(self, p: Polynomial) -> Tuple[Dict[str, Polynomial], int]:
        """Numerators of dp along the form variables, over den^bump."""
        if not self.has_relation:
            return {v: partial_derivative(p, v) for v in self.form_variables}, 0
        along_dependent = partial_derivative(p, self.dependent)
        if not along_dependent:
            return {v: partial_derivative(p, v) for v in self.form_variables}, 0
        den = self.denominator
        return {
            v: partial_derivative(p, v) * den + along_dependent * self.dependent_numerators[v]
            for v in self.form_variables
        }, 1

    def volume(self) -> "ChartForm":
        coefficient = RING(self.volume_sign)
        if self.has_relation:
            return ChartForm(self, self.dimension, {self.form_variables: coefficient}, 1)
        return ChartForm(self, self.dimension, {self.form_variables: coefficient}, 0)


def _check_same_context(a: "GradedChartObject", b: "GradedChartObject") -> None:
    if a.context != b.context:
        raise ContextMismatch(f"Objects live on different charts: {a.context.name} and {b.context.name}")


def _combine(context: ChartContext, contributions: Iterable[Tuple[Key, Polynomial, int]]) -> Tuple[Dict[Key, Polynomial], int]:
    """Sum (key, numerator, exponent) contributions over a common denominator power."""
    contributions = [c for c in contributions if c[1]]
    if not contributions:
        return {}, 0
    exponent = max(e for _, _, e in contributions)
    den = context.denominator
    coefficients: Dict[Key, Polynomial] = {}
    for key, numerator, e in contributions:
        if e < exponent:
            numerator = numerator * den ** (exponent - e)
        coefficients[key] = coefficients.get(key, RING.zero) + numerator
    coefficients = {k: c for k, c in coefficients.items() if c}
    if not coefficients:
        return {}, 0
    return coefficients, exponent


@dataclass(frozen=True)
class GradedChartObject:
    """Shared shape of chart forms and multivectors: sum of c_K/den^e over sorted keys K."""

    context: ChartContext
    degree: int
    coefficients: Mapping[Key, Polynomial]
    exponent: int = 0

    def __post_init__(self):
        if not 0 <= self.degree <= self.context.dimension:
            raise DegreeOverflow(f"Degree {self.degree} outside 0..{self.context.dimension}")
        order = self.context.form_variables
        canonical: Dict[Key, Polynomial] = {}
        for key, value in self.coefficients.items():
            key = tuple(key)
            if len(key) != self.degree:
                raise DegreeMismatch(f"Key {key} does not have degree {self.degree}")
            if any(name not in order for name in key):
                raise ContextMismatch(f"Key {key} uses variables outside {order}")
            sorted_key, sign = sort_with_sign(key, order)
            if sorted_key is None:
                continue
            canonical[sorted_key] = canonical.get(sorted_key, RING.zero) + (value if sign > 0 else -value)
        canonical = {k: c for k, c in canonical.items() if c}
        exponent = self.exponent if canonical else 0
        if exponent and not self.context.has_relation:
            raise DegreeMismatch("Denominator powers need a chart with a relation")
        object.__setattr__(self, "coefficients", canonical)
        object.__setattr__(self, "exponent", exponent)

    def _new(self, coefficients: Mapping[Key, Polynomial], exponent: int):
        return type(self)(self.context, self.degree, coefficients, exponent)

    @classmethod
    def zero(cls, context: ChartContext, degree: int):
        return cls(context, degree, {}, 0)

    @classmethod
    def scalar(cls, context: ChartContext, p: Polynomial, exponent: int = 0):
        return cls(context, 0, {(): p}, exponent)

    @classmethod
    def basis(cls, context: ChartContext, names: Sequence[str], coefficient: Polynomial = None):
        coefficient = RING.one if coefficient is None else coefficient
        return cls(context, len(names), {tuple(names): coefficient}, 0)

    def is_zero(self) -> bool:
        return not self.coefficients

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __add__(self, other):
        _check_same_context(self, other)
        if self.degree != other.degree:
            raise DegreeMismatch(f"Cannot add degree {self.degree} and degree {other.degree}")
        parts = [(k, c, self.exponent) for k, c in self.coefficients.items()]
        parts += [(k, c, other.exponent) for k, c in other.coefficients.items()]
        return self._new(*_combine(self.context, parts))

    def __neg__(self):
        return self._new({k: -c for k, c in self.coefficients.items()}, self.exponent)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, p: Polynomial, exponent: int = 0):
        """Multiply by the function p/den^exponent."""
        if not p:
            return self.zero(self.context, self.degree)
        return self._new({k: c * p for k, c in self.coefficients.items()}, self.exponent + exponent)

    def scale_rational(self, q: Rational):
        return self._new({k: c.mul_ground(q) for k, c in self.coefficients.items()}, self.exponent)

    def raised_to(self, exponent: int) -> Dict[Key, Polynomial]:
        """Numerators over den^exponent, exponent >= self.exponent."""
        if exponent < self.exponent:
            raise DegreeMismatch(f"Cannot lower exponent {self.exponent} to {exponent}")
        factor = self.context.denominator ** (exponent - self.exponent)
        return {k: c * factor for k, c in self.coefficients.items()}

    def reduced(self):
        """Cancel common factors of den while every numerator stays polynomial."""
        if not self.context.has_relation or not self.exponent:
            return self
        coefficients, exponent = dict(self.coefficients), self.exponent
        den = self.context.denominator
        while exponent:
            try:
                coefficients = {k: exact_division(c, den) for k, c in coefficients.items()}
            except NotDivisible:
                break
            exponent -= 1
        return self._new(coefficients, exponent)

    def coefficient(self, names: Sequence[str]) -> Polynomial:
        key, sign = sort_with_sign(tuple(names), self.context.form_variables)
        if key is None:
            return RING.zero
        value = self.coefficients.get(key, RING.zero)
        return value if sign > 0 else -value

    def function(self) -> Polynomial:
        """The polynomial value of a degree-0 object without denominator."""
        if self.degree != 0:
            raise DegreeMismatch("Only degree-0 objects are functions")
        if self.exponent:
            raise DegreeMismatch("Object still carries a denominator")
        return self.coefficients.get((), RING.zero)

    def coordinates(self) -> Dict[Tuple[Key, Tuple[int, ...]], Rational]:
        """Flatten to {(key, monomial): coefficient} for linear algebra."""
        if self.exponent:
            raise DegreeMismatch("Coordinates are defined for polynomial coefficients only")
        return {(k, m): c for k, poly in self.coefficients.items() for m, c in poly.items()}

    def to_json(self, universe: Sequence[str]) -> Dict:
        order = self.context.form_variables
        terms = [
            {"variables": list(key), "coefficient": polynomial_to_json(self.coefficients[key], universe)}
            for key in sorted(self.coefficients, key=lambda k: [order.index(n) for n in k])
        ]
        return {"degree": self.degree, "terms": terms, "denominator_exponent": self.exponent}


class ChartForm(GradedChartObject):
    """Differential form on a chart."""


class ChartMultivector(GradedChartObject):
    """Multivector field on a chart; keys index wedges of coordinate vector fields."""


def wedge(a: ChartForm, b: ChartForm) -> ChartForm:
    _check_same_context(a, b)
    if a.degree + b.degree > a.context.dimension:
        raise DegreeOverflow(f"Degree {a.degree} + {b.degree} exceeds {a.context.dimension}")
    order = a.context.form_variables
    parts = []
    for ka, ca in a.coefficients.items():
        for kb, cb in b.coefficients.items():
            key, sign = sort_with_sign(ka + kb, order)
            if key is None:
                continue
            product = ca * cb
            parts.append((key, product if sign > 0 else -product, 0))
    coefficients, _ = _combine(a.context, parts)
    return ChartForm(a.context, a.degree + b.degree, coefficients, a.exponent + b.exponent if coefficients else 0)


def exterior_derivative(a: ChartForm) -> ChartForm:
    """d with the quotient rule d(c/den^e) = (N(c) den - e c N(den)) / den^(e+2), N = den * d."""
    ctx = a.context
    if a.degree >= ctx.dimension:
        raise DegreeOverflow(f"d of a degree-{a.degree} form on a {ctx.dimension}-dimensional chart")
    order = ctx.form_variables
    parts = []
    if a.exponent == 0:
        for key, c in a.coefficients.items():
            numerators, bump = ctx.differential(c)
            for v, n in numerators.items():
                target, sign = sort_with_sign((v,) + key, order)
                if target is not None and n:
                    parts.append((target, n if sign > 0 else -n, bump))
    else:
        e, den = a.exponent, ctx.denominator
        den_numerators = _full_differential(ctx, den)
        for key, c in a.coefficients.items():
            c_numerators = _full_differential(ctx, c)
            for v in order:
                target, sign = sort_with_sign((v,) + key, order)
                if target is None:
                    continue
                n = c_numerators[v] * den - c.mul_ground(e) * den_numerators[v]
                if n:
                    parts.append((target, n if sign > 0 else -n, e + 2))
    coefficients, exponent = _combine(ctx, parts)
    return ChartForm(ctx, a.degree + 1, coefficients, exponent).reduced()


def _full_differential(ctx: ChartContext, p: Polynomial) -> Dict[str, Polynomial]:
    """Numerators of dp over den^1."""
    numerators, bump = ctx.differential(p)
    if bump:
        return numerators
    return {v: n * ctx.denominator for v, n in numerators.items()}


def contract(A: ChartMultivector, w: ChartForm) -> ChartForm:
    _check_same_context(A, w)
    if A.degree > w.degree:
        raise DegreeMismatch(f"Cannot contract a {A.degree}-vector into a {w.degree}-form")
    order = w.context.form_variables
    parts = []
    for ki, ci in A.coefficients.items():
        for kj, cj in w.coefficients.items():
            if not set(ki) <= set(kj):
                continue
            rest = tuple(n for n in kj if n not in ki)
            # sign of the permutation kj -> rest + ki
            _, sign = sort_with_sign(rest + ki, order)
            product = ci * cj
            parts.append((rest, product if sign > 0 else -product, 0))
    coefficients, _ = _combine(w.context, parts)
    return ChartForm(w.context, w.degree - A.degree, coefficients, A.exponent + w.exponent if coefficients else 0)


def form_from_bivector(B: ChartMultivector) -> ChartForm:
    if B.degree != B.context.dimension - 1:
        raise DegreeMismatch("Only (n-1)-vectors correspond to 1-forms")
    return contract(B, B.context.volume()).reduced()


def bivector_from_form(w: ChartForm) -> ChartMultivector:
    """Inverse of form_from_bivector."""
    ctx = w.context
    if w.degree != 1 or ctx.dimension != 3:
        raise DegreeMismatch("Only 1-forms on a 3-dimensional chart correspond to bivectors")
    volume = ctx.volume()
    coefficients = {}
    for (v,), c in w.coefficients.items():
        complement = tuple(n for n in ctx.form_variables if n != v)
        image = contract(ChartMultivector.basis(ctx, complement), volume)
        sign = 1 if image.coefficient((v,)).LC > 0 else -1
        coefficients[complement] = (c if sign > 0 else -c) * ctx.denominator
    return ChartMultivector(ctx, 2, coefficients, w.exponent).reduced()


def _require_polynomial_chart(*objects: GradedChartObject) -> None:
    for obj in objects:
        if obj.context.has_relation or obj.exponent:
            raise ContextMismatch("Coordinate Schouten formulas need polynomial coefficients on an affine chart")


def schouten_vector_bivector(v: ChartMultivector, B: ChartMultivector) -> ChartMultivector:
    """[a d_i, b d_j^d_k] = a b_i d_j^d_k - b a_j d_i^d_k + b a_k d_i^d_j, extended bilinearly."""
    _check_same_context(v, B)
    if v.degree != 1 or B.degree != 2:
        raise DegreeMismatch("Expected a vector field and a bivector")
    _require_polynomial_chart(v, B)
    terms: Dict[Key, Polynomial] = {}

    def add(key: Key, value: Polynomial) -> None:
        if value:
            terms[key] = terms.get(key, RING.zero) + value

    for (i,), a in v.coefficients.items():
        for (j, k), b in B.coefficients.items():
            add((j, k), a * partial_derivative(b, i))
            add((i, k), -b * partial_derivative(a, j))
            add((i, j), b * partial_derivative(a, k))
    return ChartMultivector(v.context, 2, terms, 0)


def schouten_bivector_bivector(wA: ChartForm, wB: ChartForm) -> ChartForm:
    """[wA, wB] = (wA ^ d wB + d wA ^ wB) / Vol as a degree-0 form."""
    _check_same_context(wA, wB)
    if wA.degree != 1 or wB.degree != 1 or wA.context.dimension != 3:
        raise DegreeMismatch("Expected two 1-forms on a 3-dimensional chart")
    top = wedge(wA, exterior_derivative(wB)) + wedge(exterior_derivative(wA), wB)
    return divide_by_volume(top)


def divide_by_volume(top: ChartForm) -> ChartForm:
    ctx = top.context
    if top.degree != ctx.dimension:
        raise DegreeMismatch("Only top-degree forms can be divided by the volume form")
    value = top.coefficient(ctx.form_variables) * ctx.denominator
    if ctx.volume_sign < 0:
        value = -value
    return ChartForm.scalar(ctx, value, top.exponent if value else 0).reduced()


def schouten_bondal_oracle(A: ChartMultivector, B: ChartMultivector) -> ChartForm:
    """[A,B](Vol) = A(d(B(Vol))) + B(d(A(Vol))) - AB(dVol) for two bivectors; dVol = 0."""
    _check_same_context(A, B)
    if A.degree != 2 or B.degree != 2 or A.context.dimension != 3:
        raise DegreeMismatch("Expected two bivectors on a 3-dimensional chart")
    volume = A.context.volume()
    first = contract(A, exterior_derivative(contract(B, volume)))
    second = contract(B, exterior_derivative(contract(A, volume)))
    return (first + second).reduced()


def equal_mod_relation(a: GradedChartObject, b: GradedChartObject) -> bool:
    """Equality of chart objects; modulo the chart relation when there is one."""
    _check_same_context(a, b)
    if a.degree != b.degree:
        return a.is_zero() and b.is_zero()
    exponent = max(a.exponent, b.exponent)
    left, right = a.raised_to(exponent), b.raised_to(exponent)
    relation = a.context.relation
    for key in set(left) | set(right):
        difference = left.get(key, RING.zero) - right.get(key, RING.zero)
        if not difference:
            continue
        if relation is None or not divides(relation, difference):
            return False
    return True


@dataclass(frozen=True)
class AmbientOneForm:
    """Polynomial 1-form sum c_i dZ_i on projective space."""

    coefficients: Mapping[str, Polynomial]

    @classmethod
    def epsilon(cls, i: int, j: int) -> "AmbientOneForm":
        """eps_ij = Z_j dZ_i - Z_i dZ_j."""
        zi, zj = f"Z{i}", f"Z{j}"
        if i == j:
            return cls({})
        return cls({zi: var(zj), zj: -var(zi)})

    def __add__(self, other: "AmbientOneForm") -> "AmbientOneForm":
        merged = dict(self.coefficients)
        for name, c in other.coefficients.items():
            merged[name] = merged.get(name, RING.zero) + c
        return AmbientOneForm({k: c for k, c in merged.items() if c})

    def scale(self, q: Rational) -> "AmbientOneForm":
        scaled = {k: c.mul_ground(q) for k, c in self.coefficients.items()}
        return AmbientOneForm({k: c for k, c in scaled.items() if c})

    def contract_euler(self) -> Polynomial:
        """sum c_i Z_i; zero for forms descending from projective space."""
        return sum((c * var(name) for name, c in self.coefficients.items()), RING.zero)


@dataclass(frozen=True)
class AmbientVectorField:
    """Vector field sum c_i d/dZ_i with polynomial components."""

    components: Mapping[str, Polynomial]

    def apply(self, p: Polynomial) -> Polynomial:
        """The derivation v(p) = sum c_i dp/dZ_i."""
        return sum((c * partial_derivative(p, name) for name, c in self.components.items()), RING.zero)


@dataclass(frozen=True)
class ChartEmbedding:
    """Restriction from projective space to an affine chart.

    ambient_map sends each ambient variable to a chart polynomial (the affine
    variable to 1, dependent coordinates to their chart relations);
    coordinate_sources names the ambient variable behind each free chart
    coordinate.
    """

    context: ChartContext
    affine: str
    ambient_map: Mapping[str, Polynomial]
    coordinate_sources: Mapping[str, str]

    def restrict_polynomial(self, p: Polynomial) -> Polynomial:
        return substitute(p, self.ambient_map)

    def restrict_form(self, w: AmbientOneForm) -> ChartForm:
        result = ChartForm.zero(self.context, 1)
        for name, c in sorted(w.coefficients.items()):
            image = self.ambient_map[name]
            differential = exterior_derivative(ChartForm.scalar(self.context, image))
            result = result + differential.scale(self.restrict_polynomial(c))
        return result.reduced()

    def restrict_vector_field(self, v: AmbientVectorField) -> ChartMultivector:
        """Components v(x_i) = c_i - x_i * c_affine on the free coordinates."""
        if self.context.has_relation:
            raise ContextMismatch("Vector field restriction is defined on affine-space charts")
        affine_component = self.restrict_polynomial(v.components.get(self.affine, RING.zero))
        components = {}
        for coordinate in self.context.form_variables:
            source = self.coordinate_sources[coordinate]
            component = self.restrict_polynomial(v.components.get(source, RING.zero))
            components[(coordinate,)] = component - var(coordinate) * affine_component
        return ChartMultivector(self.context, 1, components, 0)
