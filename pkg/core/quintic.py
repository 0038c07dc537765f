"""The del Pezzo quintic threefold X = G(2,5) cut by three hyperplanes in P^9.

All local computations happen on the chart Z8 = 1, where X is the affine
space with coordinates x1, x3, x4 and the remaining coordinates are
polynomials in them.  Index set for bivectors: I = (0, 1, 2, 3, 4, 5, 8).
"""

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Dict, List, Mapping, Optional, Tuple, Union

from joblib import Parallel, delayed
from logzero import logger
from sympy.polys.domains import QQ

from core.errors import (
    ComplexFailure,
    DisjointnessFailure,
    InconsistentCheck,
    IndependenceFailure,
    InputError,
    NotHomogeneous,
    NotOnConic,
    NotPoisson,
    TangencyFailure,
)
from core.exact_algebra import (
    QUINTIC_CHART_VARIABLES,
    RING,
    Polynomial,
    Rational,
    format_rational,
    is_homogeneous,
    parse_rational,
    partial_derivative,
    var,
)
from core.exterior import (
    AmbientOneForm,
    AmbientVectorField,
    ChartContext,
    ChartEmbedding,
    ChartForm,
    ChartMultivector,
    bivector_from_form,
    equal_mod_relation,
    schouten_bivector_bivector,
    schouten_vector_bivector,
)
from core.linalg import RationalMatrix, coordinate_matrix, nullspace, rank
from core.plucker import QUINTIC_INDICES, BivectorCoefficients, Pair, Quadruple, pair_label, permutation_sign
from core.quintic_tables import A_TABLE, B_TABLE, CHART_RELATIONS, DISPLAYED_EPSILON, DISPLAYED_VECTOR_FIELDS, Z_PAIRS
from core.reports import CohomologyReport, EntryResult, VerificationReport, residuals_to_json

EPSILON_PAIRS: Tuple[Pair, ...] = tuple(combinations(QUINTIC_INDICES, 2))
SORTED_QUADRUPLES: Tuple[Quadruple, ...] = tuple(combinations(QUINTIC_INDICES, 4))
VECTOR_INDICES: Tuple[int, ...] = (1, 2, 3)


def _z(i: int) -> Polynomial:
    return var(f"Z{i}")


QUADRICS: Dict[str, Polynomial] = {
    "p1": _z(0) * _z(7) - _z(1) * _z(5) + _z(2) * _z(4),
    "p2": _z(0) * _z(8) - _z(1) * _z(6) + _z(3) * _z(4),
    "p3": _z(0) * _z(9) - _z(2) * _z(6) + _z(3) * _z(5),
    "p4": _z(1) * _z(9) - _z(2) * _z(8) + _z(3) * _z(7),
    "p5": _z(4) * _z(9) - _z(8) * _z(5) + _z(6) * _z(7),
}

HYPERPLANES: Dict[str, Polynomial] = {
    "lambda1": _z(0) + _z(7),
    "lambda2": _z(4) + _z(9),
    "lambda3": _z(1) + _z(6),
}


def _field(*terms: Tuple[int, Polynomial]) -> AmbientVectorField:
    components: Dict[str, Polynomial] = {}
    for index, coefficient in terms:
        name = f"Z{index}"
        components[name] = components.get(name, RING.zero) + coefficient
    return AmbientVectorField(components)


# v_1, v_2, v_3 spanning H^0(X, T_X); (d/dZ_a - d/dZ_b) patterns are written out
AMBIENT_VECTOR_FIELDS: Dict[int, AmbientVectorField] = {
    1: _field(
        (1, 2 * _z(1)), (6, -2 * _z(1)), (2, -_z(2)), (3, 3 * _z(3)),
        (4, _z(4)), (9, -_z(4)), (5, -2 * _z(5)), (8, 4 * _z(8)),
    ),
    2: _field(
        (0, _z(2)), (7, -_z(2)), (1, 3 * _z(4)), (6, -3 * _z(4)), (2, 3 * _z(5)),
        (3, -5 * _z(1)), (4, 2 * _z(0)), (9, -2 * _z(0)), (8, -_z(3)),
    ),
    3: _field(
        (0, -3 * _z(4)), (7, 3 * _z(4)), (1, _z(3)), (6, -_z(3)), (2, -5 * _z(0)),
        (3, 3 * _z(8)), (4, -2 * _z(1)), (9, 2 * _z(1)), (5, -_z(2)),
    ),
}


def _relation_label(coefficients: Mapping[Quadruple, int]) -> str:
    pieces = []
    for quadruple, c in coefficients.items():
        name = f"alpha_{pair_label(quadruple)}"
        magnitude = f"{abs(c)}*{name}" if abs(c) != 1 else name
        if not pieces:
            pieces.append(magnitude if c > 0 else f"-{magnitude}")
        else:
            pieces.append(f"+ {magnitude}" if c > 0 else f"- {magnitude}")
    return " ".join(pieces)


def _q(label: str) -> Quadruple:
    return tuple(int(ch) for ch in label)


# [w, w] = 0 as residuals lhs - rhs: eight single vanishings, then fifteen relations
POISSON_EQUATIONS: Tuple[Dict[Quadruple, int], ...] = tuple(
    {_q(k): v for k, v in equation.items()}
    for equation in (
        {"0348": 1}, {"0125": 1}, {"0138": 1}, {"1348": 1},
        {"0245": 1}, {"1238": 1}, {"0235": 1}, {"1245": 1},
        {"0123": 1, "2358": -1},
        {"0145": 1, "2345": -5},
        {"0148": 1, "2348": -5},
        {"0258": 1, "2345": 2},
        {"1358": 1, "2348": -2},
        {"0345": 1, "1235": 3, "2458": -2},
        {"0248": 1, "2358": 6, "0158": -2, "1345": -1},
        {"0128": 2, "1234": 1, "0358": -3, "1458": -1},
        {"0134": 1, "0238": -1, "1248": -2, "3458": 1},
        {"0135": -2, "0234": 1, "0458": -1, "1258": 3},
        {"0124": 1, "0345": 2, "1235": 1, "2458": 1},
        {"0128": 1, "0358": -4, "1234": -1, "1458": -1},
        {"0135": 1, "0234": 1, "0458": 1, "1258": -4},
        {"0248": 1, "0158": 2, "1345": -1, "2358": -2},
        {"1248": 1, "0238": 3, "3458": 2},
    )
)
EQUATION_LABELS: Tuple[str, ...] = tuple(_relation_label(eq) for eq in POISSON_EQUATIONS)


def quintic_chart() -> ChartEmbedding:
    """The chart Z8 = 1 with free coordinates x1, x3, x4."""
    context = ChartContext(name="quintic-Z8", free=QUINTIC_CHART_VARIABLES)
    ambient_map = {"Z8": RING.one}
    for i in range(10):
        if i == 8:
            continue
        name = f"x{i}"
        ambient_map[f"Z{i}"] = var(name) if name in QUINTIC_CHART_VARIABLES else CHART_RELATIONS[name]
    sources = {name: f"Z{name[1:]}" for name in QUINTIC_CHART_VARIABLES}
    return ChartEmbedding(context, "Z8", ambient_map, sources)


CHART: ChartEmbedding = quintic_chart()


@dataclass(frozen=True)
class QuinticModel:
    """Quadrics p1..p5, hyperplanes lambda1..lambda3 and the chart Z8 = 1."""

    quadrics: Mapping[str, Polynomial] = field(default_factory=lambda: dict(QUADRICS))
    hyperplanes: Mapping[str, Polynomial] = field(default_factory=lambda: dict(HYPERPLANES))
    chart_relations: Mapping[str, Polynomial] = field(default_factory=lambda: dict(CHART_RELATIONS))
    embedding: ChartEmbedding = CHART

    def equations(self) -> Dict[str, Polynomial]:
        return {**self.quadrics, **self.hyperplanes}

    def model_consistency(self) -> Dict[str, Polynomial]:
        """Chart restriction of every defining equation; all must be zero."""
        return {name: self.embedding.restrict_polynomial(p) for name, p in self.equations().items()}

    def is_consistent(self) -> bool:
        return not any(self.model_consistency().values())


ChartObject = Union[Polynomial, AmbientOneForm, AmbientVectorField]


def restrict_to_chart(obj: ChartObject, embedding: ChartEmbedding = CHART):
    """Restrict a homogeneous polynomial, a 1-form or a vector field on P^9 to the chart."""
    if isinstance(obj, AmbientOneForm):
        return embedding.restrict_form(obj)
    if isinstance(obj, AmbientVectorField):
        return embedding.restrict_vector_field(obj)
    if not is_homogeneous(obj):
        raise NotHomogeneous("Only homogeneous polynomials restrict to sections on the chart")
    return embedding.restrict_polynomial(obj)


@dataclass(frozen=True)
class VectorBasis:
    """Restricted v_1, v_2, v_3 with the tangency record."""

    ambient: Mapping[int, AmbientVectorField]
    chart: Mapping[int, ChartMultivector]
    tangency: Mapping[str, str]
    rank: int


def _chart_field_matches(chart_field: ChartMultivector, displayed: Mapping[str, Polynomial]) -> bool:
    expected = ChartMultivector(chart_field.context, 1, {(k,): v for k, v in displayed.items()})
    return chart_field == expected


def vector_basis_quintic(model: Optional[QuinticModel] = None) -> VectorBasis:
    """Restrict v_i, check tangency to X and compare with the displayed chart fields."""
    model = model or QuinticModel()
    embedding = model.embedding
    tangency: Dict[str, str] = {}
    chart_fields: Dict[int, ChartMultivector] = {}
    for i, v in AMBIENT_VECTOR_FIELDS.items():
        for name, h in model.hyperplanes.items():
            if v.apply(h):
                raise TangencyFailure(f"v{i}({name}) does not vanish identically", name)
        for name, p in model.quadrics.items():
            image = v.apply(p)
            if not image:
                tangency[f"v{i}({name})"] = "identical"
            elif not embedding.restrict_polynomial(image):
                tangency[f"v{i}({name})"] = "on_chart"
            else:
                raise TangencyFailure(f"v{i}({name}) does not vanish on X", name)
        chart_field = embedding.restrict_vector_field(v)
        for dependent, relation in model.chart_relations.items():
            induced = _induced_component(embedding, v, dependent, relation)
            along_chart = sum(
                (c * partial_derivative(relation, key[0]) for key, c in chart_field.coefficients.items()),
                RING.zero,
            )
            if induced != along_chart:
                raise TangencyFailure(f"v{i} is not tangent to the relation {dependent} = {relation}", dependent)
        if not _chart_field_matches(chart_field, DISPLAYED_VECTOR_FIELDS[i]):
            raise TangencyFailure(f"Chart form of v{i} differs from the displayed field", f"v{i}")
        chart_fields[i] = chart_field
    _, matrix = coordinate_matrix([f.coordinates() for f in chart_fields.values()])
    field_rank = rank(matrix)
    if field_rank != len(chart_fields):
        raise IndependenceFailure(f"Restricted vector fields have rank {field_rank}")
    logger.info(f"Vector fields tangent to X; {sum(1 for s in tangency.values() if s == 'identical')} of {len(tangency)} v_i(p_j) vanish identically")
    return VectorBasis(AMBIENT_VECTOR_FIELDS, chart_fields, tangency, field_rank)


def _induced_component(embedding: ChartEmbedding, v: AmbientVectorField, dependent: str, relation: Polynomial) -> Polynomial:
    """v(x_d) = c_d - x_d c_8 on the chart for a dependent coordinate x_d."""
    component = embedding.restrict_polynomial(v.components.get(f"Z{dependent[1:]}", RING.zero))
    affine = embedding.restrict_polynomial(v.components.get(embedding.affine, RING.zero))
    return component - relation * affine


@lru_cache(maxsize=None)
def _restricted_epsilons() -> Tuple[Tuple[Pair, ChartForm], ...]:
    return tuple((pair, CHART.restrict_form(AmbientOneForm.epsilon(*pair))) for pair in EPSILON_PAIRS)


@lru_cache(maxsize=None)
def _restricted_quadrics() -> Tuple[Tuple[Pair, Polynomial], ...]:
    return tuple(((i, j), CHART.restrict_polynomial(_z(i) * _z(j))) for i, j in Z_PAIRS)


def restricted_epsilon(i: int, j: int) -> ChartForm:
    """eps_ij on the chart, antisymmetric in (i, j)."""
    sign = permutation_sign((i, j))
    if not sign:
        return ChartForm.zero(CHART.context, 1)
    form = dict(_restricted_epsilons())[tuple(sorted((i, j)))]
    return form if sign > 0 else -form


def restricted_quadric(i: int, j: int) -> Polynomial:
    return dict(_restricted_quadrics())[tuple(sorted((i, j)))]


def bivector_basis_quintic() -> Dict[Pair, ChartForm]:
    """The 21 restricted eps_ij; raises IndependenceFailure unless they have rank 21."""
    basis = dict(_restricted_epsilons())
    _, matrix = coordinate_matrix([form.coordinates() for form in basis.values()])
    found = rank(matrix)
    if found != len(EPSILON_PAIRS):
        raise IndependenceFailure(f"Restricted eps_ij span a space of dimension {found}, expected 21")
    return basis


def anticanonical_basis_quintic() -> Dict[Pair, Polynomial]:
    """The 23 restricted z_ij; raises IndependenceFailure unless they have rank 23."""
    basis = dict(_restricted_quadrics())
    _, matrix = coordinate_matrix([dict(p) for p in basis.values()])
    found = rank(matrix)
    if found != len(Z_PAIRS):
        raise IndependenceFailure(f"Restricted z_ij span a space of dimension {found}, expected 23")
    return basis


def displayed_epsilon_mismatches() -> List[str]:
    """Labels of restricted eps_ij that differ from the displayed chart expressions."""
    mismatches = []
    for pair, form in _restricted_epsilons():
        displayed = ChartForm(CHART.context, 1, {(k,): v for k, v in DISPLAYED_EPSILON[pair].items()})
        if form != displayed:
            mismatches.append(f"eps{pair_label(pair)}")
    return mismatches


def _parse_labelled(entries: Mapping[str, object]) -> Dict[Pair, Rational]:
    return {(int(k[0]), int(k[1])): parse_rational(v) for k, v in entries.items()}


@dataclass(frozen=True)
class QuinticTables:
    """A_ijk in eps coordinates and B_ijkl in z coordinates, antisymmetrically extended."""

    a_entries: Mapping[Tuple[int, int, int], Mapping[Pair, Rational]]
    b_entries: Mapping[Quadruple, Mapping[Pair, Rational]]

    @classmethod
    def standard(cls) -> "QuinticTables":
        return cls(
            {key: _parse_labelled(value) for key, value in A_TABLE.items()},
            {key: _parse_labelled(value) for key, value in B_TABLE.items()},
        )

    def a(self, i: int, j: int, k: int) -> Dict[Pair, Rational]:
        sign = permutation_sign((j, k))
        if not sign:
            return {}
        entry = self.a_entries[(i,) + tuple(sorted((j, k)))]
        return {p: c if sign > 0 else -c for p, c in entry.items()}

    def b(self, i: int, j: int, k: int, l: int) -> Dict[Pair, Rational]:
        sign = permutation_sign((i, j, k, l))
        if not sign:
            return {}
        entry = self.b_entries[tuple(sorted((i, j, k, l)))]
        return {p: c if sign > 0 else -c for p, c in entry.items()}

    def with_a_entry(self, key: Tuple[int, int, int], value: Mapping[str, object]) -> "QuinticTables":
        entries = dict(self.a_entries)
        entries[tuple(key)] = _parse_labelled(value)
        return QuinticTables(entries, self.b_entries)

    def with_b_entry(self, key: Quadruple, value: Mapping[str, object]) -> "QuinticTables":
        entries = dict(self.b_entries)
        entries[tuple(key)] = _parse_labelled(value)
        return QuinticTables(self.a_entries, entries)


STANDARD_TABLES = QuinticTables.standard()


def _epsilon_combination(coefficients: Mapping[Pair, Rational]) -> ChartForm:
    total = ChartForm.zero(CHART.context, 1)
    for pair, c in coefficients.items():
        total = total + restricted_epsilon(*pair).scale_rational(c)
    return total


def _z_combination(coefficients: Mapping[Pair, Rational]) -> Polynomial:
    return sum((restricted_quadric(*pair).mul_ground(c) for pair, c in coefficients.items()), RING.zero)


def _check_a_entry(tables: QuinticTables, key: Tuple[int, int, int], chart_fields: Mapping[int, ChartMultivector]) -> EntryResult:
    i, j, k = key
    computed = schouten_vector_bivector(chart_fields[i], bivector_from_form(restricted_epsilon(j, k)))
    expected = bivector_from_form(_epsilon_combination(tables.a(i, j, k)))
    passed = equal_mod_relation(computed, expected)
    return EntryResult(f"A{i}{j}{k}", passed)


def _check_b_entry(tables: QuinticTables, key: Quadruple) -> EntryResult:
    i, j, k, l = key
    half_bracket = schouten_bivector_bivector(restricted_epsilon(i, j), restricted_epsilon(k, l)).scale_rational(QQ(1, 2))
    expected = ChartForm.scalar(CHART.context, _z_combination(tables.b(i, j, k, l)))
    passed = equal_mod_relation(half_bracket, expected)
    return EntryResult(f"B{pair_label(key)}", passed)


def verify_tables_quintic(tables: Optional[QuinticTables] = None, n_jobs: int = 1) -> VerificationReport:
    """Recompute all 63 A_ijk and 35 B_ijkl on the chart and compare exactly."""
    tables = tables or STANDARD_TABLES
    chart_fields = {i: CHART.restrict_vector_field(v) for i, v in AMBIENT_VECTOR_FIELDS.items()}
    a_keys = [(i, j, k) for i in VECTOR_INDICES for j, k in EPSILON_PAIRS]
    logger.info(f"Verifying {len(a_keys)} A entries and {len(SORTED_QUADRUPLES)} B entries on the chart Z8=1")
    parallel = Parallel(n_jobs=n_jobs, prefer="threads")
    a_results = parallel(delayed(_check_a_entry)(tables, key, chart_fields) for key in a_keys)
    b_results = parallel(delayed(_check_b_entry)(tables, key) for key in SORTED_QUADRUPLES)
    report = VerificationReport("quintic_tables", list(a_results) + list(b_results))
    for label in report.failures:
        logger.warning(f"Table entry {label} does not match the chart computation")
    logger.info(f"Quintic tables: {len(report.entries) - len(report.failures)}/{len(report.entries)} entries passed")
    return report


def plucker_expansion_quintic(a: BivectorCoefficients, tables: Optional[QuinticTables] = None) -> Dict[Pair, Rational]:
    """z coordinates of sum_{i<j<k<l} alpha_ijkl B_ijkl (so [w, w] is four times this)."""
    tables = tables or STANDARD_TABLES
    total: Dict[Pair, Rational] = {}
    for quadruple, alpha in a.alphas().items():
        if not alpha:
            continue
        for pair, c in tables.b(*quadruple).items():
            total[pair] = total.get(pair, QQ.zero) + alpha * c
    return {pair: value for pair, value in total.items() if value}


def poisson_equations_quintic(a: BivectorCoefficients) -> List[Tuple[str, Rational]]:
    """Residuals (lhs - rhs) of the 23 equations equivalent to [w, w] = 0."""
    alphas = a.alphas()
    return [
        (label, sum((alphas[q] * c for q, c in equation.items()), QQ.zero))
        for label, equation in zip(EQUATION_LABELS, POISSON_EQUATIONS)
    ]


def nonzero_residuals(a: BivectorCoefficients) -> Dict[str, str]:
    return residuals_to_json({label: value for label, value in poisson_equations_quintic(a) if value})


def is_poisson_quintic(a: BivectorCoefficients, tables: Optional[QuinticTables] = None) -> bool:
    """[w, w] = 0 by the z-basis expansion, cross-checked with the equation list."""
    expansion_vanishes = not plucker_expansion_quintic(a, tables)
    equations_vanish = not any(value for _, value in poisson_equations_quintic(a))
    if expansion_vanishes != equations_vanish:
        raise InconsistentCheck(
            f"z-basis expansion vanishes={expansion_vanishes} but the equation list vanishes={equations_vanish}"
        )
    return expansion_vanishes


def omega_on_chart(a: BivectorCoefficients) -> ChartForm:
    return _epsilon_combination(dict(a.values))


def bracket_square_on_chart(a: BivectorCoefficients) -> Polynomial:
    """[w, w] from the form-level bracket of w restricted to the chart, independent of the tables."""
    omega = omega_on_chart(a)
    return schouten_bivector_bivector(omega, omega).function()


def tabulated_bracket_square_on_chart(a: BivectorCoefficients, tables: Optional[QuinticTables] = None) -> Polynomial:
    """4 sum alpha_ijkl B_ijkl restricted to the chart."""
    return _z_combination(plucker_expansion_quintic(a, tables)).mul_ground(4)


@dataclass(frozen=True)
class ConicPoint:
    """(a23, a28, a35) on the plane spanned by the conic 9 a23^2 = 8 a28 a35."""

    a23: Rational
    a28: Rational
    a35: Rational

    def __post_init__(self):
        for name in ("a23", "a28", "a35"):
            object.__setattr__(self, name, parse_rational(getattr(self, name)))

    @classmethod
    def from_json(cls, payload: Mapping) -> "ConicPoint":
        if not isinstance(payload, Mapping) or any(k not in payload for k in ("a23", "a28", "a35")):
            raise InputError('Conic input needs keys "a23", "a28" and "a35"')
        return cls(payload["a23"], payload["a28"], payload["a35"])

    def to_json(self) -> Dict[str, str]:
        return {"a23": format_rational(self.a23), "a28": format_rational(self.a28), "a35": format_rational(self.a35)}

    def conic_value(self) -> Rational:
        return 9 * self.a23**2 - 8 * self.a28 * self.a35

    @property
    def on_conic(self) -> bool:
        return not self.conic_value()

    def is_zero(self) -> bool:
        return not (self.a23 or self.a28 or self.a35)


def plane_embed(c: ConicPoint) -> BivectorCoefficients:
    """The point of the plane Pi with coordinates (a23, a28, a35); twelve coordinates vanish."""
    if c.is_zero():
        raise InputError("(0, 0, 0) is not a point of the plane")
    values = {
        (2, 3): c.a23,
        (2, 8): c.a28,
        (3, 5): c.a35,
        (0, 1): QQ(5, 2) * c.a23,
        (5, 8): QQ(9, 2) * c.a23,
        (1, 2): QQ(5, 3) * c.a35,
        (0, 4): 5 * c.a35,
        (0, 3): QQ(5, 3) * c.a28,
        (1, 4): -5 * c.a28,
    }
    return BivectorCoefficients(QUINTIC_INDICES, values)


def conic_embed(c: ConicPoint) -> BivectorCoefficients:
    if not c.on_conic:
        raise NotOnConic(f"9*a23^2 - 8*a28*a35 = {format_rational(c.conic_value())} for {c.to_json()}")
    return plane_embed(c)


@dataclass(frozen=True)
class ConicDiagnostics:
    alpha_2358: Rational
    alpha_0345: Rational
    alpha_0134: Rational

    def as_tuple(self) -> Tuple[Rational, Rational, Rational]:
        return (self.alpha_2358, self.alpha_0345, self.alpha_0134)

    def to_json(self) -> Dict[str, str]:
        return {
            "alpha_2358": format_rational(self.alpha_2358),
            "alpha_0345": format_rational(self.alpha_0345),
            "alpha_0134": format_rational(self.alpha_0134),
        }


def conic_diagnostics(c: ConicPoint) -> ConicDiagnostics:
    """alpha_2358 = 45/8 a23^2, alpha_0345 = -5 a35^2, alpha_0134 = 25/3 a28^2; not all zero."""
    a = conic_embed(c)
    found = ConicDiagnostics(a.alpha(2, 3, 5, 8), a.alpha(0, 3, 4, 5), a.alpha(0, 1, 3, 4))
    closed = ConicDiagnostics(QQ(45, 8) * c.a23**2, -5 * c.a35**2, QQ(25, 3) * c.a28**2)
    if found != closed:
        raise InconsistentCheck(f"Pluecker values {found.to_json()} differ from closed forms {closed.to_json()}")
    if not any(found.as_tuple()):
        raise DisjointnessFailure(f"All separating Pluecker values vanish at {c.to_json()}")
    return found


def a_matrix(a: BivectorCoefficients, tables: Optional[QuinticTables] = None) -> RationalMatrix:
    """21x3: column i holds the eps coordinates of sum_{j<k} a_jk A_ijk."""
    tables = tables or STANDARD_TABLES
    index = {pair: n for n, pair in enumerate(EPSILON_PAIRS)}
    columns = []
    for i in VECTOR_INDICES:
        column = [QQ.zero] * len(EPSILON_PAIRS)
        for (j, k), a_jk in a.values.items():
            for pair, c in tables.a(i, j, k).items():
                column[index[pair]] += a_jk * c
        columns.append(column)
    return RationalMatrix.from_columns(columns, len(EPSILON_PAIRS))


def b_matrix(a: BivectorCoefficients, tables: Optional[QuinticTables] = None) -> RationalMatrix:
    """23x21: column (i,j) holds the z coordinates of sum_{k<l} a_kl 2 B_ijkl."""
    tables = tables or STANDARD_TABLES
    index = {pair: n for n, pair in enumerate(Z_PAIRS)}
    columns = []
    for i, j in EPSILON_PAIRS:
        column = [QQ.zero] * len(Z_PAIRS)
        for (k, l), a_kl in a.values.items():
            for pair, c in tables.b(i, j, k, l).items():
                column[index[pair]] += 2 * a_kl * c
        columns.append(column)
    return RationalMatrix.from_columns(columns, len(Z_PAIRS))


def cohomology_dims_quintic(a: BivectorCoefficients, tables: Optional[QuinticTables] = None) -> CohomologyReport:
    """(1, 3 - rA, 21 - rA - rB, 23 - rB) from the complex O -> T -> wedge^2 T -> O(2)."""
    if a.is_zero():
        raise InputError("The zero bivector is not a point of P(so(7))")
    if not is_poisson_quintic(a, tables):
        raise NotPoisson("w is not a Poisson structure on X", nonzero_residuals(a))
    A, B = a_matrix(a, tables), b_matrix(a, tables)
    composes_to_zero = (B @ A).is_zero()
    if not composes_to_zero:
        raise ComplexFailure("B_w A_w is nonzero")
    annihilates = not any(B.apply(a.vector()))
    if not annihilates:
        raise ComplexFailure("B_w a is nonzero for a Poisson w")
    rA, rB = rank(A), rank(B)
    logger.info(f"Quintic cohomology: rank A_w = {rA}, rank B_w = {rB}")
    return CohomologyReport(
        target="quintic",
        ranks={"A": rA, "B": rB},
        dims=(1, 3 - rA, 21 - rA - rB, 23 - rB),
        kernel_basis=nullspace(A),
        kernel_labels=tuple(f"v{i}" for i in VECTOR_INDICES),
        checks={"complex": composes_to_zero, "self_annihilation": annihilates},
    )
