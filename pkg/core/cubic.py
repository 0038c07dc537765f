"""Poisson structures and Poisson cohomology on a cubic threefold X = {F = 0} in P^4.

Bivector fields on X are spanned by the 1-forms eps_ij = Z_j dZ_i - Z_i dZ_j,
and the halved brackets C_ijkl = 1/2 [eps_ij, eps_kl] are the signed partials
of F.  The closed-form table drives every computation; the chart computation
in verify_bracket_table_chart re-derives it from the form-level bracket.
"""

from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from joblib import Parallel, delayed
from logzero import logger
from sympy.polys.domains import QQ

from core.errors import ChartDegenerate, ComplexFailure, ContextMismatch, InconsistentCheck, InputError, NotHomogeneous, NotPoisson
from core.exact_algebra import (
    CUBIC_AMBIENT,
    CUBIC_CHART_VARIABLES,
    RING,
    Polynomial,
    Rational,
    degrees,
    partial_derivative,
    polynomial_from_json,
    polynomial_to_json,
    power_sum,
    substitute,
    var,
    variables_of,
)
from core.exterior import AmbientOneForm, ChartContext, ChartEmbedding, ChartForm, equal_mod_relation, schouten_bivector_bivector
from core.linalg import RationalMatrix, nullspace, rank
from core.plucker import CUBIC_INDICES, BivectorCoefficients, Pair, Quadruple, pair_label, permutation_sign
from core.reports import CohomologyReport, EntryResult, VerificationReport, residuals_to_json

SORTED_QUADRUPLES: Tuple[Quadruple, ...] = tuple(combinations(CUBIC_INDICES, 4))
EPSILON_PAIRS: Tuple[Pair, ...] = tuple(combinations(CUBIC_INDICES, 2))
# H^0(P^4, O(2)) in graded-lex order: Z0^2, Z0Z1, ..., Z4^2
QUADRIC_PAIRS: Tuple[Pair, ...] = tuple((i, j) for i in CUBIC_INDICES for j in CUBIC_INDICES if i <= j)
QUADRIC_MONOMIALS: Tuple[Polynomial, ...] = tuple(var(f"Z{i}") * var(f"Z{j}") for i, j in QUADRIC_PAIRS)

# d_w(eps_kl) = sum of sign * a_ij * dF/dZ_m, as listed for each basis element
D_OMEGA_TERMS: Dict[Pair, Tuple[Tuple[int, Pair, int], ...]] = {
    (0, 1): ((1, (2, 3), 4), (-1, (2, 4), 3), (1, (3, 4), 2)),
    (0, 2): ((-1, (1, 3), 4), (1, (1, 4), 3), (-1, (3, 4), 1)),
    (0, 3): ((1, (1, 2), 4), (-1, (1, 4), 2), (1, (2, 4), 1)),
    (0, 4): ((-1, (1, 2), 3), (1, (1, 3), 2), (-1, (2, 3), 1)),
    (1, 2): ((1, (0, 3), 4), (-1, (0, 4), 3), (1, (3, 4), 0)),
    (1, 3): ((-1, (0, 2), 4), (1, (0, 4), 2), (-1, (2, 4), 0)),
    (1, 4): ((1, (0, 2), 3), (-1, (0, 3), 2), (1, (2, 3), 0)),
    (2, 3): ((1, (0, 1), 4), (-1, (0, 4), 1), (1, (1, 4), 0)),
    (2, 4): ((-1, (0, 1), 3), (1, (0, 3), 1), (-1, (1, 3), 0)),
    (3, 4): ((1, (0, 1), 2), (-1, (0, 2), 1), (1, (1, 2), 0)),
}


@dataclass(frozen=True)
class CubicForm:
    """A cubic form F in Z0..Z4."""

    F: Polynomial

    def __post_init__(self):
        outside = [name for name in variables_of(self.F) if name not in CUBIC_AMBIENT]
        if outside:
            raise InputError(f"Cubic form uses variables outside Z0..Z4: {outside}")
        if not self.F:
            raise NotHomogeneous("The zero polynomial does not define a cubic threefold")
        found = degrees(self.F)
        if found != (3,):
            raise NotHomogeneous(f"F must be homogeneous of degree 3, found degrees {list(found)}", list(found))

    @classmethod
    def fermat(cls) -> "CubicForm":
        return cls(power_sum(CUBIC_AMBIENT, 3))

    @classmethod
    def from_json(cls, payload: Mapping) -> "CubicForm":
        if not isinstance(payload, Mapping) or "F" not in payload:
            raise InputError('Cubic input must be a JSON object with key "F"')
        return cls(polynomial_from_json(payload["F"], CUBIC_AMBIENT))

    def to_json(self) -> Dict:
        return {"F": polynomial_to_json(self.F, CUBIC_AMBIENT)}

    def partial(self, m: int) -> Polynomial:
        return partial_derivative(self.F, f"Z{m}")

    @property
    def partials(self) -> Tuple[Polynomial, ...]:
        return tuple(self.partial(m) for m in CUBIC_INDICES)

    def partials_matrix(self) -> RationalMatrix:
        """5x15 coordinates of the partials over the quadric monomials."""
        return RationalMatrix.from_rows([quadric_coordinates(p) for p in self.partials], len(QUADRIC_PAIRS))

    def partials_rank(self) -> int:
        return rank(self.partials_matrix())

    def partials_independent(self) -> bool:
        return self.partials_rank() == len(CUBIC_INDICES)


def quadric_coordinates(p: Polynomial) -> List[Rational]:
    """Coordinates of a quadric in Z0..Z4 over QUADRIC_MONOMIALS."""
    return [p.get(m.LM, QQ.zero) for m in QUADRIC_MONOMIALS]


def epsilon_basis_cubic() -> Dict[Pair, AmbientOneForm]:
    """The ten 1-forms eps_ij = Z_j dZ_i - Z_i dZ_j, i < j."""
    return {(i, j): AmbientOneForm.epsilon(i, j) for i, j in EPSILON_PAIRS}


@dataclass(frozen=True)
class CubicBracketTable:
    """C_ijkl on sorted quadruples, extended by total antisymmetry."""

    cubic: CubicForm
    entries: Mapping[Quadruple, Polynomial]

    def entry(self, i: int, j: int, k: int, l: int) -> Polynomial:
        sign = permutation_sign((i, j, k, l))
        if not sign:
            return RING.zero
        value = self.entries[tuple(sorted((i, j, k, l)))]
        return value if sign > 0 else -value

    def with_entry(self, quadruple: Quadruple, value: Polynomial) -> "CubicBracketTable":
        entries = dict(self.entries)
        entries[tuple(quadruple)] = value
        return CubicBracketTable(self.cubic, entries)


def bracket_table_cubic(cubic: CubicForm) -> CubicBracketTable:
    """C_ijkl = (-1)^m dF/dZ_m for the index m missing from the sorted quadruple."""
    entries = {}
    for quadruple in SORTED_QUADRUPLES:
        (m,) = set(CUBIC_INDICES) - set(quadruple)
        partial = cubic.partial(m)
        entries[quadruple] = partial if m % 2 == 0 else -partial
    return CubicBracketTable(cubic, entries)


def cubic_chart(cubic: CubicForm, k: int) -> ChartEmbedding:
    """Dehomogenize at Z_k = 1; the remaining Z's become X1..X4 in index order, X4 dependent."""
    others = [i for i in CUBIC_INDICES if i != k]
    ambient_map = {f"Z{k}": RING.one}
    sources = {}
    for name, i in zip(CUBIC_CHART_VARIABLES, others):
        ambient_map[f"Z{i}"] = var(name)
        sources[name] = f"Z{i}"
    relation = substitute(cubic.F, ambient_map)
    context = ChartContext(
        name=f"cubic-Z{k}",
        free=CUBIC_CHART_VARIABLES,
        relation=relation,
        dependent=CUBIC_CHART_VARIABLES[-1],
        volume_sign=(-1) ** k,
    )
    return ChartEmbedding(context, f"Z{k}", ambient_map, sources)


def choose_cubic_chart(cubic: CubicForm, chart_order: Sequence[int] = CUBIC_INDICES) -> ChartEmbedding:
    for position, k in enumerate(chart_order):
        try:
            embedding = cubic_chart(cubic, k)
        except ContextMismatch:
            logger.warning(f"Chart Z{k}=1 is degenerate (df/dX4 vanishes), trying the next variable")
            continue
        if position:
            logger.warning(f"Using fallback chart Z{k}=1")
        return embedding
    raise ChartDegenerate(f"df/dX4 vanishes identically on every chart in {list(chart_order)}")


def _check_cubic_entry(
    embedding: ChartEmbedding, table: CubicBracketTable, basis: Mapping[Pair, AmbientOneForm], quadruple: Quadruple
) -> EntryResult:
    i, j, k, l = quadruple
    first = embedding.restrict_form(basis[(i, j)])
    second = embedding.restrict_form(basis[(k, l)])
    half_bracket = schouten_bivector_bivector(first, second).scale_rational(QQ(1, 2))
    expected = ChartForm.scalar(embedding.context, embedding.restrict_polynomial(table.entry(*quadruple)))
    passed = equal_mod_relation(half_bracket, expected)
    label = f"C{pair_label(quadruple)}"
    if not passed:
        logger.warning(f"{label} does not match the chart bracket on {embedding.context.name}")
    return EntryResult(label, passed, "" if passed else f"chart {embedding.context.name}")


def verify_bracket_table_chart(
    cubic: CubicForm,
    table: Optional[CubicBracketTable] = None,
    chart_order: Sequence[int] = CUBIC_INDICES,
    n_jobs: int = 1,
) -> VerificationReport:
    """Recompute each 1/2[eps_ij, eps_kl] on a chart and compare with the table modulo f."""
    table = table or bracket_table_cubic(cubic)
    embedding = choose_cubic_chart(cubic, chart_order)
    basis = epsilon_basis_cubic()
    logger.info(f"Verifying cubic bracket table on chart {embedding.context.name}")
    entries = Parallel(n_jobs=n_jobs, prefer="threads")(
        delayed(_check_cubic_entry)(embedding, table, basis, quadruple) for quadruple in SORTED_QUADRUPLES
    )
    report = VerificationReport("cubic_bracket_table", list(entries), {"chart": embedding.context.name})
    logger.info(f"Cubic bracket table: {len(entries) - len(report.failures)}/{len(entries)} entries passed")
    return report


def plucker_alphas(a: BivectorCoefficients) -> Tuple[Rational, ...]:
    """(alpha_0123, alpha_0124, alpha_0134, alpha_0234, alpha_1234)."""
    return tuple(a.alpha(*quadruple) for quadruple in SORTED_QUADRUPLES)


def bracket_square_cubic(cubic: CubicForm, a: BivectorCoefficients, table: Optional[CubicBracketTable] = None) -> Polynomial:
    """[w, w] = sum over pairs (i<j), (k<l) of a_ij a_kl [eps_ij, eps_kl] = 2 sum a_ij a_kl C_ijkl."""
    table = table or bracket_table_cubic(cubic)
    total = RING.zero
    for i, j in EPSILON_PAIRS:
        a_ij = a.get(i, j)
        if not a_ij:
            continue
        for k, l in EPSILON_PAIRS:
            a_kl = a.get(k, l)
            if a_kl:
                total += table.entry(i, j, k, l).mul_ground(2 * a_ij * a_kl)
    return total


def plucker_expansion_cubic(cubic: CubicForm, a: BivectorCoefficients) -> Polynomial:
    """4 (alpha_1234 F_0 - alpha_0234 F_1 + alpha_0134 F_2 - alpha_0124 F_3 + alpha_0123 F_4)."""
    total = RING.zero
    for quadruple in SORTED_QUADRUPLES:
        (m,) = set(CUBIC_INDICES) - set(quadruple)
        sign = 1 if m % 2 == 0 else -1
        total += cubic.partial(m).mul_ground(4 * sign * a.alpha(*quadruple))
    return total


def alpha_residuals(a: BivectorCoefficients) -> Dict[str, Rational]:
    return {f"alpha_{pair_label(q)}": value for q, value in zip(SORTED_QUADRUPLES, plucker_alphas(a))}


def is_poisson_cubic(cubic: CubicForm, a: BivectorCoefficients) -> bool:
    """[w, w] = 0, cross-checked against the vanishing of the five Pluecker quadrics."""
    expansion_vanishes = not bracket_square_cubic(cubic, a)
    if not cubic.partials_independent():
        logger.warning("Partials of F are dependent: deciding by the bracket expansion only")
        return expansion_vanishes
    alphas_vanish = not any(plucker_alphas(a))
    if expansion_vanishes != alphas_vanish:
        raise InconsistentCheck(
            f"Bracket expansion vanishes={expansion_vanishes} but Pluecker quadrics vanish={alphas_vanish}"
        )
    return expansion_vanishes


def d_omega(cubic: CubicForm, a: BivectorCoefficients, pair: Pair, table: Optional[CubicBracketTable] = None) -> Polynomial:
    """d_w(eps_kl) = 1/2 [w, eps_kl] = sum_{i<j} a_ij C_ijkl."""
    table = table or bracket_table_cubic(cubic)
    k, l = pair
    total = RING.zero
    for i, j in EPSILON_PAIRS:
        a_ij = a.get(i, j)
        if a_ij:
            total += table.entry(i, j, k, l).mul_ground(a_ij)
    return total


def d_omega_closed_form(cubic: CubicForm, a: BivectorCoefficients, pair: Pair) -> Polynomial:
    total = RING.zero
    for sign, (i, j), m in D_OMEGA_TERMS[tuple(pair)]:
        total += cubic.partial(m).mul_ground(sign * a.get(i, j))
    return total


def c_matrix(cubic: CubicForm, a: BivectorCoefficients) -> RationalMatrix:
    """15x10 matrix of d_w: column (k,l) holds the quadric coordinates of d_w(eps_kl)."""
    table = bracket_table_cubic(cubic)
    columns = [quadric_coordinates(d_omega(cubic, a, pair, table)) for pair in EPSILON_PAIRS]
    return RationalMatrix.from_columns(columns, len(QUADRIC_PAIRS))


def cohomology_dims_cubic(cubic: CubicForm, a: BivectorCoefficients) -> CohomologyReport:
    """(1, 0, 20 - r, 15 - r) with r = rank C_w; 20 - r = dim ker d_w + dim H^1(X, T_X) = (10 - r) + 10."""
    if a.is_zero():
        raise InputError("The zero bivector is not a point of P(so(5))")
    if not is_poisson_cubic(cubic, a):
        residuals = residuals_to_json({name: v for name, v in alpha_residuals(a).items() if v})
        raise NotPoisson("w is not a Poisson structure on X", residuals)
    matrix = c_matrix(cubic, a)
    annihilates = not any(matrix.apply(a.vector()))
    if not annihilates:
        raise ComplexFailure("d_w(w) = 1/2[w, w] is nonzero for a Poisson w")
    r = rank(matrix)
    logger.info(f"Cubic cohomology: rank C_w = {r}")
    return CohomologyReport(
        target="cubic",
        ranks={"C": r},
        dims=(1, 0, 20 - r, 15 - r),
        kernel_basis=nullspace(matrix),
        kernel_labels=tuple(f"eps{pair_label(p)}" for p in EPSILON_PAIRS),
        checks={"self_annihilation": annihilates},
    )
