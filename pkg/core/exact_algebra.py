"""Exact rational scalars and sparse multivariate polynomials.

Every other module builds on the single polynomial ring defined here: the
sparse distributed ring of sympy over QQ with graded-lexicographic order on
the fixed variable order Z0..Z9, X1..X4, x1, x3, x4.  Polynomials are
canonical dicts from exponent tuples to nonzero rationals, so structural
equality is mathematical equality.
"""

import re
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple, Union

from logzero import logger
from sympy.polys.domains import QQ
from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyElement, ring

from core.errors import DivisionByZero, InputError, NotDivisible, ParseError

Polynomial = PolyElement
Rational = type(QQ.one)
Scalar = Union[int, str, Rational]

AMBIENT_VARIABLES: Tuple[str, ...] = tuple(f"Z{i}" for i in range(10))
CUBIC_AMBIENT: Tuple[str, ...] = AMBIENT_VARIABLES[:5]
CUBIC_CHART_VARIABLES: Tuple[str, ...] = ("X1", "X2", "X3", "X4")
QUINTIC_CHART_VARIABLES: Tuple[str, ...] = ("x1", "x3", "x4")
VARIABLES: Tuple[str, ...] = AMBIENT_VARIABLES + CUBIC_CHART_VARIABLES + QUINTIC_CHART_VARIABLES

RING, *_GENERATORS = ring(",".join(VARIABLES), QQ, grlex)
_INDEX: Dict[str, int] = {name: i for i, name in enumerate(VARIABLES)}
_GENERATOR: Dict[str, Polynomial] = dict(zip(VARIABLES, _GENERATORS))

_RATIONAL_PATTERN = re.compile(r"^\s*(-?\d+)(?:/(\d+))?\s*$")


def parse_rational(text: Scalar) -> Rational:
    """Parse "p" or "p/q" (or an int) into an exact rational."""
    if isinstance(text, bool):
        raise ParseError(f"Not a rational: {text!r}")
    if isinstance(text, int):
        return QQ(text)
    if isinstance(text, Rational):
        return text
    if not isinstance(text, str):
        raise ParseError(f"Not a rational: {text!r}")
    match = _RATIONAL_PATTERN.match(text)
    if match is None:
        raise ParseError(f"Not a rational: {text!r}")
    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) is not None else 1
    if denominator == 0:
        raise ParseError(f"Zero denominator in {text!r}")
    return QQ(numerator, denominator)


def format_rational(value: Rational) -> str:
    """Format as "p" when the denominator is 1, else "p/q"."""
    value = QQ.convert(value)
    numerator, denominator = int(QQ.numer(value)), int(QQ.denom(value))
    if denominator == 1:
        return str(numerator)
    return f"{numerator}/{denominator}"


def var(name: str) -> Polynomial:
    """Return the generator for a variable name."""
    try:
        return _GENERATOR[name]
    except KeyError:
        raise InputError(f"Unknown variable {name!r}") from None


def variable_index(name: str) -> int:
    try:
        return _INDEX[name]
    except KeyError:
        raise InputError(f"Unknown variable {name!r}") from None


def constant(value: Scalar) -> Polynomial:
    return RING.ground_new(parse_rational(value))


def poly_arith(p: Polynomial, q: Optional[Polynomial], op: str, scalar: Optional[Scalar] = None) -> Polynomial:
    """Exact add, sub, mul of two polynomials, or scale of p by a rational."""
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    if op == "scale":
        return p.mul_ground(parse_rational(scalar))
    raise ValueError(f"Unknown polynomial operation {op!r}")


def partial_derivative(p: Polynomial, name: str) -> Polynomial:
    return p.diff(var(name))


def substitute(p: Polynomial, mapping: Mapping[str, Union[Polynomial, Scalar]]) -> Polynomial:
    """Simultaneous substitution of variables by polynomials."""
    if not mapping:
        return p
    replacements = []
    for name, value in mapping.items():
        if not isinstance(value, PolyElement):
            value = constant(value)
        replacements.append((var(name), value))
    return p.compose(replacements)


def exact_division(p: Polynomial, q: Polynomial) -> Polynomial:
    """Return r with p = q*r; raise NotDivisible when q does not divide p."""
    if not q:
        raise DivisionByZero("Division by the zero polynomial")
    quotient, remainder = p.div(q)
    if remainder:
        raise NotDivisible(f"{q} does not divide {p}")
    return quotient


def divides(q: Polynomial, p: Polynomial) -> bool:
    try:
        exact_division(p, q)
    except NotDivisible:
        return False
    return True


def total_degree(p: Polynomial) -> int:
    """Total degree; -1 for the zero polynomial."""
    if not p:
        return -1
    return max(sum(monomial) for monomial in p.keys())


def degrees(p: Polynomial) -> Tuple[int, ...]:
    return tuple(sorted({sum(monomial) for monomial in p.keys()}))


def is_homogeneous(p: Polynomial, degree: Optional[int] = None) -> bool:
    found = degrees(p)
    if not found:
        return True
    if len(found) > 1:
        return False
    return degree is None or found[0] == degree


def variables_of(p: Polynomial) -> Tuple[str, ...]:
    """Names of the variables occurring in p, in ring order."""
    used = set()
    for monomial in p.keys():
        used.update(i for i, e in enumerate(monomial) if e)
    return tuple(VARIABLES[i] for i in sorted(used))


def coefficient(p: Polynomial, exponents: Mapping[str, int]) -> Rational:
    vector = [0] * len(VARIABLES)
    for name, exponent in exponents.items():
        vector[variable_index(name)] = exponent
    return p.get(tuple(vector), QQ.zero)


def sorted_terms(p: Polynomial) -> Sequence[Tuple[Tuple[int, ...], Rational]]:
    """Terms in decreasing graded-lex order."""
    return p.terms(grlex)


def polynomial_to_json(p: Polynomial, universe: Sequence[str]) -> Dict[str, str]:
    """Serialize as {"e0 e1 ...": "p/q"} over the given universe, graded-lex keys."""
    indices = [variable_index(name) for name in universe]
    result = {}
    for exponents, coeff in sorted_terms(p):
        outside = [e for i, e in enumerate(exponents) if e and i not in indices]
        if outside:
            raise InputError(f"Polynomial uses variables outside {list(universe)}")
        key = " ".join(str(exponents[i]) for i in indices)
        result[key] = format_rational(coeff)
    return result


def polynomial_from_json(payload: Mapping[str, Scalar], universe: Sequence[str]) -> Polynomial:
    """Parse the exponent-vector JSON form over the given universe."""
    if not isinstance(payload, Mapping):
        raise ParseError("Polynomial must be a JSON object of exponent vectors")
    indices = [variable_index(name) for name in universe]
    poly = RING.zero
    for key, value in payload.items():
        parts = str(key).split()
        if len(parts) != len(indices):
            raise ParseError(f"Exponent vector {key!r} has {len(parts)} entries, expected {len(indices)}")
        try:
            exponents = [int(part) for part in parts]
        except ValueError:
            raise ParseError(f"Exponent vector {key!r} is not a list of integers") from None
        if any(e < 0 for e in exponents):
            raise ParseError(f"Negative exponent in {key!r}")
        vector = [0] * len(VARIABLES)
        for i, e in zip(indices, exponents):
            vector[i] = e
        poly += RING.term_new(tuple(vector), parse_rational(value))
    logger.debug(f"Parsed polynomial with {len(poly)} terms over {list(universe)}")
    return poly


def power_sum(names: Iterable[str], exponent: int) -> Polynomial:
    return sum((var(name) ** exponent for name in names), RING.zero)
