"""Antisymmetric coefficient vectors a_ij and their Pluecker quadrics."""

from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Mapping, Sequence, Tuple

from sympy.polys.domains import QQ

from core.errors import InputError, ParseError
from core.exact_algebra import Rational, format_rational, parse_rational

Pair = Tuple[int, int]
Quadruple = Tuple[int, int, int, int]

CUBIC_INDICES: Tuple[int, ...] = (0, 1, 2, 3, 4)
QUINTIC_INDICES: Tuple[int, ...] = (0, 1, 2, 3, 4, 5, 8)


def permutation_sign(indices: Sequence[int]) -> int:
    """Sign of the permutation sorting indices; 0 if an index repeats."""
    if len(set(indices)) != len(indices):
        return 0
    inversions = sum(1 for a, b in combinations(indices, 2) if a > b)
    return -1 if inversions % 2 else 1


def pair_label(pair: Sequence[int]) -> str:
    return "".join(str(i) for i in pair)


@dataclass(frozen=True)
class BivectorCoefficients:
    """Coordinates a_ij (i < j over an index set) of w = sum a_ij eps_ij."""

    indices: Tuple[int, ...]
    values: Mapping[Pair, Rational]

    def __post_init__(self):
        cleaned = {}
        for (i, j), value in self.values.items():
            if i not in self.indices or j not in self.indices or i == j:
                raise InputError(f"Pair ({i},{j}) is not an index pair over {list(self.indices)}")
            value = parse_rational(value)
            if i > j:
                i, j, value = j, i, -value
            cleaned[(i, j)] = cleaned.get((i, j), QQ.zero) + value
        object.__setattr__(self, "values", {p: v for p, v in cleaned.items() if v})

    @property
    def pairs(self) -> List[Pair]:
        return list(combinations(self.indices, 2))

    def get(self, i: int, j: int) -> Rational:
        """Antisymmetric lookup a_ji = -a_ij, a_ii = 0."""
        if i == j:
            return QQ.zero
        if i < j:
            return self.values.get((i, j), QQ.zero)
        return -self.values.get((j, i), QQ.zero)

    def vector(self) -> List[Rational]:
        return [self.get(i, j) for i, j in self.pairs]

    def is_zero(self) -> bool:
        return not self.values

    def alpha(self, i: int, j: int, k: int, l: int) -> Rational:
        """alpha_ijkl = a_ij a_kl - a_ik a_jl + a_il a_jk."""
        a = self.get
        return a(i, j) * a(k, l) - a(i, k) * a(j, l) + a(i, l) * a(j, k)

    def alphas(self) -> Dict[Quadruple, Rational]:
        return {quad: self.alpha(*quad) for quad in combinations(self.indices, 4)}

    def to_json(self) -> Dict[str, str]:
        return {pair_label(p): format_rational(self.values[p]) for p in self.pairs if p in self.values}

    @classmethod
    def from_vector(cls, indices: Sequence[int], vector: Sequence) -> "BivectorCoefficients":
        pairs = list(combinations(indices, 2))
        if len(vector) != len(pairs):
            raise InputError(f"Expected {len(pairs)} coordinates, got {len(vector)}")
        return cls(tuple(indices), dict(zip(pairs, vector)))

    @classmethod
    def from_json(cls, payload: Mapping, indices: Sequence[int]) -> "BivectorCoefficients":
        """Parse {"a": {"01": "5/2", ...}} or the bare inner mapping."""
        if not isinstance(payload, Mapping):
            raise ParseError("Bivector input must be a JSON object")
        entries = payload.get("a", payload)
        if not isinstance(entries, Mapping):
            raise ParseError('"a" must map index pairs to rationals')
        values = {}
        for key, value in entries.items():
            key = str(key)
            if len(key) != 2 or not key.isdigit():
                raise ParseError(f"Index pair {key!r} must be two digits such as \"01\"")
            values[(int(key[0]), int(key[1]))] = parse_rational(value)
        return cls(tuple(indices), values)

    @classmethod
    def decomposable(cls, indices: Sequence[int], u: Sequence, v: Sequence) -> "BivectorCoefficients":
        """a = u ^ v, a_ij = u_i v_j - u_j v_i, with u, v indexed like indices."""
        u = [parse_rational(x) for x in u]
        v = [parse_rational(x) for x in v]
        position = {index: n for n, index in enumerate(indices)}
        values = {
            (i, j): u[position[i]] * v[position[j]] - u[position[j]] * v[position[i]]
            for i, j in combinations(indices, 2)
        }
        return cls(tuple(indices), values)


def so5_coeffs(values: Mapping[Pair, object]) -> BivectorCoefficients:
    return BivectorCoefficients(CUBIC_INDICES, dict(values))


def so7_coeffs(values: Mapping[Pair, object]) -> BivectorCoefficients:
    return BivectorCoefficients(QUINTIC_INDICES, dict(values))
