import pytest
from hypothesis import given
from hypothesis import strategies as st
from sympy import Matrix, Rational as SympyRational
from sympy.polys.domains import QQ

from core.errors import DegreeMismatch, DependentBasis, NotInSpan
from core.exact_algebra import format_rational
from core.exterior import schouten_bivector_bivector
from core.linalg import (
    RationalMatrix,
    coordinate_matrix,
    express_in_basis,
    nullspace,
    rank,
    solve_coordinates,
)
from core.quintic import anticanonical_basis_quintic, restricted_epsilon
from property_settings import rationals


def _sympy_rank(M: RationalMatrix) -> int:
    return Matrix([[SympyRational(format_rational(x)) for x in row] for row in M.entries]).rank()


@pytest.fixture
def singular():
    """Fixture for a rank-one 2x3 matrix."""
    return RationalMatrix.from_rows([[1, 2, 3], ["2", 4, 6]])


def test_rank_small_cases(singular):
    """Test rank on hand-checked matrices."""
    assert rank(singular) == 1
    assert rank(RationalMatrix.identity(4)) == 4
    assert rank(RationalMatrix.zeros(3, 5)) == 0
    assert rank(RationalMatrix.from_rows([["1/2", "1/3"], ["1/4", "1/6"]])) == 1


def test_nullspace_annihilated(singular):
    """Test that every nullspace vector is mapped to zero."""
    kernel = nullspace(singular)
    assert len(kernel) == 2
    for vector in kernel:
        assert not any(singular.apply(vector))


def test_matmul_and_transpose(singular):
    """Test products against the transpose."""
    gram = singular @ singular.transpose()
    assert gram.entries == ((QQ(14), QQ(28)), (QQ(28), QQ(56)))
    with pytest.raises(DegreeMismatch):
        singular @ singular


def test_solve_coordinates():
    """Test solving for coordinates in an independent basis."""
    coordinates = solve_coordinates([[QQ(1), QQ(0)], [QQ(1), QQ(1)]], [QQ(3), QQ(5)])
    assert coordinates == [QQ(-2), QQ(5)]


def test_solve_coordinates_failures():
    """Test dependent bases and targets outside the span."""
    with pytest.raises(DependentBasis):
        solve_coordinates([[QQ(1), QQ(2)], [QQ(2), QQ(4)]], [QQ(1), QQ(2)])
    with pytest.raises(NotInSpan):
        solve_coordinates([[QQ(1), QQ(0), QQ(0)]], [QQ(0), QQ(1), QQ(0)])


def test_express_in_basis_sparse():
    """Test expressing a sparse coordinate map in a sparse basis."""
    basis = [{"a": QQ(1)}, {"a": QQ(1), "b": QQ(2)}]
    assert express_in_basis(basis, {"a": QQ(4), "b": QQ(6)}) == [QQ(1), QQ(3)]


def test_express_chart_bracket_in_quadric_basis():
    """Test 1/2 [eps_23, eps_58] = -5 z01 - z23 + 2 z58 over the 23 restricted z_ij."""
    half_bracket = schouten_bivector_bivector(restricted_epsilon(2, 3), restricted_epsilon(5, 8)).scale_rational(QQ(1, 2))
    basis = anticanonical_basis_quintic()
    coordinates = express_in_basis([dict(p) for p in basis.values()], dict(half_bracket.function()))
    found = {pair: c for pair, c in zip(basis, coordinates) if c}
    assert found == {(0, 1): QQ(-5), (2, 3): QQ(-1), (5, 8): QQ(2)}


def test_coordinate_matrix_columns():
    """Test that each item becomes one column over the union of keys."""
    keys, M = coordinate_matrix([{"a": QQ(1)}, {"b": QQ(2)}, {"a": QQ(3), "b": QQ(1)}])
    assert keys == ["a", "b"]
    assert (M.rows, M.cols) == (2, 3)
    assert M.column(2) == [QQ(3), QQ(1)]


@given(st.integers(min_value=1, max_value=5), st.integers(min_value=1, max_value=5), st.data())
def test_rank_matches_sympy(rows, cols, data):
    """Test Bareiss rank against sympy's Matrix.rank."""
    entries = [data.draw(st.lists(rationals(3), min_size=cols, max_size=cols)) for _ in range(rows)]
    M = RationalMatrix.from_rows(entries, cols)
    assert rank(M) == _sympy_rank(M)
    assert len(nullspace(M)) == cols - rank(M)


if __name__ == "__main__":
    pytest.main([__file__])
