import pytest
from hypothesis import given
from hypothesis import strategies as st
from sympy import Matrix, Rational as SympyRational
from sympy.polys.domains import QQ

from core.cubic import (
    EPSILON_PAIRS,
    CubicForm,
    bracket_square_cubic,
    bracket_table_cubic,
    c_matrix,
    choose_cubic_chart,
    cohomology_dims_cubic,
    d_omega,
    d_omega_closed_form,
    epsilon_basis_cubic,
    is_poisson_cubic,
    plucker_alphas,
    plucker_expansion_cubic,
    quadric_coordinates,
    verify_bracket_table_chart,
)
from core.errors import ChartDegenerate, InputError, NotHomogeneous, NotPoisson
from core.exact_algebra import RING, format_rational, power_sum, var
from core.linalg import rank
from core.plucker import CUBIC_INDICES, BivectorCoefficients, so5_coeffs
from core.sampling import Sampler


def _z(i):
    return var(f"Z{i}")


@pytest.fixture
def fermat():
    """Fixture for the Fermat cubic threefold."""
    return CubicForm.fermat()


@pytest.fixture
def eps01():
    """Fixture for w = eps_01."""
    return so5_coeffs({(0, 1): 1})


def test_cubic_form_validation():
    """Test that non-cubic and foreign-variable inputs are rejected."""
    with pytest.raises(NotHomogeneous):
        CubicForm(_z(0) ** 3 + _z(1))
    with pytest.raises(NotHomogeneous):
        CubicForm(RING.zero)
    with pytest.raises(InputError):
        CubicForm(_z(7) ** 3)


def test_cubic_json():
    """Test parsing the {"F": ...} input."""
    cubic = CubicForm.from_json({"F": {"3 0 0 0 0": "1", "0 0 0 1 2": "-1/2"}})
    assert cubic.F == _z(0) ** 3 - (_z(3) * _z(4) ** 2).mul_ground(QQ(1, 2))
    with pytest.raises(InputError):
        CubicForm.from_json({"G": {}})


def test_partials_rank(fermat):
    """Test the rank of the five partial derivatives."""
    assert fermat.partials_rank() == 5
    assert fermat.partials_independent()
    assert CubicForm(_z(0) ** 3).partials_rank() == 1


def test_epsilon_basis():
    """Test the ten forms eps_ij = Z_j dZ_i - Z_i dZ_j."""
    basis = epsilon_basis_cubic()
    assert len(basis) == 10
    assert basis[(0, 1)].coefficients == {"Z0": _z(1), "Z1": -_z(0)}
    assert all(not form.contract_euler() for form in basis.values())


def test_bracket_table_signs(fermat):
    """Test C_ijkl = (-1)^m dF/dZ_m with the missing index m."""
    table = bracket_table_cubic(fermat)
    assert table.entry(1, 2, 3, 4) == 3 * _z(0) ** 2
    assert table.entry(0, 2, 3, 4) == -3 * _z(1) ** 2
    assert table.entry(0, 1, 2, 3) == 3 * _z(4) ** 2
    assert table.entry(1, 0, 2, 3) == -3 * _z(4) ** 2
    assert table.entry(0, 0, 2, 3) == RING.zero


def test_table_verified_on_chart(fermat):
    """Test that the chart computation reproduces all five entries for the Fermat cubic."""
    report = verify_bracket_table_chart(fermat)
    assert report.all_passed
    assert len(report.entries) == 5
    assert report.notes["chart"] == "cubic-Z0"


def test_table_verified_for_random_cubics():
    """Test the chart computation on seeded random cubics with independent partials."""
    sampler = Sampler(7, max_height=5)
    for _ in range(3):
        assert verify_bracket_table_chart(sampler.random_cubic()).all_passed


def test_faulty_table_entry_detected(fermat):
    """Test that a corrupted entry is reported as failed."""
    table = bracket_table_cubic(fermat).with_entry((0, 1, 2, 3), 3 * _z(3) ** 2)
    report = verify_bracket_table_chart(fermat, table)
    assert report.failures == ["C0123"]


def test_chart_fallback():
    """Test that a degenerate first chart falls back to the next variable."""
    cubic = CubicForm(power_sum(["Z0", "Z1", "Z2", "Z3"], 3))
    assert choose_cubic_chart(cubic).context.name == "cubic-Z4"
    assert verify_bracket_table_chart(cubic).all_passed


def test_all_charts_degenerate():
    """Test ChartDegenerate when df/dX4 vanishes on every chart."""
    with pytest.raises(ChartDegenerate):
        choose_cubic_chart(CubicForm(_z(0) ** 3))


@given(st.integers(min_value=0, max_value=10_000))
def test_bracket_square_identity(seed):
    """Test [w, w] = 4 sum +-alpha F_m for random coefficients."""
    sampler = Sampler(seed)
    a = sampler.random_coeffs(CUBIC_INDICES)
    for cubic in (CubicForm.fermat(), sampler.random_cubic()):
        assert bracket_square_cubic(cubic, a) == plucker_expansion_cubic(cubic, a)


def test_bracket_square_identity_hundred_samples(fermat):
    """Test the identity for 100 seeded random coefficient vectors."""
    sampler = Sampler(2024)
    for _ in range(100):
        a = sampler.random_coeffs(CUBIC_INDICES)
        assert bracket_square_cubic(fermat, a) == plucker_expansion_cubic(fermat, a)


def test_is_poisson(fermat, eps01):
    """Test Poisson and non-Poisson bivectors."""
    assert is_poisson_cubic(fermat, eps01)
    not_poisson = so5_coeffs({(0, 1): 1, (2, 3): 1})
    assert plucker_alphas(not_poisson)[0] == QQ(1)
    assert not is_poisson_cubic(fermat, not_poisson)


def test_decomposable_is_poisson(fermat):
    """Test that u ^ v is always Poisson."""
    sampler = Sampler(5)
    for _ in range(10):
        assert is_poisson_cubic(fermat, sampler.decomposable(CUBIC_INDICES))


def test_dependent_partials_use_expansion_only():
    """Test that dependent partials skip the Pluecker cross-check."""
    cubic = CubicForm(_z(0) ** 3)
    # F_m = 0 for m > 0, so only alpha_1234 matters
    assert is_poisson_cubic(cubic, so5_coeffs({(0, 1): 1, (2, 3): 1}))
    assert not is_poisson_cubic(cubic, so5_coeffs({(1, 2): 1, (3, 4): 1}))


def test_d_omega_closed_form(fermat):
    """Test the displayed d_w images against the table sum."""
    sampler = Sampler(9)
    a = sampler.random_coeffs(CUBIC_INDICES)
    cubic = sampler.random_cubic()
    for pair in EPSILON_PAIRS:
        assert d_omega(cubic, a, pair) == d_omega_closed_form(cubic, a, pair)
        assert d_omega(fermat, a, pair) == d_omega_closed_form(fermat, a, pair)


def test_rank_oracle_for_eps01(fermat, eps01):
    """Test rank C_w = 3 for w = eps_01 against an independent rank computation."""
    # d_w(eps_23) = 3 Z4^2, d_w(eps_24) = -3 Z3^2, d_w(eps_34) = 3 Z2^2
    columns = [quadric_coordinates(3 * _z(4) ** 2), quadric_coordinates(-3 * _z(3) ** 2), quadric_coordinates(3 * _z(2) ** 2)]
    oracle = Matrix([[SympyRational(format_rational(x)) for x in column] for column in columns]).rank()
    assert oracle == 3
    assert rank(c_matrix(fermat, eps01)) == oracle


def test_cohomology_fermat_eps01(fermat, eps01):
    """Test dims (1, 0, 17, 12) for the Fermat cubic and w = eps_01."""
    report = cohomology_dims_cubic(fermat, eps01)
    assert report.ranks == {"C": 3}
    assert tuple(report.dims) == (1, 0, 17, 12)
    assert report.euler_characteristic == 6
    assert len(report.kernel_basis) == 7
    assert report.checks["self_annihilation"]


def test_cohomology_rejects_non_poisson(fermat):
    """Test NotPoisson with the alpha residuals."""
    with pytest.raises(NotPoisson) as excinfo:
        cohomology_dims_cubic(fermat, so5_coeffs({(0, 1): 1, (2, 3): 1}))
    assert excinfo.value.residuals == {"alpha_0123": "1"}


def test_cohomology_rejects_zero(fermat):
    """Test that the zero bivector is an input error."""
    with pytest.raises(InputError):
        cohomology_dims_cubic(fermat, BivectorCoefficients(CUBIC_INDICES, {}))


@given(st.integers(min_value=0, max_value=10_000))
def test_euler_characteristic_on_poisson_points(seed):
    """Test that every decomposable w gives Euler characteristic 6."""
    a = Sampler(seed).decomposable(CUBIC_INDICES)
    report = cohomology_dims_cubic(CubicForm.fermat(), a)
    assert report.euler_characteristic == 6
    assert report.dims[1] == 0


if __name__ == "__main__":
    pytest.main([__file__])
