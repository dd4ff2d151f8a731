import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from pydantic import ValidationError

from relmaj.core.schema import Pair, Unbounded
from relmaj.errors import DomainError, InputError
from relmaj.models import Method, StochasticClass, Verdict
from relmaj.submaj.schema import ApproxParams, Witness
from relmaj.submaj.service.decide import approx_submajorizes, chain_feasible, relatively_majorizes, submajorizes
from relmaj.submaj.service.optimal import (
    lambda_star,
    lambda_star_lp,
    optimal_errors,
    optimal_errors_lp,
    region_boundary,
    scaled_submajorizes,
    z_star,
    z_star_lp,
)
from relmaj.submaj.service.report import check_report
from relmaj.submaj.service.witness import dilate, witness_from_curves

positive = st.floats(min_value=0.01, max_value=1.0, allow_nan=False)


@st.composite
def normalized_pairs(draw, max_size=4, floor=0.01):
    n = draw(st.integers(min_value=1, max_value=max_size))
    entries = st.floats(min_value=floor, max_value=1.0, allow_nan=False)
    p = np.array(draw(st.lists(entries, min_size=n, max_size=n)))
    q = np.array(draw(st.lists(entries, min_size=n, max_size=n)))
    return Pair.of(p / p.sum(), q / q.sum())


@st.composite
def sparse_pairs(draw, max_size=4):
    """Unnormalized pairs whose entries may vanish."""
    n = draw(st.integers(min_value=1, max_value=max_size))
    entries = st.one_of(st.just(0.0), st.floats(min_value=0.01, max_value=1.0, allow_nan=False))
    p = draw(st.lists(entries, min_size=n, max_size=n))
    q = draw(st.lists(entries, min_size=n, max_size=n))
    return Pair.of(p, q)


def test_witness_validation():
    """Test that witnesses respect their stochastic class"""
    Witness.of(np.eye(2), StochasticClass.stochastic)
    Witness.of(np.array([[0.5, 0.0], [0.0, 0.5]]), StochasticClass.substochastic)
    with pytest.raises(ValidationError):
        Witness.of(np.array([[0.5, 0.0], [0.0, 0.5]]), StochasticClass.stochastic)
    with pytest.raises(ValidationError):
        Witness.of(np.array([[1.0, 1.0], [0.5, 0.0]]), StochasticClass.substochastic)


def test_relative_majorization_of_worked_pairs(source_pair, target_pair):
    """Test both directions of the worked instance"""
    forward = relatively_majorizes(source_pair, target_pair)
    backward = relatively_majorizes(target_pair, source_pair)
    assert forward.verdict == Verdict.no
    assert forward.witness is None
    assert backward.holds
    matrix = backward.witness.array
    assert matrix @ target_pair.p.array == pytest.approx(source_pair.p.array, abs=1e-7)
    assert matrix @ target_pair.q.array == pytest.approx(source_pair.q.array, abs=1e-7)


def test_relative_majorization_needs_equal_totals(source_pair):
    """Test the totals precondition"""
    assert not relatively_majorizes(source_pair, source_pair.scaled(0.5, 1.0)).holds


def test_self_majorization_in_exact_mode(source_pair):
    """Test that every pair majorizes itself, in rational arithmetic too"""
    assert relatively_majorizes(source_pair, source_pair, exact=True).holds


@pytest.mark.parametrize("method", [Method.lp, Method.geometric])
def test_submajorization_of_worked_pairs(source_pair, target_pair, method):
    """Test submajorization in both directions with both methods"""
    assert submajorizes(target_pair, source_pair, method=method).holds
    assert not submajorizes(source_pair, target_pair, method=method).holds
    assert submajorizes(source_pair, target_pair.scaled(7 / 9 - 1e-6, 1.0), method=method).holds


def test_lp_submajorization_witness(target_pair, source_pair):
    """Test that the LP witness satisfies Mp >= p' and Mq <= q'"""
    decision = submajorizes(target_pair, source_pair)
    matrix = decision.witness.array
    assert decision.witness.stochastic_class == StochasticClass.substochastic
    assert np.all(matrix @ target_pair.p.array >= source_pair.p.array - 1e-7)
    assert np.all(matrix @ target_pair.q.array <= source_pair.q.array + 1e-7)


def test_witness_from_curves(target_pair, source_pair):
    """Test the constructive witness"""
    witness = witness_from_curves(target_pair, source_pair)
    matrix = witness.array
    assert matrix @ target_pair.p.array == pytest.approx(source_pair.p.array, abs=1e-9)
    assert np.all(matrix @ target_pair.q.array <= source_pair.q.array + 1e-9)
    assert np.all(matrix.sum(axis=0) <= 1.0 + 1e-9)
    with pytest.raises(DomainError):
        witness_from_curves(source_pair, target_pair)


def test_witness_for_unnormalized_pairs():
    """Test the construction when |p'| < |p| and |q'| differs from |q|"""
    source = Pair.of([0.6, 0.3, 0.4], [0.2, 0.5, 0.6])
    target = Pair.of([0.5, 0.2], [0.4, 0.9])
    assert submajorizes(source, target, method=Method.geometric).holds
    matrix = witness_from_curves(source, target).array
    assert matrix @ source.p.array == pytest.approx(target.p.array, abs=1e-9)
    assert np.all(matrix @ source.q.array <= target.q.array + 1e-9)


def test_dilation_gives_relative_majorization(target_pair, source_pair):
    """Test that the dilated instance is a relative majorization"""
    result = dilate(target_pair, source_pair.scaled(0.9, 1.2))
    assert result.z == pytest.approx(1.2)
    assert result.source.p_total == pytest.approx(result.target.p_total)
    assert result.source.q_total == pytest.approx(result.target.q_total)
    matrix = result.witness.array
    assert matrix @ result.source.p.array == pytest.approx(result.target.p.array, abs=1e-9)
    assert matrix @ result.source.q.array == pytest.approx(result.target.q.array, abs=1e-9)
    assert relatively_majorizes(result.source, result.target).holds


@settings(deadline=None, max_examples=60)
@given(sparse_pairs(), sparse_pairs())
def test_geometric_submajorization_matches_lp(a, b):
    """Test the elbow comparison against the LP decision, and dilate every positive case"""
    by_lp = submajorizes(a, b, method=Method.lp)
    assert submajorizes(a, b, method=Method.geometric).holds == by_lp.holds
    if by_lp.holds and a.q_total > 0 and b.q_total > 0:
        result = dilate(a, b)
        assert relatively_majorizes(result.source, result.target).holds


@settings(deadline=None, max_examples=60)
@given(sparse_pairs(), sparse_pairs(), st.floats(min_value=0.0, max_value=1.0), st.floats(min_value=0.0, max_value=1.0))
def test_geometric_approximation_matches_lp(a, b, u, v):
    """Test approximate submajorization at random errors against the LP decision"""
    params = ApproxParams(epsilon=u * b.p_total, eta=v * b.q_total)
    by_lp = approx_submajorizes(a, b, params, method=Method.lp)
    assert approx_submajorizes(a, b, params, method=Method.geometric).holds == by_lp.holds


@pytest.mark.parametrize("params, expected", [
    (ApproxParams(epsilon=0.21), True),
    (ApproxParams(epsilon=0.19), False),
    (ApproxParams(eta=0.34), True),
    (ApproxParams(eta=0.32), False),
    (ApproxParams(epsilon=1.5), True),
])
def test_approximate_submajorization(source_pair, target_pair, params, expected):
    """Test approximate submajorization around the optimal errors"""
    assert approx_submajorizes(source_pair, target_pair, params, method=Method.lp).holds == expected
    assert approx_submajorizes(source_pair, target_pair, params, method=Method.geometric).holds == expected


def test_worked_optimal_values(source_pair, target_pair):
    """Test lambda*, z*, eps* and eta_hat* against the LP oracles"""
    assert lambda_star(source_pair, target_pair, 1.0) == pytest.approx(7 / 9, abs=1e-9)
    assert z_star(source_pair, target_pair, 1.0) == pytest.approx(5 / 3, abs=1e-9)
    errors = optimal_errors(source_pair, target_pair)
    assert errors.eps_star == pytest.approx(0.2, abs=1e-9)
    assert errors.eta_hat_star == pytest.approx(1 / 3, abs=1e-9)

    assert lambda_star_lp(source_pair, target_pair, 1.0) == pytest.approx(7 / 9, abs=1e-6)
    assert z_star_lp(source_pair, target_pair, 1.0) == pytest.approx(5 / 3, abs=1e-6)
    oracle = optimal_errors_lp(source_pair, target_pair)
    assert oracle.eps_star == pytest.approx(0.2, abs=1e-6)
    assert oracle.eta_hat_star == pytest.approx(1 / 3, abs=1e-6)
    assert lambda_star(source_pair, target_pair, 1.0) * z_star(source_pair, target_pair, 1.0) >= 1.0


def test_landauer_work_factors(landauer):
    """Test z* for erasing and creating a pure bit"""
    unit = Pair.of([1.0], [1.0])
    assert z_star(landauer.pair, unit, 1.0) == pytest.approx(0.5, abs=1e-9)
    assert z_star(unit, landauer.pair, 1.0) == pytest.approx(2.0, abs=1e-9)
    assert z_star_lp(landauer.pair, unit, 1.0) == pytest.approx(0.5, abs=1e-6)
    assert z_star_lp(unit, landauer.pair, 1.0) == pytest.approx(2.0, abs=1e-6)


def test_z_star_unbounded_when_target_needs_more_support():
    """Test the unbounded sentinel"""
    source = Pair.of([0.5, 0.5], [0.5, 0.5])
    target = Pair.of([1.0, 0.0], [0.0, 1.0])
    assert z_star(source, target, 1.0) == Unbounded.POSITIVE
    assert z_star_lp(source, target, 1.0) == Unbounded.POSITIVE


def test_optimal_value_errors(source_pair, target_pair):
    """Test input validation of the optimal-value functions"""
    with pytest.raises(InputError):
        z_star(source_pair, target_pair, 0.0)
    with pytest.raises(InputError):
        z_star(source_pair, target_pair, 1.5)
    with pytest.raises(InputError):
        lambda_star(source_pair, target_pair, -1.0)
    with pytest.raises(InputError):
        lambda_star(source_pair.scaled(2.0, 1.0), target_pair, 1.0)


def test_eta_unbounded_when_state_mass_is_missing():
    """Test eta_hat* when |p| < |p'|"""
    errors = optimal_errors(Pair.of([0.5], [1.0]), Pair.of([1.0], [1.0]))
    assert errors.eta_hat_star == Unbounded.POSITIVE
    assert errors.eps_star == pytest.approx(0.5)


@settings(deadline=None, max_examples=50)
@given(normalized_pairs(), st.sampled_from([0.25, 0.5, 1.0, 2.0]))
def test_self_transformation_law(pair, z):
    """Test lambda*_z of a pair onto itself equals min(z, 1)"""
    assert lambda_star(pair, pair, z) == pytest.approx(min(z, 1.0), abs=1e-9)


@settings(deadline=None, max_examples=30)
@given(
    normalized_pairs(),
    normalized_pairs(),
    st.floats(min_value=0.25, max_value=2.0),
    st.floats(min_value=0.1, max_value=1.0),
)
def test_closed_forms_match_lp(a, b, z, lam):
    """Test lambda*, z* and the optimal errors against their LP oracles"""
    assert lambda_star(a, b, z) == pytest.approx(lambda_star_lp(a, b, z), abs=1e-6)
    assert z_star(a, b, lam) == pytest.approx(z_star_lp(a, b, lam), rel=1e-6, abs=1e-6)
    closed, oracle = optimal_errors(a, b), optimal_errors_lp(a, b)
    assert closed.eps_star == pytest.approx(oracle.eps_star, abs=1e-6)
    assert closed.eta_hat_star == pytest.approx(oracle.eta_hat_star, abs=1e-6)


@settings(deadline=None, max_examples=30)
@given(normalized_pairs(floor=0.1), normalized_pairs(floor=0.1), st.floats(min_value=0.25, max_value=2.0))
def test_scaled_submajorization_at_the_boundary(a, b, z):
    """Test that (lambda*(z), z) is feasible and a slightly larger lambda is not"""
    lam = lambda_star(a, b, z)
    if lam > 1e-6:
        assert scaled_submajorizes(a, b, lam, z, tol=1e-9).holds
    if lam < 1.0 - 1e-3:
        assert not scaled_submajorizes(a, b, lam + 1e-3, z, tol=1e-9).holds


def test_region_boundary_is_nondecreasing(source_pair, target_pair):
    """Test the sampled boundary"""
    boundary = region_boundary(source_pair, target_pair, [0.25, 0.5, 1.0, 5 / 3, 2.0])
    assert boundary.zs == [0.25, 0.5, 1.0, 5 / 3, 2.0]
    assert all(b >= a - 1e-12 for a, b in zip(boundary.lambdas, boundary.lambdas[1:]))
    assert boundary.lambdas[2] == pytest.approx(7 / 9)
    assert boundary.lambdas[3] == pytest.approx(1.0)
    with pytest.raises(InputError):
        region_boundary(source_pair, target_pair, [])


def test_chain_rule(source_pair, target_pair):
    """Test that composing two feasible links gives a feasible chain"""
    check = chain_feasible(target_pair, source_pair, source_pair, 1.0, 1.0, 0.5, 1.0)
    assert check.first and check.second and check.composed
    assert check.consistent


def test_check_report_attaches_geometric_witness(target_pair, source_pair):
    """Test the combined report"""
    report = check_report(target_pair, source_pair, method=Method.geometric)
    assert report.majorization.holds
    assert report.submajorization.holds
    assert report.submajorization.witness is not None
    negative = check_report(source_pair, target_pair, method=Method.geometric)
    assert not negative.majorization.holds
    assert negative.submajorization.witness is None
