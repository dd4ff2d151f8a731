import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from pydantic import ValidationError

from relmaj.core.schema import Weights, is_finite
from relmaj.core.service.geometry import alpha_slope, beta_at
from relmaj.errors import InputError
from relmaj.models import StochasticClass
from relmaj.submaj.schema import Witness
from relmaj.submaj.service.optimal import lambda_star, optimal_errors
from relmaj.thermo.schema import BatteryContext, Resource
from relmaj.thermo.service.asymptotics import asymptotic_work_rate, erasure_cooling_rates
from relmaj.thermo.service.bounds import bounds_report, fenchel_gap
from relmaj.thermo.service.heralded import heralded_search, mixture_probability
from relmaj.thermo.service.petz import petz_recovery, recovery_slack
from relmaj.thermo.service.report import transform_report
from relmaj.thermo.service.resource import (
    battery_feasible,
    can_transform,
    gibbs,
    gibbs_stochastic_check,
    legendre_beta,
    work_assisted_feasible,
)
from relmaj.thermo.service.work import phi, work_cost, work_report, work_value

CHANNEL = np.array([[0.9, 0.2], [0.1, 0.8]])

entries = st.floats(min_value=0.01, max_value=1.0, allow_nan=False)
probabilities = st.floats(min_value=0.05, max_value=1.0)
factors = st.floats(min_value=0.25, max_value=2.0)


def _unit(values) -> np.ndarray:
    values = np.asarray(values, dtype=float)
    return values / values.sum()


@st.composite
def resources(draw, min_size=1, max_size=4):
    n = draw(st.integers(min_value=min_size, max_value=max_size))
    r = draw(st.lists(entries, min_size=n, max_size=n))
    g = draw(st.lists(entries, min_size=n, max_size=n))
    return Resource.of(_unit(r), _unit(g))


@st.composite
def recovery_instances(draw, max_size=4):
    """A column-stochastic map with a reference and a state on its input."""
    n_in = draw(st.integers(min_value=1, max_value=max_size))
    n_out = draw(st.integers(min_value=1, max_value=max_size))
    columns = [_unit(draw(st.lists(entries, min_size=n_out, max_size=n_out))) for _ in range(n_in)]
    channel = Witness.of(np.column_stack(columns), StochasticClass.stochastic)
    reference = Weights.of(_unit(draw(st.lists(entries, min_size=n_in, max_size=n_in))))
    state = Weights.of(_unit(draw(st.lists(entries, min_size=n_in, max_size=n_in))))
    return channel, reference, state


def test_gibbs_weights_of_a_qutrit():
    """Test Boltzmann weights at beta = ln 2"""
    weights = gibbs([0, 1, 2], math.log(2))
    assert list(weights) == pytest.approx([4 / 7, 2 / 7, 1 / 7])
    with pytest.raises(InputError):
        gibbs([], 1.0)
    with pytest.raises(InputError):
        gibbs([0, 1], 0.0)


def test_resource_validation():
    """Test that resources are normalized with a positive Gibbs state"""
    with pytest.raises(ValidationError):
        Resource.of([0.5, 0.6], [0.5, 0.5])
    with pytest.raises(ValidationError):
        Resource.of([1.0, 0.0], [1.0, 0.0])
    with pytest.raises(ValidationError):
        Resource.of([1.0], [0.5, 0.5])


def test_can_transform(source_resource, target_resource):
    """Test thermal-operation feasibility of the worked resources"""
    assert can_transform(target_resource, source_resource).holds
    assert not can_transform(source_resource, target_resource).holds


def test_work_value_of_a_pure_bit(landauer):
    """Test erasing a pure bit"""
    value = work_value(landauer, 1.0, 1.0)
    assert value.z_star == pytest.approx(0.5)
    assert value.lambda_star == pytest.approx(1.0)
    assert value.eta_hat == pytest.approx(0.0)
    assert work_value(landauer, 0.25, 1.0).lambda_star == pytest.approx(0.5)
    with pytest.raises(InputError):
        work_value(landauer, 0.0, 1.0)


def test_work_cost_of_a_pure_bit(landauer):
    """Test creating a pure bit"""
    cost = work_cost(landauer, 1.0, 1.0)
    assert cost.z_star == pytest.approx(2.0)
    assert cost.eps_star == pytest.approx(0.5)
    assert cost.eta_star == pytest.approx(0.5)
    assert phi(landauer, 2.0) == pytest.approx(0.0)
    with pytest.raises(InputError):
        work_cost(landauer, 1.0, 0.5)


def test_work_report(landauer):
    """Test the combined work report"""
    report = work_report(landauer, 1.0, 1.0, z_cost=2.0)
    assert report.label == "pure-bit"
    assert report.value.z_star == pytest.approx(0.5)
    assert report.cost.eps_star == pytest.approx(0.0)
    assert report.phi == pytest.approx(0.0)


def test_landauer_limit(landauer):
    """Test that erasing a pure bit yields at most ln 2 / beta"""
    trivial = Resource.trivial()
    assert work_assisted_feasible(landauer, trivial, math.log(2), 1.0).holds
    assert not work_assisted_feasible(landauer, trivial, 1.1 * math.log(2), 1.0).holds


def test_explicit_battery(landauer, source_resource):
    """Test the ladder battery against the Landauer limit"""
    trivial = Resource.trivial()
    assert battery_feasible(source_resource, source_resource, 0.0, 1.0)
    assert battery_feasible(landauer, trivial, 0.9 * math.log(2), 1.0)
    assert not battery_feasible(landauer, trivial, 1.1 * math.log(2), 1.0)


@pytest.mark.parametrize("x", [0.3, 0.7, 0.9, 1.0])
def test_legendre_beta_matches_primal(source_resource, x):
    """Test the dual form of beta_x"""
    assert legendre_beta(source_resource, x) == pytest.approx(beta_at(source_resource.pair, x), abs=1e-9)


def test_legendre_beta_beyond_one(source_resource):
    """Test the unbounded value above x = 1"""
    assert not is_finite(legendre_beta(source_resource, 1.5))


def test_gibbs_stochastic_check():
    """Test Boltzmann-factor preservation with work outcomes"""
    identity = {(0, 0, 0): 1.0, (1, 0, 1): 1.0}
    assert gibbs_stochastic_check(identity, [0, 1], [0, 1], [0.0], 1.0).holds

    perturbed = {(0, 0, 0): 0.999, (1, 0, 0): 0.001, (1, 0, 1): 1.0}
    check = gibbs_stochastic_check(perturbed, [0, 1], [0, 1], [0.0], 1.0)
    assert not check.holds
    assert check.residual == pytest.approx(1e-3)

    with pytest.raises(InputError):
        gibbs_stochastic_check({(0, 0, 0): 0.5, (1, 0, 1): 1.0}, [0, 1], [0, 1], [0.0], 1.0)
    with pytest.raises(InputError):
        gibbs_stochastic_check({(2, 0, 0): 1.0}, [0, 1], [0, 1], [0.0], 1.0)


def test_petz_recovery_restores_the_reference():
    """Test that the recovery map sends Tq back to q"""
    channel = Witness.of(CHANNEL, StochasticClass.stochastic)
    reference = Weights.of([0.5, 0.5])
    recovery = petz_recovery(channel, reference)
    assert recovery.array @ (CHANNEL @ reference.array) == pytest.approx(reference.array)
    assert recovery_slack(channel, reference, Weights.of([0.7, 0.3])) >= -1e-9


def test_petz_recovery_needs_a_stochastic_map():
    """Test input errors"""
    channel = Witness.of(0.5 * np.eye(2), StochasticClass.substochastic)
    with pytest.raises(InputError):
        petz_recovery(channel, Weights.of([0.5, 0.5]))
    with pytest.raises(InputError):
        petz_recovery(Witness.of(CHANNEL, StochasticClass.stochastic), Weights.of([1.0, 0.0]))


@settings(deadline=None, max_examples=60)
@given(recovery_instances())
def test_petz_recovery_on_random_maps(instance):
    """Test exact recovery of the reference and the recovery slack on random maps"""
    channel, reference, state = instance
    recovery = petz_recovery(channel, reference)
    assert recovery.array @ (channel.array @ reference.array) == pytest.approx(reference.array, abs=1e-12)
    assert recovery_slack(channel, reference, state) >= -1e-9


@settings(deadline=None, max_examples=30)
@given(recovery_instances(), st.floats(min_value=1.0, max_value=2.0))
def test_recovery_bounds_hold_on_a_processed_resource(instance, z):
    """Test both Pinsker recovery bounds when the target is the image of the source"""
    channel, reference, state = instance
    a = Resource.of(state, reference)
    b = Resource.of(channel.array @ state.array, channel.array @ reference.array)
    report = bounds_report(a, b, 1.0, z, 1.0, tol=1e-7)
    for bound_id in ("eps_recovery", "eta_recovery"):
        entry = report.get(bound_id)
        assert not entry.skipped
        assert entry.satisfied


def test_bounds_on_the_worked_instance(source_resource, target_resource):
    """Test that every evaluated bound holds"""
    report = bounds_report(source_resource, target_resource, 1.0, 1.0, 1.0)
    assert report.violations == []
    product = report.get("product_infeasible")
    assert product.lhs == pytest.approx(35 / 27)
    assert product.satisfied
    with pytest.raises(KeyError):
        report.get("missing")
    with pytest.raises(InputError):
        bounds_report(source_resource, target_resource, 0.0, 1.0, 1.0)


@pytest.mark.parametrize("z, z_prime, expected", [(0.5, 2.0, 0.0), (0.8, 1.0, 0.12)])
def test_fenchel_gap(source_resource, landauer, z, z_prime, expected):
    """Test the work-value and work-cost errors against 1 - z z'"""
    resource = landauer if z_prime == 2.0 else source_resource
    assert fenchel_gap(resource, z, z_prime) == pytest.approx(expected, abs=1e-9)


@settings(deadline=None, max_examples=40)
@given(
    resources(min_size=2),
    resources(min_size=2),
    resources(min_size=2),
    probabilities,
    factors,
    factors,
    probabilities,
    factors,
)
def test_bound_suite_on_random_resources(a, b, c, lam, z, z_prime, lam2, z2):
    """Test that no evaluated bound is violated on random resources"""
    report = bounds_report(a, b, lam, z, z_prime, c=c, lam2=lam2, z2=z2, tol=1e-7)
    assert report.violations == []


@settings(deadline=None, max_examples=60)
@given(resources(), st.floats(min_value=0.01, max_value=0.99), factors)
def test_fenchel_gap_closes_at_the_slope_of_alpha(a, z, z_prime):
    """Test that the gap is nonnegative and vanishes when z' is the slope of alpha at z"""
    assert fenchel_gap(a, z, z_prime) >= -1e-9
    assert fenchel_gap(a, z, alpha_slope(a.pair, z)) == pytest.approx(0.0, abs=1e-9)


def test_transform_report(source_resource, target_resource):
    """Test tabulated optimal values"""
    battery = BatteryContext(beta=1.0, energy=0.0, partition=2.0)
    report = transform_report(source_resource, target_resource, [0.5, 1.0], [1.0], battery=battery)
    assert report.lambda_star_at_z[1.0] == pytest.approx(7 / 9)
    assert report.z_star_at_lambda[1.0] == pytest.approx(5 / 3)
    assert report.eps_star_at_z[1.0] == pytest.approx(0.2)
    assert report.eta_hat_star_at_z[1.0] == pytest.approx(1 / 3)
    assert report.rows_z[1].eta == pytest.approx(1 / 6)
    with pytest.raises(InputError):
        transform_report(source_resource, target_resource, [], [1.0])


def test_asymptotic_work_rate_approaches_relative_entropy(target_resource, source_resource):
    """Test the fixed-level rate against D(r, g) - D(r', g')"""
    table = asymptotic_work_rate(target_resource, source_resource, 64)
    assert len(table.rows) == 64
    assert table.limit == pytest.approx(0.2858, abs=1e-3)
    gap_small = abs(table.rows[7].fixed_level_rate - table.limit)
    gap_large = abs(table.rows[-1].fixed_level_rate - table.limit)
    assert gap_large <= 0.05
    assert gap_large < gap_small
    with pytest.raises(InputError):
        asymptotic_work_rate(target_resource, source_resource, 4, level=1.0)


def test_erasure_rate_approaches_reverse_relative_entropy(target_resource):
    """Test the erasure exponent against D(g, r)"""
    table = erasure_cooling_rates(target_resource, 64, cooling_gibbs=Weights.of([0.6, 0.4]))
    assert table.limit == pytest.approx(0.5108, abs=1e-3)
    gap_small = abs(table.rows[7].rate - table.limit)
    gap_large = abs(table.rows[-1].rate - table.limit)
    assert gap_large <= 0.05
    assert gap_large < gap_small
    assert all(row.cooling_rate is not None for row in table.rows)
    with pytest.raises(InputError):
        erasure_cooling_rates(target_resource, 2, cooling_gibbs=Weights.of([0.2, 0.3, 0.5]))


def test_heralded_search_returns_every_case():
    """Test the randomized comparison"""
    cases = heralded_search(seed=3, cases=4)
    assert [case.index for case in cases] == [0, 1, 2, 3]
    for case in cases:
        assert -1e-9 <= case.mixture <= 1.0 + 1e-9
        assert -1e-9 <= case.heralded_blank <= 1.0 + 1e-9
    with pytest.raises(InputError):
        heralded_search(seed=3, cases=0)


@settings(deadline=None, max_examples=25)
@given(resources(), resources())
def test_mixture_probability_is_lambda_star_at_unit_work(a, b):
    """Test the mixed-output probability against lambda*_1"""
    assert mixture_probability(a, b) == pytest.approx(lambda_star(a.pair, b.pair, 1.0), abs=1e-6)


@settings(deadline=None, max_examples=60)
@given(resources(), st.floats(min_value=0.05, max_value=2.0))
def test_consuming_probability_is_one_minus_the_state_error(a, z):
    """Test lambda*_z(a -> 1) = 1 - eps*_z(a -> 1)"""
    unit = Resource.trivial().pair
    errors = optimal_errors(a.pair, unit.scaled(1.0, z))
    assert lambda_star(a.pair, unit, z) == pytest.approx(1.0 - errors.eps_star, abs=1e-9)
