import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from pydantic import ValidationError

from relmaj.entangle.schema import SchmidtVector
from relmaj.entangle.service.logic import (
    battery_search,
    entanglement_cost,
    fidelity_bounds,
    locc_possible,
    padded,
    summarize,
    vidal_probability,
    vidal_probability_lp,
)
from relmaj.errors import InputError
from relmaj.models import Method


@st.composite
def schmidt_vectors(draw, min_size=2, max_size=3):
    n = draw(st.integers(min_value=min_size, max_value=max_size))
    values = np.array(draw(st.lists(st.floats(min_value=0.01, max_value=1.0), min_size=n, max_size=n)))
    return SchmidtVector.of(values / values.sum())


def test_schmidt_vectors_are_normalized():
    """Test Schmidt coefficient validation"""
    with pytest.raises(ValidationError):
        SchmidtVector.of([0.5, 0.6])
    assert SchmidtVector.of([0.5, 0.5, 0.0]).rank == 2


def test_padding_sorts_and_extends():
    """Test the common nonincreasing form"""
    source, target = padded(SchmidtVector.of([0.2, 0.8]), SchmidtVector.of([0.1, 0.3, 0.6]))
    assert source.tolist() == pytest.approx([0.8, 0.2, 0.0])
    assert target.tolist() == pytest.approx([0.6, 0.3, 0.1])


@pytest.mark.parametrize("method", [Method.geometric, Method.lp])
def test_locc_possible(schmidt_pair, method):
    """Test that a Bell state reaches a partially entangled state and not conversely"""
    partial, bell = schmidt_pair
    assert locc_possible(bell, partial, method=method)
    assert not locc_possible(partial, bell, method=method)


def test_vidal_probability(schmidt_pair):
    """Test the smallest tail ratio and its LP"""
    partial, bell = schmidt_pair
    assert vidal_probability(partial, bell) == pytest.approx(0.4)
    assert vidal_probability_lp(partial, bell) == pytest.approx(0.4, abs=1e-6)
    assert vidal_probability(bell, partial) == pytest.approx(1.0)


def test_vidal_probability_with_missing_rank(schmidt_pair):
    """Test that a product state cannot become entangled"""
    _, bell = schmidt_pair
    assert vidal_probability(SchmidtVector.of([1.0, 0.0]), bell) == 0.0


def test_entanglement_cost(schmidt_pair):
    """Test the battery factor in both directions"""
    partial, bell = schmidt_pair
    assert entanglement_cost(partial, bell) == pytest.approx(1.6)
    assert entanglement_cost(bell, partial) == pytest.approx(1.0)


def test_battery_search_brackets_the_cost(schmidt_pair):
    """Test that the integer battery ratio lies within one grid step of the cost"""
    partial, bell = schmidt_pair
    cost = entanglement_cost(partial, bell)
    match = battery_search(partial, bell, max_size=16)
    assert match is not None
    assert cost - 1e-9 <= match.ratio <= cost + 2 * cost / 16
    with pytest.raises(InputError):
        battery_search(partial, bell, max_size=0)


@settings(deadline=None, max_examples=60)
@given(schmidt_vectors(), schmidt_vectors())
def test_vidal_formula_matches_lp(source, target):
    """Test the tail-ratio formula against its LP on random Schmidt vectors"""
    assert vidal_probability(source, target) == pytest.approx(vidal_probability_lp(source, target), abs=1e-6)


@settings(deadline=None, max_examples=40)
@given(schmidt_vectors(), schmidt_vectors())
def test_battery_ratio_never_beats_the_cost(source, target):
    """Test that every integer battery found costs at least the continuous value"""
    cost = entanglement_cost(source, target)
    match = battery_search(source, target, max_size=16)
    if match is not None:
        assert match.ratio >= cost - 1e-6


def test_fidelity_bounds(schmidt_pair):
    """Test fidelity bounds and their preconditions"""
    partial, bell = schmidt_pair
    forward = fidelity_bounds(partial, bell, 1.0)
    assert forward.shift_bound == pytest.approx(0.7)
    assert forward.entropy_bound is None
    assert "entropy_bound" in forward.skipped
    assert forward.cost_bound == pytest.approx(1 / 1.6)
    assert forward.bhattacharyya == pytest.approx(math.sqrt(0.4) + math.sqrt(0.1))

    backward = fidelity_bounds(bell, partial, 1.0)
    assert backward.entropy_bound is not None
    assert 0.0 < backward.entropy_bound < 1.0
    with pytest.raises(InputError):
        fidelity_bounds(partial, bell, 0.0)


def test_results_ignore_zero_padding(schmidt_pair):
    """Test that trailing zero coefficients change nothing"""
    partial, bell = schmidt_pair
    padded_bell = SchmidtVector.of([0.5, 0.5, 0.0])
    assert vidal_probability(partial, padded_bell) == pytest.approx(vidal_probability(partial, bell))
    assert entanglement_cost(partial, padded_bell) == pytest.approx(entanglement_cost(partial, bell))
    assert locc_possible(padded_bell, partial)


def test_summary(schmidt_pair):
    """Test the combined summary"""
    partial, bell = schmidt_pair
    summary = summarize(partial, bell, battery_size=16)
    assert not summary.possible
    assert summary.probability == pytest.approx(0.4)
    assert summary.gain == pytest.approx(-math.log(1.6))
    assert summary.battery is not None
    assert summarize(bell, partial).battery is None
