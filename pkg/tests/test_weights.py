import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from greyrank import (
    DegenerateProblemError,
    IntervalGreyNumber,
    ValidationError,
    comprehensive_objective,
    compute_weight_bundle,
    deviation_totals,
    entropy_weight_table,
    entropy_weights,
    final_weights,
    optimization_weights,
    optimization_weights_unit,
    subjective_interval_weights,
)

from oracles import brute_deviation_coefficients, random_generalized_matrix


def test_subjective_envelope_hand_case():
    alpha = subjective_interval_weights([[0.5, 0.3, 0.2], [0.4, 0.4, 0.2]])
    assert [g.as_tuple() for g in alpha] == [(0.4, 0.5), (0.3, 0.4), (0.2, 0.2)]


def test_subjective_envelope_validation():
    with pytest.raises(ValidationError):
        subjective_interval_weights([[0.5, np.nan]])
    with pytest.raises(ValidationError):
        subjective_interval_weights(np.empty((0, 3)))


def test_deviation_totals_match_brute_force():
    rng = np.random.default_rng(7)
    x = random_generalized_matrix(rng, 5, 4)
    np.testing.assert_allclose(
        deviation_totals(x), brute_deviation_coefficients(x), rtol=1e-12, atol=1e-12
    )


def test_optimization_weights_normalizations():
    rng = np.random.default_rng(11)
    x = random_generalized_matrix(rng, 4, 3)
    unit = optimization_weights_unit(x)
    summed = optimization_weights(x)
    assert np.linalg.norm(unit) == pytest.approx(1.0, abs=1e-12)
    assert summed.sum() == pytest.approx(1.0, abs=1e-12)
    assert (unit >= 0).all() and (summed >= 0).all()
    # both are positive multiples of the same totals vector
    np.testing.assert_allclose(unit / unit.sum(), summed, rtol=1e-12)


def test_optimization_weights_degenerate_on_identical_plans():
    x = np.tile(np.array([0.1, 0.2, 0.3, 0.4]), (3, 2, 1))
    with pytest.raises(DegenerateProblemError):
        optimization_weights(x)
    with pytest.raises(DegenerateProblemError):
        optimization_weights_unit(x)


def test_entropy_weights_hand_case():
    # component 1: attribute 0 is flat (entropy 1, weight 0), attribute 1
    # is skewed, so it takes all the weight
    x = np.zeros((2, 2, 4))
    x[:, 0, :] = [[1, 1, 1, 1], [1, 1, 1, 1]]
    x[:, 1, :] = [[9, 9, 9, 9], [1, 1, 1, 1]]
    w = entropy_weights(x, 1)
    np.testing.assert_allclose(w, [0.0, 1.0], atol=1e-12)


def test_entropy_weights_component_bounds():
    x = np.ones((2, 2, 4))
    with pytest.raises(ValidationError):
        entropy_weights(x, 0)
    with pytest.raises(ValidationError):
        entropy_weights(x, 5)


def test_entropy_weights_zero_column_gets_zero_weight():
    # an all-zero component column carries no information, like a flat one;
    # it must not sink the whole problem
    x = np.zeros((2, 2, 4))
    x[:, 0, :] = [[0, 1, 1, 1], [0, 2, 2, 2]]  # component 1 all zero
    x[:, 1, :] = [[9, 9, 9, 9], [1, 1, 1, 1]]
    w = entropy_weights(x, 1)
    np.testing.assert_allclose(w, [0.0, 1.0], atol=1e-12)


def test_entropy_weights_flat_matrix_warns_uniform():
    x = np.ones((3, 4, 4))
    with pytest.warns(UserWarning):
        w = entropy_weights(x, 2)
    np.testing.assert_allclose(w, np.full(4, 0.25))


def test_entropy_weight_table_shape_and_sums():
    rng = np.random.default_rng(3)
    x = random_generalized_matrix(rng, 5, 6)
    table = entropy_weight_table(x)
    assert table.shape == (4, 6)
    np.testing.assert_allclose(table.sum(axis=1), np.ones(4), atol=1e-9)
    assert (table >= 0).all()


def test_entropy_weights_permutation_equivariant():
    rng = np.random.default_rng(17)
    x = random_generalized_matrix(rng, 5, 4)
    plan_perm = rng.permutation(5)
    attr_perm = rng.permutation(4)
    for k in range(1, 5):
        base = entropy_weights(x, k)
        # reordering plans changes nothing; reordering attributes permutes the weights
        np.testing.assert_allclose(entropy_weights(x[plan_perm], k), base, atol=1e-12)
        np.testing.assert_allclose(
            entropy_weights(x[:, attr_perm], k), base[attr_perm], atol=1e-12
        )


def test_comprehensive_objective_envelope():
    beta_opt = np.array([0.5, 0.5])
    beta_ent = np.array([[0.2, 0.8], [0.3, 0.7], [0.6, 0.4], [0.5, 0.5]])
    env = comprehensive_objective(beta_opt, beta_ent)
    assert [g.as_tuple() for g in env] == [(0.2, 0.6), (0.4, 0.8)]
    with pytest.raises(ValidationError):
        comprehensive_objective(beta_opt, beta_ent[:, :1])


def test_final_weights_hand_case():
    alpha = [IntervalGreyNumber(0.4, 0.6), IntervalGreyNumber(0.4, 0.6)]
    beta = [IntervalGreyNumber(0.5, 0.5), IntervalGreyNumber(0.5, 0.5)]
    w = final_weights(alpha, beta)
    # lower = 0.2 / 0.6, upper = 0.3 / 0.4
    np.testing.assert_allclose([g.as_tuple() for g in w], [(1 / 3, 0.75), (1 / 3, 0.75)])


def test_final_weights_contain_crisp_quotients():
    rng = np.random.default_rng(5)
    for _ in range(50):
        m = rng.integers(2, 6)
        lo_a = rng.random(m) * 0.5 + 0.01
        hi_a = lo_a + rng.random(m) * 0.5
        lo_b = rng.random(m) * 0.5 + 0.01
        hi_b = lo_b + rng.random(m) * 0.5
        alpha = [IntervalGreyNumber(a, b) for a, b in zip(lo_a, hi_a)]
        beta = [IntervalGreyNumber(a, b) for a, b in zip(lo_b, hi_b)]
        w = final_weights(alpha, beta)
        # any crisp choice inside the input intervals must land inside w
        for _ in range(10):
            a = lo_a + rng.random(m) * (hi_a - lo_a)
            b = lo_b + rng.random(m) * (hi_b - lo_b)
            crisp = a * b / (a * b).sum()
            for j in range(m):
                assert w[j].lo <= crisp[j] + 1e-12
                assert crisp[j] <= w[j].hi + 1e-12


def test_final_weights_degenerate_zero_denominator():
    alpha = [IntervalGreyNumber(0.0, 0.0)]
    beta = [IntervalGreyNumber(0.5, 0.5)]
    with pytest.raises(DegenerateProblemError):
        final_weights(alpha, beta)


def test_compute_weight_bundle_shapes():
    rng = np.random.default_rng(9)
    x = random_generalized_matrix(rng, 4, 5)
    alpha = [IntervalGreyNumber(0.1, 0.3) for _ in range(5)]
    bundle = compute_weight_bundle(x, alpha)
    assert bundle.beta_opt.shape == (5,)
    assert bundle.beta_ent.shape == (4, 5)
    assert len(bundle.beta_interval) == 5
    assert len(bundle.w_final) == 5
    for g in bundle.w_final:
        assert 0 <= g.lo <= g.hi
    # beta_opt and every entropy row lie inside the comprehensive envelope
    for j, g in enumerate(bundle.beta_interval):
        assert g.lo <= bundle.beta_opt[j] <= g.hi
        for k in range(4):
            assert g.lo <= bundle.beta_ent[k, j] <= g.hi


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=2, max_value=6), st.integers(min_value=1, max_value=6),
       st.integers(min_value=0, max_value=10_000))
def test_optimization_weights_scale_invariant(n, m, seed):
    rng = np.random.default_rng(seed)
    x = random_generalized_matrix(rng, n, m)
    c = deviation_totals(x)
    if c.sum() <= 0:
        return
    base = optimization_weights(x)
    scaled = optimization_weights(x * 3.7)
    np.testing.assert_allclose(scaled, base, rtol=1e-9, atol=1e-12)
