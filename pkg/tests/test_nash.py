"""Best responses, certification, pure/support enumeration and the grid oracle."""

import numpy as np
import pytest

from rqgames import (
    DimensionMismatchError,
    InvalidProbabilityError,
    TooLargeError,
    bell_like,
    best_response_value,
    default_move_set,
    grid_oracle,
    induce_game,
    mixed_strategy,
    pure_equilibria,
    solve_pivoting,
    state_from_amplitudes,
    support_enumeration,
    ultimatum_2x2,
    verify_equilibrium,
)

from helpers import random_bimatrix

MOVES2 = default_move_set(2)


def entangled_game():
    state = bell_like(np.pi / 4, (1, 1), (0, 0))
    return induce_game(state, ultimatum_2x2(99, 50, 1), MOVES2, MOVES2)


def fair_game():
    state = state_from_amplitudes([[0, 1], [0, 1]], normalize=True)
    return induce_game(state, ultimatum_2x2(99, 50, 1), MOVES2, MOVES2)


def classical_game():
    state = state_from_amplitudes([[1, 0], [0, 0]])
    return induce_game(state, ultimatum_2x2(99, 50, 1), MOVES2, MOVES2)


def test_mixed_strategy_validation():
    assert np.array_equal(mixed_strategy([0.25, 0.75]), [0.25, 0.75])
    clamped = mixed_strategy([1.0, -1e-13])
    assert clamped[1] == 0.0
    with pytest.raises(InvalidProbabilityError):
        mixed_strategy([0.5, -0.1])
    with pytest.raises(InvalidProbabilityError):
        mixed_strategy([0.5, 0.4])
    with pytest.raises(DimensionMismatchError):
        mixed_strategy([0.5, 0.5], size=3)


def test_best_response_examples():
    value = best_response_value(entangled_game(), "responder", [0.5, 0.5])
    assert abs(value - 12.75) <= 1e-12
    a = np.array([[3.0, 7.0], [5.0, 2.0]])
    b = np.zeros((2, 2))
    assert best_response_value((a, b), "proposer", [0.0, 1.0]) == 7.0
    single_row = (np.array([[1.0, 2.0, 3.0]]), np.zeros((1, 3)))
    value = best_response_value(single_row, "proposer", [1 / 3, 1 / 3, 1 / 3])
    assert abs(value - 2.0) <= 1e-12


def test_best_response_validation():
    with pytest.raises(DimensionMismatchError):
        best_response_value(entangled_game(), "proposer", [1.0, 0.0, 0.0])
    with pytest.raises(ValueError):
        best_response_value(entangled_game(), "referee", [1.0, 0.0])


def test_verify_certifies_the_mixed_point():
    profile = verify_equilibrium(entangled_game(), ((0.5, 0.5), (0.5, 0.5)))
    assert profile.certified
    assert max(profile.regret) <= 1e-12
    assert profile.payoffs == pytest.approx((37.25, 12.75), abs=1e-12)
    assert profile.kind == "mixed"
    assert not profile.degenerate


def test_verify_flags_the_greedy_profile():
    profile = verify_equilibrium(entangled_game(), ((1.0, 0.0), (1.0, 0.0)))
    assert not profile.certified
    assert profile.kind == "pure"
    assert profile.payoffs == pytest.approx((49.5, 0.5), abs=1e-12)
    assert profile.regret[0] <= 1e-12
    assert abs(profile.regret[1] - 24.5) <= 1e-12


def test_verify_with_infinite_tolerance():
    profile = verify_equilibrium(entangled_game(), ((1.0, 0.0), (0.0, 1.0)), eps=float("inf"))
    assert profile.certified


def test_pure_equilibria_classical_game():
    profiles = pure_equilibria(classical_game())
    assert len(profiles) == 1
    profile = profiles[0]
    assert np.array_equal(profile.proposer_strategy, [0.0, 1.0])
    assert np.array_equal(profile.responder_strategy, [0.0, 1.0])
    assert profile.payoffs == (99.0, 1.0)


def test_pure_equilibria_empty_for_entangled_game():
    assert pure_equilibria(entangled_game()) == []


def test_pure_equilibria_total_indifference():
    ones = np.ones((2, 2))
    profiles = pure_equilibria((ones, ones))
    assert len(profiles) == 4


def test_support_enumeration_entangled_game():
    profiles = support_enumeration(entangled_game())
    assert len(profiles) == 1
    profile = profiles[0]
    assert np.allclose(profile.proposer_strategy, [0.5, 0.5], atol=1e-9)
    assert np.allclose(profile.responder_strategy, [0.5, 0.5], atol=1e-9)
    assert profile.payoffs == pytest.approx((37.25, 12.75), abs=1e-9)


def test_support_enumeration_fair_game_includes_dominant_profile():
    profiles = support_enumeration(fair_game())
    matches = [
        p
        for p in profiles
        if np.allclose(p.proposer_strategy, [1, 0], atol=1e-9)
        and np.allclose(p.responder_strategy, [1, 0], atol=1e-9)
    ]
    assert len(matches) == 1
    assert matches[0].payoffs == pytest.approx((74.5, 25.5), abs=1e-9)
    assert matches[0].degenerate


def test_support_enumeration_matching_pennies():
    a = np.array([[1.0, -1.0], [-1.0, 1.0]])
    profiles = support_enumeration((a, -a))
    assert len(profiles) == 1
    assert np.allclose(profiles[0].proposer_strategy, [0.5, 0.5], atol=1e-12)
    assert np.allclose(profiles[0].responder_strategy, [0.5, 0.5], atol=1e-12)


def test_support_enumeration_classical_game():
    profiles = support_enumeration(classical_game())
    assert len(profiles) == 1
    assert profiles[0].payoffs == (99.0, 1.0)
    assert profiles[0].kind == "pure"


def test_support_enumeration_size_guard():
    with pytest.raises(TooLargeError):
        support_enumeration((np.zeros((13, 2)), np.zeros((13, 2))))


def test_grid_oracle_entangled_game():
    assert grid_oracle(entangled_game(), 64) == [(0.5, 0.5)]


def test_grid_oracle_classical_game():
    points = grid_oracle(classical_game(), 64)
    assert (0.0, 0.0) in points
    assert points == [(0.0, 0.0)]


def test_grid_oracle_constant_game():
    ones = np.ones((2, 2))
    points = grid_oracle((ones, ones), 8)
    assert len(points) == 81


def test_grid_oracle_requires_2x2():
    with pytest.raises(DimensionMismatchError):
        grid_oracle((np.zeros((2, 3)), np.zeros((2, 3))), 8)


def test_grid_oracle_matches_pointwise_verification():
    rng = np.random.default_rng(21)
    for _ in range(10):
        a = rng.uniform(0, 100, (2, 2))
        b = rng.uniform(0, 100, (2, 2))
        points = grid_oracle((a, b), 16, eps=1e-9)
        for mu in np.arange(17) / 16:
            for nu in np.arange(17) / 16:
                profile = verify_equilibrium((a, b), ((mu, 1 - mu), (nu, 1 - nu)), eps=1e-9)
                assert profile.certified == ((float(mu), float(nu)) in points)


def test_solver_soundness_and_existence():
    rng = np.random.default_rng(17)
    for _ in range(200):
        a, b = random_bimatrix(rng)
        profiles = support_enumeration((a, b))
        assert profiles
        for p in profiles:
            check = verify_equilibrium((a, b), (p.proposer_strategy, p.responder_strategy))
            assert check.certified
            assert max(check.regret) <= 1e-9


def test_support_enumeration_includes_every_pure_equilibrium():
    rng = np.random.default_rng(16)
    for _ in range(50):
        a, b = random_bimatrix(rng)
        enumerated = support_enumeration((a, b))
        for pure in pure_equilibria((a, b)):
            assert any(
                np.allclose(p.proposer_strategy, pure.proposer_strategy, atol=1e-12)
                and np.allclose(p.responder_strategy, pure.responder_strategy, atol=1e-12)
                for p in enumerated
            )


def test_oracle_and_enumeration_agree_on_2x2():
    rng = np.random.default_rng(18)
    for _ in range(60):
        a = rng.uniform(0, 100, (2, 2))
        b = rng.uniform(0, 100, (2, 2))
        profiles = support_enumeration((a, b))
        points = grid_oracle((a, b), 64)
        spacing = 1 / 64
        for p in profiles:
            mu = float(p.proposer_strategy[0])
            nu = float(p.responder_strategy[0])
            on_grid = abs(mu * 64 - round(mu * 64)) <= 1e-9 and abs(nu * 64 - round(nu * 64)) <= 1e-9
            if on_grid:
                assert any(abs(mu - gm) <= 1e-9 and abs(nu - gn) <= 1e-9 for gm, gn in points)
        for gm, gn in points:
            assert any(
                abs(gm - float(p.proposer_strategy[0])) <= spacing + 1e-9
                and abs(gn - float(p.responder_strategy[0])) <= spacing + 1e-9
                for p in profiles
            )


def test_payoff_shift_leaves_equilibria_unchanged():
    rng = np.random.default_rng(19)
    for _ in range(20):
        a, b = random_bimatrix(rng, max_side=3)
        base = support_enumeration((a, b))
        shifted = support_enumeration((a + 17.5, b))
        assert len(base) == len(shifted)
        for p, q in zip(base, shifted):
            assert np.allclose(p.proposer_strategy, q.proposer_strategy, atol=1e-9)
            assert np.allclose(p.responder_strategy, q.responder_strategy, atol=1e-9)
            assert abs((p.payoffs[0] + 17.5) - q.payoffs[0]) <= 1e-9
            assert abs(p.payoffs[1] - q.payoffs[1]) <= 1e-9


def test_row_permutation_permutes_proposer_supports():
    rng = np.random.default_rng(20)
    for _ in range(20):
        a, b = random_bimatrix(rng, max_side=3)
        order = rng.permutation(a.shape[0])
        base = support_enumeration((a, b))
        permuted = support_enumeration((a[order], b[order]))
        assert len(base) == len(permuted)
        for p in base:
            moved = p.proposer_strategy[order]
            assert any(
                np.allclose(q.proposer_strategy, moved, atol=1e-9)
                and np.allclose(q.responder_strategy, p.responder_strategy, atol=1e-9)
                for q in permuted
            )


def test_solve_pivoting_matches_reference_solver():
    rng = np.random.default_rng(22)
    for _ in range(50):
        n = int(rng.integers(1, 6))
        a = rng.normal(size=(n, n))
        rhs = rng.normal(size=n)
        x = solve_pivoting(a, rhs)
        assert x is not None
        assert np.allclose(x, np.linalg.solve(a, rhs), atol=1e-9)


def test_solve_pivoting_reports_singular_systems():
    singular = np.array([[1.0, 2.0], [2.0, 4.0]])
    assert solve_pivoting(singular, np.array([1.0, 2.0])) is None
    assert solve_pivoting(np.zeros((2, 2)), np.zeros(2)) is None
