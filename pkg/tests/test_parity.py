import collections

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from paritymark import parity as P


def test_identity_system_is_unique(rng):
    r = P.solve_constrained(np.eye(4, dtype=np.uint8), "0101", P.consecutive_groups(4, 1), 1, rng)
    assert r == "0101"
    assert P.enumerate_solutions(np.eye(4, dtype=np.uint8), "0101", P.consecutive_groups(4, 1), 1) == {"0101"}


def test_small_system_unique_solution(rng):
    M = [[1, 0, 1, 0], [0, 1, 0, 1]]
    assert P.solve_constrained(M, "10", [[0, 1], [2, 3]], 1, rng) == "1000"
    assert P.enumerate_solutions(M, "10", [[0, 1], [2, 3]], 1) == {"1000"}


def test_small_system_infeasible(rng):
    M = [[1, 0, 1, 0], [0, 1, 0, 1]]
    with pytest.raises(P.Infeasible):
        P.solve_constrained(M, "11", [[0, 1], [2, 3]], 2, rng)
    assert P.enumerate_solutions(M, "11", [[0, 1], [2, 3]], 2) == set()


def test_homogeneous_contains_zero(rng):
    M = rng.integers(0, 2, (3, 9))
    assert "0" * 9 in P.enumerate_solutions(M, "000", P.consecutive_groups(3, 3), 1)


def test_nonzero_option(rng):
    M = np.eye(2, dtype=np.uint8)
    with pytest.raises(P.Infeasible):
        P.solve_constrained(M, "00", P.consecutive_groups(2, 1), 1, rng, nonzero=True)


@pytest.mark.parametrize("r,expected", [("110000", "10"), ("000000", "00"), ("101010", "10")])
def test_threshold_groups(r, expected):
    assert P.threshold_groups(r, P.consecutive_groups(2, 3), 2) == expected


def test_verify():
    I = np.eye(4, dtype=np.uint8)
    assert P.verify(I, "0101", "0101")
    assert not P.verify(I, "0101", "0100")
    with pytest.raises(P.DimensionMismatch):
        P.verify(I, "010", "0101")


def test_enumerate_size_limit():
    with pytest.raises(P.SizeLimit):
        P.enumerate_solutions(np.zeros((5, 25), dtype=np.uint8), "00000",
                              P.consecutive_groups(5, 5), 1)


def test_gf2_rank():
    assert P.gf2_rank([[1, 1], [1, 1]]) == 1
    assert P.gf2_rank(np.eye(5)) == 5
    assert P.gf2_rank([[1, 1, 0], [0, 1, 1], [1, 0, 1]]) == 2  # rows sum to zero mod 2


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 4), st.integers(1, 4), st.data())
def test_agrees_with_brute_force(l, alpha, data):
    seed = data.draw(st.integers(0, 2**32 - 1))
    rng = np.random.default_rng(seed)
    M = rng.integers(0, 2, (l, l * alpha), dtype=np.uint8)
    c = P.bits_str(rng.integers(0, 2, l))
    tau = data.draw(st.integers(1, alpha))
    groups = P.consecutive_groups(l, alpha)
    truth = P.enumerate_solutions(M, c, groups, tau)
    assert P.count_solutions(M, c, groups, tau) == len(truth)
    try:
        r = P.solve_constrained(M, c, groups, tau, rng)
    except P.Infeasible:
        assert not truth
    else:
        assert r in truth
        assert P.threshold_groups(r, groups, tau) == c
        assert P.verify(M, r, c)


def _uniformity(sample, solutions, draws=10_000):
    counts = collections.Counter(sample() for _ in range(draws))
    assert set(counts) <= solutions
    expected = draws / len(solutions)
    return [counts[s] / expected for s in solutions]


def _instance_with_many_solutions(rng):
    while True:
        M = rng.integers(0, 2, (2, 8), dtype=np.uint8)
        groups = P.consecutive_groups(2, 4)
        sols = P.enumerate_solutions(M, "11", groups, 2)
        if len(sols) >= 8:
            return M, groups, sols


def test_sampling_is_uniform(rng):
    M, groups, sols = _instance_with_many_solutions(rng)
    ratios = _uniformity(lambda: P.solve_constrained(M, "11", groups, 2, rng), sols)
    assert min(ratios) > 0.7 and max(ratios) < 1.3


def test_exact_fallbacks_are_uniform(rng, monkeypatch):
    M, groups, sols = _instance_with_many_solutions(rng)
    monkeypatch.setattr(P, "REJECTION_TRIALS", 0)
    ratios = _uniformity(lambda: P.solve_constrained(M, "11", groups, 2, rng), sols)
    assert min(ratios) > 0.7 and max(ratios) < 1.3
    monkeypatch.setattr(P, "MAX_ENUMERATE", 0)
    ratios = _uniformity(lambda: P.solve_constrained(M, "11", groups, 2, rng), sols)
    assert min(ratios) > 0.7 and max(ratios) < 1.3


def test_large_instance_uses_exact_sampler(rng, monkeypatch):
    monkeypatch.setattr(P, "REJECTION_TRIALS", 0)
    M = rng.integers(0, 2, (8, 32), dtype=np.uint8)
    groups = P.consecutive_groups(8, 4)
    c = "10110010"
    r = P.solve_constrained(M, c, groups, 2, rng)
    assert P.verify(M, r, c) and P.threshold_groups(r, groups, 2) == c
