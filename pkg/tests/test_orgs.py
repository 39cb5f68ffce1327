import numpy as np
import pytest

from paritymark import parity
from paritymark.orgs import OrganizationProfile, Registry, RegistryError, attribute, unit_matrix


def test_matrix_is_deterministic_and_full_rank():
    a, b = OrganizationProfile("A", 11), OrganizationProfile("A2", 11)
    assert np.array_equal(a.matrix_for(4, 3), b.matrix_for(4, 3))
    for l, alpha in [(2, 3), (4, 3), (7, 3), (4, 1)]:
        assert parity.gf2_rank(a.matrix_for(l, alpha)) == l
        assert a.matrix_for(l, alpha).shape == (l, l * alpha)


def test_distinct_seeds_give_distinct_matrices():
    same = sum(np.array_equal(OrganizationProfile("x", 2 * s).matrix_for(4, 3),
                              OrganizationProfile("y", 2 * s + 1).matrix_for(4, 3))
               for s in range(100))
    assert same == 0


def test_feasibility_checked_matrix_accepts_every_pattern():
    M = OrganizationProfile("A", 5).matrix_for(4, 3, 2)
    groups = parity.consecutive_groups(4, 3)
    for c in range(16):
        bits = format(c, "04b")
        assert parity.count_solutions(M, bits, groups, 2) >= (2 if c == 0 else 1)


def test_unit_matrix():
    assert unit_matrix(2).tolist() == [[1, 0], [0, 1]]
    for r in ("00", "01", "10", "11"):
        assert parity.verify(unit_matrix(2), r, r)


def test_registry_round_trip(tmp_path):
    reg = Registry.demo()
    path = tmp_path / "reg.json"
    reg.save(path)
    again = Registry.load(path)
    assert again.to_json() == reg.to_json()
    for org in reg:
        assert np.array_equal(org.matrix_for(4, 3, 2), again.get(org.org_id).matrix_for(4, 3, 2))


def test_registry_errors():
    reg = Registry([OrganizationProfile("A", 1)])
    with pytest.raises(RegistryError):
        reg.get("B")
    with pytest.raises(RegistryError):
        reg.add(OrganizationProfile("A", 2))
    reg.add(OrganizationProfile("A", 1))  # identical re-add is fine
    with pytest.raises(RegistryError):
        OrganizationProfile("C", 1, fixed_code="00")


def test_attribute():
    assert attribute({}) is None
    assert attribute({"A": 0, "B": 0}) is None
    assert attribute({"A": 1, "B": 0}) == "A"
    assert attribute({"A": 1, "B": 2}) == "B"
    assert attribute({"A": 1, "B": 1, "C": 0}) == ("A", "B")
