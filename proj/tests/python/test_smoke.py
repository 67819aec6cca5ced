import os
from pathlib import Path

import pytest

import ringstore

FIXTURES = Path(os.environ.get("RINGSTORE_FIXTURE_DIR", Path(__file__).parents[1] / "fixtures"))

EXAMPLE3 = [
    [1, 0, 0, 0, 0, 1, 0, 0],
    [0, 1, 0, 0, 0, 0, 1, 0],
    [0, 0, 1, 0, 0, 0, 0, 1],
    [0, 0, 0, 1, 0, 1, 0, 1],
    [0, 0, 0, 0, 1, 0, 1, 1],
]


def test_ed_matrix_matches_example3():
    assert ringstore.build_ed_matrix(5, 8) == EXAMPLE3
    assert ringstore.euclid_chain(8, 5) == ([8, 5, 3, 2, 1], [1, 1, 1, 2])


def test_scheme_accessors_and_validation():
    s = ringstore.Scheme(EXAMPLE3, n=4, alpha=2, q=2)
    assert (s.n, s.alpha, s.m, s.q, s.k, s.gamma) == (4, 2, 5, 2, 3, 1)
    assert s.validate()["is_ordss"]
    assert s.encode([0, 1, 0, 0, 1])[3] == [0, 1]


def test_reconstruct_and_repair_example2():
    s = ringstore.Scheme.parse((FIXTURES / "mds_gf11.ring").read_text())
    plan = ringstore.plan_reconstruction(s, 1)
    assert [h["size"] for h in plan.hops] == [1, 3, 5]
    x = [3, 1, 4, 1, 5]
    data, bw = ringstore.execute_reconstruction(s, x, plan)
    assert data == x and bw == 9
    for node in range(1, 5):
        symbols, bw = ringstore.execute_repair(s, x, ringstore.plan_repair(s, node))
        assert symbols == s.encode(x)[node - 1]
        assert bw == 5


def test_round_trip_serialization():
    text = (FIXTURES / "ed_4_2_5.ring").read_text()
    assert ringstore.Scheme.parse(text).serialize() == text


def test_errors_carry_category():
    with pytest.raises(ringstore.RingstoreError) as info:
        ringstore.Scheme.parse((FIXTURES / "bad_q4.ring").read_text())
    assert info.value.category == "ParseError"
    trivial = ringstore.Scheme([[1, 0], [0, 1]], n=2, alpha=1, q=2)
    with pytest.raises(ringstore.RingstoreError) as info:
        ringstore.plan_repair(trivial, 1)
    assert info.value.category == "RingTooShort"


def test_simulator():
    s = ringstore.Scheme(EXAMPLE3, n=4, alpha=2, q=2)
    sim = ringstore.RingSim(s, 42)
    assert sim.user_read(1) == 9
    assert sim.fail_and_repair(2) == 5
    stats = sim.stats()
    assert stats["per_link"]["N1->U1"] == 5
    assert sum(stats["per_link"].values()) == 14
    assert stats["event_count"] == 4


def test_bounds():
    assert ringstore.reconstruct_lower_bound(4, 2, 5) == 9
    assert ringstore.cut_constraints(4, 2, 5) == [("N1", "U1", 5), ("N2", "N1", 3), ("N3", "N2", 1)]
    assert ringstore.check_full_mds(ringstore.build_cauchy_mds(5, 8, 11), 11)
