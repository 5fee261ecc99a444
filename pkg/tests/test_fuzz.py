import json

import pytest
from hypothesis import given, settings, strategies as st

from matchbound.fuzz import (FuzzConfig, FuzzOutcome, FuzzViolation, _mix,
                             random_connected_bounded, run_fuzz)
from matchbound.graphs import build_graph, components, degree_profile, is_k_regular


def test_mix_spreads_streams():
    outs = {_mix(s, t) for s in range(4) for t in range(256)}
    assert len(outs) == 4 * 256
    assert all(0 <= z < 2 ** 64 for z in outs)
    assert _mix(0, 0) != _mix(0, 1)


@given(st.integers(0, 2 ** 64 - 1), st.integers(1, 14), st.integers(2, 6))
@settings(max_examples=150, deadline=None)
def test_sample_postconditions(seed, n, k):
    g = random_connected_bounded(seed, n, k)
    assert g.vertex_count == n
    assert components(g).component_count == 1
    assert degree_profile(g).max_degree <= k


def test_samples_are_reproducible():
    a = random_connected_bounded(555, 13, 4)
    b = random_connected_bounded(555, 13, 4)
    assert a.edges() == b.edges()
    # different seeds give different graphs at least once in a while
    assert any(random_connected_bounded(s, 13, 4).edges() != a.edges()
               for s in range(10))


def test_forbid_regular_strips_one_edge():
    hits = 0
    for seed in range(120):
        free = random_connected_bounded(seed, 4, 3)
        if not is_k_regular(free, 3).overall:
            continue
        hits += 1
        stripped = random_connected_bounded(seed, 4, 3, forbid_regular=True)
        assert not is_k_regular(stripped, 3).overall
        assert components(stripped).component_count == 1
        assert stripped.edge_count == free.edge_count - 1
    assert hits > 0  # K4 does come up at n=4, k=3


def test_infeasible_requests():
    with pytest.raises(ValueError):
        random_connected_bounded(1, 3, 1)  # no connected graph fits
    with pytest.raises(ValueError):
        random_connected_bounded(1, 2, 1, forbid_regular=True)  # only K2
    with pytest.raises(ValueError):
        random_connected_bounded(1, 0, 3)
    # fine: a lone vertex, and K2 when regularity is allowed
    assert random_connected_bounded(1, 1, 3).vertex_count == 1
    assert random_connected_bounded(1, 2, 1).edge_count == 1


def test_config_validation():
    with pytest.raises(ValueError):
        FuzzConfig(k=2, trials=1, max_n=8, seed=0)
    with pytest.raises(ValueError):
        FuzzConfig(k=3, trials=0, max_n=8, seed=0)
    with pytest.raises(ValueError):
        FuzzConfig(k=3, trials=1, max_n=1, seed=0)


def test_run_fuzz_small_sweep():
    out = run_fuzz(FuzzConfig(k=3, trials=200, max_n=10, seed=2024))
    assert out.trials_run == 200
    assert out.violations == []


def test_run_fuzz_allows_regular_components():
    out = run_fuzz(FuzzConfig(k=3, trials=200, max_n=6, seed=5,
                              forbid_regular_components=False))
    assert out.violations == []


def test_outcome_serialization_is_stable():
    cfg = FuzzConfig(k=4, trials=50, max_n=9, seed=77)
    first = run_fuzz(cfg).to_json()
    second = run_fuzz(cfg).to_json()
    assert first == second
    payload = json.loads(first)
    assert payload["trials_run"] == 50
    assert payload["violations"] == []
    assert all(isinstance(v, int) for v in payload["tight_hits"].values())


def test_violations_serialize_with_the_graph():
    out = FuzzOutcome(trials_run=1)
    out.violations.append(
        FuzzViolation(9, 0, build_graph(2, [(0, 1)]), "general"))
    payload = json.loads(out.to_json())
    assert payload["violations"][0]["graph"] == "2 1\n0 1\n"
    assert payload["violations"][0]["bound"] == "general"
