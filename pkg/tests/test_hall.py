"""Hall condition, graph-to-poset reduction, matchings, and SDRs."""

from __future__ import annotations

import random
from itertools import product

import pytest

from posetkit import (
    Violation,
    build_bigraph,
    find_L_perfect_matching,
    find_sdr,
    graph_to_poset,
    hall_condition,
    max_chain,
    neighborhood,
    verify_matching,
    width,
)
from posetkit.errors import InstanceTooLarge, NotASubsetOfLeft, ValidationError

from conftest import random_bigraph, ref_matching_exists, ref_sdr_search


@pytest.fixture
def k22():
    return build_bigraph(["l1", "l2"], ["r1", "r2"],
                         [(u, v) for u in ("l1", "l2") for v in ("r1", "r2")])


@pytest.fixture
def thin():
    return build_bigraph(["l1", "l2"], ["r1"], [("l1", "r1"), ("l2", "r1")])


def test_build_bigraph_validation():
    with pytest.raises(ValidationError):
        build_bigraph(["a"], ["a"], [])
    with pytest.raises(ValidationError):
        build_bigraph([], ["r"], [])
    with pytest.raises(ValidationError):
        build_bigraph(["l"], ["r"], [("r", "l")])


def test_neighborhood(k22, thin):
    assert neighborhood(thin, {"l1", "l2"}) == {"r1"}
    assert neighborhood(thin, set()) == frozenset()
    assert neighborhood(k22, {"l1"}) == {"r1", "r2"}
    with pytest.raises(NotASubsetOfLeft):
        neighborhood(k22, {"r1"})


def test_hall_condition(k22, thin):
    assert hall_condition(k22) is None
    bad = hall_condition(thin)
    assert bad == Violation(frozenset({"l1", "l2"}), 1)
    with pytest.raises(InstanceTooLarge):
        hall_condition(k22, cap=1)


def test_hall_violation_is_minimal_and_lex_first():
    G = build_bigraph(["l1", "l2", "l3"], ["r1", "r2"],
                      [("l1", "r1"), ("l2", "r1"), ("l3", "r2")])
    bad = hall_condition(G)
    assert bad == Violation(frozenset({"l1", "l2"}), 1)
    G2 = build_bigraph(["l1", "l2"], ["r1"], [("l2", "r1")])
    assert hall_condition(G2) == Violation(frozenset({"l1"}), 1)


def test_graph_to_poset(k22):
    P = graph_to_poset(build_bigraph(["l1"], ["r1"], [("l1", "r1")]))
    assert P.lt("l1", "r1")
    P = graph_to_poset(build_bigraph(["l1"], ["r1"], []))
    assert not P.comparable("l1", "r1")
    P = graph_to_poset(build_bigraph(["l1"], ["r1", "r2"],
                                     [("l1", "r1"), ("l1", "r2")]))
    assert P.lt("l1", "r1") and P.lt("l1", "r2")
    assert not P.comparable("r1", "r2")


def test_graph_poset_height_at_most_two():
    rng = random.Random(11)
    for _ in range(30):
        G = random_bigraph(rng, rng.randint(1, 4), rng.randint(1, 4))
        assert max_chain(graph_to_poset(G)).size <= 2


def test_right_part_is_maximum_antichain_when_hall_holds():
    rng = random.Random(12)
    for _ in range(40):
        G = random_bigraph(rng, rng.randint(1, 5), rng.randint(1, 5))
        if hall_condition(G) is None:
            assert width(graph_to_poset(G)).size == len(G.right)


def test_find_matching_examples(k22, thin):
    G = build_bigraph(["l1"], ["r1"], [("l1", "r1")])
    assert find_L_perfect_matching(G) == {("l1", "r1")}
    assert find_L_perfect_matching(thin) == Violation(frozenset({"l1", "l2"}), 1)
    G = build_bigraph(["l1", "l2"], ["r1", "r2"],
                      [("l1", "r1"), ("l1", "r2"), ("l2", "r1")])
    assert find_L_perfect_matching(G) == {("l1", "r2"), ("l2", "r1")}


def test_verify_matching(k22):
    assert verify_matching(k22, {("l1", "r1"), ("l2", "r2")}, True)
    assert not verify_matching(k22, {("l1", "r1"), ("l2", "r1")}, False)
    assert not verify_matching(k22, {("l1", "r1")}, True)
    assert verify_matching(k22, {("l1", "r1")}, False)
    assert not verify_matching(k22, {("l1", "zzz")}, False)


def test_matching_equivalence_exhaustive_2x2():
    lefts, rights = ("l1", "l2"), ("r1", "r2")
    all_edges = [(u, v) for u in lefts for v in rights]
    for picks in product((False, True), repeat=4):
        edges = [e for e, take in zip(all_edges, picks) if take]
        G = build_bigraph(lefts, rights, edges)
        result = find_L_perfect_matching(G)
        if isinstance(result, Violation):
            assert hall_condition(G) is not None
            assert not ref_matching_exists(G)
            assert len(neighborhood(G, result.members)) == \
                len(result.members) - result.deficiency
        else:
            assert hall_condition(G) is None
            assert ref_matching_exists(G)
            assert verify_matching(G, result, require_L_perfect=True)


def test_matching_equivalence_random():
    rng = random.Random(13)
    for _ in range(60):
        G = random_bigraph(rng, rng.randint(1, 5), rng.randint(1, 5))
        result = find_L_perfect_matching(G)
        if isinstance(result, Violation):
            assert not ref_matching_exists(G)
        else:
            assert ref_matching_exists(G)
            assert verify_matching(G, result, require_L_perfect=True)


def test_find_sdr_examples():
    assert find_sdr({"S1": {"x"}, "S2": {"y"}}) == {"S1": "x", "S2": "y"}
    assert find_sdr({"S1": {"x"}, "S2": {"x"}}) == \
        Violation(frozenset({"S1", "S2"}), 1)
    out = find_sdr({"S1": {"x", "y"}, "S2": {"y"}, "S3": {"x", "z"}})
    assert out == {"S1": "x", "S2": "y", "S3": "z"}


def test_find_sdr_empty_cases():
    assert find_sdr({}) == {}
    assert find_sdr({"S1": frozenset()}) == Violation(frozenset({"S1"}), 1)
    assert find_sdr({"B": {"x"}, "A": frozenset(), "C": frozenset()}) == \
        Violation(frozenset({"A"}), 1)


def test_sdr_assignment_is_valid():
    family = {"S1": {"x", "y"}, "S2": {"x", "y"}, "S3": {"y", "z", "w"}}
    out = find_sdr(family)
    assert isinstance(out, dict)
    assert set(out) == set(family)
    assert all(out[nm] in family[nm] for nm in family)
    assert len(set(out.values())) == len(family)


def test_sdr_agrees_with_choice_function_search():
    rng = random.Random(14)
    universe = ["x1", "x2", "x3", "x4"]
    for _ in range(120):
        family = {
            f"S{i}": frozenset(u for u in universe if rng.random() < 0.45)
            for i in range(rng.randint(1, 6))
        }
        out = find_sdr(family)
        ref = ref_sdr_search(family)
        if isinstance(out, Violation):
            assert ref is None
            union = frozenset().union(*(family[nm] for nm in out.members))
            assert len(union) < len(out.members)
        else:
            assert ref is not None
            assert all(out[nm] in family[nm] for nm in family)
            assert len(set(out.values())) == len(family)


def test_sdr_with_integer_ground_elements():
    out = find_sdr({"A": {1, 2}, "B": {2}})
    assert out == {"A": 1, "B": 2}


def test_isolated_right_vertices_stay_unmatched():
    G = build_bigraph(["l1"], ["r1", "r2"], [("l1", "r1")])
    assert find_L_perfect_matching(G) == {("l1", "r1")}


def test_sdr_many_members_within_caps():
    # left tags must keep sorting consistently past ten members
    family = {f"S{i:02d}": {f"x{i}", f"x{i + 1}"} for i in range(12)}
    out = find_sdr(family, oracle_cap=30)
    assert isinstance(out, dict)
    assert all(out[nm] in family[nm] for nm in family)
    assert len(set(out.values())) == len(family)
