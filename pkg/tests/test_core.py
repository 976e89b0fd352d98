"""Construction, predicates, and structural primitives of finite posets."""

from __future__ import annotations

from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from posetkit import (
    build_poset,
    is_antichain,
    is_chain,
    maximal_above,
    maximal_elements,
    minimal_below,
    minimal_elements,
    restrict,
    verify_antichain_cover,
    verify_chain_cover,
)
from posetkit.errors import (
    CycleDetected,
    ElementNotInCarrier,
    EmptyCarrier,
    NotASubset,
    ValidationError,
)

from conftest import nonempty_subsets, ref_is_antichain, ref_is_chain


def test_build_singleton():
    P = build_poset({"a"}, ())
    assert P.relation == frozenset({("a", "a")})


def test_build_p3_closure(p3):
    # reflexive closure of a single edge, nothing else
    assert p3.relation == frozenset(
        {("a", "a"), ("b", "b"), ("c", "c"), ("a", "b")})


def test_build_cycle_rejected():
    with pytest.raises(CycleDetected):
        build_poset({"a", "b"}, {("a", "b"), ("b", "a")})
    with pytest.raises(CycleDetected):
        build_poset({"a", "b", "c"}, {("a", "b"), ("b", "c"), ("c", "a")})


def test_build_empty_rejected():
    with pytest.raises(EmptyCarrier):
        build_poset((), ())


def test_build_validation_errors():
    with pytest.raises(ValidationError):
        build_poset(["a", "a"], ())
    with pytest.raises(ValidationError):
        build_poset(["a"], [("a", "zzz")])
    with pytest.raises(ValidationError):
        build_poset([None], ())


def test_build_transitive_closure():
    P = build_poset("abc", {("a", "b"), ("b", "c")})
    assert P.le("a", "c")
    assert P.lt("a", "c") and not P.lt("a", "a")


def test_build_size_warning():
    with pytest.warns(UserWarning):
        build_poset(range(5), (), size_warning=4)


def test_is_chain(p3):
    assert is_chain(p3, {"a", "b"})
    assert not is_chain(p3, {"a", "c"})
    assert not is_chain(p3, set())
    assert not is_chain(p3, {"a", "zzz"})


def test_is_antichain(p3):
    assert is_antichain(p3, {"b", "c"})
    assert not is_antichain(p3, {"a", "b"})
    assert is_antichain(p3, {"a"})
    assert not is_antichain(p3, set())


def test_minimal_maximal(p3, total3, antichain3):
    assert minimal_elements(p3) == {"a", "c"}
    assert maximal_elements(p3) == {"b", "c"}
    assert minimal_elements(total3) == {"a"}
    assert maximal_elements(total3) == {"c"}
    assert minimal_elements(antichain3) == {"a", "b", "c"}
    assert maximal_elements(antichain3) == {"a", "b", "c"}


def test_minimal_below(p3, total3):
    assert minimal_below(p3, "b") == "a"
    assert minimal_below(p3, "c") == "c"
    assert minimal_below(total3, "c") == "a"
    with pytest.raises(ElementNotInCarrier):
        minimal_below(p3, "zzz")


def test_maximal_above(p3, total3):
    assert maximal_above(p3, "a") == "b"
    assert maximal_above(p3, "c") == "c"
    assert maximal_above(total3, "a") == "c"
    with pytest.raises(ElementNotInCarrier):
        maximal_above(p3, "zzz")


def test_restrict(p3):
    Q = restrict(p3, {"a", "c"})
    assert Q.elements == ("a", "c")
    assert not Q.comparable("a", "c")
    assert restrict(p3, {"a", "b", "c"}) == p3
    with pytest.raises(EmptyCarrier):
        restrict(p3, set())
    with pytest.raises(NotASubset):
        restrict(p3, {"a", "zzz"})


def test_verify_chain_cover(p3):
    assert verify_chain_cover(p3, [{"a", "b"}, {"c"}])
    assert verify_chain_cover(p3, [{"a"}, {"b"}, {"c"}, {"a", "b"}])
    assert not verify_chain_cover(p3, [{"a", "b"}])
    assert not verify_chain_cover(p3, [])


def test_verify_antichain_cover(p3):
    assert verify_antichain_cover(p3, [{"a", "c"}, {"b"}])
    assert not verify_antichain_cover(p3, [{"a", "b"}, {"c"}])
    single = build_poset({"a"}, ())
    assert verify_antichain_cover(single, [{"a"}])


def test_predicates_match_reference(posets_upto_4):
    for P in posets_upto_4:
        for S in nonempty_subsets(P.elements):
            assert is_chain(P, set(S)) == ref_is_chain(P, S)
            assert is_antichain(P, set(S)) == ref_is_antichain(P, S)


def test_chain_antichain_share_at_most_one(posets_upto_4):
    # chains and antichains intersect in at most one element
    for P in posets_upto_4:
        subsets = list(nonempty_subsets(P.elements))
        chains = [set(S) for S in subsets if is_chain(P, set(S))]
        antichains = [set(S) for S in subsets if is_antichain(P, set(S))]
        for C in chains:
            for A in antichains:
                assert len(C & A) <= 1


def test_extremal_sets_are_nonempty_antichains(posets_upto_4):
    for P in posets_upto_4:
        for S in (minimal_elements(P), maximal_elements(P)):
            assert S
            assert is_antichain(P, S)


def test_extremal_witnesses_for_every_element(posets_upto_4):
    for P in posets_upto_4:
        for y in P.elements:
            x = minimal_below(P, y)
            assert P.le(x, y) and x in minimal_elements(P)
            z = maximal_above(P, y)
            assert P.le(y, z) and z in maximal_elements(P)


def test_restrict_is_monotone(p3, grid2x2):
    for P in (p3, grid2x2):
        elems = list(P.elements)
        for big in nonempty_subsets(elems):
            for small in nonempty_subsets(big):
                assert restrict(restrict(P, set(big)), set(small)) == \
                    restrict(P, set(small))


def _assert_order_axioms(P):
    for x in P.elements:
        assert P.le(x, x)
    for x, y in permutations(P.elements, 2):
        assert not (P.le(x, y) and P.le(y, x))
    for x in P.elements:
        for y in P.elements:
            for z in P.elements:
                if P.le(x, y) and P.le(y, z):
                    assert P.le(x, z)


@settings(max_examples=150, deadline=None)
@given(st.data())
def test_build_poset_satisfies_order_axioms(data):
    n = data.draw(st.integers(min_value=1, max_value=8))
    names = [f"x{i}" for i in range(n)]
    edges = data.draw(st.sets(
        st.tuples(st.sampled_from(names), st.sampled_from(names)), max_size=12))
    try:
        P = build_poset(names, edges)
    except CycleDetected:
        return
    _assert_order_axioms(P)


def test_order_axioms_on_enumerated(posets_upto_4):
    for P in posets_upto_4:
        _assert_order_axioms(P)


def test_mixed_id_types_sort_deterministically():
    P = build_poset([3, "a", 1, "b"], {(1, "a")})
    assert P.elements == (1, 3, "a", "b")
    assert minimal_below(P, "a") == 1
