"""Exponential-time ground truth: largest antichains/chains, smallest covers,
and a small-poset enumerator.

Everything here is exhaustive search over the carrier, deliberately kept free
of the constructive algorithms it is used to check.  Tie-breaking is always
lexicographic on sorted element ids, so outputs are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterator

from .core import (
    AntichainCover,
    ChainCover,
    ElementId,
    FinitePoset,
    canonical_cover,
    sorted_ids,
)
from .errors import InstanceTooLarge

# Subset searches (2^n nodes worst case) stay workable up to about here.
DEFAULT_ORACLE_CAP = 20
# Partition searches grow like the Bell numbers; keep them tighter.
DEFAULT_COVER_CAP = 10
# Labeled-poset enumeration: 3^(n choose 2) candidate relations.
DEFAULT_ENUM_CAP = 5


@dataclass(frozen=True)
class SizedWitness:
    """A witness set together with its cardinality."""

    witness: frozenset[ElementId]
    size: int


def _require_cap(n: int, cap: int, what: str) -> None:
    if n > cap:
        raise InstanceTooLarge(f"{what}: instance has {n} elements, cap is {cap}")


def _conflict_masks(P: FinitePoset) -> tuple[tuple[ElementId, ...], list[int], list[int]]:
    """Per-element bitmasks over the sorted carrier.

    Bit j of ``comp[i]`` marks that element j is comparable to (and distinct
    from) element i; ``incomp`` is the complement within the carrier.
    """
    elems = P.elements
    n = len(elems)
    index = {e: i for i, e in enumerate(elems)}
    comp = [0] * n
    for (x, y) in P.relation:
        if x != y:
            ix, iy = index[x], index[y]
            comp[ix] |= 1 << iy
            comp[iy] |= 1 << ix
    full = (1 << n) - 1
    incomp = [full & ~comp[i] & ~(1 << i) for i in range(n)]
    return elems, comp, incomp


def _lex_first_max_compatible(n: int, conflict: list[int]) -> list[int]:
    """Indices of a largest subset avoiding all internal conflicts.

    Depth-first search in ascending index order visits subsets in
    lexicographic order, so the first subset to reach a new maximum size is
    the lexicographically first of that size; pruning on the attainable size
    never discards a strictly larger subset.
    """
    best: list[int] = []

    def search(chosen: list[int], cand: int) -> None:
        nonlocal best
        if len(chosen) > len(best):
            best = list(chosen)
        if len(chosen) + bin(cand).count("1") <= len(best):
            return
        rest = cand
        while rest:
            bit = rest & -rest
            rest ^= bit
            if len(chosen) + 1 + bin(rest).count("1") <= len(best):
                return
            i = bit.bit_length() - 1
            chosen.append(i)
            search(chosen, rest & ~conflict[i])
            chosen.pop()

    search([], (1 << n) - 1)
    return best


def max_antichain(P: FinitePoset, cap: int = DEFAULT_ORACLE_CAP) -> SizedWitness:
    """A maximum-cardinality antichain; lexicographically first among ties."""
    _require_cap(len(P), cap, "max_antichain")
    elems, comp, _ = _conflict_masks(P)
    picked = _lex_first_max_compatible(len(elems), comp)
    return SizedWitness(frozenset(elems[i] for i in picked), len(picked))


def max_chain(P: FinitePoset, cap: int = DEFAULT_ORACLE_CAP) -> SizedWitness:
    """A maximum-cardinality chain; lexicographically first among ties."""
    _require_cap(len(P), cap, "max_chain")
    elems, _, incomp = _conflict_masks(P)
    picked = _lex_first_max_compatible(len(elems), incomp)
    return SizedWitness(frozenset(elems[i] for i in picked), len(picked))


def iter_antichains_of_size(P: FinitePoset, k: int) -> Iterator[frozenset[ElementId]]:
    """All antichains of exactly k elements, in lexicographic order of their
    sorted id sequences."""
    elems, comp, _ = _conflict_masks(P)
    n = len(elems)
    if k <= 0 or k > n:
        return

    def search(chosen: list[int], cand: int) -> Iterator[frozenset[ElementId]]:
        if len(chosen) == k:
            yield frozenset(elems[i] for i in chosen)
            return
        rest = cand
        while rest:
            if len(chosen) + bin(rest).count("1") < k:
                return
            bit = rest & -rest
            rest ^= bit
            i = bit.bit_length() - 1
            chosen.append(i)
            yield from search(chosen, rest & ~comp[i])
            chosen.pop()

    yield from search([], (1 << n) - 1)


def _min_compatible_partition(n: int, conflict: list[int], lower_bound: int) -> list[int]:
    """Partition indices 0..n-1 into the fewest blocks with no internal
    conflicts; among minimum partitions return the one whose canonical form
    (blocks listed by smallest member) is lexicographically least.

    Two passes: a branch-and-bound for the minimum block count (``lower_bound``
    is only an early stop, never a correctness input), then a second
    search constrained to that count that keeps the canonical-least witness.
    Elements are placed in ascending index order, so blocks are always listed
    by their smallest member.
    """
    best_size = n  # singletons are always conflict-free

    def dfs_size(i: int, blocks: list[int]) -> None:
        nonlocal best_size
        if len(blocks) >= best_size or best_size == lower_bound:
            return
        if i == n:
            best_size = len(blocks)
            return
        bit = 1 << i
        for j, mask in enumerate(blocks):
            if not mask & conflict[i]:
                blocks[j] = mask | bit
                dfs_size(i + 1, blocks)
                blocks[j] = mask
        blocks.append(bit)
        dfs_size(i + 1, blocks)
        blocks.pop()

    dfs_size(0, [])

    target = best_size
    best_key: tuple[tuple[int, ...], ...] | None = None

    def dfs_witness(i: int, blocks: list[int]) -> None:
        nonlocal best_key
        if i == n:
            key = tuple(
                tuple(b for b in range(n) if mask >> b & 1) for mask in blocks
            )
            if best_key is None or key < best_key:
                best_key = key
            return
        bit = 1 << i
        for j, mask in enumerate(blocks):
            if not mask & conflict[i]:
                blocks[j] = mask | bit
                dfs_witness(i + 1, blocks)
                blocks[j] = mask
        if len(blocks) < target:
            blocks.append(bit)
            dfs_witness(i + 1, blocks)
            blocks.pop()

    dfs_witness(0, [])
    assert best_key is not None
    return [sum(1 << b for b in block) for block in best_key]


def min_chain_cover(P: FinitePoset, cap: int = DEFAULT_COVER_CAP) -> ChainCover:
    """A chain cover of minimum cardinality, found by exhaustive partition
    search (any cover can be made disjoint without growing, so partitions
    suffice)."""
    _require_cap(len(P), cap, "min_chain_cover")
    elems, comp, incomp = _conflict_masks(P)
    width = len(_lex_first_max_compatible(len(elems), comp))
    blocks = _min_compatible_partition(len(elems), incomp, width)
    return canonical_cover(
        frozenset(elems[i] for i in range(len(elems)) if mask >> i & 1)
        for mask in blocks
    )


def min_antichain_cover(P: FinitePoset, cap: int = DEFAULT_COVER_CAP) -> AntichainCover:
    """An antichain cover of minimum cardinality by exhaustive partition search."""
    _require_cap(len(P), cap, "min_antichain_cover")
    elems, comp, incomp = _conflict_masks(P)
    height = len(_lex_first_max_compatible(len(elems), incomp))
    blocks = _min_compatible_partition(len(elems), comp, height)
    return canonical_cover(
        frozenset(elems[i] for i in range(len(elems)) if mask >> i & 1)
        for mask in blocks
    )


def enumerate_posets(n: int, cap: int = DEFAULT_ENUM_CAP) -> Iterator[FinitePoset]:
    """Every labeled partial order on {e1, ..., en}, each exactly once.

    Candidates assign each unordered pair one of {incomparable, i<j, j<i};
    antisymmetry holds by construction and transitivity is checked, so the
    survivors are exactly the strict orders, i.e. the posets.
    """
    _require_cap(n, cap, "enumerate_posets")
    elems = sorted_ids(f"e{i + 1}" for i in range(n))
    pairs = list(combinations(range(n), 2))
    for assignment in product((0, 1, 2), repeat=len(pairs)):
        succ = [0] * n
        for (i, j), state in zip(pairs, assignment):
            if state == 1:
                succ[i] |= 1 << j
            elif state == 2:
                succ[j] |= 1 << i
        transitive = True
        for x in range(n):
            rest = succ[x]
            while rest:
                bit = rest & -rest
                rest ^= bit
                if succ[bit.bit_length() - 1] & ~succ[x]:
                    transitive = False
                    break
            if not transitive:
                break
        if not transitive:
            continue
        rel = {(e, e) for e in elems}
        for x in range(n):
            rest = succ[x]
            while rest:
                bit = rest & -rest
                rest ^= bit
                rel.add((elems[x], elems[bit.bit_length() - 1]))
        yield FinitePoset(elems, frozenset(rel))
