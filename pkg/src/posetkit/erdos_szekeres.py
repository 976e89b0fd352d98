"""Monotone subsequences of distinct-integer sequences.

A sequence becomes a poset by ordering x below y when x precedes y positionally
and is smaller numerically; chains of that poset are exactly the increasing
subsequences and antichains the decreasing ones.  A sequence of m*n+1 values
therefore yields an increasing subsequence of m+1 values or a decreasing one
of n+1, extracted from a maximum antichain or a chain cover."""

from __future__ import annotations

from dataclasses import dataclass

from . import oracle
from .core import ElementId, FinitePoset, build_poset, member_key
from .dilworth import perles_chain_cover
from .errors import (
    DuplicateValue,
    EmptyInput,
    InstanceTooLarge,
    ValidationError,
    WrongCardinality,
)
from .oracle import DEFAULT_ORACLE_CAP

INCREASING = "increasing"
DECREASING = "decreasing"

CHAIN = "chain"
ANTICHAIN = "antichain"


@dataclass(frozen=True)
class IntSeq:
    """A finite sequence of distinct integers; ``items`` is the positional
    order and induces the strict total precedence relation."""

    items: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.items:
            raise EmptyInput("a sequence needs at least one value")
        for v in self.items:
            if isinstance(v, bool) or not isinstance(v, int):
                raise ValidationError(f"sequence values must be integers, got {v!r}")
        if len(set(self.items)) != len(self.items):
            dup = next(v for v in self.items if self.items.count(v) > 1)
            raise DuplicateValue(f"value {dup!r} occurs more than once")

    @property
    def values(self) -> frozenset[int]:
        return frozenset(self.items)

    def precedes(self, x: int, y: int) -> bool:
        return self.items.index(x) < self.items.index(y)

    def __len__(self) -> int:
        return len(self.items)


@dataclass(frozen=True)
class PosetWitness:
    """Either a chain or an antichain, as tagged solver output."""

    kind: str  # CHAIN or ANTICHAIN
    elements: frozenset[ElementId]


@dataclass(frozen=True)
class SubseqWitness:
    kind: str  # INCREASING or DECREASING
    subsequence: IntSeq


def seq_from_list(xs: list[int] | tuple[int, ...]) -> IntSeq:
    """Build a sequence from values in positional order."""
    return IntSeq(tuple(xs))


def seq_to_poset(s: IntSeq) -> FinitePoset:
    """Order x below y when x comes earlier and is numerically smaller.  Both
    constituent orders are transitive, so the strict part already is."""
    edges = {
        (x, y)
        for i, x in enumerate(s.items)
        for y in s.items[i + 1 :]
        if x < y
    }
    return build_poset(s.values, edges)


def pre_es(P: FinitePoset, r: int, s: int, cap: int = DEFAULT_ORACLE_CAP) -> PosetWitness:
    """On a poset of exactly r*s+1 elements, a chain of at least r+1 elements
    or an antichain of at least s+1.

    If the width already exceeds s the antichain is the answer; otherwise a
    chain cover of at most s chains spreads r*s+1 elements, so some chain
    holds at least r+1 of them."""
    if r < 0 or s < 0:
        raise WrongCardinality("r and s must be non-negative")
    if len(P) != r * s + 1:
        raise WrongCardinality(f"carrier has {len(P)} elements, expected r*s+1 = {r * s + 1}")
    if len(P) > cap:
        raise InstanceTooLarge(f"pre_es: instance has {len(P)} elements, cap is {cap}")
    widest = oracle.max_antichain(P, cap)
    if widest.size >= s + 1:
        return PosetWitness(ANTICHAIN, widest.witness)
    cert = perles_chain_cover(P, cap)
    longest = max(len(c) for c in cert.cover)
    chain = min((c for c in cert.cover if len(c) == longest), key=member_key)
    assert len(chain) >= r + 1
    return PosetWitness(CHAIN, chain)


def es_subsequence(s: IntSeq, m: int, n: int, cap: int = DEFAULT_ORACLE_CAP) -> SubseqWitness:
    """An increasing subsequence of exactly m+1 values or a decreasing one of
    exactly n+1, from a sequence of m*n+1 distinct integers.

    The underlying witness may be longer; it is truncated to the promised
    length keeping the earliest positions, so outputs are reproducible."""
    if len(s) != m * n + 1:
        raise WrongCardinality(f"sequence has {len(s)} values, expected m*n+1 = {m * n + 1}")
    found = pre_es(seq_to_poset(s), m, n, cap)
    target = m + 1 if found.kind == CHAIN else n + 1
    ordered = [v for v in s.items if v in found.elements]
    witness = IntSeq(tuple(ordered[:target]))
    kind = INCREASING if found.kind == CHAIN else DECREASING
    return SubseqWitness(kind, witness)


def verify_subseq(parent: IntSeq, w: SubseqWitness) -> bool:
    """Check value inclusion, positional-order preservation, and monotonicity
    in the direction the witness claims."""
    if w.kind not in (INCREASING, DECREASING):
        raise ValidationError(f"unknown witness kind {w.kind!r}")
    sub = w.subsequence
    if not sub.values <= parent.values:
        return False
    pos = {v: i for i, v in enumerate(parent.items)}
    seq = sub.items
    for a, b in zip(seq, seq[1:]):
        if pos[a] >= pos[b]:
            return False
        if w.kind == INCREASING and a >= b:
            return False
        if w.kind == DECREASING and a <= b:
            return False
    return True
